//! Reads a series file and prints the comparison table.
//!
//! cargo run --example report_from_file -- [PATH]

use asymfit::metrics::{build_report, ReportConfig};
use asymfit::series::parse_series_file;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/rect-d1.series").to_string());
    let series = parse_series_file(&std::fs::read_to_string(&path)?)?;
    let report = build_report(&series, &ReportConfig::default())?;
    println!("{} (nmax {}, r {})", report.lattice.name, report.nmax, report.r);
    for (label, value) in report.display_rows() {
        println!("  {label:5} {value}");
    }
    Ok(())
}
