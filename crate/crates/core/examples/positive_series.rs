//! All-positive series go through the same machinery with ratio sign +1.
//! Here the magnitudes |b(n)| of the d = 1 series give back its c and k.
//!
//! cargo run --example positive_series

use asymfit::metrics::{build_report, ReportConfig};
use asymfit::series::{gen_rect_d1, LatticeMeta, SeriesKind, SeriesTable, SignConvention};

fn main() -> asymfit::Result<()> {
    let alternating = gen_rect_d1(20);
    let magnitudes = alternating.iter().map(|(_, v)| v.clone() * v.signum()).collect();
    let meta = LatticeMeta::new("rect-d1-abs", None, SeriesKind::Other)?;
    let positive = SeriesTable::new(1, magnitudes, SignConvention::AllPositive, meta)?;

    let report = build_report(&positive, &ReportConfig::default())?;
    println!("ratio sign {}", report.c.sign());
    for (label, value) in report.display_rows() {
        println!("{label:5} {value}");
    }
    Ok(())
}
