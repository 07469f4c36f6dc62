//! Leading coefficients as the polynomial degree r grows.
//!
//! cargo run --example convergence_scan

use asymfit::fitting::convergence_scan;
use asymfit::series::gen_rect_d1;

fn main() -> asymfit::Result<()> {
    let rows = convergence_scan(&gen_rect_d1(20), &[1, 2, 3, 4, 5, 6], None)?;
    println!("{:>2} {:>10} {:>10}", "r", "c_0", "c_1");
    for row in rows {
        println!("{:>2} {:>10} {:>10}", row.r, row.c0.display_sig(5), row.c1.display_sig(5));
    }
    Ok(())
}
