//! Fits the ratio polynomial to the exactly known d = 1 series and maps the
//! coefficients to the exponent vector k.
//!
//! cargo run --example d1_exact_fit

use asymfit::duality::k_from_c;
use asymfit::fitting::{fit_ratio_polynomial, FitConfig};
use asymfit::numerics::PrecisionContext;
use asymfit::series::gen_rect_d1;

fn main() -> asymfit::Result<()> {
    let series = gen_rect_d1(20);
    let fit = fit_ratio_polynomial(&series, &FitConfig::new(6))?;
    println!("c = {:?}", fit.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>());

    let k = k_from_c(&fit, PrecisionContext::default())?;
    for (name, v) in ["k_-1", "k_0", "k_1", "k_2"].iter().zip(k.components()) {
        println!("{name:5} {v}");
    }
    Ok(())
}
