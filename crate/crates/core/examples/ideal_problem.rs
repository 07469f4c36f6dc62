//! Solves the five-point exponential system exactly by taking logarithms.
//!
//! cargo run --example ideal_problem

use asymfit::fitting::solve_ideal;
use asymfit::numerics::PrecisionContext;
use asymfit::series::gen_rect_d1;

fn main() -> asymfit::Result<()> {
    let ctx = PrecisionContext::default();
    let series = gen_rect_d1(20);
    for top in [12, 16, 20] {
        let k = solve_ideal(&series, top, ctx)?;
        let ln_c = k.ln_c.as_ref().expect("solve_ideal sets ln c");
        println!(
            "top {top:2}: ln c {:>9}  k_-1 {:>9}  k_0 {:>9}  k_1 {:>9}  k_2 {:>9}",
            ln_c.display_sig(6),
            k.k_minus1.display_sig(6),
            k.k0.display_sig(6),
            k.k1.display_sig(6),
            k.k2.display_sig(6),
        );
    }
    println!("limit  : ln c  -1.26551  k_-1  1.38629  k_0  -1.5      k_1 -0.125     k_2  0");
    Ok(())
}
