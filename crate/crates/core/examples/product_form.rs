//! Extends a series past its last known term with the product-form
//! approximant and checks the accuracy bound on known terms.
//!
//! cargo run --example product_form

use asymfit::approximant::{product_form_values, verify_accuracy_bound, ApproximantSpec};
use asymfit::fitting::{fit_ratio_polynomial, FitConfig};
use asymfit::numerics::Number;
use asymfit::series::gen_rect_d1;

fn main() -> asymfit::Result<()> {
    let full = gen_rect_d1(20);
    // fit on n <= 14 only, then compare against the held-out terms
    let known = full.truncated(14)?;
    for r in [1, 2, 3] {
        let c = fit_ratio_polynomial(&known, &FitConfig::new(r))?;
        let spec = ApproximantSpec::at_fit_window(c, 14)?;
        let values = product_form_values(&full, &spec)?;
        let check = verify_accuracy_bound(&full, &values, &Number::ratio(1, 1_000_000))?;
        println!(
            "r={r}: anchor {:2}, worst relative error {} at n={} ({})",
            spec.k_anchor,
            check.worst_error.display_sig(3),
            check.worst_index,
            if check.passed { "pass" } else { "fail" }
        );
    }
    Ok(())
}
