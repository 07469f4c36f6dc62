//! Evaluates the dimer entropy density series for d = 1, where the exact
//! coefficients are a(k) = 1 / (k (k-1) 2^k), against the closed form.
//!
//! cargo run --example entropy_density

use std::collections::BTreeMap;

use asymfit::numerics::{Number, PrecisionContext};
use asymfit::series::entropy_density;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

fn main() -> asymfit::Result<()> {
    let ctx = PrecisionContext::default();
    let kmax = 60;
    let a: BTreeMap<usize, Number> = (2..=kmax)
        .map(|k| {
            let den = UBig::from(k * (k - 1)) << k;
            (k, Number::Rational(RBig::from_parts(IBig::ONE, den)))
        })
        .collect();
    for (num, den) in [(1, 10), (1, 2), (9, 10)] {
        let p = Number::ratio(num, den);
        let series = entropy_density(&a, &RBig::ONE, &p, kmax, ctx)?;
        let pf = p.to_f64();
        let closed = (1.0 - pf / 2.0) * (1.0 - pf / 2.0).ln() - pf / 2.0 * (pf / 2.0).ln() - (1.0 - pf) * (1.0 - pf).ln();
        println!("p = {:4}: series {}  closed form {closed:.15}", p.to_string(), series.display_sig(16));
    }
    Ok(())
}
