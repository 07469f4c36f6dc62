//! Maps a k-vector to the leading ratio-polynomial coefficients and back.
//!
//! cargo run --example duality_round_trip

use asymfit::duality::{c_vector_from_k, k_from_coefficients, AsymptoticExponent};
use asymfit::numerics::{Number, PrecisionContext};

fn main() -> asymfit::Result<()> {
    let ctx = PrecisionContext::default();
    // published two-dimensional values
    let k = AsymptoticExponent::new(
        Number::ratio(24195, 10000),
        Number::ratio(-18347, 10000),
        Number::ratio(-11190, 100000),
        Number::ratio(-46586, 100000),
    );
    let c = c_vector_from_k(&k, ctx);
    for (i, ci) in c.iter().enumerate() {
        println!("c_{i} = {}", ci.display_sig(5));
    }
    let back = k_from_coefficients(&c, ctx)?;
    for (orig, again) in k.components().into_iter().zip(back.components()) {
        println!("{orig} -> {again}");
    }
    Ok(())
}
