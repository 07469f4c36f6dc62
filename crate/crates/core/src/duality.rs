//! Maps between the ratio coefficients `c_0..c_3` and the exponent
//! parameters `k₋₁, k₀, k₁, k₂` of
//! `(-1)^(n+1) b(n) ~ exp(k₋₁ n + k₀ ln n + k₁/n + k₂/n²)`.
//!
//! Both directions are truncations of the same asymptotic matching and are
//! exact inverses of one another on the first four components.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fitting::RatioPolynomial;
use crate::numerics::{exp, ln, Number, PrecisionContext};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticExponent {
    pub k_minus1: Number,
    pub k0: Number,
    pub k1: Number,
    pub k2: Number,
    /// Log of the overall constant; only the five-point solve produces one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ln_c: Option<Number>,
}

impl AsymptoticExponent {
    pub fn new(k_minus1: Number, k0: Number, k1: Number, k2: Number) -> Self {
        Self {
            k_minus1,
            k0,
            k1,
            k2,
            ln_c: None,
        }
    }

    pub fn with_ln_c(mut self, ln_c: Number) -> Self {
        self.ln_c = Some(ln_c);
        self
    }

    /// `[k₋₁, k₀, k₁, k₂]`
    pub fn components(&self) -> [&Number; 4] {
        [&self.k_minus1, &self.k0, &self.k1, &self.k2]
    }
}

/// The bracket shared by the `k₂` formula and its inverse:
/// `(1/12)k₀³ + ¼k₀² + (1/12)(−6k₁ + 2)k₀ − ½k₁`.
fn k2_bracket(k0: &Number, k1: &Number) -> Number {
    let twelfth = Number::ratio(1, 12);
    let half = Number::ratio(1, 2);
    let cubic = &twelfth * &k0.powi(3);
    let square = &Number::ratio(1, 4) * &k0.powi(2);
    let mixed = &(&twelfth * &(&(&Number::int(-6) * k1) + &Number::int(2))) * k0;
    &(&(&cubic + &square) + &mixed) - &(&half * k1)
}

/// `k` from the first four ratio coefficients:
///
/// ```text
/// k₋₁ = ln c₀
/// k₀  = c₁/c₀
/// k₁  = −c₂/c₀ + c₁/(2c₀) + ½(c₁/c₀)²
/// k₂  = −½ c₃/c₀ + (1/12)k₀³ + ¼k₀² + (1/12)(−6k₁ + 2)k₀ − ½k₁
/// ```
///
/// Rational coefficients give rational `k₀, k₁, k₂`; only `k₋₁` is rounded.
pub fn k_from_c(c: &RatioPolynomial, ctx: PrecisionContext) -> Result<AsymptoticExponent> {
    k_from_coefficients(c.coefficients(), ctx)
}

/// [`k_from_c`] on a bare coefficient slice.
pub fn k_from_coefficients(c: &[Number], ctx: PrecisionContext) -> Result<AsymptoticExponent> {
    if c.len() < 4 {
        return Err(Error::Length {
            needed: 4,
            got: c.len(),
        });
    }
    let c0 = &c[0];
    if !c0.is_positive() {
        return Err(Error::Domain(format!("c0 must be positive, got {c0}")));
    }
    let half = Number::ratio(1, 2);
    let k_minus1 = ln(c0, ctx)?;
    let k0 = &c[1] / c0;
    let k1 = &(&(-(&c[2] / c0)) + &(&c[1] / &(&Number::int(2) * c0))) + &(&half * &k0.powi(2));
    let k2 = &(-(&half * &(&c[3] / c0))) + &k2_bracket(&k0, &k1);
    Ok(AsymptoticExponent::new(k_minus1, k0, k1, k2))
}

/// `(c₀, c₁, c₂) = exp(k₋₁) · (1, k₀, −k₁ + k₀/2 + k₀²/2)`.
pub fn c_from_k(k: &AsymptoticExponent, ctx: PrecisionContext) -> [Number; 3] {
    let c0 = exp(&k.k_minus1, ctx);
    let c1 = &k.k0 * &c0;
    let half = Number::ratio(1, 2);
    let inner = &(&(-&k.k1) + &(&half * &k.k0)) + &(&half * &k.k0.powi(2));
    let c2 = &inner * &c0;
    [c0, c1, c2]
}

/// The inverse of the `k₂` formula:
/// `c₃ = 2c₀(−k₂ + (1/12)k₀³ + ¼k₀² + (1/12)(−6k₁ + 2)k₀ − ½k₁)`.
pub fn c3_from_k(k: &AsymptoticExponent, ctx: PrecisionContext) -> Number {
    let c0 = exp(&k.k_minus1, ctx);
    let inner = &(-&k.k2) + &k2_bracket(&k.k0, &k.k1);
    &(&Number::int(2) * &c0) * &inner
}

/// `c₀..c₃` in one call.
pub fn c_vector_from_k(k: &AsymptoticExponent, ctx: PrecisionContext) -> [Number; 4] {
    let [c0, c1, c2] = c_from_k(k, ctx);
    [c0, c1, c2, c3_from_k(k, ctx)]
}
