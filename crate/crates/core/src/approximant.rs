//! Model-side evaluators: the exponential form in the `k` parameters and the
//! product-form approximant built from the ratio polynomial, plus the
//! relative-accuracy check between a series and an approximant.

use serde::{Deserialize, Serialize};

use crate::duality::AsymptoticExponent;
use crate::error::{Error, Result};
use crate::fitting::RatioPolynomial;
use crate::numerics::{exp, ln, Number, PrecisionContext};
use crate::series::{SeriesTable, SignConvention};

/// `{r, k, c₀..c_r}`: for `n < k_anchor` the approximant is the series itself;
/// from `k_anchor` on it is `b(k_anchor-1)` times the product of ratio
/// polynomials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApproximantSpec {
    pub r: usize,
    pub k_anchor: usize,
    pub c: RatioPolynomial,
}

impl ApproximantSpec {
    pub fn new(k_anchor: usize, c: RatioPolynomial) -> Result<Self> {
        if k_anchor < 2 {
            return Err(Error::Config(format!(
                "anchor must be at least 2 to reference b(anchor-1), got {k_anchor}"
            )));
        }
        Ok(Self {
            r: c.degree(),
            k_anchor,
            c,
        })
    }

    /// Anchored at the first index of the fitted window, `nmax - r`.
    pub fn at_fit_window(c: RatioPolynomial, nmax: usize) -> Result<Self> {
        let anchor = nmax
            .checked_sub(c.degree())
            .ok_or_else(|| Error::Config("window extends below index 0".into()))?;
        Self::new(anchor, c)
    }
}

fn exponent_without_constant(k: &AsymptoticExponent, n: usize, ctx: PrecisionContext) -> Number {
    let nn = Number::int(n as i64);
    let ln_n = ln(&nn, ctx).expect("n >= 1");
    let inv = Number::ratio(1, n as i64);
    let t1 = &k.k_minus1 * &nn;
    let t2 = &k.k0 * &ln_n;
    let t3 = &k.k1 * &inv;
    let t4 = &k.k2 * &inv.powi(2);
    &(&(&t1 + &t2) + &t3) + &t4
}

fn finish(v: Number, ctx: PrecisionContext) -> Number {
    match v {
        Number::Rational(_) => v,
        Number::Real(_) => v.rounded(ctx.digits()),
    }
}

/// `k₋₁ n + k₀ ln n + k₁/n + k₂/n²`, plus `ln c` when present: the log of the
/// model's magnitude at `n`.
///
/// # Panics
/// If `n` is zero.
pub fn log_exp_form(k: &AsymptoticExponent, n: usize, ctx: PrecisionContext) -> Number {
    assert!(n >= 1, "log_exp_form needs n >= 1");
    let wide = ctx.widened(PrecisionContext::GUARD_DIGITS);
    let mut v = exponent_without_constant(k, n, wide);
    if let Some(c) = &k.ln_c {
        v = &v + c;
    }
    finish(v, ctx)
}

/// `exp(L(high) − L(low))` for the model log-magnitude `L`; never reads `ln c`.
pub fn model_span_ratio(k: &AsymptoticExponent, low: usize, high: usize, ctx: PrecisionContext) -> Result<Number> {
    if low == 0 || high == 0 {
        return Err(Error::Config("model indices start at 1".into()));
    }
    let wide = ctx.widened(PrecisionContext::GUARD_DIGITS);
    let diff = &exponent_without_constant(k, high, wide) - &exponent_without_constant(k, low, wide);
    Ok(finish(exp(&diff, wide), ctx))
}

/// `|B(n)/B(n-1)|` under the exponential model.
pub fn model_ratio(k: &AsymptoticExponent, n: usize, ctx: PrecisionContext) -> Result<Number> {
    if n < 2 {
        return Err(Error::Config(format!("model ratio needs n >= 2, got {n}")));
    }
    model_span_ratio(k, n - 1, n, ctx)
}

/// The product-form approximant at `n`:
/// `b(n)` below the anchor, else
/// `(-1)^(n-k+1) b(k-1) Π_{i=k}^{n} (c₀ + c₁/i + … + c_r/i^r)`
/// with the sign factor dropped for positive series.
pub fn eval_product_form(series: &SeriesTable, spec: &ApproximantSpec, n: usize) -> Result<Number> {
    if n < spec.k_anchor {
        return Ok(Number::Rational(series.require(n)?.clone()));
    }
    let base = Number::Rational(series.require(spec.k_anchor - 1)?.clone());
    let product = (spec.k_anchor..=n).fold(Number::one(), |acc, i| &acc * &spec.c.evaluate(i));
    let v = &base * &product;
    let flip = series.sign_convention() == SignConvention::Alternating && (n - spec.k_anchor).is_multiple_of(2);
    Ok(if flip { -v } else { v })
}

/// [`eval_product_form`] at every index of `series`.
pub fn product_form_values(series: &SeriesTable, spec: &ApproximantSpec) -> Result<Vec<Number>> {
    series
        .iter()
        .map(|(n, _)| eval_product_form(series, spec, n))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AccuracyCheck {
    pub passed: bool,
    pub worst_index: usize,
    pub worst_error: Number,
    pub epsilon: Number,
}

/// Checks `|b(i) − b̂(i)| / |b(i)| ≤ ε` at every index of `series`.
/// `approx` is aligned with the series indices.
pub fn verify_accuracy_bound(series: &SeriesTable, approx: &[Number], epsilon: &Number) -> Result<AccuracyCheck> {
    if approx.len() != series.len() {
        return Err(Error::Shape(format!(
            "{} approximant values for a series of length {}",
            approx.len(),
            series.len()
        )));
    }
    let mut worst: Option<(usize, Number)> = None;
    for ((n, b), b_hat) in series.iter().zip(approx) {
        if b.is_zero() {
            return Err(Error::ZeroCoefficient { n });
        }
        let b = Number::Rational(b.clone());
        let err = &(&b - b_hat).abs() / &b.abs();
        if worst.as_ref().is_none_or(|(_, w)| err > *w) {
            worst = Some((n, err));
        }
    }
    let (worst_index, worst_error) = worst.expect("series is non-empty");
    Ok(AccuracyCheck {
        passed: worst_error <= *epsilon,
        worst_index,
        worst_error,
        epsilon: epsilon.clone(),
    })
}
