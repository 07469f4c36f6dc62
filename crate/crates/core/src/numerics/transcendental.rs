use dashu::float::DBig;

use super::number::{Number, PrecisionContext};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transcendental {
    Ln,
    Exp,
    /// `args[0]^args[1]`
    Pow,
}

/// Dispatches on `kind`; `Ln` and `Exp` take one argument, `Pow` two.
pub fn transcendental(kind: Transcendental, args: &[Number], ctx: PrecisionContext) -> Result<Number> {
    let want = if kind == Transcendental::Pow { 2 } else { 1 };
    if args.len() != want {
        return Err(Error::Shape(format!(
            "{kind:?} takes {want} argument(s), got {}",
            args.len()
        )));
    }
    match kind {
        Transcendental::Ln => ln(&args[0], ctx),
        Transcendental::Exp => Ok(exp(&args[0], ctx)),
        Transcendental::Pow => pow(&args[0], &args[1], ctx),
    }
}

fn target_digits(x: &Number, ctx: PrecisionContext) -> usize {
    x.precision().unwrap_or(0).max(ctx.digits())
}

fn finish(v: DBig, digits: usize) -> Number {
    Number::Real(v.with_precision(digits).value())
}

/// Natural logarithm; `ln(1)` is the exact rational 0.
pub fn ln(x: &Number, ctx: PrecisionContext) -> Result<Number> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("ln of non-positive value {x}")));
    }
    if *x == Number::one() {
        return Ok(Number::zero());
    }
    let p = target_digits(x, ctx);
    let wide = x.to_real(p + PrecisionContext::GUARD_DIGITS);
    Ok(finish(wide.ln(), p))
}

/// Exponential; `exp(0)` is the exact rational 1.
pub fn exp(x: &Number, ctx: PrecisionContext) -> Number {
    if x.is_zero() {
        return Number::one();
    }
    let p = target_digits(x, ctx);
    let wide = x.to_real(p + PrecisionContext::GUARD_DIGITS);
    finish(wide.exp(), p)
}

/// `base^exponent`. Integer exponents on rational bases stay exact; anything
/// else goes through `exp(exponent * ln(base))` and needs `base > 0`.
pub fn pow(base: &Number, exponent: &Number, ctx: PrecisionContext) -> Result<Number> {
    if let Some(e) = exponent.as_rational() {
        if e.denominator().is_one() {
            let e: i32 = i32::try_from(e.numerator().clone())
                .map_err(|_| Error::Domain(format!("exponent {exponent} out of range")))?;
            if base.is_zero() && e < 0 {
                return Err(Error::Domain("zero raised to a negative power".into()));
            }
            return Ok(base.powi(e));
        }
    }
    if !base.is_positive() {
        return Err(Error::Domain(format!(
            "non-integer power of non-positive base {base}"
        )));
    }
    let p = target_digits(base, ctx).max(exponent.precision().unwrap_or(0));
    let wide = ctx.widened(PrecisionContext::GUARD_DIGITS).max_with(p + PrecisionContext::GUARD_DIGITS);
    let l = ln(base, wide)?;
    let v = exp(&(exponent * &l), wide);
    Ok(v.rounded(p))
}

impl PrecisionContext {
    fn max_with(self, digits: usize) -> PrecisionContext {
        if digits > self.digits() {
            PrecisionContext::new(digits).expect("positive")
        } else {
            self
        }
    }
}
