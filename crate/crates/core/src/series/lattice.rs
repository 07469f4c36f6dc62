use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use dashu::base::Sign;
use dashu::rational::RBig;

use super::LatticeMeta;
use crate::error::{Error, Result};
use crate::numerics::{ln, Number, PrecisionContext};

/// Indices `i` with `n/2 - 1 < i <= n`.
pub fn alpha_window(n: usize) -> RangeInclusive<usize> {
    // smallest i with 2i > n - 2
    let lo = (n as i64 - 2).div_euclid(2) + 1;
    (lo.max(0) as usize)..=n
}

/// Exact coefficients `alpha_i(n)` of the expansion of `a_d(n)` in powers of `1/d`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlphaTable {
    entries: BTreeMap<(usize, usize), RBig>,
    meta: LatticeMeta,
}

impl AlphaTable {
    pub fn new(meta: LatticeMeta) -> Self {
        Self {
            entries: BTreeMap::new(),
            meta,
        }
    }

    pub fn meta(&self) -> &LatticeMeta {
        &self.meta
    }

    /// Rejects pairs outside the window and duplicates.
    pub fn insert(&mut self, n: usize, i: usize, value: RBig) -> Result<()> {
        if !alpha_window(n).contains(&i) {
            return Err(Error::Domain(format!(
                "alpha_{i}({n}) lies outside the window n/2 - 1 < i <= n"
            )));
        }
        if self.entries.insert((n, i), value).is_some() {
            return Err(Error::Domain(format!("duplicate alpha_{i}({n})")));
        }
        Ok(())
    }

    pub fn get(&self, n: usize, i: usize) -> Option<&RBig> {
        self.entries.get(&(n, i))
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &RBig)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }
}

/// `a_d(n) = sum over the window of alpha_i(n) / d^i`, exact.
pub fn a_from_alpha(alpha: &AlphaTable, d: &RBig, n: usize) -> Result<Number> {
    if d.sign() != Sign::Positive || d.is_zero() {
        return Err(Error::Domain(format!("d must be positive, got {d}")));
    }
    let mut sum = RBig::ZERO;
    for i in alpha_window(n) {
        let a = alpha.get(n, i).ok_or(Error::MissingAlpha { n, i })?;
        sum += a / d.pow(i as isize);
    }
    Ok(Number::Rational(sum))
}

/// `x ln x`, continued by its limit 0 at `x = 0`.
fn x_ln_x(x: &Number, ctx: PrecisionContext) -> Result<Number> {
    if x.is_zero() {
        Ok(Number::zero())
    } else {
        Ok(x * &ln(x, ctx)?)
    }
}

/// The dimer entropy density
/// `½(p ln 2d − p ln p − 2(1−p) ln(1−p) − p) + Σ_{k=2}^{kmax} a_d(k) p^k`.
///
/// The endpoints `p = 0` and `p = 1` use the limits of `p ln p` and
/// `(1−p) ln(1−p)`.
pub fn entropy_density(
    a_coeffs: &BTreeMap<usize, Number>,
    d: &RBig,
    p: &Number,
    kmax: usize,
    ctx: PrecisionContext,
) -> Result<Number> {
    if d.sign() != Sign::Positive || d.is_zero() {
        return Err(Error::Domain(format!("d must be positive, got {d}")));
    }
    if p.is_negative() || *p > Number::one() {
        return Err(Error::Domain(format!("dimer density {p} outside [0, 1]")));
    }
    let q = &Number::one() - p;
    let two_d = Number::Rational(RBig::from(2) * d);
    let p_ln_2d = if p.is_zero() {
        Number::zero()
    } else {
        p * &ln(&two_d, ctx)?
    };
    let bracket = &(&(&p_ln_2d - &x_ln_x(p, ctx)?) - &(&Number::int(2) * &x_ln_x(&q, ctx)?)) - p;
    let mut total = &Number::ratio(1, 2) * &bracket;
    for k in 2..=kmax {
        let a = a_coeffs.get(&k).ok_or(Error::MissingIndex { n: k })?;
        total = &total + &(a * &p.powi(k as i32));
    }
    Ok(total)
}
