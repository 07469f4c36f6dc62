//! The linearized ratio fit, the scan over the fit degree, and the
//! log-linearized five-point solve.

use std::ops::RangeInclusive;

use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use crate::duality::AsymptoticExponent;
use crate::error::{Error, Result};
use crate::numerics::{ln, solve_linear_system, Number, PrecisionContext};
use crate::series::{SeriesTable, SignConvention};

/// Digits added on top of the caller's context for the five-point solve,
/// whose matrix has condition number around 2·10^9.
pub const IDEAL_GUARD_DIGITS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitConfig {
    /// Degree of the ratio polynomial.
    pub r: usize,
    /// Top index used; `None` means the last index of the series.
    pub nmax: Option<usize>,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self { r: 6, nmax: None }
    }
}

impl FitConfig {
    pub fn new(r: usize) -> Self {
        Self { r, nmax: None }
    }

    pub fn with_nmax(mut self, nmax: usize) -> Self {
        self.nmax = Some(nmax);
        self
    }

    /// Concrete top index for `series`, after checking degree and coverage.
    pub fn resolve(&self, series: &SeriesTable) -> Result<usize> {
        if self.r == 0 {
            return Err(Error::Config("r must be at least 1".into()));
        }
        let nmax = self.nmax.unwrap_or_else(|| series.nmax());
        if self.r + 2 > nmax {
            return Err(Error::Config(format!(
                "r = {} needs nmax >= {}, got {nmax}",
                self.r,
                self.r + 2
            )));
        }
        if nmax > series.nmax() {
            return Err(Error::MissingIndex { n: nmax });
        }
        let lowest = nmax - self.r - 1;
        if lowest < series.first() {
            return Err(Error::MissingIndex { n: lowest });
        }
        Ok(nmax)
    }

    /// The `r + 1` indices `nmax - r ..= nmax` at which the fit interpolates.
    pub fn window(&self, nmax: usize) -> RangeInclusive<usize> {
        nmax - self.r..=nmax
    }
}

/// `c_0 + c_1/n + … + c_r/n^r`, approximating `sign · b(n)/b(n-1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioPolynomial {
    c: Vec<Number>,
    sign: i64,
}

impl RatioPolynomial {
    /// `sign` is -1 for alternating series and +1 for positive ones.
    pub fn new(c: Vec<Number>, sign: i64) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::Length { needed: 1, got: 0 });
        }
        if sign != 1 && sign != -1 {
            return Err(Error::Config(format!("ratio sign must be ±1, got {sign}")));
        }
        Ok(Self { c, sign })
    }

    pub fn coefficients(&self) -> &[Number] {
        &self.c
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn sign(&self) -> i64 {
        self.sign
    }

    /// Evaluates the polynomial in `1/n`.
    pub fn evaluate(&self, n: usize) -> Number {
        let x = Number::Rational(RBig::from_parts(1.into(), n.into()));
        // Horner in 1/n
        self.c
            .iter()
            .rev()
            .fold(Number::zero(), |acc, ci| &(&acc * &x) + ci)
    }
}

fn signed_ratio(series: &SeriesTable, n: usize) -> Result<RBig> {
    let prev = series.require_nonzero(n - 1)?;
    let cur = series.require(n)?;
    let ratio = cur / prev;
    Ok(match series.sign_convention() {
        SignConvention::Alternating => -ratio,
        SignConvention::AllPositive => ratio,
    })
}

/// Solves the `(r+1)×(r+1)` system `Σ c_i/n^i = sign · b(n)/b(n-1)` over the
/// window `n = nmax-r ..= nmax`. Right-hand sides are exact ratios, so the
/// fit is exact for rational series.
pub fn fit_ratio_polynomial(series: &SeriesTable, cfg: &FitConfig) -> Result<RatioPolynomial> {
    let nmax = cfg.resolve(series)?;
    let mut rows = Vec::with_capacity(cfg.r + 1);
    let mut rhs = Vec::with_capacity(cfg.r + 1);
    for n in cfg.window(nmax) {
        let inv = RBig::from_parts(1.into(), n.into());
        rows.push(
            (0..=cfg.r)
                .map(|i| Number::Rational(inv.pow(i as isize)))
                .collect::<Vec<_>>(),
        );
        rhs.push(Number::Rational(signed_ratio(series, n)?));
    }
    let c = solve_linear_system(&rows, &rhs).map_err(|e| match e {
        // distinct window points give an invertible Vandermonde matrix
        Error::SingularMatrix { .. } => unreachable!("Vandermonde system with distinct nodes"),
        other => other,
    })?;
    RatioPolynomial::new(c, series.sign_convention().ratio_sign())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub r: usize,
    pub c0: Number,
    pub c1: Number,
}

/// One fit per requested degree, keeping the leading two coefficients.
pub fn convergence_scan(series: &SeriesTable, r_values: &[usize], nmax: Option<usize>) -> Result<Vec<ScanRow>> {
    r_values
        .iter()
        .map(|&r| {
            let cfg = FitConfig { r, nmax };
            let fit = fit_ratio_polynomial(series, &cfg)?;
            let c = fit.coefficients();
            Ok(ScanRow {
                r,
                c0: c[0].clone(),
                c1: c[1].clone(),
            })
        })
        .collect()
}

/// Fits `ln|b(j)| = ln c + k₋₁ j + k₀ ln j + k₁/j + k₂/j²` exactly at the
/// five points `j = top_index-4 ..= top_index`.
///
/// Taking logarithms makes the five exponential equations linear in
/// `(ln c, k₋₁, k₀, k₁, k₂)`, so this is an exact solve of the nonlinear
/// system rather than an approximation to it. The solve runs with
/// [`IDEAL_GUARD_DIGITS`] extra digits and the result is rounded to `ctx`.
pub fn solve_ideal(series: &SeriesTable, top_index: usize, ctx: PrecisionContext) -> Result<AsymptoticExponent> {
    if top_index < 5 {
        return Err(Error::Config(format!(
            "top index must be at least 5, got {top_index}"
        )));
    }
    let wide = ctx.widened(IDEAL_GUARD_DIGITS);
    let conv = series.sign_convention();
    let mut rows = Vec::with_capacity(5);
    let mut rhs = Vec::with_capacity(5);
    for j in top_index - 4..=top_index {
        let v = series.require_nonzero(j)?;
        let magnitude = conv.strip(j, v);
        if magnitude.sign() == dashu::base::Sign::Negative {
            return Err(Error::SignViolation {
                n: j,
                value: v.to_string(),
            });
        }
        let jn = Number::int(j as i64);
        rows.push(vec![
            Number::one(),
            jn.clone(),
            ln(&jn, wide)?,
            Number::ratio(1, j as i64),
            Number::ratio(1, (j * j) as i64),
        ]);
        rhs.push(ln(&Number::Rational(magnitude), wide)?);
    }
    let x = solve_linear_system(&rows, &rhs)?;
    let round = |v: &Number| match v {
        Number::Rational(_) => v.clone(),
        Number::Real(_) => v.rounded(ctx.digits()),
    };
    Ok(AsymptoticExponent::new(round(&x[1]), round(&x[2]), round(&x[3]), round(&x[4]))
        .with_ln_c(round(&x[0])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{gen_partitions, gen_rect_d1, LatticeMeta};

    fn alternating_constant(nmax: usize) -> SeriesTable {
        let values = (1..=nmax)
            .map(|n| if n % 2 == 1 { RBig::ONE } else { -RBig::ONE })
            .collect();
        SeriesTable::new(1, values, SignConvention::Alternating, LatticeMeta::default()).unwrap()
    }

    #[test]
    fn d1_fit_is_exact() {
        let fit = fit_ratio_polynomial(&gen_rect_d1(20), &FitConfig::new(6)).unwrap();
        let expected: Vec<Number> = [4, -6, 2, 0, 0, 0, 0].iter().map(|&v| Number::int(v)).collect();
        assert_eq!(fit.coefficients(), expected.as_slice());
        assert_eq!(fit.sign(), -1);
        assert!(fit.coefficients().iter().all(Number::is_rational));
    }

    #[test]
    fn constant_magnitude_series() {
        for r in 1..=5 {
            let fit = fit_ratio_polynomial(&alternating_constant(12), &FitConfig::new(r)).unwrap();
            assert_eq!(fit.coefficients()[0], Number::one());
            assert!(fit.coefficients()[1..].iter().all(Number::is_zero));
        }
    }

    #[test]
    fn interpolates_window_ratios() {
        let series = gen_partitions(25);
        let cfg = FitConfig::new(4).with_nmax(22);
        let fit = fit_ratio_polynomial(&series, &cfg).unwrap();
        assert_eq!(fit.sign(), 1);
        for n in cfg.window(22) {
            let ratio = series.get(n).unwrap() / series.get(n - 1).unwrap();
            assert_eq!(fit.evaluate(n), Number::Rational(ratio));
        }
    }

    #[test]
    fn config_errors() {
        let s = gen_rect_d1(10);
        assert!(matches!(fit_ratio_polynomial(&s, &FitConfig::new(0)), Err(Error::Config(_))));
        assert!(matches!(fit_ratio_polynomial(&s, &FitConfig::new(9)), Err(Error::Config(_))));
        assert_eq!(
            fit_ratio_polynomial(&s, &FitConfig::new(2).with_nmax(11)),
            Err(Error::MissingIndex { n: 11 })
        );
        let late = s.truncated(10).unwrap();
        let offset = SeriesTable::new(
            5,
            (5..=10).map(|n| late.get(n).unwrap().clone()).collect(),
            SignConvention::Alternating,
            LatticeMeta::default(),
        )
        .unwrap();
        assert_eq!(
            fit_ratio_polynomial(&offset, &FitConfig::new(5)),
            Err(Error::MissingIndex { n: 4 })
        );
    }

    #[test]
    fn scan_on_d1() {
        let rows = convergence_scan(&gen_rect_d1(20), &[1, 2, 3, 6], Some(20)).unwrap();
        // two-point secant through n = 19, 20
        assert_eq!(rows[0].c0, Number::ratio(759, 190));
        for row in &rows[1..] {
            assert_eq!((row.c0.clone(), row.c1.clone()), (Number::int(4), Number::int(-6)));
        }
    }

    #[test]
    fn ideal_on_constant_series() {
        let k = solve_ideal(&alternating_constant(10), 10, PrecisionContext::default()).unwrap();
        assert!(k.ln_c.as_ref().unwrap().is_zero());
        assert!(k.components().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn ideal_needs_five_points() {
        let s = gen_rect_d1(20);
        assert!(solve_ideal(&s, 4, PrecisionContext::default()).is_err());
        assert_eq!(
            solve_ideal(&s, 21, PrecisionContext::default()),
            Err(Error::MissingIndex { n: 21 })
        );
    }
}
