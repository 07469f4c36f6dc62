//! Comparison quantities between a series and its fitted model: four-step
//! ratios from the data (`Q`) and the model (`q`), the ℓ∞ error of the
//! consecutive ratios, report assembly and cross-lattice growth comparison.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::approximant::{model_ratio, model_span_ratio};
use crate::duality::{k_from_c, AsymptoticExponent};
use crate::error::{Error, Result};
use crate::fitting::{fit_ratio_polynomial, FitConfig, RatioPolynomial};
use crate::numerics::{Number, PrecisionContext};
use crate::series::{LatticeMeta, SeriesTable};

/// Significant digits used by every human-facing rendering.
pub const DISPLAY_DIGITS: usize = 5;

/// Three `(low, high)` index pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchors(pub [(usize, usize); 3]);

impl Anchors {
    /// `(8,12), (12,16), (16,20)`, with the last pair moved to
    /// `(nmax-4, nmax)` when the series stops short of 20.
    pub fn standard(nmax: usize) -> Self {
        let third = if (4..20).contains(&nmax) {
            (nmax - 4, nmax)
        } else {
            (16, 20)
        };
        Anchors([(8, 12), (12, 16), third])
    }

    /// Consecutive pairs of four increasing indices: `8,12,16,20` gives the
    /// standard set.
    pub fn from_points(points: &[usize]) -> Result<Self> {
        if points.len() != 4 {
            return Err(Error::Config(format!(
                "anchors need four indices, got {}",
                points.len()
            )));
        }
        if points[0] == 0 || points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("anchor indices must be positive and increasing".into()));
        }
        Ok(Anchors([
            (points[0], points[1]),
            (points[1], points[2]),
            (points[2], points[3]),
        ]))
    }

    pub fn pairs(&self) -> &[(usize, usize); 3] {
        &self.0
    }
}

/// `Q_j = |b(high_j) / b(low_j)|`, exact.
pub fn exact_ratios(series: &SeriesTable, anchors: &Anchors) -> Result<[Number; 3]> {
    let ratio = |(low, high): (usize, usize)| -> Result<Number> {
        let hi = series.require(high)?;
        let lo = series.require_nonzero(low)?;
        Ok(Number::Rational(hi / lo).abs())
    };
    let [a, b, c] = *anchors.pairs();
    Ok([ratio(a)?, ratio(b)?, ratio(c)?])
}

/// `q_j = exp(L(high_j) − L(low_j))` under the exponential model.
pub fn model_ratios(k: &AsymptoticExponent, anchors: &Anchors, ctx: PrecisionContext) -> Result<[Number; 3]> {
    let [a, b, c] = *anchors.pairs();
    Ok([
        model_span_ratio(k, a.0, a.1, ctx)?,
        model_span_ratio(k, b.0, b.1, ctx)?,
        model_span_ratio(k, c.0, c.1, ctx)?,
    ])
}

/// `max_{lower < i ≤ upper} |ρ(i) − ρ_model(i)| / ρ(i)` with `ρ(i) = |b(i)/b(i−1)|`.
pub fn linf_error(
    series: &SeriesTable,
    k: &AsymptoticExponent,
    lower: usize,
    upper: usize,
    ctx: PrecisionContext,
) -> Result<Number> {
    if upper <= lower {
        return Err(Error::Config(format!(
            "empty error range: lower {lower} must be below upper {upper}"
        )));
    }
    let mut worst = Number::zero();
    for i in lower + 1..=upper {
        let prev = series.require_nonzero(i - 1)?;
        let cur = series.require_nonzero(i)?;
        let data = Number::Rational(cur / prev).abs();
        let model = model_ratio(k, i, ctx)?;
        let rel = &(&data - &model).abs() / &data;
        if rel > worst {
            worst = rel;
        }
    }
    Ok(match worst {
        Number::Real(_) => worst.rounded(ctx.digits()),
        exact => exact,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub fit: FitConfig,
    /// `None` selects [`Anchors::standard`].
    pub anchors: Option<Anchors>,
    /// Lower end (exclusive) of the ℓ∞ range.
    pub lower: usize,
    pub ctx: PrecisionContext,
}

impl Default for ReportConfig {
    fn default() -> Self {
        Self {
            fit: FitConfig::default(),
            anchors: None,
            lower: 8,
            ctx: PrecisionContext::default(),
        }
    }
}

/// Everything one lattice column of the summary tables needs, stored at full
/// precision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub lattice: LatticeMeta,
    pub precision: usize,
    pub r: usize,
    pub nmax: usize,
    pub c: RatioPolynomial,
    pub k: AsymptoticExponent,
    pub anchors: Anchors,
    /// `Q_j`, from the series.
    pub exact_ratios: [Number; 3],
    /// `q_j`, from the exponential model.
    pub model_ratios: [Number; 3],
    pub linf: Number,
    pub linf_range: (usize, usize),
    /// Which model produced `model_ratios` and `linf`.
    pub evaluator: String,
}

impl ComparisonReport {
    /// Rows as `(label, value)` in table order, rounded for display.
    pub fn display_rows(&self) -> Vec<(String, String)> {
        let show = |v: &Number| v.display_sig(DISPLAY_DIGITS);
        let mut rows = vec![
            ("k_-1".to_string(), show(&self.k.k_minus1)),
            ("k_0".to_string(), show(&self.k.k0)),
            ("k_1".to_string(), show(&self.k.k1)),
            ("k_2".to_string(), show(&self.k.k2)),
        ];
        for (i, c) in self.c.coefficients().iter().take(4).enumerate() {
            rows.push((format!("c_{i}"), show(c)));
        }
        for j in 0..3 {
            rows.push((format!("q_{}", j + 1), show(&self.model_ratios[j])));
            rows.push((format!("Q_{}", j + 1), show(&self.exact_ratios[j])));
        }
        rows.push(("linf".to_string(), show(&self.linf)));
        rows
    }

    pub fn display_map(&self) -> BTreeMap<String, String> {
        self.display_rows().into_iter().collect()
    }
}

/// fit → dual transform → `Q`, `q`, ℓ∞.
pub fn build_report(series: &SeriesTable, cfg: &ReportConfig) -> Result<ComparisonReport> {
    let nmax = cfg.fit.resolve(series)?;
    let c = fit_ratio_polynomial(series, &cfg.fit)?;
    let k = k_from_c(&c, cfg.ctx)?;
    let anchors = cfg.anchors.unwrap_or_else(|| Anchors::standard(nmax));
    let exact = exact_ratios(series, &anchors)?;
    let model = model_ratios(&k, &anchors, cfg.ctx)?;
    let linf = linf_error(series, &k, cfg.lower, nmax, cfg.ctx)?;
    Ok(ComparisonReport {
        lattice: series.meta().clone(),
        precision: cfg.ctx.digits(),
        r: cfg.fit.r,
        nmax,
        c,
        k,
        anchors,
        exact_ratios: exact,
        model_ratios: model,
        linf,
        linf_range: (cfg.lower, nmax),
        evaluator: "exponential".into(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthDifference {
    pub first: String,
    pub second: String,
    pub difference: Number,
}

/// `|k₋₁(A) − k₋₁(B)|` for every pair of named growth rates, smallest first.
pub fn growth_differences(rates: &[(String, Number)]) -> Vec<GrowthDifference> {
    let mut out = Vec::new();
    for (i, (a, ka)) in rates.iter().enumerate() {
        for (b, kb) in &rates[i + 1..] {
            out.push(GrowthDifference {
                first: a.clone(),
                second: b.clone(),
                difference: (ka - kb).abs(),
            });
        }
    }
    out.sort_by(|x, y| {
        x.difference
            .partial_cmp(&y.difference)
            .expect("total order")
            .then_with(|| (&x.first, &x.second).cmp(&(&y.first, &y.second)))
    });
    out
}

/// [`growth_differences`] over the `k₋₁` of each report.
pub fn compare_growth(reports: &[ComparisonReport]) -> Vec<GrowthDifference> {
    let rates: Vec<(String, Number)> = reports
        .iter()
        .map(|r| (r.lattice.name.clone(), r.k.k_minus1.clone()))
        .collect();
    growth_differences(&rates)
}
