//! Coefficient series: containers, the exactly known generators, the text
//! file format, and the lattice-side evaluators for `a_d(n)` and the dimer
//! entropy density.

mod format;
mod generators;
mod lattice;

use std::fmt;

use dashu::base::Sign;
use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use format::{parse_alpha_file, parse_series_file, serialize_series};
pub use generators::{gen_partitions, gen_rect_d1};
pub use lattice::{a_from_alpha, alpha_window, entropy_density, AlphaTable};

/// How the signs of a series are expected to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `(-1)^(n+1) b(n) > 0`
    Alternating,
    /// `b(n) > 0`
    AllPositive,
}

impl SignConvention {
    /// The sign relating `b(n)` to `b(n-1)`: -1 for alternating series.
    pub fn ratio_sign(self) -> i64 {
        match self {
            SignConvention::Alternating => -1,
            SignConvention::AllPositive => 1,
        }
    }

    /// The sign `b(n)` must carry.
    pub fn expected_sign(self, n: usize) -> Sign {
        match self {
            SignConvention::Alternating if n.is_multiple_of(2) => Sign::Negative,
            _ => Sign::Positive,
        }
    }

    /// `(-1)^(n+1) b(n)` for alternating series, `b(n)` otherwise.
    pub fn strip(self, n: usize, value: &RBig) -> RBig {
        if self.expected_sign(n) == Sign::Negative {
            -value.clone()
        } else {
            value.clone()
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            SignConvention::Alternating => "alternating",
            SignConvention::AllPositive => "positive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    MayerB,
    DimerA,
    Susceptibility,
    Partitions,
    Other,
}

impl SeriesKind {
    pub fn keyword(self) -> &'static str {
        match self {
            SeriesKind::MayerB => "mayer_b",
            SeriesKind::DimerA => "dimer_a",
            SeriesKind::Susceptibility => "susceptibility",
            SeriesKind::Partitions => "partitions",
            SeriesKind::Other => "other",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Some(match s {
            "mayer_b" => SeriesKind::MayerB,
            "dimer_a" => SeriesKind::DimerA,
            "susceptibility" => SeriesKind::Susceptibility,
            "partitions" => SeriesKind::Partitions,
            "other" => SeriesKind::Other,
            _ => return None,
        })
    }
}

/// Where a series came from. `d` is half the coordination number, so bcc3
/// has `d = 4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeMeta {
    pub name: String,
    #[serde(with = "opt_rational")]
    pub d: Option<RBig>,
    pub kind: SeriesKind,
}

impl LatticeMeta {
    pub fn new(name: impl Into<String>, d: Option<RBig>, kind: SeriesKind) -> Result<Self> {
        if let Some(d) = &d {
            if d.sign() != Sign::Positive || d.is_zero() {
                return Err(Error::Domain(format!("lattice d must be positive, got {d}")));
            }
        }
        Ok(Self {
            name: name.into(),
            d,
            kind,
        })
    }
}

impl Default for LatticeMeta {
    fn default() -> Self {
        Self {
            name: "unnamed".into(),
            d: None,
            kind: SeriesKind::Other,
        }
    }
}

mod opt_rational {
    use dashu::rational::RBig;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::numerics::Number;

    pub fn serialize<S: Serializer>(v: &Option<RBig>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => s.collect_str(&Number::Rational(r.clone())),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<RBig>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|s| Number::parse_exact(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Outcome of auditing a series against its declared sign convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignCheck {
    Clean,
    Violation { n: usize, value: RBig },
}

impl fmt::Display for SignCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignCheck::Clean => f.write_str("clean"),
            SignCheck::Violation { n, value } => write!(f, "violation at n={n} (value {value})"),
        }
    }
}

/// An exact coefficient sequence over a contiguous index range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    first: usize,
    values: Vec<RBig>,
    sign: SignConvention,
    meta: LatticeMeta,
}

impl SeriesTable {
    /// Builds a table starting at index `first` and passes it through the
    /// sign gate.
    pub fn new(
        first: usize,
        values: Vec<RBig>,
        sign: SignConvention,
        meta: LatticeMeta,
    ) -> Result<Self> {
        let table = Self::unchecked(first, values, sign, meta)?;
        match check_sign_pattern(&table) {
            SignCheck::Clean => Ok(table),
            SignCheck::Violation { n, value } => Err(Error::SignViolation {
                n,
                value: value.to_string(),
            }),
        }
    }

    /// Skips the sign gate; for auditing data with [`check_sign_pattern`].
    pub fn unchecked(
        first: usize,
        values: Vec<RBig>,
        sign: SignConvention,
        meta: LatticeMeta,
    ) -> Result<Self> {
        if first == 0 {
            return Err(Error::Config("series indices start at 1 or later".into()));
        }
        if values.is_empty() {
            return Err(Error::Config("series has no entries".into()));
        }
        Ok(Self {
            first,
            values,
            sign,
            meta,
        })
    }

    pub fn first(&self) -> usize {
        self.first
    }

    /// Highest stored index.
    pub fn nmax(&self) -> usize {
        self.first + self.values.len() - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sign_convention(&self) -> SignConvention {
        self.sign
    }

    pub fn meta(&self) -> &LatticeMeta {
        &self.meta
    }

    pub fn with_meta(mut self, meta: LatticeMeta) -> Self {
        self.meta = meta;
        self
    }

    pub fn get(&self, n: usize) -> Option<&RBig> {
        n.checked_sub(self.first).and_then(|i| self.values.get(i))
    }

    pub fn require(&self, n: usize) -> Result<&RBig> {
        self.get(n).ok_or(Error::MissingIndex { n })
    }

    /// Like [`SeriesTable::require`] but also rejects zero.
    pub fn require_nonzero(&self, n: usize) -> Result<&RBig> {
        let v = self.require(n)?;
        if v.is_zero() {
            Err(Error::ZeroCoefficient { n })
        } else {
            Ok(v)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &RBig)> + '_ {
        self.values.iter().enumerate().map(move |(i, v)| (self.first + i, v))
    }

    /// Every coefficient multiplied by `factor`, which must be positive.
    pub fn scaled(&self, factor: &RBig) -> Result<Self> {
        if factor.sign() != Sign::Positive || factor.is_zero() {
            return Err(Error::Domain("scale factor must be positive".into()));
        }
        Ok(Self {
            values: self.values.iter().map(|v| v * factor).collect(),
            ..self.clone()
        })
    }

    /// The first `nmax` indices only.
    pub fn truncated(&self, nmax: usize) -> Result<Self> {
        if nmax < self.first || nmax > self.nmax() {
            return Err(Error::MissingIndex { n: nmax });
        }
        Ok(Self {
            values: self.values[..=nmax - self.first].to_vec(),
            ..self.clone()
        })
    }
}

/// Finds the first index whose value breaks the declared convention. Zero
/// counts as a violation under both conventions.
pub fn check_sign_pattern(series: &SeriesTable) -> SignCheck {
    let conv = series.sign_convention();
    for (n, v) in series.iter() {
        if v.is_zero() || v.sign() != conv.expected_sign(n) {
            return SignCheck::Violation { n, value: v.clone() };
        }
    }
    SignCheck::Clean
}
