//! Asymptotic analysis of lattice-series coefficients.
//!
//! The central conjecture is that the coefficients of an alternating series
//! grow like
//!
//! ```text
//! (-1)^(n+1) b(n) ~ exp(k₋₁ n + k₀ ln n + k₁/n + k₂/n² + …)
//! ```
//!
//! The crate fits the ratio `b(n)/b(n-1)` by a polynomial in `1/n`
//! ([`fitting`]), turns its coefficients into the `k` parameters
//! ([`duality`]), evaluates the resulting models ([`approximant`]) and
//! compares them with the data ([`metrics`]). Arithmetic is exact on
//! rational input and runs at a configurable decimal precision elsewhere
//! ([`numerics`]).

pub mod approximant;
pub mod cli;
pub mod duality;
pub mod error;
pub mod fitting;
pub mod metrics;
pub mod numerics;
pub mod series;

pub use error::{Error, Result};
