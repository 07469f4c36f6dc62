//! Arithmetic kernel: exact rationals, precision-tagged decimal reals, the
//! transcendental functions the fits need, and a small dense linear solver.

mod linalg;
mod number;
mod transcendental;

pub use linalg::solve_linear_system;
pub use number::{Number, PrecisionContext};
pub use transcendental::{exp, ln, pow, transcendental, Transcendental};

pub use number::pow10;
