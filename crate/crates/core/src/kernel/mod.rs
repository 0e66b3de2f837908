//! Exact arithmetic, linear algebra and linear programming.

pub mod lp;
pub mod matrix;
pub mod rational;
pub mod surd;

pub use lp::{solve_lp_exact, Constraint, LinearProgram, LpResult, LpStatus, Relation};
pub use matrix::{det_of_rows, matrix_det, Matrix};
pub use rational::{binomial, factorial, Rational};
pub use surd::Surd;

/// Dot product of two equal-length rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum()
}
