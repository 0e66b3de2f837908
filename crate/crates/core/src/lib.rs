//! Exact mixed volumes of rational polytopes and the Bezout-type
//! inequalities built on them.

pub mod bezout;
pub mod catalog;
pub mod combinatorics;
pub mod error;
pub mod geometry;
pub mod inequality;
pub mod kernel;
pub mod mixed;
pub mod planar;
pub mod report;
pub mod scenario;

pub use error::{Error, Result};
pub use geometry::{Direction, Point, Polytope};
pub use kernel::Rational;
