//! Exact V-polytope geometry in dimensions 1 through 6.

mod hull;
mod ops;
mod polytope;

pub use ops::{intersect, intersects};
pub use polytope::{point_i64, Direction, Equation, Facet, Point, Polytope, MAX_DIM};
#[allow(unused_imports)]
pub(crate) use polytope::drop_coord;
