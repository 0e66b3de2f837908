//! Intersections of polytopes.

use crate::combinatorics::combinations;

use crate::error::{Error, Result};
use crate::geometry::{Point, Polytope};
use crate::kernel::{dot, lp, LinearProgram, Matrix, Rational, Relation};

/// Exact intersection for ambient dimension ≤ 3; `None` when empty.
///
/// Vertices of the intersection are found by solving every square subsystem
/// of the combined constraint set and keeping the feasible solutions.
pub fn intersect(p: &Polytope, q: &Polytope) -> Result<Option<Polytope>> {
    p.check_dim(q.dim())?;
    let d = p.dim();
    if d > 3 {
        return Err(Error::Unsupported(format!("intersection in dimension {d}")));
    }
    let mut rows = p.halfspaces();
    rows.extend(q.halfspaces());
    rows.sort();
    rows.dedup();
    let feasible = |x: &[Rational]| rows.iter().all(|(a, b)| dot(a, x) <= *b);

    let mut pts: Vec<Point> = Vec::new();
    for subset in combinations(rows.len(), d) {
        let m = Matrix::from_rows(subset.iter().map(|&i| rows[i].0.clone()).collect())?;
        let rhs: Vec<Rational> = subset.iter().map(|&i| rows[i].1.clone()).collect();
        if let Some(x) = m.solve(&rhs)? {
            if feasible(&x) {
                pts.push(x);
            }
        }
    }
    if pts.is_empty() {
        return Ok(None);
    }
    Ok(Some(Polytope::convex_hull(pts)?))
}

/// Whether two polytopes share a point: feasibility of
/// Σλᵢpᵢ = Σμⱼqⱼ with λ, μ convex weights.
pub fn intersects(p: &Polytope, q: &Polytope) -> Result<bool> {
    p.check_dim(q.dim())?;
    let (a, b) = (p.vertices(), q.vertices());
    let n = a.len() + b.len();
    let mut prog = LinearProgram::new(n).nonnegative();
    for c in 0..p.dim() {
        let mut row: Vec<Rational> = a.iter().map(|v| v[c].clone()).collect();
        row.extend(b.iter().map(|v| -&v[c]));
        prog.add_constraint(row, Relation::Eq, Rational::zero());
    }
    let mut first = vec![Rational::one(); a.len()];
    first.extend(vec![Rational::zero(); b.len()]);
    prog.add_constraint(first, Relation::Eq, Rational::one());
    let mut second = vec![Rational::zero(); a.len()];
    second.extend(vec![Rational::one(); b.len()]);
    prog.add_constraint(second, Relation::Eq, Rational::one());
    lp::is_feasible(&prog)
}
