use serde::Serialize;

use crate::combinatorics::{combinations, mask_members, nonempty_masks};
use crate::error::{Error, Result};
use crate::geometry::{intersects, Point, Polytope};
use crate::inequality::Relation;
use crate::kernel::{dot, lp, LinearProgram, LpStatus, Rational, Surd};

use super::{bezout_check, BezoutInstance};

/// λK + v with λ > 0 maximal subject to λK + v ⊆ Δ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvenientPlacement {
    pub lambda: Rational,
    pub shift: Point,
}

impl ConvenientPlacement {
    pub fn apply(&self, k: &Polytope) -> Polytope {
        k.scale(&self.lambda).translate(&self.shift)
    }
}

fn require_simplex(delta: &Polytope) -> Result<()> {
    if !delta.is_full_dimensional() || !delta.is_simplex() {
        return Err(Error::NotSimplex(format!(
            "{} vertices with intrinsic dimension {} in Q^{}",
            delta.vertices().len(),
            delta.intrinsic_dim(),
            delta.dim()
        )));
    }
    Ok(())
}

/// Whether `k` lies in Δ and meets every facet of Δ.
pub fn is_convenient(k: &Polytope, delta: &Polytope) -> bool {
    delta.contains(k) && delta.facets().iter().all(|f| k.support_raw(&f.normal) == f.offset)
}

/// Maximizes λ over (λ, v) subject to a·(λw + v) ≤ b for every facet a·x ≤ b
/// of Δ and every vertex w of K. At the optimum every facet is touched.
pub fn convenient_position(k: &Polytope, delta: &Polytope) -> Result<ConvenientPlacement> {
    require_simplex(delta)?;
    delta.check_dim(k.dim())?;
    let n = delta.dim();
    let mut objective = vec![Rational::zero(); n + 1];
    objective[0] = Rational::one();
    let mut prog = LinearProgram::new(n + 1).maximize(objective);
    prog.set_bounds(0, Some(Rational::zero()), None);
    for f in delta.facets() {
        for w in k.vertices() {
            let mut row = vec![dot(&f.normal, w)];
            row.extend(f.normal.iter().cloned());
            prog.add_constraint(row, lp::Relation::Le, f.offset.clone());
        }
    }
    let sol = lp::solve_lp_exact(&prog)?;
    match sol.status {
        LpStatus::Unbounded => return Err(Error::UnboundedScaling),
        LpStatus::Infeasible => return Err(Error::Inconsistent("placement LP infeasible".into())),
        LpStatus::Optimal => {}
    }
    let x = sol.point.expect("optimal point");
    let placement = ConvenientPlacement {
        lambda: x[0].clone(),
        shift: x[1..].to_vec(),
    };
    if !placement.lambda.is_positive() {
        return Err(Error::UnboundedScaling);
    }
    if !is_convenient(&placement.apply(k), delta) {
        return Err(Error::Inconsistent("placement does not touch every facet".into()));
    }
    Ok(placement)
}

/// For bodies in convenient position in Δ: whether for every nonempty set S
/// of them, of size s, the union meets every (n−s)-face of Δ. The answer is
/// cross-checked against exact equality in the Bezout inequality with D = Δ.
pub fn simplex_equality_condition(delta: &Polytope, ks: &[Polytope]) -> Result<bool> {
    require_simplex(delta)?;
    let n = delta.dim();
    if ks.is_empty() || ks.len() > n {
        return Err(Error::Malformed(format!("need 1 ≤ r ≤ {n} bodies, got {}", ks.len())));
    }
    for k in ks {
        delta.check_dim(k.dim())?;
        if !is_convenient(k, delta) {
            return Err(Error::Precondition("every body must be in convenient position".into()));
        }
    }
    let verts = delta.vertices();
    let mut holds = true;
    'outer: for mask in nonempty_masks(ks.len()) {
        let members = mask_members(mask);
        let s = members.len();
        for face_idx in combinations(n + 1, n - s + 1) {
            let face = Polytope::convex_hull(face_idx.iter().map(|&i| verts[i].clone()).collect())?;
            let mut met = false;
            for &i in &members {
                if intersects(&ks[i], &face)? {
                    met = true;
                    break;
                }
            }
            if !met {
                holds = false;
                break 'outer;
            }
        }
    }
    let report = bezout_check(
        &BezoutInstance::new(delta.clone(), ks.to_vec())?,
        &Surd::rational(Rational::one()),
    )?;
    let equal = report.relation == Relation::Equal;
    if equal != holds {
        return Err(Error::Inconsistent(format!(
            "face condition {holds} but Bezout relation {}",
            report.relation
        )));
    }
    Ok(holds)
}
