//! Mixed volumes by the facet recursion
//!
//! V(K, A₂,…,Aₙ) = (1/n) Σ_u h_K(u) · V_{u⊥}(A₂ᵘ,…,Aₙᵘ),
//!
//! summed over the outer facet normals u of A₂+…+Aₙ, where Aᵘ is the face of A
//! in direction u. Faces are measured after dropping a coordinate k with
//! aₖ ≠ 0 for the integer normal a, which rescales (n−1)-volumes by |a|/|aₖ|;
//! the |a| cancels against h_K(u) = h_K(a)/|a|, so the recursion stays rational.

use crate::error::{Error, Result};
use crate::geometry::{drop_coord, Polytope};
use crate::kernel::{dot, Rational};

/// V(K, A₂,…,Aₙ) with `others` holding the n−1 bodies A₂,…,Aₙ.
pub fn mixed_volume_facet_sum(k: &Polytope, others: &[Polytope]) -> Result<Rational> {
    let n = k.dim();
    if others.len() + 1 != n {
        return Err(Error::Malformed(format!(
            "facet sum in dimension {n} needs {} further bodies, got {}",
            n.saturating_sub(1),
            others.len()
        )));
    }
    for a in others {
        k.check_dim(a.dim())?;
    }
    Ok(recurse(k, others))
}

fn recurse(k: &Polytope, others: &[Polytope]) -> Rational {
    let n = k.dim();
    if n == 1 {
        let v = k.vertices();
        return &v[v.len() - 1][0] - &v[0][0];
    }
    let normals = sum_normals(others);
    if normals.is_empty() {
        return Rational::zero();
    }
    let mut total = Rational::zero();
    for a in normals {
        let h = k.support_raw(&a);
        if h.is_zero() {
            continue;
        }
        let c = a.iter().position(|x| !x.is_zero()).expect("nonzero normal");
        let faces: Vec<Polytope> = others
            .iter()
            .map(|body| {
                let top = body.support_raw(&a);
                let pts = body
                    .vertices()
                    .iter()
                    .filter(|v| dot(&a, v) == top)
                    .map(|v| drop_coord(v, c))
                    .collect();
                Polytope::convex_hull(pts).expect("nonempty face")
            })
            .collect();
        let inner = recurse(&faces[0], &faces[1..]);
        if inner.is_zero() {
            continue;
        }
        total += h * inner / a[c].abs();
    }
    total / Rational::from(n)
}

/// Outer normals of A₂+…+Aₙ in Qⁿ: facet normals when the sum is
/// full-dimensional, ±a for a sum lying in a hyperplane a·x = c, and none
/// otherwise.
pub(crate) fn sum_normals(others: &[Polytope]) -> Vec<Vec<Rational>> {
    let n = others[0].dim();
    let mut sum = others[0].clone();
    for a in &others[1..] {
        sum = sum.minkowski_sum(a).expect("equal dimensions");
    }
    match sum.intrinsic_dim() {
        d if d == n => sum.facets().iter().map(|f| f.normal.clone()).collect(),
        d if d + 1 == n => {
            let a = sum.equations()[0].normal.clone();
            let neg = a.iter().map(|x| -x).collect();
            vec![a, neg]
        }
        _ => Vec::new(),
    }
}

/// The face of `body` maximizing a·x.
pub(crate) fn face_toward(body: &Polytope, a: &[Rational]) -> Polytope {
    let top = body.support_raw(a);
    Polytope::convex_hull(body.vertices().iter().filter(|v| dot(a, v) == top).cloned().collect())
        .expect("nonempty face")
}
