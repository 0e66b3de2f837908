//! The plane: polygon decomposition and the planar Bezout-type inequalities.

mod decompose;
mod hexagon;
pub mod random;

pub use decompose::{decompose_polygon, reconstructs, PolygonSummand, SummandKind};
pub use hexagon::{hexagon_check, HexagonInstance, HexagonReport};

use serde::Serialize;

use crate::bezout::{bezout_check, BezoutInstance};
use crate::error::{Error, Result};
use crate::geometry::{intersect, Point, Polytope};
use crate::inequality::InequalityReport;
use crate::kernel::{Rational, Surd};
use crate::mixed::mixed_volume_of;

fn require_planar(p: &Polytope) -> Result<()> {
    if p.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: p.dim(),
        });
    }
    Ok(())
}

fn cross(o: &[Rational], a: &[Rational], b: &[Rational]) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Vertices of a polygon in counterclockwise order, starting from the
/// lexicographically smallest.
pub fn ccw_vertices(p: &Polytope) -> Vec<Point> {
    let v = p.vertices();
    if v.len() <= 2 {
        return v.to_vec();
    }
    let start = v[0].clone();
    let mut rest: Vec<Point> = v[1..].to_vec();
    // every other vertex lies in the half-plane to the right of `start`
    // (lex-smallest), so angular order is a cross-product comparison
    rest.sort_by(|a, b| cross(&start, b, a).cmp(&Rational::zero()));
    let mut out = vec![start];
    out.extend(rest);
    out
}

/// V(K,L)·V₂(D) ≤ 2·V(K,D)·V(L,D).
pub fn plane_bezout_check(k: &Polytope, l: &Polytope, d: &Polytope) -> Result<InequalityReport> {
    for p in [k, l, d] {
        require_planar(p)?;
    }
    let inst = BezoutInstance::new(d.clone(), vec![k.clone(), l.clone()])?;
    let mut report = bezout_check(&inst, &Surd::rational(Rational::from(2)))?;
    report.claim = "V(K,L) V_2(D) <= 2 V(K,D) V(L,D)".into();
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    /// K∩L meets every side of K and every side of L.
    pub inscribed: bool,
    pub intersection_area: Rational,
    pub mixed_area: Rational,
    /// V(K,L)·|K∩L| ≤ 2·|K|·|L|.
    pub report: InequalityReport,
}

impl TriangleReport {
    /// The inequality is only claimed for inscribed intersections.
    pub fn holds(&self) -> bool {
        !self.inscribed || self.report.holds()
    }
}

fn require_triangle(p: &Polytope) -> Result<()> {
    require_planar(p)?;
    if !p.is_simplex() {
        return Err(Error::NotSimplex(format!("expected a triangle, got {} vertices", p.vertices().len())));
    }
    Ok(())
}

/// Whether `inner` touches every side of `outer`.
fn touches_every_side(inner: &Polytope, outer: &Polytope) -> bool {
    outer.facets().iter().all(|f| inner.support_raw(&f.normal) == f.offset)
}

pub fn triangle_theorem_check(k: &Polytope, l: &Polytope) -> Result<TriangleReport> {
    require_triangle(k)?;
    require_triangle(l)?;
    let i = intersect(k, l)?
        .filter(Polytope::is_full_dimensional)
        .ok_or_else(|| Error::Precondition("K ∩ L must have nonempty interior".into()))?;
    let inscribed = touches_every_side(&i, k) && touches_every_side(&i, l);
    let intersection_area = i.volume();
    let mixed_area = mixed_volume_of(&[k, l])?;
    let report = InequalityReport::new(
        &mixed_area * &intersection_area,
        k.volume() * l.volume(),
        Surd::rational(Rational::from(2)),
        "V(K,L) |K ∩ L| <= 2 |K| |L|",
    );
    Ok(TriangleReport {
        inscribed,
        intersection_area,
        mixed_area,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point_i64;
    use crate::inequality::Relation;

    fn tri(pts: &[&[i64]]) -> Polytope {
        Polytope::from_i64(pts).unwrap()
    }

    #[test]
    fn ccw_order() {
        let sq = tri(&[&[0, 0], &[1, 1], &[1, 0], &[0, 1]]);
        assert_eq!(
            ccw_vertices(&sq),
            vec![point_i64(&[0, 0]), point_i64(&[1, 0]), point_i64(&[1, 1]), point_i64(&[0, 1])]
        );
    }

    #[test]
    fn segments_give_equality() {
        let k = tri(&[&[0, 0], &[1, 0]]);
        let l = tri(&[&[0, 0], &[0, 1]]);
        let d = k.minkowski_sum(&l).unwrap();
        let r = plane_bezout_check(&k, &l, &d).unwrap();
        assert_eq!(r.relation, Relation::Equal);
        assert_eq!(r.lhs, Rational::frac(1, 2));
        let t = tri(&[&[0, 0], &[3, 0], &[1, 2]]);
        let r = plane_bezout_check(&t, &t, &t).unwrap();
        assert_eq!(r.ratio, Some(Surd::rational(Rational::frac(1, 2))));
    }

    #[test]
    fn triangle_examples() {
        let k = tri(&[&[0, 0], &[1, 0], &[0, 1]]);
        let r = triangle_theorem_check(&k, &k).unwrap();
        assert!(r.inscribed);
        assert_eq!(r.report.lhs, Rational::frac(1, 4));
        assert_eq!(r.report.ratio, Some(Surd::rational(Rational::frac(1, 2))));

        // reflection through the centroid: K ∩ L is a hexagon of area 1/3
        let two_thirds = Rational::frac(2, 3);
        let l = k.reflect().translate(&[two_thirds.clone(), two_thirds]);
        let r = triangle_theorem_check(&k, &l).unwrap();
        assert!(r.inscribed);
        assert_eq!(r.intersection_area, Rational::frac(1, 3));
        assert_eq!(r.mixed_area, Rational::one());
        assert_eq!((r.report.lhs.clone(), r.report.rhs.clone()), (Rational::frac(1, 3), Surd::rational(Rational::frac(1, 2))));

        // the reflection through (1/2, 1/2) only shares an edge
        let edge_only = k.reflect().translate(&point_i64(&[1, 1]));
        assert!(triangle_theorem_check(&k, &edge_only).is_err());
        let small = tri(&[&[0, 0], &[1, 0], &[0, 1]]).scale(&Rational::frac(1, 4)).translate(&[Rational::frac(1, 10), Rational::frac(1, 10)]);
        let r = triangle_theorem_check(&k, &small).unwrap();
        assert!(!r.inscribed && r.holds());
        assert!(triangle_theorem_check(&k, &tri(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])).is_err());
    }
}
