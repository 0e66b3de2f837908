use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{intersect, Point, Polytope};
use crate::inequality::InequalityReport;
use crate::kernel::{Rational, Surd};
use crate::mixed::mixed_volume_of;

use super::{ccw_vertices, cross};

/// A convex hexagon A A′ B B′ C C′ listed counterclockwise. Consecutive
/// points may coincide, which degenerates the hexagon to a polygon with
/// fewer sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexagonInstance {
    #[serde(rename = "A")]
    pub a: Point,
    #[serde(rename = "Ap")]
    pub ap: Point,
    #[serde(rename = "B")]
    pub b: Point,
    #[serde(rename = "Bp")]
    pub bp: Point,
    #[serde(rename = "C")]
    pub c: Point,
    #[serde(rename = "Cp")]
    pub cp: Point,
}

impl HexagonInstance {
    pub fn from_points(pts: [Point; 6]) -> Self {
        let [a, ap, b, bp, c, cp] = pts;
        HexagonInstance { a, ap, b, bp, c, cp }
    }

    pub fn points(&self) -> [&Point; 6] {
        [&self.a, &self.ap, &self.b, &self.bp, &self.c, &self.cp]
    }

    /// Checks the labeling: after merging coincident neighbours, the points
    /// are exactly the hull vertices in counterclockwise order.
    pub fn validate(&self) -> Result<()> {
        let pts = self.points();
        if pts.iter().any(|p| p.len() != 2) {
            return Err(Error::Malformed("hexagon points must be planar".into()));
        }
        let mut distinct: Vec<&Point> = Vec::new();
        for p in pts {
            if distinct.last() != Some(&p) {
                distinct.push(p);
            }
        }
        while distinct.len() > 1 && distinct.first() == distinct.last() {
            distinct.pop();
        }
        if distinct.len() < 3 {
            return Err(Error::Malformed("hexagon has fewer than three distinct points".into()));
        }
        let m = distinct.len();
        for i in 0..m {
            let turn = cross(distinct[i], distinct[(i + 1) % m], distinct[(i + 2) % m]);
            if !turn.is_positive() {
                return Err(Error::Malformed("points are not in strictly convex counterclockwise position".into()));
            }
        }
        let hull = Polytope::convex_hull(distinct.iter().map(|p| (*p).clone()).collect())?;
        if hull.vertices().len() != m {
            return Err(Error::Malformed("points wind around more than once".into()));
        }
        Ok(())
    }

    pub fn hexagon(&self) -> Polytope {
        Polytope::convex_hull(self.points().iter().map(|p| (*p).clone()).collect()).expect("nonempty")
    }

    pub fn k(&self) -> Polytope {
        Polytope::convex_hull(vec![self.a.clone(), self.b.clone(), self.c.clone()]).expect("nonempty")
    }

    pub fn l(&self) -> Polytope {
        Polytope::convex_hull(vec![self.ap.clone(), self.bp.clone(), self.cp.clone()]).expect("nonempty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HexagonReport {
    pub hexagon_area: Rational,
    pub mixed_area: Rational,
    /// V(K,L) = |H|.
    pub identity_holds: bool,
    pub intersection_area: Rational,
    /// |H|·|K∩L| ≤ 2·|K|·|L|.
    pub report: InequalityReport,
}

impl HexagonReport {
    pub fn holds(&self) -> bool {
        self.identity_holds && self.report.holds()
    }
}

pub fn hexagon_check(h: &HexagonInstance) -> Result<HexagonReport> {
    h.validate()?;
    let (k, l) = (h.k(), h.l());
    if !k.is_simplex() || !l.is_simplex() {
        return Err(Error::NotSimplex("ABC and A'B'C' must be triangles".into()));
    }
    let hexagon_area = h.hexagon().volume();
    let mixed_area = mixed_volume_of(&[&k, &l])?;
    let intersection_area = intersect(&k, &l)?.map(|i| i.volume()).unwrap_or_else(Rational::zero);
    let report = InequalityReport::new(
        &hexagon_area * &intersection_area,
        k.volume() * l.volume(),
        Surd::rational(Rational::from(2)),
        "|H| |K ∩ L| <= 2 |K| |L|",
    );
    Ok(HexagonReport {
        identity_holds: mixed_area == hexagon_area,
        hexagon_area,
        mixed_area,
        intersection_area,
        report,
    })
}

/// Labels the six vertices of a convex hexagon counterclockwise starting
/// at `offset`.
pub(crate) fn label_hexagon(p: &Polytope, offset: usize) -> Option<HexagonInstance> {
    let v = ccw_vertices(p);
    if v.len() != 6 {
        return None;
    }
    let pts: [Point; 6] = std::array::from_fn(|i| v[(i + offset) % 6].clone());
    Some(HexagonInstance::from_points(pts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point_i64;

    fn inst(p: [[i64; 2]; 6]) -> HexagonInstance {
        HexagonInstance::from_points(p.map(|x| point_i64(&x)))
    }

    #[test]
    fn explicit_hexagon() {
        let h = inst([[0, 0], [2, 0], [3, 1], [3, 3], [1, 3], [0, 2]]);
        let r = hexagon_check(&h).unwrap();
        assert!(r.holds());
        assert_eq!(r.hexagon_area, Rational::from(8));
        assert_eq!(r.mixed_area, Rational::from(8));
    }

    #[test]
    fn degenerate_triangle() {
        let h = inst([[0, 0], [0, 0], [4, 0], [4, 0], [0, 4], [0, 4]]);
        let r = hexagon_check(&h).unwrap();
        assert!(r.identity_holds);
        assert_eq!(r.report.ratio, Some(Surd::rational(Rational::frac(1, 2))));
    }

    #[test]
    fn bad_labelings() {
        assert!(hexagon_check(&inst([[0, 0], [0, 2], [1, 3], [3, 3], [3, 1], [2, 0]])).is_err());
        assert!(hexagon_check(&inst([[0, 0], [1, 0], [2, 0], [2, 2], [1, 2], [0, 2]])).is_err());
        assert!(hexagon_check(&inst([[0, 0], [2, 0], [3, 1], [0, 2], [3, 3], [1, 3]])).is_err());
    }

    #[test]
    fn json_shape() {
        let h: HexagonInstance = serde_json::from_str(
            r#"{"A": ["0","0"], "Ap": ["2","0"], "B": ["3","1"], "Bp": ["3","3"], "C": ["1","3"], "Cp": ["0","2"]}"#,
        )
        .unwrap();
        assert_eq!(h, inst([[0, 0], [2, 0], [3, 1], [3, 3], [1, 3], [0, 2]]));
    }
}
