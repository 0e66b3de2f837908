//! Minkowski decomposition of a convex polygon into triangles and segments.
//!
//! The polygon is kept as its edge vectors grouped by primitive direction.
//! Antiparallel pairs are peeled off as segments; otherwise three directions
//! with a positive dependency λa + μb + νc = 0 are peeled off as the largest
//! triangle that fits. Each step exhausts at least one direction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Point, Polytope};
use crate::kernel::Rational;

use super::{ccw_vertices, require_planar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SummandKind {
    Triangle,
    Segment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonSummand {
    pub kind: SummandKind,
    pub polytope: Polytope,
}

type Dir = (BigInt, BigInt);

/// Splits v into (primitive integer direction, positive length factor).
fn split(v: &[Rational]) -> (Dir, Rational) {
    let l = v[0].denom().lcm(v[1].denom());
    let x = v[0].numer() * (&l / v[0].denom());
    let y = v[1].numer() * (&l / v[1].denom());
    let g = x.gcd(&y);
    let t = Rational::from(g.clone()) / Rational::from(l);
    ((x / &g, y / &g), t)
}

fn vec_of(d: &Dir, t: &Rational) -> Point {
    vec![t * &Rational::from(d.0.clone()), t * &Rational::from(d.1.clone())]
}

fn det(a: &Dir, b: &Dir) -> BigInt {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Positive (λ, μ, ν) with λa + μb + νc = 0, if one exists.
fn positive_dependency(a: &Dir, b: &Dir, c: &Dir) -> Option<(Rational, Rational, Rational)> {
    // with ν = 1: λa + μb = −c, solved by Cramer's rule
    let d = det(a, b);
    if d.is_zero() {
        return None;
    }
    let neg_c = (-&c.0, -&c.1);
    let lambda = Rational::new(det(&neg_c, b), d.clone()).ok()?;
    let mu = Rational::new(det(a, &neg_c), d).ok()?;
    (lambda.is_positive() && mu.is_positive()).then(|| (lambda, mu, Rational::one()))
}

fn polygon_from_edges(edges: &[Point]) -> Polytope {
    let mut pts = vec![vec![Rational::zero(), Rational::zero()]];
    let mut cur = pts[0].clone();
    for e in edges {
        cur = vec![&cur[0] + &e[0], &cur[1] + &e[1]];
        pts.push(cur.clone());
    }
    Polytope::convex_hull(pts).expect("nonempty")
}

pub fn decompose_polygon(p: &Polytope) -> Result<Vec<PolygonSummand>> {
    require_planar(p)?;
    let verts = ccw_vertices(p);
    let mut edges: BTreeMap<Dir, Rational> = BTreeMap::new();
    if verts.len() >= 2 {
        for i in 0..verts.len() {
            let (a, b) = (&verts[i], &verts[(i + 1) % verts.len()]);
            let (d, t) = split(&[&b[0] - &a[0], &b[1] - &a[1]]);
            *edges.entry(d).or_insert_with(Rational::zero) += t;
        }
    }

    let mut out = Vec::new();
    while !edges.is_empty() {
        let dirs: Vec<Dir> = edges.keys().cloned().collect();
        let anti = dirs.iter().find(|d| edges.contains_key(&(-&d.0, -&d.1))).cloned();
        let step: Vec<(Dir, Rational)> = if let Some(d) = anti {
            let back = (-&d.0, -&d.1);
            let s = edges[&d].clone().min(edges[&back].clone());
            vec![(d, s.clone()), (back, s)]
        } else {
            let mut found = None;
            'search: for i in 0..dirs.len() {
                for j in i + 1..dirs.len() {
                    for k in j + 1..dirs.len() {
                        if let Some((l, m, n)) = positive_dependency(&dirs[i], &dirs[j], &dirs[k]) {
                            found = Some([(dirs[i].clone(), l), (dirs[j].clone(), m), (dirs[k].clone(), n)]);
                            break 'search;
                        }
                    }
                }
            }
            let triple = found.ok_or_else(|| Error::Inconsistent("edge vectors do not close up".into()))?;
            let s = triple
                .iter()
                .map(|(d, w)| &edges[d] / w)
                .min()
                .expect("three directions");
            triple.into_iter().map(|(d, w)| (d, &w * &s)).collect()
        };
        let kind = if step.len() == 2 {
            SummandKind::Segment
        } else {
            SummandKind::Triangle
        };
        let vectors: Vec<Point> = step.iter().map(|(d, t)| vec_of(d, t)).collect();
        let polytope = match kind {
            SummandKind::Segment => Polytope::segment(vec![Rational::zero(), Rational::zero()], vectors[0].clone())?,
            SummandKind::Triangle => {
                // walk the edges counterclockwise so they keep their directions
                let turn = &vectors[0][0] * &vectors[1][1] - &vectors[0][1] * &vectors[1][0];
                if turn.is_positive() {
                    polygon_from_edges(&vectors[..2])
                } else {
                    polygon_from_edges(&[vectors[1].clone(), vectors[0].clone()])
                }
            }
        };
        out.push(PolygonSummand { kind, polytope });
        for (d, t) in step {
            let left = &edges[&d] - &t;
            if left.is_zero() {
                edges.remove(&d);
            } else {
                edges.insert(d, left);
            }
        }
    }

    if !reconstructs(p, &out) {
        return Err(Error::Inconsistent("decomposition does not reconstruct the polygon".into()));
    }
    Ok(out)
}

/// Whether the Minkowski sum of the summands is a translate of p.
pub fn reconstructs(p: &Polytope, summands: &[PolygonSummand]) -> bool {
    let mut sum = Polytope::point(vec![Rational::zero(), Rational::zero()]);
    for s in summands {
        sum = sum.minkowski_sum(&s.polytope).expect("planar");
    }
    sum.normalized_translate() == p.normalized_translate()
}
