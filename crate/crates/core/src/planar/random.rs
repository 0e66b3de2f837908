//! Random planar instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bezout::families::{random_body, random_point};
use crate::geometry::{Point, Polytope};
use crate::kernel::{Matrix, Rational};

use super::ccw_vertices;
use super::hexagon::{label_hexagon, HexagonInstance};

/// A convex hexagon on the grid [−grid, grid]².
pub fn random_hexagon<R: Rng + ?Sized>(rng: &mut R, grid: i64) -> Polytope {
    loop {
        let pts: Vec<Point> = (0..rng.gen_range(8..=14)).map(|_| random_point(rng, 2, grid)).collect();
        let hull = Polytope::convex_hull(pts).expect("nonempty");
        let v = ccw_vertices(&hull);
        if v.len() < 6 {
            continue;
        }
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.shuffle(rng);
        let mut chosen: Vec<usize> = idx[..6].to_vec();
        chosen.sort_unstable();
        return Polytope::convex_hull(chosen.into_iter().map(|i| v[i].clone()).collect()).expect("nonempty");
    }
}

pub fn random_hexagon_instance<R: Rng + ?Sized>(rng: &mut R, grid: i64) -> HexagonInstance {
    let h = random_hexagon(rng, grid);
    let offset = rng.gen_range(0..6);
    label_hexagon(&h, offset).expect("six vertices")
}

/// Intersection of the lines through edges i and j of a polygon given in
/// counterclockwise order.
fn edge_line_meet(v: &[Point], i: usize, j: usize) -> Option<Point> {
    let (p, p2) = (&v[i], &v[(i + 1) % v.len()]);
    let (q, q2) = (&v[j], &v[(j + 1) % v.len()]);
    let d1 = [&p2[0] - &p[0], &p2[1] - &p[1]];
    let d2 = [&q2[0] - &q[0], &q2[1] - &q[1]];
    // p + s·d1 = q + t·d2
    let m = Matrix::from_rows(vec![vec![d1[0].clone(), -&d2[0]], vec![d1[1].clone(), -&d2[1]]]).ok()?;
    let st = m.solve(&[&q[0] - &p[0], &q[1] - &p[1]]).ok()??;
    Some(vec![&p[0] + &(&st[0] * &d1[0]), &p[1] + &(&st[0] * &d1[1])])
}

/// Triangles K, L cut out by alternate edge lines of a random convex hexagon
/// H, so that K ∩ L = H is inscribed in both. Retries until both
/// alternate triples bound triangles containing H.
pub fn random_inscribed_triangles<R: Rng + ?Sized>(rng: &mut R, grid: i64) -> (Polytope, Polytope) {
    loop {
        let h = random_hexagon(rng, grid);
        let v = ccw_vertices(&h);
        let tri = |e: [usize; 3]| -> Option<Polytope> {
            let pts = vec![
                edge_line_meet(&v, e[0], e[1])?,
                edge_line_meet(&v, e[1], e[2])?,
                edge_line_meet(&v, e[2], e[0])?,
            ];
            let t = Polytope::convex_hull(pts).ok()?;
            (t.is_simplex() && t.contains(&h)).then_some(t)
        };
        if let (Some(k), Some(l)) = (tri([0, 2, 4]), tri([1, 3, 5])) {
            return (k, l);
        }
    }
}

/// K inside L = Δ-like triangle in convenient position, with K touching
/// every side of L: the intersection K ∩ L = K is inscribed in both.
pub fn random_nested_triangles<R: Rng + ?Sized>(rng: &mut R, grid: i64) -> (Polytope, Polytope) {
    let l = loop {
        let t = random_body(rng, 2, grid);
        if t.is_simplex() {
            break t;
        }
    };
    let v = l.vertices();
    // one point on each side, strictly inside the side
    let pts: Vec<Point> = (0..3)
        .map(|i| {
            let (a, b) = (&v[i], &v[(i + 1) % 3]);
            let t = Rational::frac(rng.gen_range(1..=9), 10);
            vec![&a[0] + &(&t * &(&b[0] - &a[0])), &a[1] + &(&t * &(&b[1] - &a[1]))]
        })
        .collect();
    (Polytope::convex_hull(pts).expect("nonempty"), l)
}

/// A random centrally symmetric polygon: a zonogon with 1..=4 generators
/// plus its symmetric hull.
pub fn random_symmetric_polygon<R: Rng + ?Sized>(rng: &mut R, grid: i64) -> Polytope {
    loop {
        let pts: Vec<Point> = (0..rng.gen_range(1..=4)).map(|_| random_point(rng, 2, grid)).collect();
        let mut all = pts.clone();
        all.extend(pts.iter().map(|p| p.iter().map(|x| -x).collect::<Point>()));
        let p = Polytope::convex_hull(all).expect("nonempty");
        if p.is_full_dimensional() {
            return p;
        }
    }
}
