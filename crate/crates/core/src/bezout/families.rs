//! Random bodies and constructed instance families.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::combinatorics::{mask_members, nonempty_masks};
use crate::error::Result;
use crate::geometry::{Point, Polytope};
use crate::kernel::{Matrix, Rational};

pub fn random_point<R: Rng + ?Sized>(rng: &mut R, n: usize, grid: i64) -> Point {
    (0..n).map(|_| Rational::from(rng.gen_range(-grid..=grid))).collect()
}

/// Hull of `count` grid points; may be lower-dimensional.
pub fn random_hull<R: Rng + ?Sized>(rng: &mut R, n: usize, grid: i64, count: usize) -> Polytope {
    Polytope::convex_hull((0..count.max(1)).map(|_| random_point(rng, n, grid)).collect()).expect("nonempty")
}

/// Full-dimensional hull of between n+1 and n+6 grid points.
pub fn random_body<R: Rng + ?Sized>(rng: &mut R, n: usize, grid: i64) -> Polytope {
    loop {
        let count = rng.gen_range(n + 1..=n + 6);
        let p = random_hull(rng, n, grid, count);
        if p.is_full_dimensional() {
            return p;
        }
    }
}

pub fn random_simplex<R: Rng + ?Sized>(rng: &mut R, n: usize, grid: i64) -> Polytope {
    loop {
        let p = random_hull(rng, n, grid, n + 1);
        if p.is_simplex() {
            return p;
        }
    }
}

/// Sum of 1..=max_segments segments with integer directions in [−grid, grid]ⁿ.
pub fn random_zonotope<R: Rng + ?Sized>(rng: &mut R, n: usize, grid: i64, max_segments: usize) -> Polytope {
    let count = rng.gen_range(1..=max_segments.max(1));
    let mut z = Polytope::point(vec![Rational::zero(); n]);
    for _ in 0..count {
        let g = random_point(rng, n, grid);
        let seg = Polytope::segment(vec![Rational::zero(); n], g).expect("same dimension");
        z = z.minkowski_sum(&seg).expect("same dimension");
    }
    z
}

pub fn random_full_zonotope<R: Rng + ?Sized>(rng: &mut R, n: usize, grid: i64, max_segments: usize) -> Polytope {
    loop {
        let z = random_zonotope(rng, n, grid, max_segments.max(n));
        if z.is_full_dimensional() {
            return z;
        }
    }
}

/// x ↦ Ax + b with A an invertible integer matrix with small entries.
#[derive(Debug, Clone)]
pub struct AffineMap {
    pub a: Matrix,
    pub b: Point,
}

impl AffineMap {
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Self {
        loop {
            let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let a = Matrix::from_i64(&refs).expect("square");
            if a.rank() == n {
                return AffineMap {
                    a,
                    b: random_point(rng, n, 3),
                };
            }
        }
    }

    pub fn apply(&self, p: &Polytope) -> Polytope {
        p.affine_image(&self.a, &self.b).expect("dimensions agree")
    }
}

/// A point of the open simplex with random positive barycentric weights.
pub fn random_interior_point<R: Rng + ?Sized>(rng: &mut R, simplex: &[Point]) -> Point {
    let weights: Vec<Rational> = simplex.iter().map(|_| Rational::from(rng.gen_range(1..=6))).collect();
    let total: Rational = weights.iter().sum();
    let n = simplex[0].len();
    (0..n)
        .map(|c| simplex.iter().zip(&weights).map(|(v, w)| &v[c] * w).sum::<Rational>() / &total)
        .collect()
}

/// A simplex with bodies in convenient position, each the hull of a set Wᵢ
/// of simplex vertices plus interior points.
#[derive(Debug, Clone)]
pub struct SimplexFamily {
    pub delta: Polytope,
    pub bodies: Vec<Polytope>,
    /// The vertex sets Wᵢ as indices into the standard simplex before the
    /// affine map.
    pub vertex_sets: Vec<Vec<usize>>,
}

/// A body meets a face of the simplex exactly when its vertex set does, so
/// the face condition reduces to |∪_{i∈S} Wᵢ| ≥ |S| + 1 for every S.
pub fn face_condition(sets: &[Vec<usize>]) -> bool {
    nonempty_masks(sets.len()).all(|mask| {
        let members = mask_members(mask);
        let mut union: Vec<usize> = members.iter().flat_map(|&i| sets[i].iter().copied()).collect();
        union.sort_unstable();
        union.dedup();
        union.len() > members.len()
    })
}

fn random_vertex_set<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let size = rng.gen_range(2..=n + 1);
    let mut all: Vec<usize> = (0..=n).collect();
    all.shuffle(rng);
    let mut w = all[..size].to_vec();
    w.sort_unstable();
    w
}

fn build_family<R: Rng + ?Sized>(rng: &mut R, n: usize, sets: &[Vec<usize>], moved: Option<(usize, usize)>) -> SimplexFamily {
    let base = crate::bezout::standard_simplex(n).expect("valid dimension");
    let verts = base.vertices().to_vec();
    let barycenter = base.centroid_of_vertices();
    let bodies: Vec<Polytope> = sets
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut pts: Vec<Point> = w.iter().map(|&j| verts[j].clone()).collect();
            if let Some((body, vertex)) = moved {
                if body == i {
                    let eps = Rational::frac(1, rng.gen_range(2..=9));
                    let v = &verts[vertex];
                    pts.push(v.iter().zip(&barycenter).map(|(x, c)| x + &(&eps * &(c - x))).collect());
                }
            }
            for _ in 0..rng.gen_range(0..=2) {
                pts.push(random_interior_point(rng, &verts));
            }
            Polytope::convex_hull(pts).expect("nonempty")
        })
        .collect();
    let map = AffineMap::random(rng, n);
    SimplexFamily {
        delta: map.apply(&base),
        bodies: bodies.iter().map(|b| map.apply(b)).collect(),
        vertex_sets: sets.to_vec(),
    }
}

/// A family satisfying the face condition, so equality holds.
pub fn equality_family<R: Rng + ?Sized>(rng: &mut R, n: usize, r: usize) -> Result<SimplexFamily> {
    loop {
        let sets: Vec<Vec<usize>> = (0..r).map(|_| random_vertex_set(rng, n)).collect();
        if face_condition(&sets) {
            return Ok(build_family(rng, n, &sets, None));
        }
    }
}

/// A family satisfying the face condition except that one body has one
/// vertex pulled toward the barycenter, which breaks the condition while
/// keeping every body in convenient position. Needs r ≥ 2.
pub fn vertex_miss_family<R: Rng + ?Sized>(rng: &mut R, n: usize, r: usize) -> Result<SimplexFamily> {
    if r < 2 {
        return Err(crate::error::Error::Precondition(
            "a single body in convenient position always gives equality".into(),
        ));
    }
    loop {
        let sets: Vec<Vec<usize>> = (0..r).map(|_| random_vertex_set(rng, n)).collect();
        if !face_condition(&sets) {
            continue;
        }
        let mut choices = Vec::new();
        for (i, w) in sets.iter().enumerate() {
            if w.len() < 3 {
                continue;
            }
            for &v in w {
                let mut reduced = sets.clone();
                reduced[i].retain(|&x| x != v);
                if !face_condition(&reduced) {
                    choices.push((i, v, reduced));
                }
            }
        }
        if let Some((i, v, reduced)) = choices.choose(rng).cloned() {
            return Ok(build_family(rng, n, &reduced, Some((i, v))));
        }
    }
}
