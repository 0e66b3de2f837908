//! Exact convex hulls by the double-description method.
//!
//! Facets of conv(P) ⊂ Qᵏ are the extreme rays of the cone
//! {(c₀, c) : c₀ + c·p ≥ 0 for all p ∈ P}. Points are homogenized to
//! primitive integer rows and rays are kept as primitive integer vectors, so
//! the iteration runs over integers only. It first tries `i128` with checked
//! arithmetic and falls back to `BigInt` when anything overflows.
//!
//! Adjacency of two rays uses the combinatorial test: rays p, q are adjacent
//! iff their common zero set has at least k − 1 members and no third ray
//! vanishes on all of it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::kernel::{Matrix, Rational};

/// Hull of points already reduced to full-dimensional coordinates.
#[derive(Debug, Clone)]
pub(crate) struct RawHull {
    /// Indices of input points that are vertices, ascending.
    pub vertices: Vec<usize>,
    pub facets: Vec<RawFacet>,
}

#[derive(Debug, Clone)]
pub(crate) struct RawFacet {
    /// Outward primitive integer normal; the facet is {x : normal·x ≤ offset}.
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
    /// Input points lying on the facet, ascending.
    pub points: Vec<usize>,
}

trait DdNum: Clone + PartialEq + std::fmt::Debug {
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn dd_zero() -> Self;
    fn sign_of(&self) -> i32;
    /// acc + a·b
    fn mul_add(acc: &Self, a: &Self, b: &Self) -> Option<Self>;
    /// a·x − b·y
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn dd_gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn dd_is_one(&self) -> bool;
}

impl DdNum for i128 {
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn dd_zero() -> Self {
        0
    }
    fn sign_of(&self) -> i32 {
        i128::signum(*self) as i32
    }
    fn mul_add(acc: &Self, a: &Self, b: &Self) -> Option<Self> {
        acc.checked_add(a.checked_mul(*b)?)
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn dd_gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn dd_is_one(&self) -> bool {
        *self == 1
    }
}

impl DdNum for BigInt {
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn dd_zero() -> Self {
        BigInt::zero()
    }
    fn sign_of(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn mul_add(acc: &Self, a: &Self, b: &Self) -> Option<Self> {
        Some(acc + a * b)
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn dd_gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn dd_is_one(&self) -> bool {
        One::is_one(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// Homogenizes a rational point into a primitive integer row (w, w·p), w > 0.
pub(crate) fn homogenize(p: &[Rational]) -> Vec<BigInt> {
    let w = p.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut row = Vec::with_capacity(p.len() + 1);
    row.push(w.clone());
    for x in p {
        row.push(x.numer() * (&w / x.denom()));
    }
    make_primitive(&mut row);
    row
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !Zero::is_zero(&g) && !One::is_one(&g) {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

fn primitive<N: DdNum>(mut v: Vec<N>) -> Vec<N> {
    let mut g = N::dd_zero();
    for x in &v {
        g = g.dd_gcd(x);
        if g.dd_is_one() {
            return v;
        }
    }
    if g.sign_of() != 0 {
        for x in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
    v
}

fn dot<N: DdNum>(a: &[N], b: &[N]) -> Option<N> {
    let mut acc = N::dd_zero();
    for (x, y) in a.iter().zip(b) {
        acc = N::mul_add(&acc, x, y)?;
    }
    Some(acc)
}

/// Facet rays of the simplex spanned by the affinely independent rows `init`.
fn initial_rays(rows: &[Vec<BigInt>], init: &[usize]) -> Vec<Vec<BigInt>> {
    let m = init.len();
    let h0 = Matrix::from_rows(
        init.iter()
            .map(|&i| rows[i].iter().map(|x| Rational::from(x.clone())).collect())
            .collect(),
    )
    .expect("rectangular");
    (0..m)
        .map(|j| {
            let mut e = vec![Rational::zero(); m];
            e[j] = Rational::one();
            let col = h0.solve(&e).expect("square").expect("independent rows");
            let l = col.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let mut ray: Vec<BigInt> = col.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            make_primitive(&mut ray);
            ray
        })
        .collect()
}

struct Ray<N> {
    coords: Vec<N>,
    zeros: Bits,
}

fn double_description<N: DdNum>(
    rows: &[Vec<BigInt>],
    init: &[usize],
    init_rays: &[Vec<BigInt>],
) -> Option<Vec<(Vec<BigInt>, Bits)>> {
    let n = rows.len();
    let k = init.len() - 1;
    let rows_n: Vec<Vec<N>> = rows
        .iter()
        .map(|r| r.iter().map(N::from_big).collect::<Option<Vec<N>>>())
        .collect::<Option<_>>()?;

    let mut rays: Vec<Ray<N>> = Vec::with_capacity(init_rays.len());
    for (j, ray) in init_rays.iter().enumerate() {
        let coords = ray.iter().map(N::from_big).collect::<Option<Vec<N>>>()?;
        let mut zeros = Bits::new(n);
        for (i, &p) in init.iter().enumerate() {
            if i != j {
                zeros.set(p);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    let mut in_init = vec![false; n];
    for &i in init {
        in_init[i] = true;
    }

    for i in (0..n).filter(|&i| !in_init[i]) {
        let h = &rows_n[i];
        let mut vals = Vec::with_capacity(rays.len());
        for r in &rays {
            vals.push(dot(h, &r.coords)?);
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&r| vals[r].sign_of() < 0).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.sign_of() == 0 {
                    r.zeros.set(i);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&r| vals[r].sign_of() > 0).collect();
        let mut fresh: Vec<Ray<N>> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if k >= 1 && common.count() < k - 1 {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(r, ray)| r != p && r != q && common.is_subset_of(&ray.zeros));
                if blocked {
                    continue;
                }
                // vals[p] > 0 > vals[q]: positive combination vanishing on row i.
                let mut coords = Vec::with_capacity(k + 1);
                for (a, b) in rays[q].coords.iter().zip(&rays[p].coords) {
                    coords.push(N::cross(&vals[p], a, &vals[q], b)?);
                }
                let mut zeros = common;
                zeros.set(i);
                fresh.push(Ray {
                    coords: primitive(coords),
                    zeros,
                });
            }
        }
        let mut kept: Vec<Ray<N>> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, ray) in rays.into_iter().enumerate() {
            match vals[r].sign_of() {
                1 => kept.push(ray),
                0 => {
                    let mut ray = ray;
                    ray.zeros.set(i);
                    kept.push(ray);
                }
                _ => {}
            }
        }
        kept.extend(fresh);
        rays = kept;
    }
    Some(
        rays.into_iter()
            .map(|r| (r.coords.iter().map(N::to_big).collect(), r.zeros))
            .collect(),
    )
}

/// Picks `k + 1` affinely independent points greedily in input order.
fn affine_basis(rows: &[Vec<BigInt>], k: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::with_capacity(k + 1);
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let candidate: Vec<Rational> = row.iter().map(|x| Rational::from(x.clone())).collect();
        let mut trial = basis.clone();
        trial.push(candidate);
        let m = Matrix::from_rows(trial.clone()).expect("rectangular");
        if m.rank() == trial.len() {
            basis = trial;
            chosen.push(i);
            if chosen.len() == k + 1 {
                break;
            }
        }
    }
    chosen
}

/// Convex hull of distinct points that affinely span Qᵏ, k ≥ 1.
pub(crate) fn full_dimensional_hull(points: &[Vec<Rational>]) -> RawHull {
    let n = points.len();
    let k = points[0].len();
    let rows: Vec<Vec<BigInt>> = points.iter().map(|p| homogenize(p)).collect();
    let init = affine_basis(&rows, k);
    assert_eq!(init.len(), k + 1, "points must affinely span their space");
    let init_rays = initial_rays(&rows, &init);

    let rays = double_description::<i128>(&rows, &init, &init_rays)
        .unwrap_or_else(|| double_description::<BigInt>(&rows, &init, &init_rays).expect("bigint never overflows"));

    let facets: Vec<RawFacet> = rays
        .iter()
        .map(|(coords, zeros)| RawFacet {
            normal: coords[1..].iter().map(|c| -c).collect(),
            offset: coords[0].clone(),
            points: zeros.ones().filter(|&i| i < n).collect(),
        })
        .collect();

    // A point is a vertex iff the facets through it meet in that point alone.
    let mut vertices = Vec::new();
    for i in 0..n {
        let mut acc: Option<Bits> = None;
        for (_, zeros) in rays.iter().filter(|(_, z)| z.get(i)) {
            acc = Some(match acc {
                None => zeros.clone(),
                Some(a) => a.and(zeros),
            });
        }
        if acc.is_some_and(|a| a.count() == 1) {
            vertices.push(i);
        }
    }
    RawHull { vertices, facets }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|p| p.iter().map(|&x| Rational::from(x)).collect()).collect()
    }

    #[test]
    fn square_with_interior_and_edge_points() {
        let p = pts(&[&[0, 0], &[0, 1], &[0, 2], &[1, 1], &[2, 0], &[2, 2], &[1, 0]]);
        let h = full_dimensional_hull(&p);
        assert_eq!(h.vertices, vec![0, 2, 4, 5]);
        assert_eq!(h.facets.len(), 4);
        let bottom = h.facets.iter().find(|f| f.normal == vec![BigInt::from(0), BigInt::from(-1)]).unwrap();
        assert_eq!(bottom.offset, BigInt::from(0));
        assert_eq!(bottom.points, vec![0, 4, 6]);
    }

    #[test]
    fn octahedron_facets() {
        let p = pts(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]]);
        let h = full_dimensional_hull(&p);
        assert_eq!(h.facets.len(), 8);
        for f in &h.facets {
            assert!(f.normal.iter().all(|c| c.abs() == BigInt::from(1)));
            assert_eq!(f.offset, BigInt::from(1));
            assert_eq!(f.points.len(), 3);
        }
    }

    #[test]
    fn segment_in_one_dimension() {
        let p = pts(&[&[3], &[-1], &[0]]);
        let h = full_dimensional_hull(&p);
        assert_eq!(h.vertices, vec![0, 1]);
        assert_eq!(h.facets.len(), 2);
    }

    #[test]
    fn homogenization_is_primitive() {
        let row = homogenize(&[Rational::frac(1, 3), Rational::frac(-2, 3)]);
        assert_eq!(row, vec![BigInt::from(3), BigInt::from(1), BigInt::from(-2)]);
    }
}
