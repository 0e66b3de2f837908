//! V-polytopes with eagerly derived facets.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::hull::{full_dimensional_hull, RawHull};
use crate::kernel::{det_of_rows, dot, factorial, Matrix, Rational};

pub type Point = Vec<Rational>;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 6;

/// A facet inequality `normal · x ≤ offset` with the vertices it supports.
///
/// For lower-dimensional polytopes facets live inside the affine hull: the
/// normal only involves the hull's chart coordinates and the inequality is
/// meant together with the polytope's affine equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    pub vertices: Vec<usize>,
}

/// Affine equation `normal · x = value` satisfied by the whole polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub normal: Vec<Rational>,
    pub value: Rational,
}

#[derive(Clone)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Point>,
    intrinsic_dim: usize,
    facets: Vec<Facet>,
    equations: Vec<Equation>,
    /// Coordinates that chart the affine hull injectively.
    chart: Vec<usize>,
}

/// A nonzero rational direction; never normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Direction(Vec<Rational>);

impl Direction {
    pub fn new(v: Vec<Rational>) -> Result<Self> {
        if v.iter().all(Rational::is_zero) {
            return Err(Error::ZeroDirection);
        }
        Ok(Direction(v))
    }

    pub fn from_i64(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| Rational::from(x)).collect())
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm_squared(&self) -> Rational {
        dot(&self.0, &self.0)
    }

    pub fn neg(&self) -> Direction {
        Direction(self.0.iter().map(|x| -x).collect())
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }
}

pub fn point_i64(p: &[i64]) -> Point {
    p.iter().map(|&x| Rational::from(x)).collect()
}

impl Polytope {
    /// Convex hull of a finite point set.
    pub fn convex_hull(points: Vec<Point>) -> Result<Self> {
        let dim = match points.first() {
            None => return Err(Error::Empty),
            Some(p) => p.len(),
        };
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        let mut points = points;
        points.sort();
        points.dedup();

        let origin = points[0].clone();
        let diffs: Vec<Vec<Rational>> = points[1..]
            .iter()
            .map(|p| p.iter().zip(&origin).map(|(a, b)| a - b).collect())
            .collect();
        let (chart, equations) = if diffs.is_empty() {
            (Vec::new(), unit_equations(&origin))
        } else {
            let m = Matrix::from_rows(diffs.clone())?;
            let mut reduced = m.clone();
            let chart = reduced.rref();
            let equations = if chart.len() < dim {
                m.null_space()
                    .into_iter()
                    .map(|normal| {
                        let normal = scale_to_primitive(normal);
                        let value = dot(&normal, &origin);
                        Equation { normal, value }
                    })
                    .collect()
            } else {
                Vec::new()
            };
            (chart, equations)
        };
        let k = chart.len();

        if k == 0 {
            return Ok(Polytope {
                dim,
                vertices: points,
                intrinsic_dim: 0,
                facets: Vec::new(),
                equations,
                chart,
            });
        }

        let charted: Vec<Point> = points
            .iter()
            .map(|p| chart.iter().map(|&c| p[c].clone()).collect())
            .collect();
        let RawHull {
            vertices: vidx,
            facets: raw,
        } = full_dimensional_hull(&charted);

        let mut position = vec![usize::MAX; points.len()];
        for (new, &old) in vidx.iter().enumerate() {
            position[old] = new;
        }
        let facets = raw
            .into_iter()
            .map(|f| {
                let mut normal = vec![Rational::zero(); dim];
                for (c, v) in chart.iter().zip(&f.normal) {
                    normal[*c] = Rational::from(v.clone());
                }
                Facet {
                    normal,
                    offset: Rational::from(f.offset),
                    vertices: f
                        .points
                        .iter()
                        .map(|&i| position[i])
                        .filter(|&i| i != usize::MAX)
                        .collect(),
                }
            })
            .collect();
        let vertices = vidx.into_iter().map(|i| points[i].clone()).collect();
        Ok(Polytope {
            dim,
            vertices,
            intrinsic_dim: k,
            facets,
            equations,
            chart,
        })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<Self> {
        Self::convex_hull(points.iter().map(|p| point_i64(p)).collect())
    }

    pub fn point(p: Point) -> Self {
        Self::convex_hull(vec![p]).expect("single point")
    }

    pub fn segment(a: Point, b: Point) -> Result<Self> {
        Self::convex_hull(vec![a, b])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn intrinsic_dim(&self) -> usize {
        self.intrinsic_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.intrinsic_dim == self.dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn is_simplex(&self) -> bool {
        self.is_full_dimensional() && self.vertices.len() == self.dim + 1
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        x.len() == self.dim
            && self.equations.iter().all(|e| dot(&e.normal, x) == e.value)
            && self.facets.iter().all(|f| dot(&f.normal, x) <= f.offset)
    }

    pub fn contains(&self, other: &Polytope) -> bool {
        other.vertices.iter().all(|v| self.contains_point(v))
    }

    pub fn translate(&self, t: &[Rational]) -> Polytope {
        self.map_vertices(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
    }

    /// Dilation by `lambda` about the origin; `lambda = 0` gives the origin.
    pub fn scale(&self, lambda: &Rational) -> Polytope {
        self.map_vertices(|v| v.iter().map(|a| a * lambda).collect())
    }

    pub fn reflect(&self) -> Polytope {
        self.scale(&Rational::from(-1))
    }

    /// Image under x ↦ Ax + b.
    pub fn affine_image(&self, a: &Matrix, b: &[Rational]) -> Result<Polytope> {
        if a.cols() != self.dim || b.len() != a.rows() {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: a.cols(),
            });
        }
        let pts = self
            .vertices
            .iter()
            .map(|v| {
                (0..a.rows())
                    .map(|i| dot(a.row(i), v) + &b[i])
                    .collect()
            })
            .collect();
        Polytope::convex_hull(pts)
    }

    fn map_vertices(&self, f: impl Fn(&Point) -> Point) -> Polytope {
        Polytope::convex_hull(self.vertices.iter().map(f).collect()).expect("nonempty")
    }

    pub fn centroid_of_vertices(&self) -> Point {
        let m = Rational::from(self.vertices.len());
        (0..self.dim)
            .map(|c| self.vertices.iter().map(|v| &v[c]).sum::<Rational>() / &m)
            .collect()
    }

    /// Exact `dim`-dimensional volume; zero for lower-dimensional bodies.
    ///
    /// The body is coned from its lexicographically smallest vertex over every
    /// facet that misses it. Simplicial facets contribute a determinant; other
    /// facets are measured recursively after dropping a coordinate along
    /// which the facet hyperplane projects injectively.
    pub fn volume(&self) -> Rational {
        if !self.is_full_dimensional() {
            return Rational::zero();
        }
        let d = self.dim;
        if d == 0 {
            return Rational::one();
        }
        if d == 1 {
            return &self.vertices[self.vertices.len() - 1][0] - &self.vertices[0][0];
        }
        let apex = &self.vertices[0];
        let d_fact = Rational::from(factorial(d as u32));
        let mut total = Rational::zero();
        for f in &self.facets {
            let height = &f.offset - &dot(&f.normal, apex);
            if height.is_zero() {
                continue;
            }
            if f.vertices.len() == d {
                let rows: Vec<Vec<Rational>> = f
                    .vertices
                    .iter()
                    .map(|&i| self.vertices[i].iter().zip(apex).map(|(a, b)| a - b).collect())
                    .collect();
                total += det_of_rows(&rows).abs() / &d_fact;
            } else {
                let k = f.normal.iter().position(|c| !c.is_zero()).expect("nonzero normal");
                let projected: Vec<Point> = f
                    .vertices
                    .iter()
                    .map(|&i| drop_coord(&self.vertices[i], k))
                    .collect();
                let base = Polytope::convex_hull(projected).expect("nonempty").volume();
                total += height * base / (f.normal[k].abs() * Rational::from(d));
            }
        }
        total
    }

    pub fn support_value(&self, u: &Direction) -> Result<Rational> {
        self.check_dim(u.dim())?;
        Ok(self
            .vertices
            .iter()
            .map(|v| dot(u.as_slice(), v))
            .max()
            .expect("nonempty"))
    }

    /// Support value for a raw vector (zero allowed, giving 0).
    pub(crate) fn support_raw(&self, u: &[Rational]) -> Rational {
        self.vertices.iter().map(|v| dot(u, v)).max().expect("nonempty")
    }

    /// The face in direction `u`: hull of the vertices maximizing u·x.
    pub fn face_in_direction(&self, u: &Direction) -> Result<Polytope> {
        let h = self.support_value(u)?;
        let pts = self
            .vertices
            .iter()
            .filter(|v| dot(u.as_slice(), v) == h)
            .cloned()
            .collect();
        Polytope::convex_hull(pts)
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope> {
        self.check_dim(other.dim)?;
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Polytope::convex_hull(pts)
    }

    /// Drops the listed (zero-based) coordinates.
    pub fn coordinate_projection(&self, drop: &[usize]) -> Result<Polytope> {
        if drop.iter().any(|&c| c >= self.dim) {
            return Err(Error::Malformed("coordinate index out of range".into()));
        }
        let keep: Vec<usize> = (0..self.dim).filter(|c| !drop.contains(c)).collect();
        if keep.is_empty() {
            return Err(Error::Precondition("cannot drop every coordinate".into()));
        }
        Polytope::convex_hull(
            self.vertices
                .iter()
                .map(|v| keep.iter().map(|&c| v[c].clone()).collect())
                .collect(),
        )
    }

    pub(crate) fn check_dim(&self, d: usize) -> Result<()> {
        if d != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: d,
            });
        }
        Ok(())
    }

    /// All constraints as inequalities a·x ≤ b, equations contributing both
    /// directions.
    pub fn halfspaces(&self) -> Vec<(Vec<Rational>, Rational)> {
        let mut out: Vec<(Vec<Rational>, Rational)> = self
            .facets
            .iter()
            .map(|f| (f.normal.clone(), f.offset.clone()))
            .collect();
        for e in &self.equations {
            out.push((e.normal.clone(), e.value.clone()));
            out.push((e.normal.iter().map(|x| -x).collect(), -&e.value));
        }
        out
    }

    /// Canonical translate: lexicographically smallest vertex moved to 0.
    pub fn normalized_translate(&self) -> Polytope {
        let t: Vec<Rational> = self.vertices[0].iter().map(|x| -x).collect();
        self.translate(&t)
    }

    pub fn chart(&self) -> &[usize] {
        &self.chart
    }
}

pub(crate) fn drop_coord(p: &[Rational], k: usize) -> Point {
    p.iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, x)| x.clone())
        .collect()
}

fn unit_equations(p: &[Rational]) -> Vec<Equation> {
    (0..p.len())
        .map(|i| {
            let mut normal = vec![Rational::zero(); p.len()];
            normal[i] = Rational::one();
            Equation {
                normal,
                value: p[i].clone(),
            }
        })
        .collect()
}

fn scale_to_primitive(v: Vec<Rational>) -> Vec<Rational> {
    use num_integer::Integer;
    let l = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| Rational::from(x / &g)).collect()
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

impl Hash for Polytope {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.vertices.hash(state);
    }
}

impl PartialOrd for Polytope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polytope {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.dim, &self.vertices).cmp(&(other.dim, &other.vertices))
    }
}

impl fmt::Debug for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polytope(dim={}, intrinsic={}, vertices=[", self.dim, self.intrinsic_dim)?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = v.iter().map(ToString::to_string).collect();
            write!(f, "({})", s.join(","))?;
        }
        write!(f, "])")
    }
}

/// Wire form `{"dim": d, "vertices": [["p/q", ...], ...]}`.
#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
}

impl Serialize for Polytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeJson {
            dim: self.dim,
            vertices: self.vertices.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolytopeJson::deserialize(deserializer)?;
        Polytope::from_json_parts(raw.dim, raw.vertices).map_err(serde::de::Error::custom)
    }
}

impl Polytope {
    fn from_json_parts(dim: usize, vertices: Vec<Vec<Rational>>) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::Unsupported(format!("dimension {dim} (supported 1..={MAX_DIM})")));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        Polytope::convex_hull(vertices)
    }
}
