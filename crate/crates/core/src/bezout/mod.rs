//! Bezout-type inequalities for mixed volumes:
//!
//! V(K₁,…,K_r,D^{n−r})·Vₙ(D)^{r−1} ≤ c · Π V(Kᵢ,D^{n−1}).

mod bodies;
mod contact;
mod convenient;
pub mod families;
mod inscribed;
pub mod search;

use serde::{Deserialize, Serialize};

pub use bodies::{cross_polytope, named_body, standard_simplex, unit_cube, zon_equality, zonotope};
pub use contact::{contact_equality_check, contact_set_e};
pub use convenient::{convenient_position, simplex_equality_condition, ConvenientPlacement};
pub use inscribed::{inscribed_simplex_check, kappa_constant_check, InscribedReport, KappaReport};
pub use search::{search_counterexamples, Finding, Generator, SearchConfig, SearchReport};

use crate::error::{Error, Result};
use crate::geometry::{Direction, Polytope};
use crate::inequality::InequalityReport;
use crate::kernel::{binomial, Matrix, Rational, Surd};
use crate::mixed::{mixed_volume_cached, MixedVolumeQuery, VolumeCache};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BezoutInstance {
    pub n: usize,
    pub r: usize,
    pub d: Polytope,
    pub k: Vec<Polytope>,
}

impl BezoutInstance {
    pub fn new(d: Polytope, k: Vec<Polytope>) -> Result<Self> {
        let n = d.dim();
        let r = k.len();
        if r == 0 || r > n {
            return Err(Error::Malformed(format!("need 1 ≤ r ≤ n, got r = {r}, n = {n}")));
        }
        for body in &k {
            d.check_dim(body.dim())?;
        }
        if !d.is_full_dimensional() {
            return Err(Error::Precondition("D must be full-dimensional".into()));
        }
        Ok(BezoutInstance { n, r, d, k })
    }
}

/// Exact evaluation of both sides with the given constant.
pub fn bezout_check(inst: &BezoutInstance, constant: &Surd) -> Result<InequalityReport> {
    bezout_check_cached(inst, constant, &VolumeCache::new())
}

pub(crate) fn bezout_check_cached(
    inst: &BezoutInstance,
    constant: &Surd,
    cache: &VolumeCache,
) -> Result<InequalityReport> {
    let (n, r) = (inst.n, inst.r);
    let mut entries: Vec<(Polytope, usize)> = inst.k.iter().map(|k| (k.clone(), 1)).collect();
    if n > r {
        entries.push((inst.d.clone(), n - r));
    }
    let mixed = mixed_volume_cached(&MixedVolumeQuery::new(entries)?, cache);
    let lhs = mixed * inst.d.volume().pow(r as u32 - 1);
    let mut product = Rational::one();
    for k in &inst.k {
        let q = if n > 1 {
            MixedVolumeQuery::new(vec![(k.clone(), 1), (inst.d.clone(), n - 1)])?
        } else {
            MixedVolumeQuery::new(vec![(k.clone(), 1)])?
        };
        product *= mixed_volume_cached(&q, cache);
    }
    Ok(InequalityReport::new(
        lhs,
        product,
        constant.clone(),
        "V(K_1,...,K_r,D^(n-r)) V_n(D)^(r-1) <= c * prod V(K_i,D^(n-1))",
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsomorphicMode {
    /// Every Kᵢ a zonotope: c = r^{r−1}.
    Zonoid,
    /// Arbitrary bodies: c = nʳ·r^{r−1}.
    General,
    /// Centrally symmetric Kᵢ: c = n^{r/2}·r^{r−1}.
    Symmetric,
}

impl IsomorphicMode {
    pub fn constant(self, n: usize, r: usize) -> Surd {
        let base = Rational::from(r).pow(r as u32 - 1);
        match self {
            IsomorphicMode::Zonoid => Surd::rational(base),
            IsomorphicMode::General => Surd::rational(base * Rational::from(n).pow(r as u32)),
            IsomorphicMode::Symmetric => Surd::new(base, Rational::from(n).pow(r as u32)).expect("positive radicand"),
        }
    }
}

impl std::str::FromStr for IsomorphicMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zonoid" => Ok(IsomorphicMode::Zonoid),
            "general" => Ok(IsomorphicMode::General),
            "symmetric" => Ok(IsomorphicMode::Symmetric),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// Whether the vertex set is symmetric about its centroid.
pub fn is_centrally_symmetric(p: &Polytope) -> bool {
    let c = p.centroid_of_vertices();
    let two = Rational::from(2);
    p.vertices().iter().all(|v| {
        let mirror: Vec<Rational> = v.iter().zip(&c).map(|(x, m)| &two * m - x).collect();
        p.vertices().binary_search(&mirror).is_ok()
    })
}

/// Whether `p` is a zonotope, tested through central symmetry of every face
/// of dimension ≥ 2.
pub fn is_zonotope(p: &Polytope) -> bool {
    match p.intrinsic_dim() {
        0 | 1 => true,
        2 => is_centrally_symmetric(p),
        _ => {
            is_centrally_symmetric(p)
                && p.facets().iter().all(|f| {
                    let face = Polytope::convex_hull(f.vertices.iter().map(|&i| p.vertices()[i].clone()).collect())
                        .expect("nonempty facet");
                    is_zonotope(&face)
                })
        }
    }
}

pub fn isomorphic_check(inst: &BezoutInstance, mode: IsomorphicMode) -> Result<InequalityReport> {
    match mode {
        IsomorphicMode::Zonoid if !inst.k.iter().all(is_zonotope) => {
            return Err(Error::Precondition("zonoid mode needs every K_i to be a zonotope".into()));
        }
        IsomorphicMode::Symmetric if !inst.k.iter().all(is_centrally_symmetric) => {
            return Err(Error::Precondition("symmetric mode needs centrally symmetric K_i".into()));
        }
        _ => {}
    }
    let mut report = bezout_check(inst, &mode.constant(inst.n, inst.r))?;
    report.claim = format!("{} ({mode:?} constant)", report.claim);
    Ok(report)
}

/// Zonoid-mode check with each Kᵢ given by its generators.
pub fn zonoid_check(d: &Polytope, generators: &[Vec<Vec<Rational>>]) -> Result<InequalityReport> {
    let k = generators.iter().map(|g| zonotope(g)).collect::<Result<Vec<_>>>()?;
    isomorphic_check(&BezoutInstance::new(d.clone(), k)?, IsomorphicMode::Zonoid)
}

fn origin_segment(v: &Direction) -> Result<Polytope> {
    Polytope::segment(vec![Rational::zero(); v.dim()], v.as_slice().to_vec())
}

/// The projection-volume inequality
/// (n/(n−1))·V_{n−2}(D|(v₁,v₂)^⊥)·V₂(U)·Vₙ(D) ≤ V_{n−1}(D|v₁^⊥)·V_{n−1}(D|v₂^⊥),
/// evaluated in its equivalent mixed-volume form with K = [0,v₁], [0,v₂].
pub fn projection_form_check(d: &Polytope, v1: &Direction, v2: &Direction) -> Result<InequalityReport> {
    let independent = Matrix::from_rows(vec![v1.as_slice().to_vec(), v2.as_slice().to_vec()])?.rank() == 2;
    if !independent {
        return Err(Error::Precondition("directions must be linearly independent".into()));
    }
    let inst = BezoutInstance::new(d.clone(), vec![origin_segment(v1)?, origin_segment(v2)?])?;
    let mut report = bezout_check(&inst, &Surd::rational(Rational::one()))?;
    report.claim = "projection form with segments [0,v1], [0,v2]".into();
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentProjectionReport {
    /// V([0,v], D^{n−1}).
    pub mixed_volume: Rational,
    /// V_{n−1}(D|v^⊥)².
    pub projected_volume_squared: Rational,
    pub norm_squared: Rational,
    /// For axis directions, n·V([0,v],D^{n−1}) = |v|·V_{n−1}(coordinate projection).
    pub axis_check: Option<bool>,
    /// (n·V([0,v],D^{n−1}))² = |v|²·V_{n−1}(D|v^⊥)².
    pub holds: bool,
}

/// n·V([0,v], D^{n−1}) = |v|·V_{n−1}(D|v^⊥), verified in squared form.
///
/// The projection onto v^⊥ is rational; its volume is measured after
/// dropping a coordinate k with vₖ ≠ 0, which scales (n−1)-volume by
/// |vₖ|/|v|.
pub fn segment_projection_identity_check(d: &Polytope, v: &Direction) -> Result<SegmentProjectionReport> {
    d.check_dim(v.dim())?;
    if !d.is_full_dimensional() {
        return Err(Error::Precondition("D must be full-dimensional".into()));
    }
    let n = d.dim();
    if n < 2 {
        return Err(Error::Precondition("dimension must be at least 2".into()));
    }
    let seg = origin_segment(v)?;
    let mixed = mixed_volume_cached(
        &MixedVolumeQuery::new(vec![(seg, 1), (d.clone(), n - 1)])?,
        &VolumeCache::new(),
    );
    let vs = v.as_slice();
    let norm_squared = v.norm_squared();
    let k = vs.iter().position(|x| !x.is_zero()).expect("nonzero direction");
    let projected: Vec<Vec<Rational>> = d
        .vertices()
        .iter()
        .map(|x| {
            let t = crate::kernel::dot(x, vs) / &norm_squared;
            let y: Vec<Rational> = x.iter().zip(vs).map(|(a, b)| a - &(&t * b)).collect();
            crate::geometry::drop_coord(&y, k)
        })
        .collect();
    let flat = Polytope::convex_hull(projected)?.volume();
    let projected_volume_squared = &flat * &flat * &norm_squared / (&vs[k] * &vs[k]);
    let nm = Rational::from(n) * &mixed;
    let holds = &nm * &nm == &norm_squared * &projected_volume_squared;
    let axis_check = (vs.iter().filter(|x| !x.is_zero()).count() == 1)
        .then(|| -> Result<bool> { Ok(nm == vs[k].abs() * d.coordinate_projection(&[k])?.volume()) })
        .transpose()?;
    Ok(SegmentProjectionReport {
        mixed_volume: mixed,
        projected_volume_squared,
        norm_squared,
        axis_check,
        holds,
    })
}

/// (n/r)ʳ·C(n,r)⁻¹·V_{n−r}(P_{[r]}D)·Vₙ(D)^{r−1} ≤ Π_{i≤r} V_{n−1}(PᵢD), where Pᵢ
/// drops coordinate i and P_{[r]} drops the first r coordinates.
pub fn coordinate_projection_inequality_check(d: &Polytope, r: usize) -> Result<InequalityReport> {
    let n = d.dim();
    if !d.is_full_dimensional() {
        return Err(Error::Precondition("D must be full-dimensional".into()));
    }
    if r == 0 || r >= n {
        return Err(Error::Malformed(format!("need 1 ≤ r ≤ n−1, got r = {r}, n = {n}")));
    }
    let first: Vec<usize> = (0..r).collect();
    let coeff = Rational::frac(n as i64, r as i64).pow(r as u32) / Rational::from(binomial(n as u32, r as u32));
    let lhs = coeff * d.coordinate_projection(&first)?.volume() * d.volume().pow(r as u32 - 1);
    let mut product = Rational::one();
    for i in 0..r {
        product *= d.coordinate_projection(&[i])?.volume();
    }
    Ok(InequalityReport::new(
        lhs,
        product,
        Surd::rational(Rational::one()),
        "(n/r)^r C(n,r)^-1 V_(n-r)(P_[r] D) V_n(D)^(r-1) <= prod V_(n-1)(P_i D)",
    ))
}

/// Coordinate segments [0,e₁],…,[0,e_r].
pub fn coordinate_segments(n: usize, r: usize) -> Result<Vec<Polytope>> {
    (0..r)
        .map(|i| {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            Polytope::segment(vec![Rational::zero(); n], e)
        })
        .collect()
}
