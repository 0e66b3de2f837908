//! The built-in reproduction catalog: a fixed list of named rows, each a
//! single scenario or a seeded randomized suite, run by `reproduce-paper`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bezout::families::{
    equality_family, random_body, random_hull, random_point, random_simplex, random_zonotope, vertex_miss_family,
};
use crate::bezout::{
    bezout_check, cross_polytope, inscribed_simplex_check, is_centrally_symmetric, isomorphic_check,
    kappa_constant_check, search_counterexamples, simplex_equality_condition, standard_simplex, unit_cube,
    BezoutInstance, Generator, IsomorphicMode, SearchConfig,
};
use crate::error::{Error, Result};
use crate::geometry::{Point, Polytope};
use crate::inequality::{ExpectedRelation, InequalityReport, Relation};
use crate::kernel::{factorial, Rational, Surd};
use crate::mixed::{
    binomial_convolution, decomposition_chain_check, has_internal_zeros, is_log_concave, is_log_concave_pairwise,
    is_log_linear, mixed_volume, mixed_volume_facet_sum, MixedVolumeQuery,
};
use crate::planar::random::{random_hexagon_instance, random_inscribed_triangles};
use crate::planar::{hexagon_check, plane_bezout_check, triangle_theorem_check};
use crate::report::RunReport;
use crate::scenario::{BodySpec, CheckKind, Scenario};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "suite", rename_all = "kebab-case")]
pub enum Task {
    Scenario(Box<Scenario>),
    SimplexVolumes { max_n: usize },
    CrossPolytopeVolumes { max_n: usize },
    OctahedronComponents,
    SimplexBezout { trials: usize },
    EqualityFamilies { trials: usize },
    VertexMissFamilies { trials: usize },
    LogConcavity { trials: usize },
    ConvolutionPropagation { trials: usize },
    DecompositionChain { trials: usize },
    KappaSweep { max_n: usize },
    InscribedSimplices { random_per_dim: usize },
    ZonotopeIsomorphic { trials: usize },
    GeneralIsomorphic { trials: usize },
    SymmetricIsomorphic { trials: usize },
    PlaneBezout { trials: usize },
    PlaneSegmentEquality { trials: usize },
    InscribedTriangles { trials: usize },
    HexagonIdentity { trials: usize },
    HexagonBound { trials: usize },
    DualOracle { trials: usize },
    SearchUnperturbedSimplex { trials: usize },
    SearchOctahedronPool { trials: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogRow {
    pub id: String,
    pub claim: String,
    pub task: Task,
}

fn row(id: &str, claim: &str, task: Task) -> CatalogRow {
    CatalogRow {
        id: id.into(),
        claim: claim.into(),
        task,
    }
}

fn scenario(s: Scenario) -> Task {
    Task::Scenario(Box::new(s))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn named(name: &str, params: &[usize]) -> BodySpec {
    BodySpec::Named {
        named: name.into(),
        params: params.to_vec(),
    }
}

/// The segment between the centroids of two opposite facets of O₃ and the
/// facet conv{e₁, e₂, e₃}.
pub fn octahedron_counterexample_bodies() -> [Polytope; 2] {
    let t = q(1, 3);
    let k1 = Polytope::segment(vec![-&t, -&t, -&t], vec![t.clone(), t.clone(), t]).expect("segment");
    let k2 = Polytope::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).expect("triangle");
    [k1, k2]
}

fn unit(n: usize, i: usize, s: i64) -> Point {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::from(s);
    v
}

fn octahedron_scenario() -> Scenario {
    let mut s = Scenario::new(CheckKind::Bezout);
    s.d = Some(named("octahedron", &[3]));
    s.k = octahedron_counterexample_bodies().into_iter().map(BodySpec::Polytope).collect();
    s.expected_relation = Some(ExpectedRelation::Greater);
    s
}

fn projection_scenario(n: usize) -> Scenario {
    let mut s = Scenario::new(CheckKind::ProjectionForm);
    s.d = Some(named("octahedron", &[n]));
    let mut v1 = unit(n, 0, 1);
    v1[1] = Rational::one();
    let mut v2 = unit(n, 0, 1);
    v2[1] = -Rational::one();
    s.directions = vec![v1, v2];
    s.expected_relation = Some(ExpectedRelation::Greater);
    s
}

fn coordinate_projection_scenario(n: usize, r: usize) -> Scenario {
    let mut s = Scenario::new(CheckKind::CoordinateProjection);
    s.d = Some(named("zon-equality", &[n, r]));
    s.r = Some(r);
    s.expected_relation = Some(ExpectedRelation::Equal);
    s
}

fn zonoid_equality_scenario(n: usize, r: usize) -> Scenario {
    let mut s = Scenario::new(CheckKind::Isomorphic);
    s.d = Some(named("zon-equality", &[n, r]));
    s.mode = Some(IsomorphicMode::Zonoid);
    s.generators = (0..r).map(|i| vec![unit(n, i, 1)]).collect();
    s.expected_relation = Some(ExpectedRelation::Equal);
    s
}

fn zon_projection_scenario() -> Scenario {
    let mut s = Scenario::new(CheckKind::ProjectionForm);
    s.d = Some(named("zon-equality", &[4, 2]));
    s.directions = vec![unit(4, 0, 1), unit(4, 1, 1)];
    s.constant = Some(Surd::rational(Rational::from(2)));
    s.expected_relation = Some(ExpectedRelation::Equal);
    s
}

pub fn catalog() -> Vec<CatalogRow> {
    let mut rows = vec![
        row("simplex-volumes", "vol(standard n-simplex) = 1/n!, n = 2..5", Task::SimplexVolumes { max_n: 5 }),
        row("cross-polytope-volumes", "vol(O_n) = 2^n/n!, n = 2..5", Task::CrossPolytopeVolumes { max_n: 5 }),
        row(
            "simplex-bezout-suite",
            "Bezout inequality holds when D is a simplex (max lhs/rhs <= 1)",
            Task::SimplexBezout { trials: 500 },
        ),
        row(
            "simplex-equality-families",
            "face condition gives equality for D a simplex",
            Task::EqualityFamilies { trials: 100 },
        ),
        row(
            "simplex-vertex-miss-families",
            "missing one face gives strict inequality for D a simplex",
            Task::VertexMissFamilies { trials: 100 },
        ),
        row(
            "log-concavity-pairwise",
            "local and pairwise log-concavity agree (no internal zeros)",
            Task::LogConcavity { trials: 1000 },
        ),
        row(
            "log-concavity-convolution",
            "binomial convolution keeps log-concavity; equality propagates back",
            Task::ConvolutionPropagation { trials: 1000 },
        ),
        row(
            "decomposition-chain",
            "three-term reduction for D = A + B: identity, equivalence, propagation",
            Task::DecompositionChain { trials: 40 },
        ),
        row("octahedron-counterexample", "V(K1,K2,O) V(O) > V(K1,O,O) V(K2,O,O) for O = O_3", scenario(octahedron_scenario())),
        row(
            "octahedron-counterexample-components",
            "V(K1,K2,O) = 2/3, V(K1,O,O) = 2/3, V(K2,O,O) = 1 by both algorithms",
            Task::OctahedronComponents,
        ),
    ];
    for n in 3..=5 {
        rows.push(row(
            &format!("projection-form-octahedron-{n}"),
            "projection inequality fails for O_n with v1 = (1,1,0..), v2 = (1,-1,0..)",
            scenario(projection_scenario(n)),
        ));
    }
    rows.push(row(
        "projection-form-zon-equality-4-2",
        "projection inequality with constant 2 is sharp on the extremal body",
        scenario(zon_projection_scenario()),
    ));
    rows.push(row("kappa-sweep", "unit-ball volume inequality, n = 3..50 (floating point)", Task::KappaSweep { max_n: 50 }));
    rows.push(row(
        "inscribed-simplex-containments",
        "D' inside -n S and (n+2) S for cube, O_n and random hulls",
        Task::InscribedSimplices { random_per_dim: 10 },
    ));
    for (n, r) in [(3, 2), (4, 2), (4, 3), (5, 2)] {
        rows.push(row(
            &format!("coordinate-projection-equality-{n}-{r}"),
            "coordinate projection inequality is an equality on the extremal body",
            scenario(coordinate_projection_scenario(n, r)),
        ));
    }
    for (n, r) in [(3, 2), (4, 2), (4, 3), (5, 2)] {
        rows.push(row(
            &format!("zonoid-constant-equality-{n}-{r}"),
            "zonoid constant r^(r-1) is attained by the extremal body",
            scenario(zonoid_equality_scenario(n, r)),
        ));
    }
    rows.extend([
        row(
            "zonotope-isomorphic-suite",
            "Bezout inequality with constant r^(r-1) for zonotopes K_i",
            Task::ZonotopeIsomorphic { trials: 300 },
        ),
        row(
            "general-isomorphic-suite",
            "Bezout inequality with constant n^r r^(r-1)",
            Task::GeneralIsomorphic { trials: 100 },
        ),
        row(
            "symmetric-isomorphic-suite",
            "Bezout inequality with constant n^(r/2) r^(r-1) for symmetric K_i",
            Task::SymmetricIsomorphic { trials: 100 },
        ),
        row("plane-bezout-suite", "V(K,L) V(D) <= 2 V(K,D) V(L,D) in the plane", Task::PlaneBezout { trials: 1000 }),
        row(
            "plane-bezout-segment-equality",
            "equality for segments K, L and D = a K + b L",
            Task::PlaneSegmentEquality { trials: 20 },
        ),
        row(
            "inscribed-triangles-suite",
            "V(K,L) |K ∩ L| <= 2 |K| |L| for inscribed triangle pairs",
            Task::InscribedTriangles { trials: 300 },
        ),
        row("hexagon-mixed-area-identity", "V(ABC, A'B'C') = |H| for convex hexagons", Task::HexagonIdentity { trials: 300 }),
        row("hexagon-area-bound", "|H| |ABC ∩ A'B'C'| <= 2 |ABC| |A'B'C'|", Task::HexagonBound { trials: 300 }),
        row(
            "dual-oracle-agreement",
            "inclusion-exclusion and facet-sum mixed volumes agree",
            Task::DualOracle { trials: 500 },
        ),
        row(
            "search-unperturbed-simplex",
            "counterexample search over simplices finds nothing",
            Task::SearchUnperturbedSimplex { trials: 20 },
        ),
        row(
            "search-octahedron-pool",
            "counterexample search seeded with O_3 reaches ratio 4/3",
            Task::SearchOctahedronPool { trials: 4 },
        ),
    ]);
    for r in &mut rows {
        if let Task::Scenario(s) = &mut r.task {
            s.id = Some(r.id.clone());
        }
    }
    rows
}

/// Rows matching `only` (an exact id), or every row.
pub fn select(only: Option<&str>) -> Result<Vec<CatalogRow>> {
    let rows = catalog();
    match only {
        None => Ok(rows),
        Some(id) => {
            let picked: Vec<CatalogRow> = rows.into_iter().filter(|r| r.id == id).collect();
            if picked.is_empty() {
                return Err(Error::Malformed(format!("no catalog row named {id:?}")));
            }
            Ok(picked)
        }
    }
}

/// Runs the rows concurrently; the output keeps catalog order.
pub fn run_rows(rows: &[CatalogRow], seed: u64) -> Vec<RunReport> {
    par_map(rows.len(), |i| run_row(&rows[i], seed))
}

pub fn run_row(row: &CatalogRow, seed: u64) -> RunReport {
    let start = Instant::now();
    let ctx = Ctx {
        id: &row.id,
        claim: &row.claim,
        seed: row_seed(seed, &row.id),
    };
    let mut report = match run_task(&row.task, &ctx) {
        Ok(r) => r,
        Err(e) => RunReport::zero_count(&row.id, &row.claim, 1, 0).note(format!("error: {e}")),
    };
    report.case_id = row.id.clone();
    if report.claim.is_empty() || matches!(row.task, Task::Scenario(_)) {
        report.claim = row.claim.clone();
    }
    report.inputs_digest = crate::report::digest(&(&row.task, seed));
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    report
}

fn row_seed(seed: u64, id: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(id.as_bytes());
    let d = h.finalize();
    u64::from_le_bytes(d[..8].try_into().expect("eight bytes"))
}

struct Ctx<'a> {
    id: &'a str,
    claim: &'a str,
    seed: u64,
}

impl Ctx<'_> {
    fn rng(&self, i: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(i as u64);
        rng
    }

    fn count(&self, failures: usize, instances: usize) -> RunReport {
        RunReport::zero_count(self.id, self.claim, failures, instances)
    }

    /// Largest lhs/rhs over the suite against 1.
    fn max_ratio(&self, reports: &[InequalityReport]) -> RunReport {
        let worst = reports.iter().filter_map(|r| r.ratio.clone()).max();
        let degenerate = reports.iter().filter(|r| r.ratio.is_none() && !r.holds()).count();
        let one = Surd::rational(Rational::one());
        let lhs = worst.unwrap_or_else(|| Surd::rational(Rational::zero()));
        let mut out = RunReport::compare(self.id, self.claim, lhs, one, ExpectedRelation::LessOrEqual)
            .with_instances(reports.len())
            .note("lhs is the largest lhs/rhs ratio observed");
        let violations = reports.iter().filter(|r| !r.holds()).count();
        if violations > 0 {
            out.notes.push(format!("{violations} violating instances"));
        }
        if degenerate > 0 {
            out.passed = false;
            out.notes.push(format!("{degenerate} violations with zero right-hand side"));
        }
        out
    }
}

#[cfg(feature = "parallel")]
fn par_map<T: Send, F: Fn(usize) -> T + Sync + Send>(n: usize, f: F) -> Vec<T> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Send, F: Fn(usize) -> T + Sync + Send>(n: usize, f: F) -> Vec<T> {
    (0..n).map(f).collect()
}

fn collect<T: Send>(n: usize, f: impl Fn(usize) -> Result<T> + Sync + Send) -> Result<Vec<T>> {
    par_map(n, f).into_iter().collect()
}

fn one() -> Surd {
    Surd::rational(Rational::one())
}

fn run_task(task: &Task, ctx: &Ctx) -> Result<RunReport> {
    match task {
        Task::Scenario(s) => s.run(ctx.id, true),
        Task::SimplexVolumes { max_n } => {
            let bad = (2..=*max_n)
                .filter(|&n| {
                    standard_simplex(n).map(|s| s.volume()).ok()
                        != Some(Rational::one() / Rational::from(factorial(n as u32)))
                })
                .count();
            Ok(ctx.count(bad, max_n - 1))
        }
        Task::CrossPolytopeVolumes { max_n } => {
            let bad = (2..=*max_n)
                .filter(|&n| {
                    cross_polytope(n).map(|s| s.volume()).ok()
                        != Some(Rational::from(2).pow(n as u32) / Rational::from(factorial(n as u32)))
                })
                .count();
            Ok(ctx.count(bad, max_n - 1))
        }
        Task::OctahedronComponents => octahedron_components(ctx),
        Task::SimplexBezout { trials } => {
            let reports = collect(*trials, |i| {
                let mut rng = ctx.rng(i);
                let n = 2 + i % 2;
                let r = rng.gen_range(2..=n);
                let d = random_simplex(&mut rng, n, 8);
                let k = (0..r).map(|_| random_body(&mut rng, n, 5)).collect();
                bezout_check(&BezoutInstance::new(d, k)?, &one())
            })?;
            Ok(ctx.max_ratio(&reports))
        }
        Task::EqualityFamilies { trials } => family_suite(ctx, *trials, true),
        Task::VertexMissFamilies { trials } => family_suite(ctx, *trials, false),
        Task::LogConcavity { trials } => {
            let mut skipped = 0;
            let mut bad = 0;
            for i in 0..*trials {
                let seq = random_sequence(&mut ctx.rng(i));
                if has_internal_zeros(&seq) {
                    skipped += 1;
                    continue;
                }
                let local = seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2]);
                if local != is_log_concave_pairwise(&seq)? {
                    bad += 1;
                }
            }
            Ok(ctx
                .count(bad, trials - skipped)
                .note(format!("{skipped} sequences with internal zeros excluded")))
        }
        Task::ConvolutionPropagation { trials } => {
            let mut skipped = 0;
            let mut bad = 0;
            let mut equality_cases = 0;
            for i in 0..*trials {
                let seq = random_sequence(&mut ctx.rng(i));
                if has_internal_zeros(&seq) {
                    skipped += 1;
                    continue;
                }
                let (fails, eq) = convolution_failures(&seq)?;
                bad += fails;
                equality_cases += eq;
            }
            Ok(ctx.count(bad, trials - skipped).note(format!(
                "{skipped} sequences with internal zeros excluded; {equality_cases} equality cases exercised"
            )))
        }
        Task::DecompositionChain { trials } => {
            let reports = collect(*trials, |i| {
                let mut rng = ctx.rng(i);
                loop {
                    let a = random_hull(&mut rng, 3, 4, 5);
                    let b = random_hull(&mut rng, 3, 4, 5);
                    if a.minkowski_sum(&b)?.is_full_dimensional() {
                        return decomposition_chain_check(&a, &b);
                    }
                }
            })?;
            let bad = reports
                .iter()
                .filter(|r| !(r.identity_holds && r.equivalence_holds && r.log_concavity_propagates))
                .count();
            let held = reports.iter().filter(|r| r.inequality_holds).count();
            Ok(ctx
                .count(bad, *trials)
                .note(format!("the Bezout-type inequality itself held in {held} of {trials}")))
        }
        Task::KappaSweep { max_n } => {
            let reports = (3..=*max_n).map(kappa_constant_check).collect::<Result<Vec<_>>>()?;
            let bad = reports.iter().filter(|r| !r.holds).count();
            Ok(ctx
                .count(bad, reports.len())
                .note("evaluated in floating point with relative slack 1e-9"))
        }
        Task::InscribedSimplices { random_per_dim } => {
            let mut bodies = Vec::new();
            for n in 2..=3 {
                bodies.push(unit_cube(n)?);
                bodies.push(cross_polytope(n)?);
                for i in 0..*random_per_dim {
                    bodies.push(random_body(&mut ctx.rng(n * 1000 + i), n, 6));
                }
            }
            let reports = collect(bodies.len(), |i| inscribed_simplex_check(&bodies[i]))?;
            let bad = reports.iter().filter(|r| !r.holds()).count();
            Ok(ctx.count(bad, bodies.len()))
        }
        Task::ZonotopeIsomorphic { trials } => {
            let reports = collect(*trials, |i| {
                let mut rng = ctx.rng(i);
                let n = 3 + i % 2;
                let r = 2 + (i / 2) % 2;
                let d = random_body(&mut rng, n, 6);
                let k = (0..r).map(|_| random_zonotope(&mut rng, n, 3, if n == 3 { 4 } else { 3 })).collect();
                isomorphic_check(&BezoutInstance::new(d, k)?, IsomorphicMode::Zonoid)
            })?;
            Ok(ctx.max_ratio(&reports))
        }
        Task::GeneralIsomorphic { trials } => {
            let reports = collect(*trials, |i| {
                let mut rng = ctx.rng(i);
                let r = rng.gen_range(2..=3);
                let d = random_body(&mut rng, 3, 6);
                let k = (0..r).map(|_| random_body(&mut rng, 3, 4)).collect();
                isomorphic_check(&BezoutInstance::new(d, k)?, IsomorphicMode::General)
            })?;
            Ok(ctx.max_ratio(&reports))
        }
        Task::SymmetricIsomorphic { trials } => {
            let reports = collect(*trials, |i| {
                let mut rng = ctx.rng(i);
                let r = rng.gen_range(2..=3);
                let d = random_body(&mut rng, 3, 6);
                let k = (0..r).map(|_| random_symmetric(&mut rng, 3, 4)).collect();
                isomorphic_check(&BezoutInstance::new(d, k)?, IsomorphicMode::Symmetric)
            })?;
            Ok(ctx.max_ratio(&reports))
        }
        Task::PlaneBezout { trials } => {
            let reports = collect(*trials, |i| {
                let mut rng = ctx.rng(i);
                let k = random_planar(&mut rng);
                let l = random_planar(&mut rng);
                let d = loop {
                    let d = random_body(&mut rng, 2, 6);
                    if d.is_full_dimensional() {
                        break d;
                    }
                };
                plane_bezout_check(&k, &l, &d)
            })?;
            Ok(ctx.max_ratio(&reports))
        }
        Task::PlaneSegmentEquality { trials } => {
            let reports = collect(*trials, |i| {
                let mut rng = ctx.rng(i);
                let (k, l) = loop {
                    let k = Polytope::segment(random_point(&mut rng, 2, 5), random_point(&mut rng, 2, 5))?;
                    let l = Polytope::segment(random_point(&mut rng, 2, 5), random_point(&mut rng, 2, 5))?;
                    if k.minkowski_sum(&l)?.is_full_dimensional() {
                        break (k, l);
                    }
                };
                let a = Rational::frac(rng.gen_range(1..=9), rng.gen_range(1..=9));
                let b = Rational::frac(rng.gen_range(1..=9), rng.gen_range(1..=9));
                let d = k.scale(&a).minkowski_sum(&l.scale(&b))?;
                plane_bezout_check(&k, &l, &d)
            })?;
            let bad = reports.iter().filter(|r| r.relation != Relation::Equal).count();
            Ok(ctx.count(bad, *trials))
        }
        Task::InscribedTriangles { trials } => {
            let reports = collect(*trials, |i| {
                let (k, l) = random_inscribed_triangles(&mut ctx.rng(i), 6);
                triangle_theorem_check(&k, &l)
            })?;
            let not_inscribed = reports.iter().filter(|r| !r.inscribed).count();
            let inner: Vec<InequalityReport> = reports.into_iter().map(|r| r.report).collect();
            let mut out = ctx.max_ratio(&inner);
            if not_inscribed > 0 {
                out.passed = false;
                out.notes.push(format!("{not_inscribed} generated pairs were not inscribed"));
            }
            Ok(out)
        }
        Task::HexagonIdentity { trials } => {
            let reports = collect(*trials, |i| hexagon_check(&random_hexagon_instance(&mut ctx.rng(i), 6)))?;
            let bad = reports.iter().filter(|r| !r.identity_holds).count();
            Ok(ctx.count(bad, *trials))
        }
        Task::HexagonBound { trials } => {
            let reports = collect(*trials, |i| hexagon_check(&random_hexagon_instance(&mut ctx.rng(i), 6)))?;
            let inner: Vec<InequalityReport> = reports.into_iter().map(|r| r.report).collect();
            Ok(ctx.max_ratio(&inner))
        }
        Task::DualOracle { trials } => {
            let bad = collect(*trials, |i| {
                let mut rng = ctx.rng(i);
                let n = 2 + i % 2;
                let bodies: Vec<Polytope> = (0..n)
                    .map(|_| {
                        let count = rng.gen_range(1..=n + 3);
                        random_hull(&mut rng, n, 4, count)
                    })
                    .collect();
                let first = mixed_volume(&MixedVolumeQuery::from_bodies(&bodies)?);
                let second = mixed_volume_facet_sum(&bodies[0], &bodies[1..])?;
                Ok(usize::from(first != second))
            })?
            .into_iter()
            .sum();
            Ok(ctx.count(bad, *trials))
        }
        Task::SearchUnperturbedSimplex { trials } => {
            let mut cfg = SearchConfig::new(3, 2, *trials, ctx.seed, Generator::RandomSimplexPerturbation);
            cfg.perturbation = Rational::zero();
            let rep = search_counterexamples(&cfg)?;
            Ok(ctx
                .count(rep.findings.len(), rep.evaluated)
                .note(format!("largest ratio {}", rep.max_ratio.map(|r| r.to_string()).unwrap_or("-".into()))))
        }
        Task::SearchOctahedronPool { trials } => {
            let mut cfg = SearchConfig::new(3, 2, *trials, ctx.seed, Generator::RandomHull);
            cfg.pool = vec![cross_polytope(3)?];
            let rep = search_counterexamples(&cfg)?;
            let best = rep.max_ratio.clone().unwrap_or_else(|| Surd::rational(Rational::zero()));
            Ok(RunReport::compare(ctx.id, ctx.claim, best, Surd::rational(q(4, 3)), ExpectedRelation::GreaterOrEqual)
                .with_instances(rep.evaluated)
                .note(format!("{} findings; lhs is the largest ratio", rep.findings.len())))
        }
    }
}

fn octahedron_components(ctx: &Ctx) -> Result<RunReport> {
    let o = cross_polytope(3)?;
    let [k1, k2] = octahedron_counterexample_bodies();
    let cases: [(Vec<(Polytope, usize)>, Rational); 3] = [
        (vec![(k1.clone(), 1), (k2.clone(), 1), (o.clone(), 1)], q(2, 3)),
        (vec![(k1.clone(), 1), (o.clone(), 2)], q(2, 3)),
        (vec![(k2.clone(), 1), (o.clone(), 2)], Rational::one()),
    ];
    let mut bad = 0;
    for (entries, expected) in cases {
        let query = MixedVolumeQuery::new(entries)?;
        let slots = query.slots();
        let others: Vec<Polytope> = slots[1..].iter().map(|p| (*p).clone()).collect();
        bad += usize::from(mixed_volume(&query) != expected);
        bad += usize::from(mixed_volume_facet_sum(slots[0], &others)? != expected);
    }
    Ok(ctx.count(bad, 6))
}

fn family_suite(ctx: &Ctx, trials: usize, equality: bool) -> Result<RunReport> {
    let bad = collect(trials, |i| {
        let mut rng = ctx.rng(i);
        let n = 2 + i % 2;
        let r = rng.gen_range(2..=n);
        let f = if equality {
            equality_family(&mut rng, n, r)?
        } else {
            vertex_miss_family(&mut rng, n, r)?
        };
        let condition = simplex_equality_condition(&f.delta, &f.bodies)?;
        let rep = bezout_check(&BezoutInstance::new(f.delta, f.bodies)?, &one())?;
        let want = if equality { Relation::Equal } else { Relation::Less };
        Ok(usize::from(condition != equality || rep.relation != want))
    })?
    .into_iter()
    .sum();
    Ok(ctx.count(bad, trials))
}

/// Random nonnegative sequences of length 1..=8: a third arbitrary, a third
/// log-concave (decreasing ratios), a third geometric, sometimes padded
/// with zeros at the ends.
pub fn random_sequence<R: Rng + ?Sized>(rng: &mut R) -> Vec<Rational> {
    let len = rng.gen_range(1..=8);
    let mut seq: Vec<Rational> = match rng.gen_range(0..3) {
        0 => (0..len).map(|_| Rational::from(rng.gen_range(0..=6))).collect(),
        1 => {
            let mut ratios: Vec<Rational> = (0..len)
                .map(|_| Rational::frac(rng.gen_range(1..=12), rng.gen_range(1..=4)))
                .collect();
            ratios.sort_by(|a, b| b.cmp(a));
            let mut x = Rational::from(rng.gen_range(1..=5));
            ratios
                .into_iter()
                .map(|r| {
                    let cur = x.clone();
                    x = &x * &r;
                    cur
                })
                .collect()
        }
        _ => {
            let r = Rational::frac(rng.gen_range(1..=6), rng.gen_range(1..=6));
            let mut x = Rational::from(rng.gen_range(1..=5));
            (0..len)
                .map(|_| {
                    let cur = x.clone();
                    x = &x * &r;
                    cur
                })
                .collect()
        }
    };
    if rng.gen_bool(0.2) {
        seq.insert(0, Rational::zero());
    }
    if rng.gen_bool(0.2) {
        seq.push(Rational::zero());
    }
    seq
}

/// Counts failures of the convolution implication and of its equality
/// clause over every order m; also returns how many equality cases arose.
fn convolution_failures(seq: &[Rational]) -> Result<(usize, usize)> {
    let concave = is_log_concave(seq)?;
    let mut bad = 0;
    let mut equality_cases = 0;
    for m in 0..seq.len() {
        let c = binomial_convolution(seq, m)?;
        if concave && !is_log_concave(&c)? {
            bad += 1;
        }
        // the clause has content only when C has an interior index
        if concave && c.len() >= 3 && is_log_linear(&c) {
            equality_cases += 1;
            if !is_log_linear(seq) {
                bad += 1;
            }
        }
    }
    Ok((bad, equality_cases))
}

fn random_planar<R: Rng + ?Sized>(rng: &mut R) -> Polytope {
    let count = rng.gen_range(1..=6);
    random_hull(rng, 2, 6, count)
}

fn random_symmetric<R: Rng + ?Sized>(rng: &mut R, n: usize, grid: i64) -> Polytope {
    let count = rng.gen_range(1..=3);
    let pts: Vec<Point> = (0..count).map(|_| random_point(rng, n, grid)).collect();
    let mut all = pts.clone();
    all.extend(pts.iter().map(|p| p.iter().map(|x| -x).collect::<Point>()));
    let body = Polytope::convex_hull(all).expect("nonempty");
    debug_assert!(is_centrally_symmetric(&body));
    body
}

/// Row ids in catalog order.
pub fn ids() -> Vec<String> {
    catalog().into_iter().map(|r| r.id).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_descriptive() {
        let ids = ids();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert!(ids.iter().all(|id| id.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-')));
        assert!(select(Some("nope")).is_err());
        assert_eq!(select(Some("octahedron-counterexample")).unwrap().len(), 1);
    }

    #[test]
    fn single_rows() {
        let rows = select(Some("octahedron-counterexample")).unwrap();
        let r = &run_rows(&rows, DEFAULT_SEED)[0];
        assert!(r.passed, "{r:?}");
        assert_eq!(r.lhs, Surd::rational(q(8, 9)));
        let r = run_row(&select(Some("octahedron-counterexample-components")).unwrap()[0], 1);
        assert!(r.passed);
        let r = run_row(&select(Some("projection-form-octahedron-3")).unwrap()[0], 1);
        assert_eq!(r.ratio, Some(Surd::rational(Rational::from(2))));
    }

    #[test]
    fn sequences_cover_the_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let seqs: Vec<Vec<Rational>> = (0..200).map(|_| random_sequence(&mut rng)).collect();
        assert!(seqs.iter().any(|s| is_log_concave(s).unwrap_or(true)));
        assert!(seqs.iter().any(|s| !is_log_concave(s).unwrap_or(true)));
        assert!(seqs.iter().any(|s| s.len() >= 3 && is_log_linear(s)));
    }
}
