//! Seeded randomized search for violations of the plain Bezout inequality.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Polytope};
use crate::inequality::{InequalityReport, Relation};
use crate::kernel::{Rational, Surd};
use crate::mixed::VolumeCache;

use super::families::{random_body, random_full_zonotope, random_hull, random_point, random_simplex};
use super::{bezout_check_cached, BezoutInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generator {
    RandomHull,
    RandomZonotope,
    /// A random simplex plus points displaced from its vertices by
    /// `perturbation` times a random grid vector; zero gives the simplex.
    RandomSimplexPerturbation,
}

impl std::str::FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random-hull" => Ok(Generator::RandomHull),
            "random-zonotope" => Ok(Generator::RandomZonotope),
            "random-simplex-perturbation" => Ok(Generator::RandomSimplexPerturbation),
            other => Err(Error::Parse(format!("unknown generator {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    pub r: usize,
    pub trials: usize,
    pub seed: u64,
    pub generator: Generator,
    /// Vertices are drawn from [−grid, grid]ⁿ.
    #[serde(default = "default_grid")]
    pub grid: i64,
    #[serde(default = "default_perturbation")]
    pub perturbation: Rational,
    /// K-tuples tried per body D.
    #[serde(default = "default_candidates")]
    pub candidates: usize,
    /// Bodies used as D for the first trials before the generator takes over.
    #[serde(default)]
    pub pool: Vec<Polytope>,
}

fn default_grid() -> i64 {
    8
}

fn default_perturbation() -> Rational {
    Rational::frac(1, 4)
}

fn default_candidates() -> usize {
    40
}

impl SearchConfig {
    pub fn new(n: usize, r: usize, trials: usize, seed: u64, generator: Generator) -> Self {
        SearchConfig {
            n,
            r,
            trials,
            seed,
            generator,
            grid: default_grid(),
            perturbation: default_perturbation(),
            candidates: default_candidates(),
            pool: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub trial: usize,
    pub d: Polytope,
    pub k: Vec<Polytope>,
    pub report: InequalityReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub trials: usize,
    pub evaluated: usize,
    /// The worst violation found in each trial that had one.
    pub findings: Vec<Finding>,
    /// Largest lhs/rhs over every evaluated instance.
    pub max_ratio: Option<Surd>,
}

struct TrialOutcome {
    evaluated: usize,
    best: Option<Surd>,
    finding: Option<Finding>,
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn generate_d(config: &SearchConfig, rng: &mut ChaCha8Rng) -> Polytope {
    let (n, grid) = (config.n, config.grid);
    match config.generator {
        Generator::RandomHull => random_body(rng, n, grid),
        Generator::RandomZonotope => random_full_zonotope(rng, n, grid.min(3), 6),
        Generator::RandomSimplexPerturbation => {
            let simplex = random_simplex(rng, n, grid);
            let mut pts: Vec<Point> = simplex.vertices().to_vec();
            for _ in 0..n {
                let base = simplex.vertices().choose(rng).expect("nonempty").clone();
                let w = random_point(rng, n, grid);
                pts.push(base.iter().zip(&w).map(|(x, y)| x + &(&config.perturbation * y)).collect());
            }
            Polytope::convex_hull(pts).expect("nonempty")
        }
    }
}

fn origin_segment(v: Point) -> Polytope {
    Polytope::segment(vec![Rational::zero(); v.len()], v).expect("same dimension")
}

fn facet_body(d: &Polytope, i: usize) -> Polytope {
    let f = &d.facets()[i];
    Polytope::convex_hull(f.vertices.iter().map(|&j| d.vertices()[j].clone()).collect()).expect("nonempty facet")
}

/// One K per slot, each drawn from a randomly chosen family: segments along
/// vertex differences of D, short random segments, random hulls, facets of
/// D, and segments joining centroids of two facets of D.
fn candidate<R: Rng + ?Sized>(d: &Polytope, config: &SearchConfig, rng: &mut R) -> Vec<Polytope> {
    let n = config.n;
    let facets = d.facets().len();
    (0..config.r)
        .map(|_| match rng.gen_range(0..5) {
            0 => {
                let v = d.vertices();
                let (a, b) = (v.choose(rng).expect("nonempty"), v.choose(rng).expect("nonempty"));
                origin_segment(a.iter().zip(b).map(|(x, y)| x - y).collect())
            }
            1 => origin_segment(random_point(rng, n, 2)),
            2 => {
                let count = rng.gen_range(2..=n + 2);
                random_hull(rng, n, config.grid.min(4), count)
            }
            3 => facet_body(d, rng.gen_range(0..facets)),
            _ => {
                let a = facet_body(d, rng.gen_range(0..facets)).centroid_of_vertices();
                let b = facet_body(d, rng.gen_range(0..facets)).centroid_of_vertices();
                Polytope::segment(a, b).expect("same dimension")
            }
        })
        .collect()
}

fn run_trial(config: &SearchConfig, trial: usize) -> Result<TrialOutcome> {
    let mut rng = trial_rng(config.seed, trial);
    let d = match config.pool.get(trial) {
        Some(p) => p.clone(),
        None => generate_d(config, &mut rng),
    };
    let one = Surd::rational(Rational::one());
    let cache = VolumeCache::new();
    let mut outcome = TrialOutcome {
        evaluated: 0,
        best: None,
        finding: None,
    };
    for _ in 0..config.candidates {
        let k = candidate(&d, config, &mut rng);
        let inst = BezoutInstance::new(d.clone(), k)?;
        let report = bezout_check_cached(&inst, &one, &cache)?;
        outcome.evaluated += 1;
        if let Some(ratio) = &report.ratio {
            if outcome.best.as_ref().is_none_or(|b| ratio > b) {
                outcome.best = Some(ratio.clone());
            }
        }
        if report.relation == Relation::Greater {
            let worse = match &outcome.finding {
                None => true,
                Some(f) => report.ratio > f.report.ratio,
            };
            if worse {
                outcome.finding = Some(Finding {
                    trial,
                    d: d.clone(),
                    k: inst.k,
                    report,
                });
            }
        }
    }
    Ok(outcome)
}

/// Deterministic for a fixed config: trial t draws from the ChaCha stream t
/// of the seed, so parallel and sequential runs agree.
pub fn search_counterexamples(config: &SearchConfig) -> Result<SearchReport> {
    if config.n < 2 || config.n > 4 {
        return Err(Error::Unsupported(format!("search in dimension {}", config.n)));
    }
    if config.r < 1 || config.r > config.n {
        return Err(Error::Malformed(format!("need 1 ≤ r ≤ n, got r = {}", config.r)));
    }
    for p in &config.pool {
        if p.dim() != config.n || !p.is_full_dimensional() {
            return Err(Error::Precondition("pool bodies must be full-dimensional in Q^n".into()));
        }
    }
    let trials: Vec<usize> = (0..config.trials).collect();

    #[cfg(feature = "parallel")]
    let outcomes: Vec<Result<TrialOutcome>> = {
        use rayon::prelude::*;
        trials.par_iter().map(|&t| run_trial(config, t)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<Result<TrialOutcome>> = trials.iter().map(|&t| run_trial(config, t)).collect();

    let mut report = SearchReport {
        trials: config.trials,
        evaluated: 0,
        findings: Vec::new(),
        max_ratio: None,
    };
    for o in outcomes {
        let o = o?;
        report.evaluated += o.evaluated;
        if let Some(b) = o.best {
            if report.max_ratio.as_ref().is_none_or(|m| b > *m) {
                report.max_ratio = Some(b);
            }
        }
        report.findings.extend(o.finding);
    }
    Ok(report)
}
