use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mixvol::bezout::{search_counterexamples, Generator, SearchConfig};
use mixvol::catalog::{self, DEFAULT_SEED};
use mixvol::kernel::Rational;
use mixvol::mixed::{mixed_volume, MixedVolumeQuery};
use mixvol::report::{markdown_path, markdown_table, write_report, RunReport};
use mixvol::scenario::{cross_check, load_scenarios, BodySpec, Scenario};
use mixvol::{Error, Polytope};

/// Exact mixed volumes and Bezout-type inequality checks for rational polytopes.
#[derive(Parser)]
#[command(name = "mixvol", version)]
struct Cli {
    /// Seed for randomized suites and searches.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Report destination (a file, or a directory for reproduce-paper).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run only the catalog row with this id.
    #[arg(long, global = true)]
    only: Option<String>,
    /// Cross-check mixed volumes with the facet-sum algorithm.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact volume of a polytope file.
    Volume { file: PathBuf },
    /// Print the exact mixed volume of the given bodies.
    Mixed {
        files: Vec<PathBuf>,
        /// Comma-separated multiplicities, one per file, summing to the dimension.
        #[arg(long, value_delimiter = ',')]
        multiplicity: Vec<usize>,
    },
    /// Run a scenario file (one scenario or an array).
    Check { scenario: PathBuf },
    /// Run the built-in reproduction catalog.
    ReproducePaper,
    /// Seeded search for violations of the Bezout inequality.
    Search {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value = "random-hull")]
        generator: Generator,
        /// Displacement scale for random-simplex-perturbation.
        #[arg(long)]
        perturb: Option<Rational>,
        /// Vertices are drawn from [-grid, grid]^n.
        #[arg(long)]
        grid: Option<i64>,
        /// K-tuples tried per body D.
        #[arg(long)]
        candidates: Option<usize>,
        /// Polytope files used as D for the first trials.
        #[arg(long)]
        pool: Vec<PathBuf>,
    },
}

enum Failure {
    Math(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Math(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Math(msg)) => {
            eprintln!("mixvol: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("mixvol: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_body(path: &Path) -> Result<Polytope, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let spec: BodySpec =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    match spec {
        BodySpec::File { file } => read_body(&path.parent().unwrap_or(Path::new(".")).join(file)),
        other => Ok(other.resolve()?),
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    match &cli.command {
        Command::Volume { file } => {
            println!("{}", read_body(file)?.volume());
            Ok(true)
        }
        Command::Mixed { files, multiplicity } => {
            let bodies = files.iter().map(|f| read_body(f)).collect::<Result<Vec<_>, _>>()?;
            if bodies.is_empty() {
                return Err(Failure::Input("no bodies given".into()));
            }
            let mult = if multiplicity.is_empty() {
                vec![1; bodies.len()]
            } else {
                multiplicity.clone()
            };
            if mult.len() != bodies.len() {
                return Err(Failure::Input(format!(
                    "{} multiplicities for {} bodies",
                    mult.len(),
                    bodies.len()
                )));
            }
            let q = MixedVolumeQuery::new(bodies.into_iter().zip(mult).collect())?;
            let v = mixed_volume(&q);
            if cli.oracle {
                cross_check(&q, &v)?;
            }
            println!("{v}");
            Ok(true)
        }
        Command::Check { scenario } => {
            let scenarios = load_scenarios(scenario)?;
            let mut reports = Vec::new();
            for (i, s) in scenarios.iter().enumerate() {
                let id = s.case_id(i);
                reports.push(s.run(&id, cli.oracle)?);
            }
            finish(&reports, cli.out.as_deref())
        }
        Command::ReproducePaper => {
            let rows = catalog::select(cli.only.as_deref())?;
            let reports = catalog::run_rows(&rows, cli.seed.unwrap_or(DEFAULT_SEED));
            let out = cli.out.as_ref().map(|dir| dir.join("reproduce.json"));
            finish(&reports, out.as_deref())
        }
        Command::Search {
            n,
            r,
            trials,
            generator,
            perturb,
            grid,
            candidates,
            pool,
        } => {
            let mut cfg = SearchConfig::new(*n, *r, *trials, cli.seed.unwrap_or(DEFAULT_SEED), *generator);
            if let Some(p) = perturb {
                cfg.perturbation = p.clone();
            }
            if let Some(g) = grid {
                cfg.grid = *g;
            }
            if let Some(c) = candidates {
                cfg.candidates = *c;
            }
            cfg.pool = pool.iter().map(|f| read_body(f)).collect::<Result<_, _>>()?;
            let report = search_counterexamples(&cfg)?;
            let findings: Vec<Scenario> = report
                .findings
                .iter()
                .map(|f| Scenario::from_finding(f, format!("finding-trial-{}", f.trial)))
                .collect();
            let summary = format!(
                "Search n = {n}, r = {r}, generator {generator:?}, seed {}: {} trials, {} instances, {} findings, largest ratio {}\n",
                cfg.seed,
                report.trials,
                report.evaluated,
                findings.len(),
                report.max_ratio.as_ref().map(|r| r.to_string()).unwrap_or_else(|| "-".into()),
            );
            print!("{summary}");
            match &cli.out {
                Some(path) => {
                    write_report(path, &findings, &summary)?;
                    eprintln!("findings written to {}", path.display());
                }
                None => println!("{}", serde_json::to_string_pretty(&findings).expect("serializable")),
            }
            Ok(true)
        }
    }
}

fn finish(reports: &[RunReport], out: Option<&Path>) -> Result<bool, Failure> {
    for r in reports {
        println!(
            "{} {}: {} {} {} (expected {}, {} instance{}, {} ms)",
            if r.passed { "PASS" } else { "FAIL" },
            r.case_id,
            r.lhs,
            r.relation,
            r.rhs,
            r.expected_relation,
            r.instances,
            if r.instances == 1 { "" } else { "s" },
            r.wall_time_ms,
        );
        for n in &r.notes {
            println!("    {n}");
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.case_id.as_str()).collect();
    if !failed.is_empty() {
        println!("failing rows: {}", failed.join(", "));
    }
    if let Some(path) = out {
        write_report(path, reports, &markdown_table(reports))?;
        eprintln!("report written to {} and {}", path.display(), markdown_path(path).display());
    }
    Ok(failed.is_empty())
}
