use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::combinatorics::combinations;
use crate::error::{Error, Result};
use crate::geometry::{Point, Polytope};
use crate::kernel::{det_of_rows, Matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InscribedReport {
    /// Vertices of a maximal-volume simplex spanned by vertices of D.
    pub simplex: Vec<Point>,
    /// n!·volume of that simplex.
    pub scaled_volume: Rational,
    /// D ⊆ −nΔ, with Δ the simplex made regular and centred at the origin.
    pub inside_negative_n: bool,
    /// D ⊆ (n+2)Δ.
    pub inside_n_plus_two: bool,
}

impl InscribedReport {
    pub fn holds(&self) -> bool {
        self.inside_negative_n && self.inside_n_plus_two
    }
}

/// Barycentric coordinates of x with respect to the simplex vertices.
fn barycentric(simplex: &[Point], x: &[Rational]) -> Result<Vec<Rational>> {
    let n = x.len();
    // columns: vertices with a trailing 1
    let rows: Vec<Vec<Rational>> = (0..=n)
        .map(|r| {
            simplex
                .iter()
                .map(|v| if r < n { v[r].clone() } else { Rational::one() })
                .collect()
        })
        .collect();
    let mut rhs: Vec<Rational> = x.to_vec();
    rhs.push(Rational::one());
    Matrix::from_rows(rows)?
        .solve(&rhs)?
        .ok_or_else(|| Error::Inconsistent("degenerate simplex".into()))
}

/// Finds a maximal-volume simplex among the vertices of D and checks the two
/// containments.
///
/// Both containments are affine-invariant, so they are read off barycentric
/// coordinates λ with respect to that simplex. Barycentric coordinates place
/// the simplex as the standard simplex of Q^{n+1}, which is regular; after
/// centring, −nΔ = {λᵢ ≤ 1 ∀i} and (n+2)Δ = {λᵢ ≥ −1 ∀i}.
pub fn inscribed_simplex_check(d: &Polytope) -> Result<InscribedReport> {
    let n = d.dim();
    if !d.is_full_dimensional() {
        return Err(Error::Precondition("D must be full-dimensional".into()));
    }
    if n > 4 {
        return Err(Error::Unsupported(format!("vertex-subset search in dimension {n}")));
    }
    let verts = d.vertices();
    let mut best: Option<(Rational, Vec<usize>)> = None;
    for subset in combinations(verts.len(), n + 1) {
        let base = &verts[subset[0]];
        let rows: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&i| verts[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let vol = det_of_rows(&rows).abs();
        if best.as_ref().is_none_or(|(b, _)| vol > *b) {
            best = Some((vol, subset));
        }
    }
    let (scaled_volume, subset) = best.expect("full-dimensional body has n+1 vertices");
    let simplex: Vec<Point> = subset.iter().map(|&i| verts[i].clone()).collect();
    let mut inside_negative_n = true;
    let mut inside_n_plus_two = true;
    let minus_one = -Rational::one();
    for v in verts {
        let lambda = barycentric(&simplex, v)?;
        inside_negative_n &= lambda.iter().all(|l| *l <= Rational::one());
        inside_n_plus_two &= lambda.iter().all(|l| *l >= minus_one);
    }
    Ok(InscribedReport {
        simplex,
        scaled_volume,
        inside_negative_n,
        inside_n_plus_two,
    })
}

/// κ_{n−2}² < (n/(n−1))·κ_{n−3}·κ_{n−1} with κₖ = π^{k/2}/Γ(k/2+1), the
/// volume of the k-dimensional unit ball. Evaluated in floating point in log
/// space with slack 1e−9.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KappaReport {
    pub n: usize,
    pub log_lhs: f64,
    pub log_rhs: f64,
    pub holds: bool,
    pub floating_point: bool,
}

pub const KAPPA_SLACK: f64 = 1e-9;

fn ln_kappa(k: usize) -> f64 {
    let h = k as f64 / 2.0;
    h * std::f64::consts::PI.ln() - ln_gamma(h + 1.0)
}

pub fn kappa_constant_check(n: usize) -> Result<KappaReport> {
    if n < 3 {
        return Err(Error::Precondition("κ check needs n ≥ 3".into()));
    }
    let log_lhs = 2.0 * ln_kappa(n - 2);
    let log_rhs = (n as f64 / (n as f64 - 1.0)).ln() + ln_kappa(n - 3) + ln_kappa(n - 1);
    Ok(KappaReport {
        n,
        log_lhs,
        log_rhs,
        holds: log_lhs < log_rhs + KAPPA_SLACK,
        floating_point: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bezout::{cross_polytope, standard_simplex, unit_cube};

    #[test]
    fn catalog_containments() {
        let s = inscribed_simplex_check(&standard_simplex(3).unwrap()).unwrap();
        assert!(s.holds());
        assert_eq!(s.scaled_volume, Rational::one());
        let c = inscribed_simplex_check(&unit_cube(3).unwrap()).unwrap();
        assert!(c.holds());
        // volume 1/3 = 2/3!
        assert_eq!(c.scaled_volume, Rational::from(2));
        assert!(inscribed_simplex_check(&cross_polytope(3).unwrap()).unwrap().holds());
    }

    #[test]
    fn kappa_small_cases() {
        let r = kappa_constant_check(3).unwrap();
        assert!((r.log_lhs - 4f64.ln()).abs() < 1e-12);
        assert!((r.log_rhs - (1.5 * std::f64::consts::PI).ln()).abs() < 1e-12);
        assert!((3..=50).all(|n| kappa_constant_check(n).unwrap().holds));
        assert!(kappa_constant_check(2).is_err());
    }
}
