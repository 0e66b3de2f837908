//! Mixed-volume sequences of two bodies and log-concavity tools.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::kernel::{binomial, Rational};
use crate::mixed::{mixed_volume_cached, MixedVolumeQuery, VolumeCache};

/// aⱼ = V(A^{n−j}, B^j) for j = 0..=n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AfSequence {
    pub n: usize,
    pub terms: Vec<Rational>,
}

pub fn af_sequence(a: &Polytope, b: &Polytope) -> Result<AfSequence> {
    a.check_dim(b.dim())?;
    let n = a.dim();
    let cache = VolumeCache::new();
    let mut terms = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut entries = Vec::new();
        if j < n {
            entries.push((a.clone(), n - j));
        }
        if j > 0 {
            entries.push((b.clone(), j));
        }
        terms.push(mixed_volume_cached(&MixedVolumeQuery::new(entries)?, &cache));
    }
    Ok(AfSequence { n, terms })
}

fn check_nonnegative(seq: &[Rational]) -> Result<()> {
    if seq.iter().any(Rational::is_negative) {
        return Err(Error::Precondition("sequence has a negative entry".into()));
    }
    Ok(())
}

/// Whether a zero occurs strictly between two nonzero entries.
pub fn has_internal_zeros(seq: &[Rational]) -> bool {
    let first = seq.iter().position(|x| !x.is_zero());
    let last = seq.iter().rposition(|x| !x.is_zero());
    match (first, last) {
        (Some(f), Some(l)) => seq[f..=l].iter().any(Rational::is_zero),
        _ => false,
    }
}

/// Local form: aᵢ² ≥ aᵢ₋₁aᵢ₊₁ for every interior index.
///
/// For sequences without internal zeros the pairwise form is checked as
/// well and a disagreement is reported as an error.
pub fn is_log_concave(seq: &[Rational]) -> Result<bool> {
    check_nonnegative(seq)?;
    let local = local_log_concave(seq);
    if !has_internal_zeros(seq) && local != pairwise_log_concave(seq) {
        return Err(Error::Inconsistent(
            "local and pairwise log-concavity disagree".into(),
        ));
    }
    Ok(local)
}

/// Pairwise form: aᵢaⱼ ≥ aᵢ₋₁aⱼ₊₁ for all 1 ≤ i ≤ j ≤ len−2.
pub fn is_log_concave_pairwise(seq: &[Rational]) -> Result<bool> {
    check_nonnegative(seq)?;
    Ok(pairwise_log_concave(seq))
}

fn local_log_concave(seq: &[Rational]) -> bool {
    seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

fn pairwise_log_concave(seq: &[Rational]) -> bool {
    let len = seq.len();
    if len < 3 {
        return true;
    }
    (1..len - 1).all(|i| (i..len - 1).all(|j| &seq[i] * &seq[j] >= &seq[i - 1] * &seq[j + 1]))
}

/// Whether every local inequality holds with equality.
pub fn is_log_linear(seq: &[Rational]) -> bool {
    seq.windows(3).all(|w| &w[1] * &w[1] == &w[0] * &w[2])
}

/// Cᵢ = Σ_{j=0}^{m} C(m, j)·a_{i+j} for 0 ≤ i ≤ len−1−m.
pub fn binomial_convolution(seq: &[Rational], m: usize) -> Result<Vec<Rational>> {
    if seq.is_empty() || m >= seq.len() {
        return Err(Error::Malformed(format!(
            "convolution order {m} too large for a sequence of length {}",
            seq.len()
        )));
    }
    let weights: Vec<Rational> = (0..=m)
        .map(|j| Rational::from(binomial(m as u32, j as u32)))
        .collect();
    Ok((0..seq.len() - m)
        .map(|i| weights.iter().zip(&seq[i..]).map(|(w, a)| w * a).sum())
        .collect())
}

/// The three-term reduction of the Bezout-type inequality for D = A + B.
#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub sequence: AfSequence,
    /// C₀, C₁, C₂ at convolution order n − 2.
    pub c: [Rational; 3],
    /// V(A,B,D^{n−2})·Vₙ(D), computed directly.
    pub lhs: Rational,
    /// V(A,D^{n−1})·V(B,D^{n−1}), computed directly.
    pub rhs: Rational,
    /// lhs = C₁(C₀+2C₁+C₂) and rhs = (C₀+C₁)(C₁+C₂).
    pub identity_holds: bool,
    /// lhs − rhs = C₁² − C₀C₂, so lhs ≤ rhs exactly when C₁² ≤ C₀C₂.
    pub equivalence_holds: bool,
    /// The sequence is log-concave and so is every convolution of it.
    pub log_concavity_propagates: bool,
    /// lhs ≤ rhs.
    pub inequality_holds: bool,
}

pub fn decomposition_chain_check(a: &Polytope, b: &Polytope) -> Result<ChainReport> {
    a.check_dim(b.dim())?;
    let n = a.dim();
    if n < 2 {
        return Err(Error::Precondition("the chain needs dimension at least 2".into()));
    }
    let d = a.minkowski_sum(b)?;
    if !d.is_full_dimensional() {
        return Err(Error::Precondition("A + B must be full-dimensional".into()));
    }
    let sequence = af_sequence(a, b)?;
    let conv = binomial_convolution(&sequence.terms, n - 2)?;
    let c = [conv[0].clone(), conv[1].clone(), conv[2].clone()];

    let cache = VolumeCache::new();
    let mv = |entries: Vec<(Polytope, usize)>| -> Result<Rational> {
        let entries = entries.into_iter().filter(|(_, m)| *m > 0).collect();
        Ok(mixed_volume_cached(&MixedVolumeQuery::new(entries)?, &cache))
    };
    let vab = mv(vec![(a.clone(), 1), (b.clone(), 1), (d.clone(), n - 2)])?;
    let vd = d.volume();
    let vad = mv(vec![(a.clone(), 1), (d.clone(), n - 1)])?;
    let vbd = mv(vec![(b.clone(), 1), (d.clone(), n - 1)])?;
    let lhs = &vab * &vd;
    let rhs = &vad * &vbd;

    let two = Rational::from(2);
    let lhs_c = &c[1] * &(&c[0] + &(&two * &c[1]) + &c[2]);
    let rhs_c = (&c[0] + &c[1]) * (&c[1] + &c[2]);
    let identity_holds = lhs == lhs_c && rhs == rhs_c;
    let equivalence_holds = &lhs_c - &rhs_c == &c[1] * &c[1] - &c[0] * &c[2];

    let mut log_concavity_propagates = is_log_concave(&sequence.terms)?;
    for m in 1..=n - 2 {
        log_concavity_propagates &= is_log_concave(&binomial_convolution(&sequence.terms, m)?)?;
    }

    Ok(ChainReport {
        sequence,
        c,
        inequality_holds: lhs <= rhs,
        lhs,
        rhs,
        identity_holds,
        equivalence_holds,
        log_concavity_propagates,
    })
}
