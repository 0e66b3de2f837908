use crate::error::{Error, Result};
use crate::geometry::Polytope;

/// A multiset of polytopes in Qⁿ whose multiplicities sum to n.
///
/// Equal bodies are merged and entries kept sorted, so two queries over the
/// same multiset compare equal regardless of slot order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedVolumeQuery {
    dim: usize,
    entries: Vec<(Polytope, usize)>,
}

impl MixedVolumeQuery {
    pub fn new(entries: Vec<(Polytope, usize)>) -> Result<Self> {
        let dim = match entries.first() {
            None => return Err(Error::Malformed("mixed volume of no bodies".into())),
            Some((p, _)) => p.dim(),
        };
        let mut merged: Vec<(Polytope, usize)> = Vec::with_capacity(entries.len());
        for (p, m) in entries {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            if m == 0 {
                return Err(Error::Malformed("multiplicities must be positive".into()));
            }
            match merged.iter_mut().find(|(q, _)| *q == p) {
                Some((_, k)) => *k += m,
                None => merged.push((p, m)),
            }
        }
        let total: usize = merged.iter().map(|(_, m)| m).sum();
        if total != dim {
            return Err(Error::Malformed(format!(
                "multiplicities sum to {total}, expected the dimension {dim}"
            )));
        }
        merged.sort();
        Ok(MixedVolumeQuery { dim, entries: merged })
    }

    /// One slot per body.
    pub fn from_bodies<'a>(bodies: impl IntoIterator<Item = &'a Polytope>) -> Result<Self> {
        Self::new(bodies.into_iter().map(|p| (p.clone(), 1)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(Polytope, usize)] {
        &self.entries
    }

    /// The n slots with multiplicities expanded.
    pub fn slots(&self) -> Vec<&Polytope> {
        self.entries
            .iter()
            .flat_map(|(p, m)| std::iter::repeat_n(p, *m))
            .collect()
    }
}
