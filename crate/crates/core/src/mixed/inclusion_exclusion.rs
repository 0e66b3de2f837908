//! Mixed volumes by inclusion–exclusion over Minkowski subset sums:
//!
//! n!·V(P₁,…,Pₙ) = Σ_{∅≠S⊆[n]} (−1)^{n−|S|} Vol(Σ_{i∈S} Pᵢ).
//!
//! Repeated bodies collapse the 2ⁿ subsets to one volume per multiplicity
//! profile (c₁,…,c_m), 0 ≤ cⱼ ≤ mⱼ, weighted by Π C(mⱼ, cⱼ).

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;

use crate::geometry::Polytope;
use crate::kernel::{binomial, factorial, Rational};
use crate::mixed::MixedVolumeQuery;

/// Memo of volumes of nonnegative integer combinations Σ cⱼ Pⱼ, keyed by the
/// sorted (body, coefficient) list. Shareable across threads; concurrent
/// inserts of the same key store the same exact value.
#[derive(Default)]
pub struct VolumeCache {
    map: RwLock<HashMap<Vec<(Polytope, usize)>, Rational>>,
}

impl VolumeCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().map(|m| m.len()).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Volume of Σ cⱼ Pⱼ over the terms with nonzero coefficient.
    pub fn combination_volume(&self, terms: &[(&Polytope, usize)]) -> Rational {
        let mut key: Vec<(Polytope, usize)> = terms
            .iter()
            .filter(|(_, c)| *c > 0)
            .map(|(p, c)| ((*p).clone(), *c))
            .collect();
        key.sort();
        if let Some(v) = self.map.read().ok().and_then(|m| m.get(&key).cloned()) {
            return v;
        }
        let value = compute_combination_volume(&key);
        if let Ok(mut m) = self.map.write() {
            m.insert(key, value.clone());
        }
        value
    }
}

fn compute_combination_volume(terms: &[(Polytope, usize)]) -> Rational {
    match terms {
        [] => Rational::zero(),
        [(p, c)] => {
            let n = p.dim() as u32;
            p.volume() * Rational::from(*c).pow(n)
        }
        _ => {
            let mut sum = terms[0].0.scale(&Rational::from(terms[0].1));
            for (p, c) in &terms[1..] {
                sum = sum.minkowski_sum(&p.scale(&Rational::from(*c))).expect("equal dimensions");
            }
            sum.volume()
        }
    }
}

pub fn mixed_volume(q: &MixedVolumeQuery) -> Rational {
    mixed_volume_cached(q, &VolumeCache::new())
}

pub fn mixed_volume_cached(q: &MixedVolumeQuery, cache: &VolumeCache) -> Rational {
    let n = q.dim();
    let entries = q.entries();
    if entries.len() == 1 {
        return cache.combination_volume(&[(&entries[0].0, 1)]);
    }

    // Enumerate multiplicity profiles (c₁,…,c_m) ≠ 0.
    let mut profiles: Vec<Vec<usize>> = vec![vec![]];
    for (_, m) in entries {
        profiles = profiles
            .into_iter()
            .flat_map(|p| {
                (0..=*m).map(move |c| {
                    let mut p = p.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    profiles.retain(|p| p.iter().any(|&c| c > 0));

    let term = |profile: &Vec<usize>| -> Rational {
        let size: usize = profile.iter().sum();
        let weight: BigInt = profile
            .iter()
            .zip(entries)
            .map(|(&c, (_, m))| binomial(*m as u32, c as u32))
            .product();
        let terms: Vec<(&Polytope, usize)> = entries.iter().map(|(p, _)| p).zip(profile.iter().copied()).collect();
        let vol = cache.combination_volume(&terms);
        let signed = vol * Rational::from(weight);
        if (n - size) % 2 == 1 {
            -signed
        } else {
            signed
        }
    };

    #[cfg(feature = "parallel")]
    let total: Rational = {
        use rayon::prelude::*;
        profiles.par_iter().map(term).collect::<Vec<_>>().into_iter().sum()
    };
    #[cfg(not(feature = "parallel"))]
    let total: Rational = profiles.iter().map(term).sum();

    total / Rational::from(factorial(n as u32))
}
