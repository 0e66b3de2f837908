use crate::error::{Error, Result};
use crate::geometry::{intersects, Direction, Polytope};
use crate::mixed::{face_toward, is_essential, mixed_volume_cached, sum_normals, MixedVolumeQuery, VolumeCache};

/// Facet normals u of A₂+…+Aₙ whose face tuple (A₂ᵘ,…,Aₙᵘ) is essential;
/// these are the only directions contributing to V(·, A₂,…,Aₙ).
pub fn contact_set_e(others: &[Polytope]) -> Result<Vec<Direction>> {
    let n = match others.first() {
        None => return Err(Error::Empty),
        Some(p) => p.dim(),
    };
    if others.len() + 1 != n {
        return Err(Error::Malformed(format!("need {} bodies in Q^{n}, got {}", n - 1, others.len())));
    }
    for a in others {
        others[0].check_dim(a.dim())?;
    }
    let mut out = Vec::new();
    for a in sum_normals(others) {
        let faces: Vec<Polytope> = others.iter().map(|b| face_toward(b, &a)).collect();
        if is_essential(&faces)? {
            out.push(Direction::new(a)?);
        }
    }
    Ok(out)
}

/// For K ⊆ A₁: whether K meets A₁ᵘ for every u in the contact set of
/// `others`. Cross-checked against V(K, A₂,…) = V(A₁, A₂,…).
pub fn contact_equality_check(k: &Polytope, a1: &Polytope, others: &[Polytope]) -> Result<bool> {
    a1.check_dim(k.dim())?;
    if !a1.contains(k) {
        return Err(Error::Precondition("K must be contained in A_1".into()));
    }
    let mut touches = true;
    for u in contact_set_e(others)? {
        if !intersects(k, &a1.face_in_direction(&u)?)? {
            touches = false;
            break;
        }
    }
    let cache = VolumeCache::new();
    let mv = |first: &Polytope| -> Result<_> {
        let mut entries = vec![(first.clone(), 1)];
        entries.extend(others.iter().map(|p| (p.clone(), 1)));
        Ok(mixed_volume_cached(&MixedVolumeQuery::new(entries)?, &cache))
    };
    let equal = mv(k)? == mv(a1)?;
    if equal != touches {
        return Err(Error::Inconsistent(format!(
            "contact condition {touches} but mixed-volume equality {equal}"
        )));
    }
    Ok(touches)
}
