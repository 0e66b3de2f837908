use crate::combinatorics::{mask_members, nonempty_masks};
use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::kernel::{Matrix, Rational};

/// Whether every subfamily of size k spans a Minkowski sum of dimension ≥ k.
///
/// For a full family of n bodies in Qⁿ this is exactly the condition for the
/// mixed volume to be positive.
pub fn is_essential(bodies: &[Polytope]) -> Result<bool> {
    let n = match bodies.first() {
        None => return Err(Error::Empty),
        Some(p) => p.dim(),
    };
    for b in bodies {
        bodies[0].check_dim(b.dim())?;
    }
    if bodies.len() > n {
        return Err(Error::Malformed(format!(
            "{} bodies exceed the dimension {n}",
            bodies.len()
        )));
    }
    let spans: Vec<Vec<Vec<Rational>>> = bodies.iter().map(edge_vectors).collect();
    for mask in nonempty_masks(bodies.len()) {
        let members = mask_members(mask);
        let rows: Vec<Vec<Rational>> = members.iter().flat_map(|&i| spans[i].iter().cloned()).collect();
        let rank = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(rows)?.rank()
        };
        if rank < members.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Differences v − v₀ over the vertices; their span is the direction space
/// of the affine hull.
fn edge_vectors(p: &Polytope) -> Vec<Vec<Rational>> {
    let v = p.vertices();
    v[1..]
        .iter()
        .map(|x| x.iter().zip(&v[0]).map(|(a, b)| a - b).collect())
        .collect()
}
