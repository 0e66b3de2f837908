//! Named constructions used by the checks and the reproduction catalog.

use crate::error::{Error, Result};
use crate::geometry::{Point, Polytope, MAX_DIM};
use crate::kernel::Rational;

fn unit(n: usize, i: usize, sign: i64) -> Point {
    (0..n)
        .map(|j| Rational::from(if j == i { sign } else { 0 }))
        .collect()
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::Malformed(format!("dimension {n} outside 1..={MAX_DIM}")));
    }
    Ok(())
}

/// O_n = {x : Σ|xᵢ| ≤ 1}.
pub fn cross_polytope(n: usize) -> Result<Polytope> {
    check_n(n)?;
    Polytope::convex_hull((0..n).flat_map(|i| [unit(n, i, 1), unit(n, i, -1)]).collect())
}

/// [0,1]ⁿ.
pub fn unit_cube(n: usize) -> Result<Polytope> {
    check_n(n)?;
    Polytope::convex_hull(
        (0..1u32 << n)
            .map(|m| (0..n).map(|i| Rational::from(((m >> i) & 1) as i64)).collect())
            .collect(),
    )
}

/// conv{0, e₁, …, eₙ}.
pub fn standard_simplex(n: usize) -> Result<Polytope> {
    check_n(n)?;
    let mut pts = vec![vec![Rational::zero(); n]];
    pts.extend((0..n).map(|i| unit(n, i, 1)));
    Polytope::convex_hull(pts)
}

/// conv(([−1,1]ʳ × {0}) ∪ ({0} × O^{n−r})), the extremal body for the
/// coordinate-projection inequality.
pub fn zon_equality(n: usize, r: usize) -> Result<Polytope> {
    check_n(n)?;
    if r == 0 || r >= n {
        return Err(Error::Malformed(format!("zon-equality needs 1 ≤ r < n, got n = {n}, r = {r}")));
    }
    let mut pts: Vec<Point> = (0..1u32 << r)
        .map(|m| {
            (0..n)
                .map(|i| {
                    if i < r {
                        Rational::from(if (m >> i) & 1 == 1 { 1 } else { -1 })
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    pts.extend((r..n).flat_map(|i| [unit(n, i, 1), unit(n, i, -1)]));
    Polytope::convex_hull(pts)
}

/// Σ [0, gᵢ] over the generator vectors.
pub fn zonotope(generators: &[Point]) -> Result<Polytope> {
    let first = generators.first().ok_or(Error::Empty)?;
    let n = first.len();
    let mut body = Polytope::point(vec![Rational::zero(); n]);
    for g in generators {
        body = body.minkowski_sum(&Polytope::segment(vec![Rational::zero(); n], g.clone())?)?;
    }
    Ok(body)
}

/// Looks up a construction by name: "octahedron" and "cross-polytope" (n),
/// "cube" (n), "simplex" (n), "zon-equality" (n, r).
pub fn named_body(name: &str, params: &[usize]) -> Result<Polytope> {
    let arity = |k: usize| -> Result<()> {
        if params.len() != k {
            return Err(Error::Malformed(format!("{name} takes {k} parameter(s), got {}", params.len())));
        }
        Ok(())
    };
    match name {
        "octahedron" | "cross-polytope" => {
            arity(1)?;
            cross_polytope(params[0])
        }
        "cube" => {
            arity(1)?;
            unit_cube(params[0])
        }
        "simplex" => {
            arity(1)?;
            standard_simplex(params[0])
        }
        "zon-equality" => {
            arity(2)?;
            zon_equality(params[0], params[1])
        }
        other => Err(Error::Malformed(format!("unknown body {other:?}"))),
    }
}
