//! Browser bindings for three planar operations. Every export takes JSON
//! strings and returns a JSON string: the result on success, or
//! `{"error": "..."}` on failure.
//!
//! Polygons are given as point lists, e.g. `[[0,0],[2,0],["1/2",3]]`.

use mixvol::kernel::Rational;
use mixvol::planar::{self, HexagonInstance};
use mixvol::Polytope;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn polygon(text: &str) -> Result<Polytope, String> {
    let pts: Vec<Vec<Rational>> = serde_json::from_str(text).map_err(|e| format!("bad point list: {e}"))?;
    if pts.is_empty() {
        return Err("empty point list".into());
    }
    if pts.iter().any(|p| p.len() != 2) {
        return Err("points must have two coordinates".into());
    }
    Polytope::convex_hull(pts).map_err(|e| e.to_string())
}

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// V(K,L)·|D| ≤ 2·V(K,D)·V(L,D).
#[wasm_bindgen]
pub fn plane_bezout(k: &str, l: &str, d: &str) -> String {
    respond((|| {
        let report = planar::plane_bezout_check(&polygon(k)?, &polygon(l)?, &polygon(d)?).map_err(|e| e.to_string())?;
        Ok(json!({ "holds": report.holds(), "report": report }))
    })())
}

/// Triangles and segments whose Minkowski sum is the polygon.
#[wasm_bindgen]
pub fn decompose_polygon(points: &str) -> String {
    respond((|| {
        let p = polygon(points)?;
        let summands = planar::decompose_polygon(&p).map_err(|e| e.to_string())?;
        let reconstructs = planar::reconstructs(&p, &summands);
        Ok(json!({ "area": p.volume(), "summands": summands, "reconstructs": reconstructs }))
    })())
}

/// Mixed area identity and area bound for a hexagon given as
/// `{"A": .., "Ap": .., "B": .., "Bp": .., "C": .., "Cp": ..}`.
#[wasm_bindgen]
pub fn hexagon_check(instance: &str) -> String {
    respond((|| {
        let inst: HexagonInstance = serde_json::from_str(instance).map_err(|e| format!("bad hexagon: {e}"))?;
        let report = planar::hexagon_check(&inst).map_err(|e| e.to_string())?;
        Ok(json!({ "holds": report.holds(), "report": report }))
    })())
}
