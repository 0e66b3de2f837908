//! Scenario files: JSON descriptions of a single check, runnable from the
//! command line and emitted by the search as re-runnable findings.

use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bezout::search::Finding;
use crate::bezout::{
    bezout_check, convenient_position, coordinate_projection_inequality_check, inscribed_simplex_check,
    isomorphic_check, named_body, projection_form_check, simplex_equality_condition, zonotope, BezoutInstance,
    IsomorphicMode,
};
use crate::error::{Error, Result};
use crate::geometry::{Direction, Point, Polytope};
use crate::inequality::ExpectedRelation;
use crate::kernel::{Rational, Surd};
use crate::mixed::{mixed_volume, mixed_volume_facet_sum, MixedVolumeQuery};
use crate::planar::{decompose_polygon, hexagon_check, plane_bezout_check, reconstructs, HexagonInstance};
use crate::report::{digest, RunReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Bezout,
    ProjectionForm,
    Isomorphic,
    EqualityCondition,
    CoordinateProjection,
    InscribedSimplex,
    Planar,
    Hexagon,
    Decompose,
    Volume,
    Mixed,
}

/// A body given inline, by construction name, or by a path to a polytope
/// file relative to the scenario file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BodySpec {
    Named {
        named: String,
        #[serde(default)]
        params: Vec<usize>,
    },
    File {
        file: String,
    },
    Polytope(Polytope),
}

impl BodySpec {
    pub fn resolve(&self) -> Result<Polytope> {
        match self {
            BodySpec::Named { named, params } => named_body(named, params),
            BodySpec::Polytope(p) => Ok(p.clone()),
            BodySpec::File { file } => Err(Error::Malformed(format!("unresolved file reference {file:?}"))),
        }
    }

    fn inline_files(&mut self, base: &Path) -> Result<()> {
        if let BodySpec::File { file } = self {
            let path = base.join(&*file);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
            let p: Polytope =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            *self = BodySpec::Polytope(p);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub check: CheckKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<Surd>,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<BodySpec>,
    #[serde(rename = "K", default, skip_serializing_if = "Vec::is_empty")]
    pub k: Vec<BodySpec>,
    /// Slot multiplicities for "mixed"; one per body in K.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<usize>>,
    /// v₁, v₂ for "projection-form".
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub directions: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<IsomorphicMode>,
    /// Zonotope generators per Kᵢ, an alternative to K in zonoid mode.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<Point>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hexagon: Option<HexagonInstance>,
    /// Expected exact value for "volume" and "mixed".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_relation: Option<ExpectedRelation>,
}

impl Scenario {
    pub fn new(check: CheckKind) -> Self {
        Scenario {
            id: None,
            check,
            n: None,
            r: None,
            constant: None,
            d: None,
            k: Vec::new(),
            multiplicities: None,
            directions: Vec::new(),
            mode: None,
            generators: Vec::new(),
            hexagon: None,
            expected: None,
            expected_relation: None,
        }
    }

    /// A violating search instance as a self-contained bezout scenario.
    pub fn from_finding(f: &Finding, id: String) -> Self {
        let mut s = Scenario::new(CheckKind::Bezout);
        s.id = Some(id);
        s.n = Some(f.d.dim());
        s.r = Some(f.k.len());
        s.d = Some(BodySpec::Polytope(f.d.clone()));
        s.k = f.k.iter().cloned().map(BodySpec::Polytope).collect();
        s.expected_relation = Some(ExpectedRelation::Greater);
        s
    }

    fn d(&self) -> Result<Polytope> {
        self.d
            .as_ref()
            .ok_or_else(|| Error::Malformed(format!("{:?} scenario needs D", self.check)))?
            .resolve()
    }

    fn ks(&self) -> Result<Vec<Polytope>> {
        self.k.iter().map(BodySpec::resolve).collect()
    }

    fn check_declared(&self, d: &Polytope, r: usize) -> Result<()> {
        if let Some(n) = self.n.filter(|&n| n != d.dim()) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: d.dim(),
            });
        }
        if let Some(declared) = self.r.filter(|&x| x != r) {
            return Err(Error::Malformed(format!("r = {declared} but {r} bodies given")));
        }
        Ok(())
    }

    fn expect(&self, default: ExpectedRelation) -> ExpectedRelation {
        self.expected_relation.unwrap_or(default)
    }

    pub fn case_id(&self, index: usize) -> String {
        self.id.clone().unwrap_or_else(|| format!("case-{}", index + 1))
    }

    /// Runs the check. Errors are input problems (or internal
    /// inconsistencies); a failed inequality is a report with `passed` false.
    pub fn run(&self, case_id: &str, oracle: bool) -> Result<RunReport> {
        let start = Instant::now();
        let report = self.evaluate(case_id, oracle)?;
        let mut report = report.with_digest(digest(self));
        report.wall_time_ms = start.elapsed().as_millis() as u64;
        Ok(report)
    }

    fn evaluate(&self, id: &str, oracle: bool) -> Result<RunReport> {
        use ExpectedRelation::*;
        match self.check {
            CheckKind::Bezout => {
                let (d, k) = (self.d()?, self.ks()?);
                self.check_declared(&d, k.len())?;
                let one = Surd::rational(Rational::one());
                let c = self.constant.clone().unwrap_or(one);
                let r = bezout_check(&BezoutInstance::new(d, k)?, &c)?;
                Ok(RunReport::from_inequality(id, &r, self.expect(LessOrEqual)))
            }
            CheckKind::ProjectionForm => {
                let d = self.d()?;
                let [v1, v2] = match self.directions.as_slice() {
                    [a, b] => [Direction::new(a.clone())?, Direction::new(b.clone())?],
                    _ => return Err(Error::Malformed("projection-form needs two directions".into())),
                };
                self.check_declared(&d, 2)?;
                let mut r = projection_form_check(&d, &v1, &v2)?;
                if let Some(c) = &self.constant {
                    r = crate::inequality::InequalityReport::new(r.lhs, r.product, c.clone(), r.claim);
                }
                Ok(RunReport::from_inequality(id, &r, self.expect(LessOrEqual)))
            }
            CheckKind::Isomorphic => {
                let d = self.d()?;
                let mode = self
                    .mode
                    .ok_or_else(|| Error::Malformed("isomorphic scenario needs a mode".into()))?;
                let k = if self.generators.is_empty() {
                    self.ks()?
                } else {
                    self.generators.iter().map(|g| zonotope(g)).collect::<Result<Vec<_>>>()?
                };
                self.check_declared(&d, k.len())?;
                let r = isomorphic_check(&BezoutInstance::new(d, k)?, mode)?;
                Ok(RunReport::from_inequality(id, &r, self.expect(LessOrEqual)))
            }
            CheckKind::EqualityCondition => {
                let d = self.d()?;
                self.check_declared(&d, self.k.len())?;
                let placed = self
                    .ks()?
                    .iter()
                    .map(|k| convenient_position(k, &d).map(|p| p.apply(k)))
                    .collect::<Result<Vec<_>>>()?;
                let condition = simplex_equality_condition(&d, &placed)?;
                let r = bezout_check(&BezoutInstance::new(d, placed)?, &Surd::rational(Rational::one()))?;
                let default = if condition { Equal } else { Less };
                Ok(RunReport::from_inequality(id, &r, self.expect(default))
                    .note(format!("face condition {}", if condition { "holds" } else { "fails" })))
            }
            CheckKind::CoordinateProjection => {
                let d = self.d()?;
                let r = self
                    .r
                    .ok_or_else(|| Error::Malformed("coordinate-projection needs r".into()))?;
                let rep = coordinate_projection_inequality_check(&d, r)?;
                Ok(RunReport::from_inequality(id, &rep, self.expect(LessOrEqual)))
            }
            CheckKind::InscribedSimplex => {
                let d = self.d()?;
                let rep = inscribed_simplex_check(&d)?;
                let failures = [rep.inside_negative_n, rep.inside_n_plus_two].iter().filter(|b| !**b).count();
                Ok(RunReport::zero_count(id, "D' inside -n S and (n+2) S", failures, 1)
                    .note(format!("n! vol of inscribed simplex {}", rep.scaled_volume)))
            }
            CheckKind::Planar => {
                let (d, k) = (self.d()?, self.ks()?);
                let [k, l] = <[Polytope; 2]>::try_from(k)
                    .map_err(|_| Error::Malformed("planar scenario needs two bodies in K".into()))?;
                let r = plane_bezout_check(&k, &l, &d)?;
                Ok(RunReport::from_inequality(id, &r, self.expect(LessOrEqual)))
            }
            CheckKind::Hexagon => {
                let h = self
                    .hexagon
                    .as_ref()
                    .ok_or_else(|| Error::Malformed("hexagon scenario needs a hexagon".into()))?;
                let rep = hexagon_check(h)?;
                let mut out = RunReport::from_inequality(id, &rep.report, self.expect(LessOrEqual)).note(format!(
                    "V(K,L) = {}, |H| = {}",
                    rep.mixed_area, rep.hexagon_area
                ));
                if !rep.identity_holds {
                    out.passed = false;
                    out.notes.push("mixed area differs from hexagon area".into());
                }
                Ok(out)
            }
            CheckKind::Decompose => {
                let p = self.d()?;
                let parts = decompose_polygon(&p)?;
                let ok = reconstructs(&p, &parts);
                let kinds: Vec<String> = parts.iter().map(|s| format!("{:?}", s.kind).to_lowercase()).collect();
                Ok(RunReport::zero_count(id, "summands add up to the polygon", usize::from(!ok), 1)
                    .note(format!("summands: {}", kinds.join(", "))))
            }
            CheckKind::Volume => {
                let p = self.d()?;
                let v = p.volume();
                Ok(value_report(id, "volume", v, self.expected.clone()))
            }
            CheckKind::Mixed => {
                let k = self.ks()?;
                if k.is_empty() {
                    return Err(Error::Malformed("mixed scenario needs bodies in K".into()));
                }
                let mult = self.multiplicities.clone().unwrap_or_else(|| vec![1; k.len()]);
                if mult.len() != k.len() {
                    return Err(Error::Malformed("one multiplicity per body".into()));
                }
                let q = MixedVolumeQuery::new(k.into_iter().zip(mult).collect())?;
                let v = mixed_volume(&q);
                if oracle {
                    cross_check(&q, &v)?;
                }
                Ok(value_report(id, "mixed volume", v, self.expected.clone()))
            }
        }
    }
}

fn value_report(id: &str, claim: &str, value: Rational, expected: Option<Rational>) -> RunReport {
    let target = expected.clone().unwrap_or_else(|| value.clone());
    let r = RunReport::compare(
        id,
        claim,
        Surd::rational(value),
        Surd::rational(target),
        ExpectedRelation::Equal,
    );
    if expected.is_none() {
        r.note("no expected value given")
    } else {
        r
    }
}

/// Recomputes a mixed volume by the facet-sum formula and errors if the two
/// algorithms disagree.
pub fn cross_check(q: &MixedVolumeQuery, value: &Rational) -> Result<()> {
    let slots = q.slots();
    let others: Vec<Polytope> = slots[1..].iter().map(|p| (*p).clone()).collect();
    let second = mixed_volume_facet_sum(slots[0], &others)?;
    if &second != value {
        return Err(Error::Inconsistent(format!(
            "inclusion-exclusion gives {value}, facet sum gives {second}"
        )));
    }
    Ok(())
}

/// Reads a scenario file holding one scenario or an array of them, inlining
/// referenced polytope files.
pub fn load_scenarios(path: &Path) -> Result<Vec<Scenario>> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut scenarios: Vec<Scenario> = match value {
        serde_json::Value::Array(_) => serde_json::from_value(value),
        _ => serde_json::from_value(value).map(|s| vec![s]),
    }
    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or(Path::new("."));
    for s in &mut scenarios {
        for b in s.d.iter_mut().chain(s.k.iter_mut()) {
            b.inline_files(base)?;
        }
    }
    Ok(scenarios)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequality::Relation;

    fn parse(s: &str) -> Scenario {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn octahedron_scenario() {
        let s = parse(
            r#"{"check": "bezout", "n": 3, "r": 2, "D": {"named": "octahedron", "params": [3]},
                "K": [{"dim": 3, "vertices": [["-1/3","-1/3","-1/3"], ["1/3","1/3","1/3"]]},
                      {"dim": 3, "vertices": [["1","0","0"], ["0","1","0"], ["0","0","1"]]}],
                "expected_relation": ">"}"#,
        );
        let r = s.run("oct", false).unwrap();
        assert!(r.passed);
        assert_eq!(r.relation, Relation::Greater);
        assert_eq!(r.lhs, Surd::rational(Rational::frac(8, 9)));
        assert_eq!(r.inputs_digest.len(), 64);
    }

    #[test]
    fn simplex_scenario_holds() {
        let s = parse(
            r#"{"check": "bezout", "D": {"named": "simplex", "params": [2]},
                "K": [{"dim": 2, "vertices": [["0","0"], ["1/2","1/2"]]},
                      {"dim": 2, "vertices": [["1","0"], ["0","1"]]}]}"#,
        );
        let r = s.run("s", false).unwrap();
        assert_eq!(r.relation, Relation::Equal);
        assert!(r.passed);
    }

    #[test]
    fn input_errors() {
        assert!(serde_json::from_str::<Scenario>(r#"{"check": "bogus"}"#).is_err());
        assert!(serde_json::from_str::<Scenario>(r#"{"check": "volume", "extra": 1}"#).is_err());
        let s = parse(r#"{"check": "bezout", "n": 4, "D": {"named": "cube", "params": [3]}, "K": [{"named": "cube", "params": [3]}]}"#);
        assert!(s.run("x", false).is_err());
        let s = parse(r#"{"check": "mixed", "K": [{"named": "cube", "params": [2]}], "multiplicities": [1]}"#);
        assert!(s.run("x", false).is_err());
    }

    #[test]
    fn mixed_with_oracle() {
        let s = parse(
            r#"{"check": "mixed", "K": [{"named": "octahedron", "params": [3]},
                {"dim": 3, "vertices": [["1","0","0"], ["0","1","0"], ["0","0","1"]]}],
                "multiplicities": [2, 1], "expected": "1"}"#,
        );
        assert!(s.run("m", true).unwrap().passed);
    }

    #[test]
    fn round_trip() {
        let s = parse(r#"{"check": "volume", "D": {"dim": 2, "vertices": [["1","1"], ["0","0"], ["1","0"]]}, "expected": "1/2"}"#);
        let again: Scenario = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(s, again);
        assert!(s.run("v", false).unwrap().passed);
    }
}
