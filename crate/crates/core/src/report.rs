//! Run reports: one row per checked case, written as JSON plus a Markdown
//! table next to it.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::inequality::{ExpectedRelation, InequalityReport, Relation};
use crate::kernel::{Rational, Surd};

/// Significant digits of the display-only decimal columns.
pub const DECIMAL_DIGITS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub case_id: String,
    pub claim: String,
    pub inputs_digest: String,
    pub lhs: Surd,
    pub rhs: Surd,
    pub relation: Relation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<Surd>,
    pub lhs_decimal: String,
    pub rhs_decimal: String,
    pub expected_relation: ExpectedRelation,
    pub passed: bool,
    /// Number of instances behind the row; 1 for a single check.
    pub instances: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn compare(
        case_id: impl Into<String>,
        claim: impl Into<String>,
        lhs: Surd,
        rhs: Surd,
        expected: ExpectedRelation,
    ) -> Self {
        let relation = Relation::from_ordering(lhs.cmp(&rhs));
        let ratio = lhs.checked_div(&rhs).ok();
        RunReport {
            case_id: case_id.into(),
            claim: claim.into(),
            inputs_digest: String::new(),
            lhs_decimal: lhs.to_decimal(DECIMAL_DIGITS),
            rhs_decimal: rhs.to_decimal(DECIMAL_DIGITS),
            lhs,
            rhs,
            relation,
            ratio,
            expected_relation: expected,
            passed: expected.accepts(relation),
            instances: 1,
            notes: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub fn from_inequality(case_id: impl Into<String>, r: &InequalityReport, expected: ExpectedRelation) -> Self {
        let mut out = Self::compare(case_id, r.claim.clone(), Surd::rational(r.lhs.clone()), r.rhs.clone(), expected);
        if r.constant != Surd::rational(Rational::one()) {
            out.notes.push(format!("constant {}", r.constant));
        }
        out
    }

    /// A count that must be zero, e.g. mismatches over a suite.
    pub fn zero_count(case_id: impl Into<String>, claim: impl Into<String>, failures: usize, instances: usize) -> Self {
        let mut out = Self::compare(
            case_id,
            claim,
            Surd::rational(Rational::from(failures as i64)),
            Surd::rational(Rational::zero()),
            ExpectedRelation::Equal,
        );
        out.instances = instances;
        out
    }

    pub fn with_digest(mut self, digest: String) -> Self {
        self.inputs_digest = digest;
        self
    }

    pub fn with_instances(mut self, instances: usize) -> Self {
        self.instances = instances;
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// SHA-256 of the canonical JSON rendering of `value`.
pub fn digest<T: Serialize + ?Sized>(value: &T) -> String {
    let bytes = serde_json::to_vec(value).expect("serializable");
    hex::encode(Sha256::digest(&bytes))
}

pub fn markdown_table(reports: &[RunReport]) -> String {
    let mut s = String::new();
    s.push_str("| case | claim | lhs | rel | rhs | expected | instances | result | ms |\n");
    s.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for r in reports {
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.case_id,
            r.claim.replace('|', "\\|"),
            cell(&r.lhs, &r.lhs_decimal),
            r.relation,
            cell(&r.rhs, &r.rhs_decimal),
            r.expected_relation,
            r.instances,
            if r.passed { "PASS" } else { "FAIL" },
            r.wall_time_ms
        );
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.case_id.as_str()).collect();
    let _ = writeln!(s, "\n{} of {} rows passed.", reports.len() - failed.len(), reports.len());
    if !failed.is_empty() {
        let _ = writeln!(s, "\nFailing rows: {}", failed.join(", "));
    }
    let notes: Vec<&RunReport> = reports.iter().filter(|r| !r.notes.is_empty()).collect();
    if !notes.is_empty() {
        s.push_str("\nNotes:\n\n");
        for r in notes {
            let _ = writeln!(s, "- {}: {}", r.case_id, r.notes.join("; "));
        }
    }
    s
}

fn cell(exact: &Surd, decimal: &str) -> String {
    let e = exact.to_string();
    if e == decimal || e.len() > 40 {
        decimal.to_string()
    } else {
        format!("{e} (≈{decimal})")
    }
}

/// The Markdown sibling of a JSON report path.
pub fn markdown_path(json: &Path) -> PathBuf {
    json.with_extension("md")
}

/// Writes `value` as pretty JSON at `path` and `markdown` next to it.
pub fn write_report<T: Serialize + ?Sized>(path: &Path, value: &T, markdown: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Malformed(format!("{}: {e}", path.display()));
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(io)?;
    }
    let mut json = serde_json::to_string_pretty(value).expect("serializable");
    json.push('\n');
    std::fs::write(path, json).map_err(io)?;
    std::fs::write(markdown_path(path), markdown).map_err(io)?;
    Ok(())
}
