//! Structured verification reports and their text/CSV renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::matrix::C64;

/// How `max_residual` is compared against `tolerance`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    /// residual ≤ tolerance
    #[default]
    Le,
    /// statistic ≥ bound (e.g. a defect that must stay large)
    Ge,
    /// mismatch count must be zero; exact arithmetic
    Exact,
    /// informational table; never fails
    Report,
}

fn is_le(c: &Comparison) -> bool {
    *c == Comparison::Le
}

/// One element-wise comparison between an oracle value and a printed reference value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryDiff {
    pub entry: String,
    pub oracle: C64,
    pub printed: C64,
    pub rel_diff: f64,
    pub flagged: bool,
}

impl EntryDiff {
    /// Relative difference `|o − p| / max(|o|, |p|, 1)`, flagged above `flag_at`.
    pub fn new(entry: impl Into<String>, oracle: C64, printed: C64, flag_at: f64) -> Self {
        let scale = oracle.norm().max(printed.norm()).max(1.0);
        let rel_diff = (oracle - printed).norm() / scale;
        EntryDiff { entry: entry.into(), oracle, printed, rel_diff, flagged: !(rel_diff <= flag_at) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    /// The identity in formula form.
    pub anchor: String,
    pub max_residual: f64,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "is_le")]
    pub comparison: Comparison,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diffs: Vec<EntryDiff>,
}

impl IdentityCheck {
    fn make(id: &str, anchor: &str, value: f64, tolerance: f64, comparison: Comparison) -> Self {
        let passed = match comparison {
            Comparison::Le => value <= tolerance,
            Comparison::Ge => value >= tolerance,
            Comparison::Exact => value == 0.0,
            Comparison::Report => true,
        };
        IdentityCheck {
            id: id.to_string(),
            anchor: anchor.to_string(),
            max_residual: value,
            tolerance,
            comparison,
            passed,
            notes: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// Passes iff `max_residual ≤ tolerance` (NaN fails).
    pub fn upper(id: &str, anchor: &str, max_residual: f64, tolerance: f64) -> Self {
        Self::make(id, anchor, max_residual, tolerance, Comparison::Le)
    }

    /// Passes iff `min_value ≥ bound`.
    pub fn lower(id: &str, anchor: &str, min_value: f64, bound: f64) -> Self {
        Self::make(id, anchor, min_value, bound, Comparison::Ge)
    }

    /// Exact check: passes iff `mismatches == 0`.
    pub fn exact(id: &str, anchor: &str, mismatches: usize) -> Self {
        Self::make(id, anchor, mismatches as f64, 0.0, Comparison::Exact)
    }

    /// Informational entry (diff tables, recorded conventions).
    pub fn info(id: &str, anchor: &str) -> Self {
        Self::make(id, anchor, 0.0, 0.0, Comparison::Report)
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn with_diffs(mut self, diffs: Vec<EntryDiff>) -> Self {
        self.diffs = diffs;
        self
    }
}

/// Running maximum that treats NaN as +∞.
#[derive(Clone, Copy, Debug, Default)]
pub struct Worst(pub f64);

impl Worst {
    pub fn push(&mut self, x: f64) {
        let x = if x.is_nan() { f64::INFINITY } else { x };
        if x > self.0 {
            self.0 = x;
        }
    }

    pub fn merge(&mut self, other: Worst) {
        self.push(other.0);
    }
}

/// Running minimum (for lower-bound checks).
#[derive(Clone, Copy, Debug)]
pub struct Least(pub f64);

impl Default for Least {
    fn default() -> Self {
        Least(f64::INFINITY)
    }
}

impl Least {
    pub fn push(&mut self, x: f64) {
        let x = if x.is_nan() { f64::NEG_INFINITY } else { x };
        if x < self.0 {
            self.0 = x;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub passed: bool,
    pub identities: Vec<IdentityCheck>,
    /// Wall time; omitted unless requested so that reports stay byte-identical per seed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64, samples: usize, tolerance: f64, identities: Vec<IdentityCheck>) -> Self {
        let passed = identities.iter().all(|c| c.passed);
        VerificationReport { suite: suite.to_string(), seed, samples, tolerance, passed, identities, timing_ms: None }
    }

    pub fn find(&self, id: &str) -> Option<&IdentityCheck> {
        self.identities.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.identities.iter().filter(|c| !c.passed).collect()
    }
}

/// Several suite reports run with one configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportBundle {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub passed: bool,
    pub reports: Vec<VerificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl ReportBundle {
    pub fn new(seed: u64, samples: usize, tolerance: f64, reports: Vec<VerificationReport>) -> Self {
        let passed = reports.iter().all(|r| r.passed);
        ReportBundle { suite: "all".into(), seed, samples, tolerance, passed, reports, timing_ms: None }
    }
}

fn fmt_c(z: C64) -> String {
    format!("{:.6e}{:+.6e}i", z.re, z.im)
}

pub fn render_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    let status = if r.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(s, "suite {} [{status}] seed={} samples={} tol={:e}", r.suite, r.seed, r.samples, r.tolerance);
    if let Some(t) = r.timing_ms {
        let _ = writeln!(s, "  time {t:.1} ms");
    }
    for c in &r.identities {
        let st = match (c.comparison, c.passed) {
            (Comparison::Report, _) => "INFO",
            (_, true) => "ok",
            (_, false) => "FAIL",
        };
        let rel = match c.comparison {
            Comparison::Le => "<=",
            Comparison::Ge => ">=",
            Comparison::Exact => "==",
            Comparison::Report => "",
        };
        if c.comparison == Comparison::Report {
            let _ = writeln!(s, "  [{st:>4}] {:<44} {}", c.id, c.anchor);
        } else {
            let _ = writeln!(
                s,
                "  [{st:>4}] {:<44} {:>11.3e} {rel} {:<9.1e} {}",
                c.id, c.max_residual, c.tolerance, c.anchor
            );
        }
        for n in &c.notes {
            let _ = writeln!(s, "         - {n}");
        }
        for d in &c.diffs {
            let flag = if d.flagged { "FLAG" } else { "" };
            let _ = writeln!(
                s,
                "         {:<10} oracle {:<30} printed {:<30} rel {:.2e} {flag}",
                d.entry,
                fmt_c(d.oracle),
                fmt_c(d.printed),
                d.rel_diff
            );
        }
    }
    s
}

pub fn render_bundle_text(b: &ReportBundle) -> String {
    let mut s = String::new();
    let status = if b.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(s, "all suites [{status}] seed={} samples={} tol={:e}", b.seed, b.samples, b.tolerance);
    if let Some(t) = b.timing_ms {
        let _ = writeln!(s, "  time {t:.1} ms");
    }
    for r in &b.reports {
        s.push_str(&render_text(r));
    }
    s
}

/// One CSV row per identity: suite,id,comparison,max_residual,tolerance,passed,anchor.
pub fn render_csv(reports: &[VerificationReport]) -> String {
    let mut s = String::from("suite,id,comparison,max_residual,tolerance,passed,anchor\n");
    for r in reports {
        for c in &r.identities {
            let cmp = serde_json::to_value(c.comparison).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            let _ = writeln!(
                s,
                "{},{},{},{:e},{:e},{},\"{}\"",
                r.suite,
                c.id,
                cmp,
                c.max_residual,
                c.tolerance,
                c.passed,
                c.anchor.replace('"', "\"\"")
            );
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::c;

    #[test]
    fn nan_never_passes() {
        assert!(!IdentityCheck::upper("x", "", f64::NAN, 1.0).passed);
        let mut w = Worst::default();
        w.push(1e-3);
        w.push(f64::NAN);
        assert!(w.0.is_infinite());
    }

    #[test]
    fn overall_flag_tracks_identities() {
        let ok = IdentityCheck::upper("a", "", 0.0, 1e-10);
        let bad = IdentityCheck::lower("b", "", 0.01, 0.1);
        assert!(VerificationReport::new("s", 1, 1, 1e-10, vec![ok.clone()]).passed);
        assert!(!VerificationReport::new("s", 1, 1, 1e-10, vec![ok, bad]).passed);
        assert!(IdentityCheck::info("c", "").passed);
    }

    #[test]
    fn complex_serializes_as_pair() {
        let d = EntryDiff::new("(1,1)", c(1.0, -2.0), c(1.0, -2.0), 1e-6);
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["oracle"], serde_json::json!([1.0, -2.0]));
        assert!(!d.flagged);
    }

    #[test]
    fn csv_quotes_anchor() {
        let r = VerificationReport::new("s", 0, 1, 1e-10, vec![IdentityCheck::upper("a", "say \"hi\"", 0.0, 1.0)]);
        assert!(render_csv(&[r]).contains("\"say \"\"hi\"\"\""));
    }
}
