//! Machine-diffable verification reports.

use serde::Serialize;
use serde_json::Value;

/// Whether a failed check refutes a theorem (a bug) or a conjecture (a finding).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// A proven statement or an exact-arithmetic oracle; failure means a bug.
    Theorem,
    /// An open statement; failure is a reportable finding.
    Conjecture,
}

/// The outcome of checking one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub kind: CheckKind,
    /// Parameters, e.g. `{"h": [...], "nu": [...], "T": [...]}`.
    pub location: Value,
    pub expected: Value,
    pub actual: Value,
    pub passed: bool,
}

impl CheckReport {
    /// A theorem-level report whose verdict is `expected == actual`.
    pub fn compare(check: &str, location: Value, expected: Value, actual: Value) -> Self {
        let passed = expected == actual;
        Self {
            check: check.to_string(),
            kind: CheckKind::Theorem,
            location,
            expected,
            actual,
            passed,
        }
    }

    /// Marks the report as conjecture-level.
    pub fn conjecture(mut self) -> Self {
        self.kind = CheckKind::Conjecture;
        self
    }
}

/// Totals over a list of reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    /// Failed theorem-level checks.
    pub failed: usize,
    /// Failed conjecture-level checks.
    pub findings: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary {
            total: reports.len(),
            ..Summary::default()
        };
        for r in reports {
            match (r.passed, r.kind) {
                (true, _) => s.passed += 1,
                (false, CheckKind::Theorem) => s.failed += 1,
                (false, CheckKind::Conjecture) => s.findings += 1,
            }
        }
        s
    }
}
