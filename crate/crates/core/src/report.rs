//! Pass/fail reports produced by the verification operations.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    pub tau: String,
    pub checks: Vec<Check>,
    /// Sub-suites left out because `n` exceeds their cap.
    pub skipped: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, n: usize, tau: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            n,
            tau: tau.into(),
            checks: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{}: {}", other.suite, c.name),
                ..c
            });
        }
        self.skipped.extend(other.skipped);
    }

    pub fn skip(&mut self, what: impl Into<String>) {
        self.skipped.push(what.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n = {}, tau = {})", self.suite, self.n, self.tau)?;
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  [{mark}] {}", c.name)?;
            } else {
                writeln!(f, "  [{mark}] {} ({})", c.name, c.detail)?;
            }
        }
        for s in &self.skipped {
            writeln!(f, "  [SKIP] {s}")?;
        }
        let total = self.checks.len();
        let failed = self.failures().count();
        write!(f, "{} of {total} checks passed", total - failed)
    }
}
