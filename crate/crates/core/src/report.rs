//! Pass/fail reports produced by the validators.
//!
//! Every axiom family is checked by materializing the two sides as matrices
//! and testing that the residual is exactly zero, so a check is a named
//! boolean with no tolerance attached.

use std::fmt;

#[derive(Clone, Debug)]
pub struct Check {
    pub law: String,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> ValidationReport {
        ValidationReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, law: impl Into<String>, ok: bool) {
        self.checks.push(Check {
            law: law.into(),
            ok,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failing_laws(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.ok)
            .map(|c| c.law.as_str())
            .collect()
    }

    /// Merge another report in, prefixing its law names.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for c in other.checks {
            self.checks.push(Check {
                law: format!("{prefix}: {}", c.law),
                ok: c.ok,
            });
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.subject,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.ok { "ok" } else { "FAIL" }, c.law)?;
        }
        Ok(())
    }
}
