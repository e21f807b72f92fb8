//! Structured pass/fail records for the verification suites.

use std::fmt;
use std::ops::Sub;

use serde::Serialize;

/// Anything that can serve as the difference witness of a failed identity.
pub trait Witness {
    fn is_zero(&self) -> bool;
    fn witness_text(&self) -> String;
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Serialize, Clone, Debug)]
pub struct Check {
    #[serde(rename = "statement-id")]
    pub id: String,
    /// The checked statement in readable form.
    #[serde(rename = "citation")]
    pub statement: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize, Clone, Debug, Default)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records a check whose witness is only rendered on failure.
    pub fn record<F>(&mut self, id: impl Into<String>, statement: impl Into<String>, ok: bool, witness: F)
    where
        F: FnOnce() -> String,
    {
        self.checks.push(Check {
            id: id.into(),
            statement: statement.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: if ok { None } else { Some(witness()) },
        });
    }

    pub fn check_zero<T: Witness>(&mut self, id: impl Into<String>, statement: impl Into<String>, value: &T) {
        self.record(id, statement, value.is_zero(), || {
            format!("nonzero difference: {}", value.witness_text())
        });
    }

    pub fn check_eq<T>(&mut self, id: impl Into<String>, statement: impl Into<String>, lhs: &T, rhs: &T)
    where
        T: Witness,
        for<'a> &'a T: Sub<&'a T, Output = T>,
    {
        let diff = lhs - rhs;
        self.check_zero(id, statement, &diff);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn extend(&mut self, other: VerificationReport) {
        let prefix = other.suite.clone();
        for mut c in other.checks {
            if !prefix.is_empty() && prefix != self.suite {
                c.id = format!("{prefix}/{}", c.id);
            }
            self.checks.push(c);
        }
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {}/{} checks passed",
            self.suite,
            self.pass_count(),
            self.checks.len()
        )?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            writeln!(f, "  {tag} {}: {}", c.id, c.statement)?;
            if let Some(w) = &c.witness {
                writeln!(f, "       witness: {w}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
