//! Exact checks of the bounds relating τ, ν₂ and the ratio
//! `(|P| + |L|) / (r + 1)`.
//!
//! Every comparison is made between exact rationals. Checks whose hypotheses
//! do not hold are reported as skipped rather than dropped, and a check fed
//! with a value that was not proven optimal never reports a failure.

mod checks;
mod report;
mod suite;

use std::fmt;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

pub use checks::*;
pub use report::render_text;
pub use suite::{
    check_instance, corpus, random_instance, run_instances, run_suite, Family, NamedInstance,
    SuiteReport, Verdict,
};

/// An optimum together with whether the search proved it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Solved {
    pub value: usize,
    pub proven: bool,
}

impl Solved {
    pub fn proven(value: usize) -> Self {
        Solved {
            value,
            proven: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    fn holds(self, lhs: Rational64, rhs: Rational64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Eq => "=",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// The relation holds with both sides equal.
    Equality,
    Fail,
    /// The relation does not hold but an input was not proven optimal.
    Undecided,
    SkippedPrecondition,
}

impl Status {
    pub fn is_pass(self) -> bool {
        matches!(self, Status::Pass | Status::Equality)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Equality => "equality",
            Status::Fail => "FAIL",
            Status::Undecided => "undecided",
            Status::SkippedPrecondition => "skipped-precondition",
        })
    }
}

fn ser_ratio<S: Serializer>(r: &Option<Rational64>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// One named comparison `lhs relation rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    #[serde(serialize_with = "ser_ratio")]
    pub lhs: Option<Rational64>,
    pub relation: Relation,
    #[serde(serialize_with = "ser_ratio")]
    pub rhs: Option<Rational64>,
    pub status: Status,
    pub unproven: bool,
    /// Reported but not counted towards the verdict.
    pub experimental: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn compare(
        name: &'static str,
        lhs: impl Into<Rational64>,
        relation: Relation,
        rhs: impl Into<Rational64>,
        unproven: bool,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let status = if relation.holds(lhs, rhs) {
            if lhs == rhs {
                Status::Equality
            } else {
                Status::Pass
            }
        } else if unproven {
            Status::Undecided
        } else {
            Status::Fail
        };
        Check {
            name,
            lhs: Some(lhs),
            relation,
            rhs: Some(rhs),
            status,
            unproven,
            experimental: false,
            note: None,
        }
    }

    pub fn skipped(name: &'static str, relation: Relation, reason: impl Into<String>) -> Self {
        Check {
            name,
            lhs: None,
            relation,
            rhs: None,
            status: Status::SkippedPrecondition,
            unproven: false,
            experimental: false,
            note: Some(reason.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn experimental(mut self) -> Self {
        self.experimental = true;
        self
    }

    /// Counts as a failure for the overall verdict.
    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail && !self.experimental
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceSummary {
    pub points: usize,
    pub lines: usize,
    pub r: Option<usize>,
    pub max_degree: usize,
    pub tau: Solved,
    pub nu2: Solved,
    pub tau_nodes: u64,
    pub nu2_nodes: u64,
}

/// All checks run on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub summary: InstanceSummary,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_failure())
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn is_proven(&self) -> bool {
        self.summary.tau.proven && self.summary.nu2.proven
    }
}
