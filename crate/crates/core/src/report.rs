//! Named pass/fail checks collected by the verification routines.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// `None` on success, otherwise a description of the first violation.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: ok", self.name),
            Some(why) => write!(f, "{}: FAILED ({why})", self.name),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            failure,
        });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.record(name, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.record(name, Some(why.into()));
    }

    /// Records `cond`, using `why` for the failure message.
    pub fn expect(&mut self, name: impl Into<String>, cond: bool, why: impl FnOnce() -> String) {
        self.record(name, (!cond).then(why));
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{prefix}{}", c.name),
                failure: c.failure,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
