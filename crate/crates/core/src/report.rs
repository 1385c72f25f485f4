//! Structured verification reports consumed by the CLI and the test suites.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Informational finding (known reference discrepancy, conjecture status);
    /// never affects the exit code.
    Note,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: String::from(suite), checks: Vec::new() }
    }

    pub fn pass(&mut self, name: &str) {
        self.checks.push(Check {
            name: String::from(name),
            status: Status::Pass,
            detail: String::new(),
        });
    }

    pub fn fail(&mut self, name: &str, detail: String) {
        self.checks.push(Check { name: String::from(name), status: Status::Fail, detail });
    }

    pub fn note(&mut self, name: &str, detail: String) {
        self.checks.push(Check { name: String::from(name), status: Status::Note, detail });
    }

    /// Pass/fail shorthand.
    pub fn check(&mut self, name: &str, ok: bool, detail_on_fail: impl FnOnce() -> String) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, detail_on_fail());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut p = 0;
        let mut f = 0;
        let mut n = 0;
        for c in &self.checks {
            match c.status {
                Status::Pass => p += 1,
                Status::Fail => f += 1,
                Status::Note => n += 1,
            }
        }
        (p, f, n)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Note => write!(f, "NOTE"),
        }
    }
}
