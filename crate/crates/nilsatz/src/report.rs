//! Pass/fail reports for identity-check suites.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub label: String,
    pub pass: bool,
}

/// A list of named checks; identities verified here are theorems, so any
/// failure indicates an implementation bug rather than bad input.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { entries: Vec::new() }
    }

    pub fn push(&mut self, label: String, pass: bool) {
        self.entries.push(CheckEntry { label, pass });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "[{}] {}", if e.pass { "ok" } else { "FAIL" }, e.label)?;
        }
        write!(
            f,
            "{}/{} checks passed",
            self.entries.iter().filter(|e| e.pass).count(),
            self.entries.len()
        )
    }
}
