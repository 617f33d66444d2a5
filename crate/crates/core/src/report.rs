use std::fmt;

use serde::{Deserialize, Serialize};

/// One named check inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Counts of factors by degree.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub tangency: usize,
    pub positive_nodes: usize,
    pub negative_nodes: usize,
    pub cusps: usize,
    pub negative_cusps: usize,
}

impl Census {
    pub fn record(&mut self, degree: i32) {
        match degree {
            1 => self.tangency += 1,
            2 => self.positive_nodes += 1,
            -2 => self.negative_nodes += 1,
            3 => self.cusps += 1,
            -3 => self.negative_cusps += 1,
            _ => {}
        }
    }

    pub fn total(&self) -> usize {
        self.tangency + self.positive_nodes + self.negative_nodes + self.cusps + self.negative_cusps
    }
}

/// Outcome of a validation: `pass` holds exactly when every check passes.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub pass: bool,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<Census>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport { pass: true, ..Default::default() }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.pass &= pass;
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    /// Appends another report's checks with a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for c in other.checks {
            self.push(format!("{prefix}.{}", c.name), c.pass, c.detail);
        }
        self.notes.extend(other.notes);
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.pass { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  [{mark}] {}", c.name)?;
            } else {
                writeln!(f, "  [{mark}] {}: {}", c.name, c.detail)?;
            }
        }
        if let Some(c) = &self.census {
            writeln!(
                f,
                "  census: tangency {}, nodes +{} / -{}, cusps {} (reversed {})",
                c.tangency, c.positive_nodes, c.negative_nodes, c.cusps, c.negative_cusps
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
