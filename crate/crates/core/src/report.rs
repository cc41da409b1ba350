//! Structured pass/fail results shared by the checking modules.

use std::fmt;

use serde::Serialize;

/// Outcome of a single check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Outcome {
    Verified,
    /// A definite failure; `witness` is the nonzero residue or mismatch.
    Refuted {
        witness: String,
    },
    /// Reduction did not reach zero modulo a system that is not known to be
    /// confluent, which proves nothing.
    Inconclusive {
        residue: String,
    },
}

impl Outcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, Outcome::Verified)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    Inconclusive,
    Refuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Refuted => "refuted",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub label: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub title: String,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, outcome: Outcome) {
        self.entries.push(CheckEntry {
            label: label.into(),
            outcome,
        });
    }

    /// Appends the entries of `other`, prefixing their labels.
    pub fn extend_from(&mut self, prefix: &str, other: CheckReport) {
        for e in other.entries {
            self.entries.push(CheckEntry {
                label: format!("{prefix}{}", e.label),
                outcome: e.outcome,
            });
        }
    }

    /// Refuted if anything is refuted, else inconclusive if anything is,
    /// else verified. An empty report is verified.
    pub fn verdict(&self) -> Verdict {
        self.entries
            .iter()
            .map(|e| match e.outcome {
                Outcome::Verified => Verdict::Verified,
                Outcome::Inconclusive { .. } => Verdict::Inconclusive,
                Outcome::Refuted { .. } => Verdict::Refuted,
            })
            .max()
            .unwrap_or(Verdict::Verified)
    }

    pub fn is_verified(&self) -> bool {
        self.verdict() == Verdict::Verified
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.outcome.is_verified())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, self.verdict())?;
        for e in &self.entries {
            match &e.outcome {
                Outcome::Verified => writeln!(f, "  [ok]   {}", e.label)?,
                Outcome::Refuted { witness } => writeln!(f, "  [FAIL] {}: {witness}", e.label)?,
                Outcome::Inconclusive { residue } => writeln!(f, "  [??]   {}: residue {residue}", e.label)?,
            }
        }
        Ok(())
    }
}
