//! The claim-by-claim verification suite: every checkable statement about
//! the algebras in the catalog, grouped by topic, run in parallel and
//! reported in `claim_id` order.

mod helpers;
mod table;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogError;
use crate::coeff::CoeffError;
use crate::freealg::FreeAlgError;
use crate::homcheck::HomError;
use crate::matrep::MatError;
use crate::probes::ProbeError;
use crate::rewrite::RewriteError;

pub use table::{claims, TOPICS};

pub const REPORT_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClaimError {
    #[error("unknown topic `{0}`")]
    UnknownTopic(String),
    #[error("{0}")]
    Unexpected(String),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Probe(#[from] ProbeError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Matrix(#[from] MatError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimVerdict {
    Verified,
    /// Probe evidence agrees with the claim; not a proof.
    ConsistentWithClaim,
    FiniteDimensionCertified,
    Inconclusive,
    Refuted,
    /// The check itself failed to run.
    Error,
}

impl ClaimVerdict {
    pub fn is_failure(self) -> bool {
        matches!(self, ClaimVerdict::Refuted | ClaimVerdict::Error)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimVerdict::Verified => "verified",
            ClaimVerdict::ConsistentWithClaim => "consistent-with-claim",
            ClaimVerdict::FiniteDimensionCertified => "finite-dimension-certified",
            ClaimVerdict::Inconclusive => "inconclusive",
            ClaimVerdict::Refuted => "refuted",
            ClaimVerdict::Error => "error",
        }
    }
}

impl fmt::Display for ClaimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a claim's check found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub verdict: ClaimVerdict,
    pub detail: String,
}

impl Finding {
    pub fn new(verdict: ClaimVerdict, detail: impl Into<String>) -> Self {
        Finding {
            verdict,
            detail: detail.into(),
        }
    }

    /// The weaker of two findings: refuted beats inconclusive beats the rest.
    fn and(self, other: Finding) -> Finding {
        let rank = |v: ClaimVerdict| match v {
            ClaimVerdict::Error => 3,
            ClaimVerdict::Refuted => 2,
            ClaimVerdict::Inconclusive => 1,
            _ => 0,
        };
        let verdict = if rank(other.verdict) > rank(self.verdict) {
            other.verdict
        } else {
            self.verdict
        };
        Finding {
            verdict,
            detail: format!("{}; {}", self.detail, other.detail),
        }
    }
}

pub type Check = fn() -> Result<Finding, ClaimError>;

/// A checkable statement with its identifier, a descriptive reference tag
/// and the check that decides it.
#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub reference: &'static str,
    pub check: Check,
}

impl Claim {
    pub fn topic(&self) -> &'static str {
        self.id.split('/').next().unwrap_or(self.id)
    }

    pub fn run(&self) -> ClaimEntry {
        let start = Instant::now();
        let finding = (self.check)().unwrap_or_else(|e| Finding::new(ClaimVerdict::Error, e.to_string()));
        ClaimEntry {
            claim_id: self.id.to_string(),
            reference: self.reference.to_string(),
            verdict: finding.verdict,
            detail: finding.detail,
            millis: start.elapsed().as_millis() as u64,
        }
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("reference", &self.reference)
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimEntry {
    pub claim_id: String,
    pub reference: String,
    pub verdict: ClaimVerdict,
    pub detail: String,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub format_version: u32,
    pub entries: Vec<ClaimEntry>,
}

impl ClaimReport {
    pub fn has_failures(&self) -> bool {
        self.entries.iter().any(|e| e.verdict.is_failure())
    }

    pub fn count(&self, verdict: ClaimVerdict) -> usize {
        self.entries.iter().filter(|e| e.verdict == verdict).count()
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|e| e.claim_id.len()).max().unwrap_or(0);
        for e in &self.entries {
            writeln!(
                f,
                "{:<width$}  {:<26}  {:>6} ms  {}",
                e.claim_id,
                e.verdict.as_str(),
                e.millis,
                e.reference
            )?;
            if e.verdict != ClaimVerdict::Verified {
                writeln!(f, "{:<width$}  {}", "", e.detail)?;
            }
        }
        let mut summary: Vec<String> = Vec::new();
        for v in [
            ClaimVerdict::Verified,
            ClaimVerdict::ConsistentWithClaim,
            ClaimVerdict::FiniteDimensionCertified,
            ClaimVerdict::Inconclusive,
            ClaimVerdict::Refuted,
            ClaimVerdict::Error,
        ] {
            let n = self.count(v);
            if n > 0 {
                summary.push(format!("{n} {v}"));
            }
        }
        writeln!(f, "{} claims: {}", self.entries.len(), summary.join(", "))
    }
}

/// Claims whose topic is in `topics`, or all claims when `topics` is empty.
pub fn select(topics: &[String]) -> Result<Vec<Claim>, ClaimError> {
    for t in topics {
        if !TOPICS.contains(&t.as_str()) {
            return Err(ClaimError::UnknownTopic(t.clone()));
        }
    }
    Ok(claims()
        .into_iter()
        .filter(|c| topics.is_empty() || topics.iter().any(|t| t == c.topic()))
        .collect())
}

/// Runs the selected claims on the current rayon pool.
pub fn verify_claims(topics: &[String]) -> Result<ClaimReport, ClaimError> {
    let selected = select(topics)?;
    let mut entries: Vec<ClaimEntry> = selected.par_iter().map(Claim::run).collect();
    entries.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(ClaimReport {
        format_version: REPORT_FORMAT_VERSION,
        entries,
    })
}

#[cfg(test)]
mod tests;
