//! Rewriting modulo a two-sided ideal: orientation, normal forms, ambiguity
//! resolution, degree-capped completion and normal-word enumeration.

mod basis;
mod overlap;
mod system;

use std::fmt;

pub use overlap::{CompletionOptions, CompletionReport, Overlap, OverlapKind, Resolution};
pub use system::{Origin, RewriteSystem, Rule};

use crate::coeff::RatFunc;
use crate::freealg::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Oriented and interreduced; ambiguities not yet examined.
    Raw,
    /// Every ambiguity resolves; normal words form a basis.
    Confluent,
    /// Every ambiguity word of length at most the bound resolves.
    CompleteToDegree(usize),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Raw => f.write_str("raw"),
            Status::Confluent => f.write_str("confluent"),
            Status::CompleteToDegree(d) => write!(f, "complete-to-degree({d})"),
        }
    }
}

/// One summand `coeff * left * relation * right` of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertTerm {
    pub relation: usize,
    pub left: Word,
    pub right: Word,
    pub coeff: RatFunc,
}

/// Expression of a rule's `lhs - rhs` as a combination of input relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub terms: Vec<CertTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("polynomial and system use different alphabets")]
    AlphabetMismatch,
    #[error("polynomial and system use incompatible parameter sets")]
    ParamMismatch,
    #[error("monomial order does not match the alphabet")]
    OrderMismatch,
    #[error("relation is zero")]
    ZeroRelation,
    #[error("completion exceeded {0} rules")]
    RuleCap(usize),
    #[error("degree bound {max_deg} is below the largest rule degree {rule_deg}")]
    DegreeBelowRules { max_deg: usize, rule_deg: usize },
}
