//! The expression language and the JSON file formats.

mod files;
mod parser;

pub use files::{
    load_check_spec, load_presentation, parse_bindings, parse_presentation, save_presentation, CheckSpec,
    DirectionSpec, FileError, GeneratorDecl, ImageSpec, PresentationFile, PresentationRef, TargetRef, FORMAT_VERSION,
};
pub use parser::{lower, parse_expr, parse_poly, parse_ratfunc, Expr};

use crate::coeff::CoeffError;
use crate::freealg::FreeAlgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LangError {
    #[error("unexpected character `{ch}` at {pos}")]
    Lex { pos: usize, ch: char },
    #[error("expected {expected} at {pos}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("unknown identifier `{name}` at {pos}")]
    UnknownIdent { pos: usize, name: String },
    #[error("zero denominator at {pos}")]
    ZeroDenominator { pos: usize },
    #[error("exponent out of range at {pos}")]
    ExponentTooLarge { pos: usize },
    #[error("negative powers apply only to nonzero scalars")]
    NegativeGeneratorPower,
    #[error("expression is not a scalar")]
    NotScalar,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
}

#[cfg(test)]
mod tests;
