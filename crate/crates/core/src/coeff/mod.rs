//! Exact coefficient field: rational functions in named parameters.

mod params;
mod poly;
mod ratfunc;

pub(crate) use params::is_ident;
pub use params::{ParamSet, STANDARD_PARAMS};
pub use poly::{gcd, Monomial, MultiPoly};
pub use ratfunc::{needs_parens, RatFunc};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("operands live over different parameter sets")]
    ParamMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at {assignment}")]
    Pole { assignment: String },
    #[error("invalid parameter name `{0}`")]
    BadParamName(String),
    #[error("parameter `{0}` listed twice")]
    DuplicateParam(String),
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
    #[error("exponent out of range")]
    ExponentTooLarge,
}
