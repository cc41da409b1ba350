//! Symbolic toolkit for noncommutative algebras given by generators and
//! relations: exact coefficients, Bergman-style rewriting, homomorphism checks
//! and matrix representations.

pub mod catalog;
pub mod claims;
pub mod coeff;
pub mod freealg;
pub mod homcheck;
pub mod lang;
pub mod matrep;
pub mod probes;
pub mod report;
pub mod rewrite;
