use std::fmt;
use std::sync::{Arc, OnceLock};

use super::CoeffError;

/// Ordered, duplicate-free list of parameter names. Exponent vectors of
/// polynomials index into this list, so the order is fixed at creation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamSet(Arc<[String]>);

/// Names used by the built-in catalog, in their fixed order.
pub const STANDARD_PARAMS: &[&str] = &["a", "b", "g", "theta", "xi", "q", "t", "r0", "r1", "r2", "vt"];

impl ParamSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, CoeffError> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_ident(n) {
                return Err(CoeffError::BadParamName(n.to_string()));
            }
            if out.iter().any(|m| m == n) {
                return Err(CoeffError::DuplicateParam(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(ParamSet(out.into()))
    }

    /// The process-wide parameter set shared by every catalog presentation.
    pub fn standard() -> ParamSet {
        static STD: OnceLock<ParamSet> = OnceLock::new();
        STD.get_or_init(|| ParamSet::new(STANDARD_PARAMS).expect("standard params"))
            .clone()
    }

    /// `self` followed by the names of `extra` not already present.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<ParamSet, CoeffError> {
        let mut names: Vec<String> = self.0.to_vec();
        for e in extra {
            if !names.iter().any(|n| n == e.as_ref()) {
                names.push(e.as_ref().to_string());
            }
        }
        ParamSet::new(&names)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn ptr_eq(&self, other: &ParamSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// True when `self` is a prefix of `other`, so exponent vectors embed by padding.
    pub fn is_prefix_of(&self, other: &ParamSet) -> bool {
        self.len() <= other.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a == b)
    }
}

impl fmt::Debug for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

pub(crate) fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        assert!(matches!(ParamSet::new(&["q", "q"]), Err(CoeffError::DuplicateParam(_))));
    }

    #[test]
    fn standard_is_shared() {
        let a = ParamSet::standard();
        let b = ParamSet::standard();
        assert!(a.ptr_eq(&b));
        assert_eq!(a.index_of("xi"), Some(4));
    }

    #[test]
    fn extension_keeps_prefix() {
        let s = ParamSet::standard();
        let e = s.extended(&["lambda", "q"]).unwrap();
        assert!(s.is_prefix_of(&e));
        assert_eq!(e.len(), s.len() + 1);
    }
}
