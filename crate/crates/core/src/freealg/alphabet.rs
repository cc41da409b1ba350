use std::fmt;
use std::sync::Arc;

use super::{FreeAlgError, Word};
use crate::coeff::is_ident;

#[derive(PartialEq, Eq, Hash)]
struct Inner {
    names: Vec<String>,
    inverse: Vec<Option<u16>>,
}

/// Ordered generator names, each optionally paired with a formal inverse.
///
/// Cloning is cheap; alphabets compare structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenAlphabet(Arc<Inner>);

impl GenAlphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, FreeAlgError> {
        Self::with_inverses(names, &[] as &[(&str, &str)])
    }

    /// `pairs` lists `(g, g_inv)`; both names must already appear in `names`.
    pub fn with_inverses<S: AsRef<str>, T: AsRef<str>>(names: &[S], pairs: &[(T, T)]) -> Result<Self, FreeAlgError> {
        if names.len() > u16::MAX as usize {
            return Err(FreeAlgError::AlphabetTooLarge);
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_ident(n) {
                return Err(FreeAlgError::BadGeneratorName(n.to_string()));
            }
            if out.iter().any(|m| m == n) {
                return Err(FreeAlgError::DuplicateGenerator(n.to_string()));
            }
            out.push(n.to_string());
        }
        let mut inverse = vec![None; out.len()];
        for (g, h) in pairs {
            let find = |s: &str| {
                out.iter()
                    .position(|m| m == s)
                    .ok_or_else(|| FreeAlgError::UnknownGenerator(s.to_string()))
            };
            let i = find(g.as_ref())?;
            let j = find(h.as_ref())?;
            if i == j || inverse[i].is_some() || inverse[j].is_some() {
                return Err(FreeAlgError::BadInversePair(g.as_ref().to_string()));
            }
            inverse[i] = Some(j as u16);
            inverse[j] = Some(i as u16);
        }
        Ok(GenAlphabet(Arc::new(Inner { names: out, inverse })))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, g: u16) -> &str {
        &self.0.names[g as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.0.names.iter().position(|n| n == name).map(|i| i as u16)
    }

    pub fn inverse_of(&self, g: u16) -> Option<u16> {
        self.0.inverse[g as usize]
    }

    /// Each unordered inverse pair once, as `(g, g_inv)` with `g < g_inv`.
    pub fn inverse_pairs(&self) -> Vec<(u16, u16)> {
        (0..self.len() as u16)
            .filter_map(|g| self.inverse_of(g).filter(|&h| g < h).map(|h| (g, h)))
            .collect()
    }

    /// Parses a word written as generator names separated by `*` or whitespace.
    pub fn word(&self, text: &str) -> Result<Word, FreeAlgError> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c == '*' || c.is_whitespace()) {
            if tok.is_empty() || tok == "1" {
                continue;
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<usize>()
                        .map_err(|_| FreeAlgError::UnknownGenerator(tok.to_string()))?,
                ),
                None => (tok, 1),
            };
            let g = self
                .index_of(base)
                .ok_or_else(|| FreeAlgError::UnknownGenerator(base.to_string()))?;
            letters.extend(std::iter::repeat_n(g, exp));
        }
        Ok(Word::from(letters))
    }

    pub(crate) fn ptr_eq(&self, other: &GenAlphabet) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub(crate) fn same(&self, other: &GenAlphabet) -> bool {
        self.ptr_eq(other) || self == other
    }
}

impl fmt::Debug for GenAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.names.iter()).finish()
    }
}
