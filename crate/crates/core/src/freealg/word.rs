use std::cmp::Ordering;

use super::GenAlphabet;

/// A word in the free monoid; letters are generator indices.
///
/// The derived order is degree-lexicographic with respect to generator
/// declaration order. Other precedences are handled by [`super::MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: u16) -> Self {
        Word(vec![g])
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Index of the first occurrence of `sub`, if any.
    pub fn find(&self, sub: &Word) -> Option<usize> {
        if sub.is_empty() {
            return Some(0);
        }
        self.0.windows(sub.len()).position(|w| w == sub.letters())
    }

    pub fn contains(&self, sub: &Word) -> bool {
        self.find(sub).is_some()
    }

    /// Renders as `A^2*B*A`; the empty word is `1`.
    pub fn render(&self, alphabet: &GenAlphabet) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut j = i + 1;
            while j < self.0.len() && self.0[j] == g {
                j += 1;
            }
            let name = alphabet.name(g);
            if j - i == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

impl From<Vec<u16>> for Word {
    fn from(v: Vec<u16>) -> Self {
        Word(v)
    }
}

impl From<&[u16]> for Word {
    fn from(v: &[u16]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
