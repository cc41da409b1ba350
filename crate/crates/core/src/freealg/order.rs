use std::cmp::Ordering;

use super::{FreeAlgError, GenAlphabet, Word};

/// Degree-lexicographic order with a configurable generator precedence.
///
/// `rank[g]` is the position of generator `g` in the precedence list; words
/// of equal length compare letter by letter through `rank`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialOrder {
    rank: Vec<u16>,
}

impl MonomialOrder {
    /// Precedence equal to declaration order.
    pub fn declaration(alphabet: &GenAlphabet) -> Self {
        MonomialOrder {
            rank: (0..alphabet.len() as u16).collect(),
        }
    }

    /// `precedence` lists every generator once, smallest first.
    pub fn with_precedence<S: AsRef<str>>(alphabet: &GenAlphabet, precedence: &[S]) -> Result<Self, FreeAlgError> {
        if precedence.len() != alphabet.len() {
            return Err(FreeAlgError::BadPrecedence(format!(
                "expected {} generators, got {}",
                alphabet.len(),
                precedence.len()
            )));
        }
        let mut rank = vec![u16::MAX; alphabet.len()];
        for (r, name) in precedence.iter().enumerate() {
            let g = alphabet
                .index_of(name.as_ref())
                .ok_or_else(|| FreeAlgError::UnknownGenerator(name.as_ref().to_string()))?;
            if rank[g as usize] != u16::MAX {
                return Err(FreeAlgError::BadPrecedence(format!("`{}` listed twice", name.as_ref())));
            }
            rank[g as usize] = r as u16;
        }
        Ok(MonomialOrder { rank })
    }

    pub fn rank(&self, g: u16) -> u16 {
        self.rank[g as usize]
    }

    pub fn ranks(&self) -> &[u16] {
        &self.rank
    }

    /// Generators listed smallest first.
    pub fn precedence(&self) -> Vec<u16> {
        let mut out = vec![0u16; self.rank.len()];
        for (g, &r) in self.rank.iter().enumerate() {
            out[r as usize] = g as u16;
        }
        out
    }

    pub fn precedence_names(&self, alphabet: &GenAlphabet) -> Vec<String> {
        self.precedence()
            .into_iter()
            .map(|g| alphabet.name(g).to_string())
            .collect()
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            for (x, y) in a.letters().iter().zip(b.letters()) {
                let o = self.rank(*x).cmp(&self.rank(*y));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }

    /// The word with every letter replaced by its rank.
    pub(crate) fn to_ranks(&self, w: &[u16]) -> Vec<u16> {
        w.iter().map(|&g| self.rank(g)).collect()
    }
}
