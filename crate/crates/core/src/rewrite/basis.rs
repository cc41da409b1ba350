use std::collections::HashMap;

use rand::seq::IndexedRandom;
use rand::Rng;

use super::system::{lin_add, Lin};
use super::{RewriteError, RewriteSystem};
use crate::freealg::{NcPoly, Word};

impl RewriteSystem {
    fn ends_with_lhs(&self, w: &[u16]) -> bool {
        self.lens
            .iter()
            .take_while(|&&l| l <= w.len())
            .any(|&l| self.index.contains_key(&w[w.len() - l..]))
    }

    /// All normal words of length at most `max_deg`, in increasing system order.
    ///
    /// These form a basis of the quotient when the system is confluent and a
    /// spanning set otherwise.
    pub fn normal_words(&self, max_deg: usize) -> Vec<Word> {
        let n = self.alphabet.len() as u16;
        let mut level: Vec<Vec<u16>> = vec![Vec::new()];
        let mut out: Vec<Word> = vec![Word::empty()];
        for _ in 0..max_deg {
            let mut next = Vec::new();
            for w in &level {
                for r in 0..n {
                    let mut c = w.clone();
                    c.push(r);
                    if !self.ends_with_lhs(&c) {
                        next.push(c);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().map(|w| self.unrank_word(&Word::from(w.as_slice()))));
            level = next;
        }
        out
    }

    /// Number of normal words of each length `0..=max_deg`.
    pub fn count_by_degree(&self, max_deg: usize) -> Vec<u128> {
        let n = self.alphabet.len() as u16;
        let keep = self.max_lhs_len().saturating_sub(1);
        let mut states: HashMap<Vec<u16>, u128> = HashMap::new();
        states.insert(Vec::new(), 1);
        let mut counts = vec![1u128];
        for _ in 0..max_deg {
            let mut next: HashMap<Vec<u16>, u128> = HashMap::new();
            for (s, k) in &states {
                for r in 0..n {
                    let mut c = s.clone();
                    c.push(r);
                    if self.ends_with_lhs(&c) {
                        continue;
                    }
                    if c.len() > keep {
                        c.drain(..c.len() - keep);
                    }
                    *next.entry(c).or_insert(0) += k;
                }
            }
            counts.push(next.values().sum());
            states = next;
        }
        counts
    }

    /// Normal form by reducing a uniformly random redex of a random reducible
    /// term at each step. On a confluent system this agrees with
    /// [`normal_form`](Self::normal_form).
    pub fn normal_form_randomized<R: Rng>(&self, p: &NcPoly, rng: &mut R) -> Result<NcPoly, RewriteError> {
        let params = self.result_params(p)?;
        let mut lin: Lin = self.to_lin(p)?;
        loop {
            let reducible: Vec<Word> = lin
                .keys()
                .filter(|w| self.find_redex(w.letters()).is_some())
                .cloned()
                .collect();
            let Some(w) = reducible.choose(rng) else {
                break;
            };
            let letters = w.letters();
            let mut redexes = Vec::new();
            for i in 0..letters.len() {
                for &len in &self.lens {
                    if i + len <= letters.len() {
                        if let Some(&id) = self.index.get(&letters[i..i + len]) {
                            redexes.push((i, id));
                        }
                    }
                }
            }
            let &(pos, id) = redexes.choose(rng).expect("word is reducible");
            let c = lin.remove(w).expect("term present");
            let rule = self.rules[id].as_ref().expect("indexed rule is live");
            let u = &letters[..pos];
            let v = &letters[pos + rule.lhs.len()..];
            for (r, rc) in &rule.rhs {
                let mut nw = u.to_vec();
                nw.extend_from_slice(r.letters());
                nw.extend_from_slice(v);
                lin_add(&mut lin, Word::from(nw), &c * rc);
            }
        }
        Ok(NcPoly::from_terms(
            &self.alphabet,
            &params,
            lin.iter().map(|(w, c)| (self.unrank_word(w), c.clone())),
        ))
    }
}
