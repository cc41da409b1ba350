use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{FreeAlgError, GenAlphabet, MonomialOrder, Word};
use crate::coeff::{needs_parens, ParamSet, RatFunc, Rational};

/// Noncommutative polynomial: a finite linear combination of words with
/// rational-function coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcPoly {
    alphabet: GenAlphabet,
    params: ParamSet,
    terms: BTreeMap<Word, RatFunc>,
}

impl NcPoly {
    pub fn zero(alphabet: &GenAlphabet, params: &ParamSet) -> Self {
        NcPoly {
            alphabet: alphabet.clone(),
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &GenAlphabet, params: &ParamSet) -> Self {
        Self::term(alphabet, params, Word::empty(), RatFunc::one(params))
    }

    pub fn scalar(alphabet: &GenAlphabet, params: &ParamSet, c: RatFunc) -> Self {
        Self::term(alphabet, params, Word::empty(), c)
    }

    pub fn word(alphabet: &GenAlphabet, params: &ParamSet, w: Word) -> Self {
        Self::term(alphabet, params, w, RatFunc::one(params))
    }

    pub fn generator(alphabet: &GenAlphabet, params: &ParamSet, name: &str) -> Result<Self, FreeAlgError> {
        let g = alphabet
            .index_of(name)
            .ok_or_else(|| FreeAlgError::UnknownGenerator(name.to_string()))?;
        Ok(Self::word(alphabet, params, Word::letter(g)))
    }

    pub fn term(alphabet: &GenAlphabet, params: &ParamSet, w: Word, c: RatFunc) -> Self {
        let mut p = Self::zero(alphabet, params);
        p.add_term(w, c);
        p
    }

    pub fn from_terms(
        alphabet: &GenAlphabet,
        params: &ParamSet,
        terms: impl IntoIterator<Item = (Word, RatFunc)>,
    ) -> Self {
        let mut p = Self::zero(alphabet, params);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn alphabet(&self) -> &GenAlphabet {
        &self.alphabet
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing declaration-order deglex.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &RatFunc)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&RatFunc> {
        self.terms.get(w)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.terms.keys().map(Word::len).min().unwrap_or(0)
    }

    /// The scalar value when the polynomial has only the empty word.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero(&self.params)),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    /// Adds `c·w` in place, lifting `c` onto this polynomial's parameters.
    pub fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let c = if c.params() == &self.params {
            c
        } else {
            c.lift_to(&self.params).expect("coefficient parameters must embed")
        };
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn compatible(&self, other: &NcPoly) -> Result<(), FreeAlgError> {
        if !self.alphabet.same(&other.alphabet) {
            return Err(FreeAlgError::AlphabetMismatch);
        }
        Ok(())
    }

    /// The parameter set for a binary result: the longer of two nested sets.
    fn joint_params(&self, other: &NcPoly) -> Result<ParamSet, FreeAlgError> {
        if self.params == other.params || other.params.is_prefix_of(&self.params) {
            Ok(self.params.clone())
        } else if self.params.is_prefix_of(&other.params) {
            Ok(other.params.clone())
        } else {
            Err(FreeAlgError::Coeff(crate::coeff::CoeffError::ParamMismatch))
        }
    }

    pub fn try_add(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.compatible(other)?;
        let params = self.joint_params(other)?;
        let (mut out, rest) = if params == self.params {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (w, c) in &rest.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.compatible(other)?;
        let params = self.joint_params(other)?;
        let mut out = NcPoly::zero(&self.alphabet, &params);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.checked_mul(b)?);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            params: self.params.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> NcPoly {
        let mut out = NcPoly::zero(&self.alphabet, &self.params);
        if c.is_zero() {
            return out;
        }
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> NcPoly {
        let mut out = NcPoly::zero(&self.alphabet, &self.params);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.scale(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> NcPoly {
        let mut out = NcPoly::one(&self.alphabet, &self.params);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// The commutator `ab - ba`.
    pub fn bracket(&self, other: &NcPoly) -> Result<NcPoly, FreeAlgError> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Left multiplication by a word and right multiplication by another.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            params: self.params.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    /// Reverses every word; the linear extension of the reversal antiautomorphism.
    pub fn reversed(&self) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            params: self.params.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.reversed(), c.clone())).collect(),
        }
    }

    /// The order-maximal word with its coefficient.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(&Word, &RatFunc), FreeAlgError> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .ok_or(FreeAlgError::ZeroPolynomial)
    }

    /// Applies `f` to every coefficient, possibly moving to another parameter set.
    pub fn try_map_coeffs<E>(
        &self,
        params: &ParamSet,
        mut f: impl FnMut(&RatFunc) -> Result<RatFunc, E>,
    ) -> Result<NcPoly, E> {
        let mut out = NcPoly::zero(&self.alphabet, params);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Partial evaluation of parameters in every coefficient.
    pub fn substitute_params(&self, bindings: &BTreeMap<String, Rational>) -> Result<NcPoly, FreeAlgError> {
        Ok(self.try_map_coeffs(&self.params, |c| c.substitute(bindings))?)
    }

    /// Replaces parameters by rational functions in every coefficient.
    pub fn compose_params(&self, images: &BTreeMap<String, RatFunc>) -> Result<NcPoly, FreeAlgError> {
        let target = match images.values().find(|r| !r.is_constant()) {
            Some(r) => r.params().clone(),
            None => self.params.clone(),
        };
        Ok(self.try_map_coeffs(&target, |c| c.compose(images))?)
    }

    /// Re-expresses the polynomial over `params`, which must extend the current set.
    pub fn lift_params(&self, params: &ParamSet) -> Result<NcPoly, FreeAlgError> {
        Ok(self.try_map_coeffs(params, |c| c.lift_to(params))?)
    }

    /// Moves the polynomial onto another alphabet by generator name.
    pub fn relabel(&self, target: &GenAlphabet) -> Result<NcPoly, FreeAlgError> {
        let map: Vec<u16> = self
            .alphabet
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| FreeAlgError::UnknownGenerator(n.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut out = NcPoly::zero(target, &self.params);
        for (w, c) in &self.terms {
            let v: Vec<u16> = w.letters().iter().map(|&g| map[g as usize]).collect();
            out.add_term(Word::from(v), c.clone());
        }
        Ok(out)
    }

    /// Substitutes `images[g]` for each generator `g` and expands, in the free
    /// algebra of the images. With `reverse`, factors are multiplied in reverse
    /// order (antihomomorphism).
    pub fn substitute_generators(&self, images: &[NcPoly], reverse: bool) -> Result<NcPoly, FreeAlgError> {
        let first = images.first().ok_or(FreeAlgError::MissingImage)?;
        if images.len() != self.alphabet.len() {
            return Err(FreeAlgError::MissingImage);
        }
        let mut out = NcPoly::zero(&first.alphabet, &first.params);
        for (w, c) in &self.terms {
            let mut prod = NcPoly::one(&first.alphabet, &first.params);
            let letters: Box<dyn Iterator<Item = &u16>> = if reverse {
                Box::new(w.letters().iter().rev())
            } else {
                Box::new(w.letters().iter())
            };
            for &g in letters {
                prod = prod.try_mul(&images[g as usize])?;
                if prod.is_zero() {
                    break;
                }
            }
            out = out.try_add(&prod.scale(c))?;
        }
        Ok(out)
    }

    /// Text form accepted by the expression parser.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let simple = !needs_parens(c);
            let negative = simple && c.numer().leading().map(|t| t.1.is_negative()).unwrap_or(false);
            let mag = if negative { -c } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff = if mag.is_one() {
                None
            } else if simple {
                Some(mag.to_string())
            } else {
                Some(format!("({mag})"))
            };
            match (coeff, w.is_empty()) {
                (None, true) => out.push('1'),
                (None, false) => out.push_str(&w.render(&self.alphabet)),
                (Some(c), true) => out.push_str(&c),
                (Some(c), false) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(&w.render(&self.alphabet));
                }
            }
        }
        out
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({})", self.render())
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        self.try_add(rhs).expect("operands must share an alphabet")
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self.try_sub(rhs).expect("operands must share an alphabet")
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.try_mul(rhs).expect("operands must share an alphabet")
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly::neg(self)
    }
}
