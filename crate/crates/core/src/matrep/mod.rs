//! Square matrices over the coefficient field: the explicit representations,
//! brackets, spans, and enveloping presentations built from structure
//! constants.

mod enveloping;
pub mod linalg;
mod reps;

use std::collections::BTreeMap;
use std::fmt;

pub use enveloping::{
    enveloping_from_basis, enveloping_sl2, enveloping_sl3, enveloping_sl3_loop, loop_generator, structure_constants,
};
pub use reps::{
    loop_sl3, sl2_basis, sl2_triple, sl3_basis, sl3_triple, sl3_units, three_cycle_rep, verify_sl3_formulas,
};

use crate::coeff::{CoeffError, Monomial, MultiPoly, ParamSet, RatFunc};
use crate::freealg::NcPoly;
use crate::lang::{parse_ratfunc, LangError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatError {
    #[error("matrix sizes {0} and {1} differ")]
    SizeMismatch(usize, usize),
    #[error("expected {expected} entries, got {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("no image for generator `{0}`")]
    MissingImage(String),
    #[error("entry `{text}`: {source}")]
    Entry {
        text: String,
        #[source]
        source: LangError,
    },
    #[error("element is not in the span of the basis")]
    NotInSpan,
    #[error("`{entry}` is not a Laurent polynomial in `{var}`")]
    NotLaurent { entry: String, var: String },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// An `n x n` matrix with rational-function entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct MatElt {
    n: usize,
    params: ParamSet,
    entries: Vec<RatFunc>,
}

impl MatElt {
    pub fn zero(n: usize, params: &ParamSet) -> Self {
        MatElt {
            n,
            params: params.clone(),
            entries: vec![RatFunc::zero(params); n * n],
        }
    }

    pub fn identity(n: usize, params: &ParamSet) -> Self {
        let mut m = Self::zero(n, params);
        for i in 0..n {
            m.entries[i * n + i] = RatFunc::one(params);
        }
        m
    }

    /// The matrix unit with a single 1 at `(i, j)`, zero-based.
    pub fn unit(n: usize, i: usize, j: usize, params: &ParamSet) -> Self {
        let mut m = Self::zero(n, params);
        m.entries[i * n + j] = RatFunc::one(params);
        m
    }

    pub fn from_entries(n: usize, params: &ParamSet, entries: Vec<RatFunc>) -> Result<Self, MatError> {
        if entries.len() != n * n {
            return Err(MatError::EntryCount {
                expected: n * n,
                found: entries.len(),
            });
        }
        let entries = entries
            .into_iter()
            .map(|e| e.lift_to(params))
            .collect::<Result<_, _>>()?;
        Ok(MatElt {
            n,
            params: params.clone(),
            entries,
        })
    }

    /// Parses `n * n` row-major entry expressions.
    pub fn from_texts<S: AsRef<str>>(n: usize, params: &ParamSet, texts: &[S]) -> Result<Self, MatError> {
        let entries = texts
            .iter()
            .map(|t| {
                parse_ratfunc(t.as_ref(), params).map_err(|source| MatError::Entry {
                    text: t.as_ref().to_string(),
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_entries(n, params, entries)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn entry(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    fn same_size(&self, other: &MatElt) -> Result<(), MatError> {
        if self.n != other.n {
            return Err(MatError::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &MatElt) -> Result<MatElt, MatError> {
        self.same_size(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.with_entries(entries))
    }

    pub fn sub(&self, other: &MatElt) -> Result<MatElt, MatError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MatElt {
        self.with_entries(self.entries.iter().map(|e| -e.clone()).collect())
    }

    pub fn scale(&self, c: &RatFunc) -> Result<MatElt, MatError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.checked_mul(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.with_entries(entries))
    }

    pub fn mul(&self, other: &MatElt) -> Result<MatElt, MatError> {
        self.same_size(other)?;
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = RatFunc::zero(&self.params);
                for k in 0..n {
                    let a = &self.entries[i * n + k];
                    let b = &other.entries[k * n + j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(&a.checked_mul(b)?)?;
                }
                out.push(acc);
            }
        }
        Ok(self.with_entries(out))
    }

    /// The commutator `self * other - other * self`.
    pub fn bracket(&self, other: &MatElt) -> Result<MatElt, MatError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> Result<RatFunc, MatError> {
        let mut acc = RatFunc::zero(&self.params);
        for i in 0..self.n {
            acc = acc.checked_add(self.entry(i, i))?;
        }
        Ok(acc)
    }

    /// Entry-wise parameter substitution.
    pub fn compose_params(&self, images: &BTreeMap<String, RatFunc>) -> Result<MatElt, MatError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.compose(images).and_then(|r| r.lift_to(&self.params)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.with_entries(entries))
    }

    fn with_entries(&self, entries: Vec<RatFunc>) -> MatElt {
        let params = entries.first().map_or(self.params.clone(), |e| e.params().clone());
        MatElt {
            n: self.n,
            params,
            entries,
        }
    }
}

impl fmt::Display for MatElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let row: Vec<String> = (0..self.n).map(|j| self.entry(i, j).to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for MatElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Evaluates `p` with generator `g` sent to `images[g]`.
pub fn eval_ncpoly_indexed(p: &NcPoly, images: &[MatElt]) -> Result<MatElt, MatError> {
    let alphabet = p.alphabet();
    if images.len() != alphabet.len() {
        let missing = alphabet.names().get(images.len()).cloned().unwrap_or_default();
        return Err(MatError::MissingImage(missing));
    }
    let n = images.first().map_or(0, MatElt::size);
    let params = images.first().map_or(p.params().clone(), |m| m.params().clone());
    let mut acc = MatElt::zero(n, &params);
    for (w, c) in p.terms() {
        let mut prod = MatElt::identity(n, &params);
        for &g in w.letters() {
            prod = prod.mul(&images[g as usize])?;
        }
        acc = acc.add(&prod.scale(c)?)?;
    }
    Ok(acc)
}

/// Evaluates `p` with each generator sent to the matrix of the same name.
pub fn eval_ncpoly(p: &NcPoly, images: &BTreeMap<String, MatElt>) -> Result<MatElt, MatError> {
    let indexed = p
        .alphabet()
        .names()
        .iter()
        .map(|g| images.get(g).cloned().ok_or_else(|| MatError::MissingImage(g.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    eval_ncpoly_indexed(p, &indexed)
}

/// Rank of the span of `mats`, each flattened to its entries.
pub fn rank_span(mats: &[MatElt]) -> Result<usize, MatError> {
    if let Some(m) = mats.iter().find(|m| m.n != mats[0].n) {
        return Err(MatError::SizeMismatch(mats[0].n, m.n));
    }
    let rows: Vec<Vec<RatFunc>> = mats.iter().map(|m| m.entries.clone()).collect();
    Ok(linalg::rank(&rows)?)
}

/// Splits `r` as `sum_k c_k * var^k` with coefficients free of `var`.
///
/// Fails unless the denominator is a power of `var` times a factor free of
/// `var`.
pub fn laurent_coefficients(r: &RatFunc, var: &str) -> Result<BTreeMap<i64, RatFunc>, MatError> {
    let params = r.params();
    let Some(v) = params.index_of(var) else {
        return Ok(BTreeMap::from([(0, r.clone())]));
    };
    let not_laurent = || MatError::NotLaurent {
        entry: r.to_string(),
        var: var.to_string(),
    };
    let strip = |m: &Monomial| {
        let mut e = m.exponents().to_vec();
        let k = e[v];
        e[v] = 0;
        (k as i64, Monomial::from_exponents(e))
    };
    let nvars = params.len();
    let mut shift = None;
    let mut d0 = MultiPoly::zero(nvars);
    for (m, c) in r.denom().terms() {
        let (k, rest) = strip(m);
        if *shift.get_or_insert(k) != k {
            return Err(not_laurent());
        }
        d0.add_term(rest, c.clone());
    }
    let shift = shift.unwrap_or(0);
    let mut groups: BTreeMap<i64, MultiPoly> = BTreeMap::new();
    for (m, c) in r.numer().terms() {
        let (k, rest) = strip(m);
        groups
            .entry(k - shift)
            .or_insert_with(|| MultiPoly::zero(nvars))
            .add_term(rest, c.clone());
    }
    groups
        .into_iter()
        .map(|(k, p)| Ok((k, RatFunc::from_parts(params, p, d0.clone())?)))
        .collect()
}

/// Flattens each matrix to a row of its entries' Laurent coefficients in
/// `var`, over a common column set. With `var = None` the rows are the plain
/// entries.
pub fn laurent_rows(mats: &[MatElt], var: Option<&str>) -> Result<Vec<Vec<RatFunc>>, MatError> {
    let Some(first) = mats.first() else {
        return Ok(Vec::new());
    };
    if let Some(m) = mats.iter().find(|m| m.n != first.n) {
        return Err(MatError::SizeMismatch(first.n, m.n));
    }
    let Some(var) = var else {
        return Ok(mats.iter().map(|m| m.entries.clone()).collect());
    };
    let expanded = mats
        .iter()
        .map(|m| {
            m.entries
                .iter()
                .map(|e| laurent_coefficients(e, var))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut keys: Vec<(usize, i64)> = expanded
        .iter()
        .flat_map(|m| m.iter().enumerate().flat_map(|(i, c)| c.keys().map(move |&k| (i, k))))
        .collect();
    keys.sort();
    keys.dedup();
    let zero = RatFunc::zero(first.params());
    Ok(expanded
        .iter()
        .map(|m| {
            keys.iter()
                .map(|(i, k)| m[*i].get(k).cloned().unwrap_or_else(|| zero.clone()))
                .collect()
        })
        .collect())
}

/// Rank of the span of `mats` over the coefficients free of `var`, with
/// `var` treated as a Laurent variable: each entry is expanded into its
/// coefficients of `var^k` before elimination.
pub fn rank_span_laurent(mats: &[MatElt], var: &str) -> Result<usize, MatError> {
    Ok(linalg::rank(&laurent_rows(mats, Some(var))?)?)
}

#[cfg(test)]
mod tests;
