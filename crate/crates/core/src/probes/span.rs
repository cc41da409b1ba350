use std::collections::BTreeMap;
use std::ops::Bound::{Excluded, Unbounded};

use crate::coeff::{CoeffError, ParamSet, RatFunc};
use crate::freealg::{NcPoly, Word};
use crate::matrep::{laurent_rows, MatElt};

use super::ProbeError;

type Sparse<K> = BTreeMap<K, RatFunc>;

/// Incremental forward elimination over sparse vectors, remembering how each
/// stored row was formed from the inserted vectors.
pub(crate) struct Tracker<K> {
    pivots: BTreeMap<K, (Sparse<K>, Sparse<usize>)>,
    inserted: usize,
    params: ParamSet,
}

fn axpy<K: Ord + Clone>(v: &mut Sparse<K>, f: &RatFunc, row: &Sparse<K>) -> Result<(), CoeffError> {
    for (k, x) in row {
        let d = f.checked_mul(x)?;
        let next = match v.get(k) {
            Some(y) => y.checked_sub(&d)?,
            None => -d,
        };
        if next.is_zero() {
            v.remove(k);
        } else {
            v.insert(k.clone(), next);
        }
    }
    Ok(())
}

fn scale<K: Ord + Clone>(v: &mut Sparse<K>, f: &RatFunc) -> Result<(), CoeffError> {
    for x in v.values_mut() {
        *x = x.checked_mul(f)?;
    }
    Ok(())
}

impl<K: Ord + Clone> Tracker<K> {
    pub(crate) fn new(params: &ParamSet) -> Self {
        Tracker {
            pivots: BTreeMap::new(),
            inserted: 0,
            params: params.clone(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds `v`. Returns the combination of inserted vectors that vanishes
    /// when `v` lies in the span of the earlier ones.
    pub(crate) fn insert(&mut self, mut v: Sparse<K>) -> Result<Option<Sparse<usize>>, CoeffError> {
        let idx = self.inserted;
        self.inserted += 1;
        let mut comb: Sparse<usize> = BTreeMap::from([(idx, RatFunc::one(&self.params))]);
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.pivots.contains_key(*k)).cloned(),
                Some(c) => v
                    .range((Excluded(c.clone()), Unbounded))
                    .map(|(k, _)| k)
                    .find(|k| self.pivots.contains_key(*k))
                    .cloned(),
            };
            let Some(k) = next else { break };
            let f = v[&k].clone();
            let (row, rc) = &self.pivots[&k];
            axpy(&mut v, &f, row)?;
            axpy(&mut comb, &f, rc)?;
            cursor = Some(k);
        }
        let Some((lead, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return Ok(Some(comb));
        };
        let inv = c.inv()?;
        scale(&mut v, &inv)?;
        scale(&mut comb, &inv)?;
        self.pivots.insert(lead, (v, comb));
        Ok(None)
    }
}

fn poly_sparse(p: &NcPoly) -> Sparse<Word> {
    p.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

pub(crate) enum Vectors {
    Poly(Vec<NcPoly>),
    Matrix(Vec<MatElt>, Option<String>),
}

pub(crate) struct Outcome {
    /// Rank of the first `i + 1` target vectors, for each `i`.
    pub ranks: Vec<usize>,
    /// A nonzero source element whose image vanishes.
    pub witness: Option<NcPoly>,
}

fn run<K: Ord + Clone>(src: &[NcPoly], rows: Vec<Sparse<K>>) -> Result<Outcome, ProbeError> {
    let Some(first) = src.first() else {
        return Ok(Outcome {
            ranks: Vec::new(),
            witness: None,
        });
    };
    let mut tracker = Tracker::new(first.params());
    let mut ranks = Vec::with_capacity(rows.len());
    let mut witness = None;
    for row in rows {
        if let Some(comb) = tracker.insert(row)? {
            if witness.is_none() {
                let mut w = NcPoly::zero(first.alphabet(), first.params());
                for (j, c) in &comb {
                    w = w.try_add(&src[*j].scale(c))?;
                }
                if !w.is_zero() {
                    witness = Some(w);
                }
            }
        }
        ranks.push(tracker.rank());
    }
    Ok(Outcome { ranks, witness })
}

/// Compares the span of `src` with the span of their images `tgt`: the map
/// `src[i] -> tgt[i]` is injective on the span iff no witness is found.
/// `src` must consist of normal forms in a common system.
pub(crate) fn compare(src: &[NcPoly], tgt: &[NcPoly]) -> Result<Outcome, ProbeError> {
    run(src, tgt.iter().map(poly_sparse).collect())
}

pub(crate) fn compare_vectors(src: &[NcPoly], tgt: &Vectors) -> Result<Outcome, ProbeError> {
    match tgt {
        Vectors::Poly(p) => compare(src, p),
        Vectors::Matrix(mats, var) => {
            let rows = laurent_rows(mats, var.as_deref())?
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect::<Sparse<usize>>()
                })
                .collect();
            run(src, rows)
        }
    }
}

pub(crate) fn rank_of_polys(polys: &[NcPoly]) -> Result<usize, ProbeError> {
    let Some(first) = polys.first() else { return Ok(0) };
    let mut t = Tracker::new(first.params());
    for p in polys {
        t.insert(poly_sparse(p))?;
    }
    Ok(t.rank())
}
