//! Enveloping-algebra presentations from matrix bases.

use crate::catalog::{CatalogError, Presentation};
use crate::coeff::{ParamSet, RatFunc};
use crate::freealg::{GenAlphabet, MonomialOrder, NcPoly, Word};

use super::linalg::solve_in_span;
use super::reps::{sl2_basis, sl3_units};
use super::{MatElt, MatError};

/// `c[i][j][k]` with `[b_i, b_j] = sum_k c[i][j][k] b_k`.
pub fn structure_constants(basis: &[MatElt]) -> Result<Vec<Vec<Vec<RatFunc>>>, MatError> {
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    let params = first.params().clone();
    let vectors: Vec<Vec<RatFunc>> = basis.iter().map(|m| m.entries().to_vec()).collect();
    let n = basis.len();
    let mut out = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let br = basis[i].bracket(&basis[j])?;
            out[i][j] = solve_in_span(&vectors, br.entries(), &params)?.ok_or(MatError::NotInSpan)?;
        }
    }
    Ok(out)
}

fn commutator_relation(
    alphabet: &GenAlphabet,
    params: &ParamSet,
    i: u16,
    j: u16,
    bracket: impl IntoIterator<Item = (u16, RatFunc)>,
) -> NcPoly {
    let mut terms = vec![
        (Word::from(vec![i, j]), RatFunc::one(params)),
        (Word::from(vec![j, i]), -RatFunc::one(params)),
    ];
    for (k, c) in bracket {
        if !c.is_zero() {
            terms.push((Word::letter(k), -c));
        }
    }
    NcPoly::from_terms(alphabet, params, terms)
}

/// `U(g)` for the Lie algebra spanned by `basis`: one generator per basis
/// element and `XY - YX = [X,Y]` for every pair, with the bracket expanded
/// through the structure constants.
pub fn enveloping_from_basis(name: &str, basis: &[(String, MatElt)]) -> Result<Presentation, CatalogError> {
    let names: Vec<&str> = basis.iter().map(|b| b.0.as_str()).collect();
    let alphabet = GenAlphabet::new(&names)?;
    let params = ParamSet::standard();
    let mats: Vec<MatElt> = basis.iter().map(|b| b.1.clone()).collect();
    let sc = structure_constants(&mats)?;
    let used: Vec<String> = {
        let mut v: Vec<String> = mats
            .iter()
            .flat_map(|m| m.entries().iter().flat_map(|e| e.used_params()))
            .collect();
        v.sort();
        v.dedup();
        v
    };
    let mut relations = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let br = sc[i][j].iter().enumerate().map(|(k, c)| (k as u16, c.clone()));
            relations.push(commutator_relation(&alphabet, &params, i as u16, j as u16, br));
        }
    }
    let order = MonomialOrder::declaration(&alphabet);
    Presentation::new(name, alphabet, params, used, relations, order)
}

/// `U(sl2)` on the triple `A, B, C`.
pub fn enveloping_sl2() -> Result<Presentation, CatalogError> {
    enveloping_from_basis("u_sl2", &sl2_basis()?)
}

/// `U(sl3)` on `E12, E23, E31, E21, E32, E13, H1, H2`.
pub fn enveloping_sl3() -> Result<Presentation, CatalogError> {
    enveloping_from_basis("u_sl3", &sl3_units())
}

/// Name of the loop generator `x (x) t^d`.
pub fn loop_generator(unit: &str, d: i32) -> String {
    if d < 0 {
        format!("{unit}_tm{}", -d)
    } else {
        format!("{unit}_t{d}")
    }
}

/// A truncation of `U(sl3 (x) F[t, 1/t])`: generators `x (x) t^d` for the
/// eight units and `|d| <= k`, with `[x (x) t^a, y (x) t^b] = [x,y] (x) t^(a+b)`
/// imposed whenever `|a + b| <= k`.
///
/// Products of elements whose `t`-degrees sum to at most `k` in absolute
/// value at every partial step reduce exactly as in the full algebra.
pub fn enveloping_sl3_loop(k: i32) -> Result<Presentation, CatalogError> {
    let units = sl3_units();
    let mats: Vec<MatElt> = units.iter().map(|u| u.1.clone()).collect();
    let sc = structure_constants(&mats)?;
    let mut gens: Vec<(usize, i32)> = Vec::new();
    for d in -k..=k {
        for u in 0..units.len() {
            gens.push((u, d));
        }
    }
    let names: Vec<String> = gens.iter().map(|&(u, d)| loop_generator(&units[u].0, d)).collect();
    let alphabet = GenAlphabet::new(&names)?;
    let params = ParamSet::standard();
    let index = |u: usize, d: i32| ((d + k) as usize * units.len() + u) as u16;
    let mut relations = Vec::new();
    for (i, &(u, a)) in gens.iter().enumerate() {
        for (j, &(v, b)) in gens.iter().enumerate().skip(i + 1) {
            if (a + b).abs() > k {
                continue;
            }
            let br = sc[u][v].iter().enumerate().map(|(w, c)| (index(w, a + b), c.clone()));
            relations.push(commutator_relation(&alphabet, &params, i as u16, j as u16, br));
        }
    }
    let order = MonomialOrder::declaration(&alphabet);
    Presentation::new("u_sl3_loop", alphabet, params, Vec::new(), relations, order)
}
