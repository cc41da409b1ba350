//! Exact linear algebra over the rational-function field.

use crate::coeff::{CoeffError, ParamSet, RatFunc};

/// Reduced row echelon form, in place. Returns the pivot columns.
///
/// Among the candidate pivots of a column the entry with the smallest
/// representation is chosen, which keeps intermediate expressions short.
pub fn rref(m: &mut [Vec<RatFunc>]) -> Result<Vec<usize>, CoeffError> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].size())
        else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv()?;
        for j in c..cols {
            if !m[r][j].is_zero() {
                m[r][j] = m[r][j].checked_mul(&inv)?;
            }
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                if m[r][j].is_zero() {
                    continue;
                }
                let d = f.checked_mul(&m[r][j])?;
                m[i][j] = m[i][j].checked_sub(&d)?;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

/// Rank of the span of `vectors`.
pub fn rank(vectors: &[Vec<RatFunc>]) -> Result<usize, CoeffError> {
    let mut m = vectors.to_vec();
    Ok(rref(&mut m)?.len())
}

/// Coefficients `c` with `sum c_i * basis_i = target`, if any.
pub fn solve_in_span(
    basis: &[Vec<RatFunc>],
    target: &[RatFunc],
    params: &ParamSet,
) -> Result<Option<Vec<RatFunc>>, CoeffError> {
    let n = basis.len();
    let mut m: Vec<Vec<RatFunc>> = (0..target.len())
        .map(|i| {
            let mut row: Vec<RatFunc> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m)?;
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut out = vec![RatFunc::zero(params); n];
    for (row, &c) in pivots.iter().enumerate() {
        out[c] = m[row][n].clone();
    }
    Ok(Some(out))
}

/// A nonzero `c` with `sum c_i * vectors_i = 0`, if the vectors are
/// dependent.
pub fn kernel_vector(vectors: &[Vec<RatFunc>], params: &ParamSet) -> Result<Option<Vec<RatFunc>>, CoeffError> {
    let n = vectors.len();
    let dim = vectors.first().map_or(0, |v| v.len());
    let mut m: Vec<Vec<RatFunc>> = (0..dim)
        .map(|i| vectors.iter().map(|v| v[i].clone()).collect())
        .collect();
    if m.is_empty() {
        return Ok((n > 0).then(|| {
            let mut v = vec![RatFunc::zero(params); n];
            v[0] = RatFunc::one(params);
            v
        }));
    }
    let pivots = rref(&mut m)?;
    let Some(free) = (0..n).find(|c| !pivots.contains(c)) else {
        return Ok(None);
    };
    let mut out = vec![RatFunc::zero(params); n];
    out[free] = RatFunc::one(params);
    for (row, &c) in pivots.iter().enumerate() {
        out[c] = -m[row][free].clone();
    }
    Ok(Some(out))
}
