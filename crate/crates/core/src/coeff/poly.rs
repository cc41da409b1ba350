//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with variable 0 most significant. The leading term is
//! therefore always the last entry of the map.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into())
    }

    pub fn var(nvars: usize, v: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[v] = exp;
        Monomial(e.into())
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e.into())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn meet(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub(crate) fn padded(&self, nvars: usize) -> Monomial {
        let mut e = self.0.to_vec();
        e.resize(nvars, 0);
        Monomial(e.into())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        Self::monomial(Monomial::var(nvars, v, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.0[v] > 0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.nvars(), self.nvars);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, d)| (k.mul(m), d * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        if d.is_monomial() {
            let (dm, dc) = d.leading().unwrap();
            let inv = dc.recip();
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                terms.insert(dm.quotient_of(m), c * &inv);
            }
            return Some(MultiPoly {
                nvars: self.nvars,
                terms,
            });
        }
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !dm.divides(&rm) {
                return None;
            }
            let qm = dm.quotient_of(&rm);
            let qc = &rc / &dc;
            rem = rem.sub(&d.mul_monomial(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Positive rational `c` such that `self / c` has coprime integer coefficients.
    pub fn content(&self) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(num, den)
    }

    /// Integer-primitive associate with positive leading coefficient.
    pub fn normalized(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Smallest exponent of each variable over all terms.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Monomial::one(self.nvars),
        };
        it.fold(first, |acc, m| acc.meet(m))
    }

    /// Substitute `v := value` in every term.
    pub fn substitute(&self, v: usize, value: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        let mut powers: Vec<Rational> = vec![Rational::one()];
        for (m, c) in &self.terms {
            let e = m.0[v] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut nm = m.0.to_vec();
            nm[v] = 0;
            out.add_term(Monomial(nm.into()), c * &powers[e]);
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[v].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub(crate) fn padded(&self, nvars: usize) -> MultiPoly {
        if nvars == self.nvars {
            return self.clone();
        }
        MultiPoly {
            nvars,
            terms: self.terms.iter().map(|(m, c)| (m.padded(nvars), c.clone())).collect(),
        }
    }

    /// View as a univariate polynomial in `v`: coefficient of `v^k` at index `k`.
    fn coefficients_in(&self, v: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[v] as usize;
            let mut e = m.0.to_vec();
            e[v] = 0;
            out[k].add_term(Monomial(e.into()), c.clone());
        }
        out
    }

    fn from_coefficients_in(nvars: usize, v: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                let mut e = m.0.to_vec();
                e[v] += k as u32;
                out.add_term(Monomial(e.into()), x.clone());
            }
        }
        out
    }
}

/// Greatest common divisor, normalized to be integer-primitive with positive
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars();
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    let ma = a.min_monomial();
    let mb = b.min_monomial();
    let m = ma.meet(&mb);
    let a1 = if ma.is_one() {
        a.clone()
    } else {
        a.div_exact(&MultiPoly::monomial(ma, Rational::one())).unwrap()
    };
    let b1 = if mb.is_one() {
        b.clone()
    } else {
        b.div_exact(&MultiPoly::monomial(mb, Rational::one())).unwrap()
    };
    let g = gcd_monomial_free(&a1, &b1);
    if m.is_one() {
        g
    } else {
        g.mul_monomial(&m, &Rational::one()).normalized()
    }
}

fn gcd_monomial_free(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    if a.is_monomial() || b.is_monomial() {
        // after stripping monomial content, a monomial is a constant
        return MultiPoly::one(n);
    }
    if a == b {
        return a.normalized();
    }
    // A variable occurring in only one argument cannot occur in the gcd.
    for v in 0..n {
        let ua = a.uses_var(v);
        let ub = b.uses_var(v);
        if ua && !ub {
            return gcd_with_content(a, v, b);
        }
        if ub && !ua {
            return gcd_with_content(b, v, a);
        }
    }
    if let Some(g) = heuristic_gcd(&a.normalized(), &b.normalized()) {
        return g.normalized();
    }
    // choose the shared variable of smallest combined degree as main variable
    let v = (0..n)
        .filter(|&v| a.uses_var(v))
        .min_by_key(|&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .expect("non-constant polynomial uses some variable");
    let ca = a.coefficients_in(v);
    let cb = b.coefficients_in(v);
    let cont_a = fold_gcd(&ca);
    let cont_b = fold_gcd(&cb);
    let c = gcd(&cont_a, &cont_b);
    let pa: Vec<MultiPoly> = ca.iter().map(|x| x.div_exact(&cont_a).unwrap()).collect();
    let pb: Vec<MultiPoly> = cb.iter().map(|x| x.div_exact(&cont_b).unwrap()).collect();
    let g = primitive_prs(pa, pb);
    let g = MultiPoly::from_coefficients_in(n, v, &g);
    g.mul(&c).normalized()
}

/// Heuristic gcd of integer polynomials, content included: evaluate one
/// variable at a large integer, recurse, and lift the result back in that
/// base. A lifted candidate whose primitive part divides both inputs is the
/// gcd; `None` after repeated failures.
fn heuristic_gcd(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    const ATTEMPTS: usize = 6;
    let n = a.nvars();
    let (ca, cb) = (a.content(), b.content());
    let c = Rational::from_integer(ca.numer().gcd(cb.numer()));
    if a.is_constant() || b.is_constant() {
        return Some(MultiPoly::constant(n, c));
    }
    let (pa, pb) = (a.scale(&ca.recip()), b.scale(&cb.recip()));
    let v = (0..n).find(|&v| pa.uses_var(v) || pb.uses_var(v))?;
    let height = |p: &MultiPoly| p.terms.values().map(|c| c.numer().abs()).max().unwrap_or_default();
    let mut xi: BigInt = 2 * height(&pa).min(height(&pb)) + 29;
    for _ in 0..ATTEMPTS {
        let point = Rational::from_integer(xi.clone());
        let (ea, eb) = (pa.substitute(v, &point), pb.substitute(v, &point));
        if !ea.is_zero() && !eb.is_zero() {
            let lifted = lift(&heuristic_gcd(&ea, &eb)?, v, &xi).normalized();
            if pa.div_exact(&lifted).is_some() && pb.div_exact(&lifted).is_some() {
                return Some(lifted.scale(&c));
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Reads the integer coefficients of `g` as numbers in base `xi` with
/// symmetric digits; digit `i` becomes the coefficient of `v^i`.
fn lift(g: &MultiPoly, v: usize, xi: &BigInt) -> MultiPoly {
    let half = xi / 2;
    let mut rest = g.clone();
    let mut out = MultiPoly::zero(g.nvars());
    let mut k = 0;
    while !rest.is_zero() {
        let mut digit = MultiPoly::zero(g.nvars());
        for (m, c) in &rest.terms {
            let mut d = c.numer().mod_floor(xi);
            if d > half {
                d -= xi;
            }
            digit.add_term(m.clone(), Rational::from_integer(d));
        }
        rest = rest.sub(&digit).scale(&Rational::new(BigInt::one(), xi.clone()));
        out = out.add(&digit.mul_monomial(&Monomial::var(g.nvars(), v, k), &Rational::one()));
        k += 1;
    }
    out
}

/// gcd of `other` with every coefficient of `p` viewed as a polynomial in `v`.
fn gcd_with_content(p: &MultiPoly, v: usize, other: &MultiPoly) -> MultiPoly {
    let mut g = other.clone();
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            return MultiPoly::one(p.nvars());
        }
    }
    g.normalized()
}

fn fold_gcd(cs: &[MultiPoly]) -> MultiPoly {
    let mut g = MultiPoly::zero(cs[0].nvars());
    for c in cs {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_constant() {
            break;
        }
    }
    g
}

fn trim(p: &mut Vec<MultiPoly>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn uni_is_zero(p: &[MultiPoly]) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Pseudo-remainder of `a` by `b` (both univariate over a polynomial ring).
fn prem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut r: Vec<MultiPoly> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while !uni_is_zero(&r) && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<MultiPoly> = r.iter().map(|c| c.mul(lb)).collect();
        for (i, bc) in b.iter().enumerate() {
            let t = bc.mul(&lr);
            next[i + shift] = next[i + shift].sub(&t);
        }
        trim(&mut next);
        debug_assert!(next.len() - 1 < dr || next[dr].is_zero());
        if next.len() - 1 == dr && next[dr].is_zero() {
            next.pop();
        }
        if next.is_empty() {
            next.push(MultiPoly::zero(lb.nvars()));
        }
        r = next;
    }
    r
}

fn primitive_part(p: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let c = fold_gcd(&p);
    if c.is_zero() || c.is_one() {
        return p;
    }
    p.iter().map(|x| x.div_exact(&c).unwrap()).collect()
}

fn primitive_prs(a: Vec<MultiPoly>, b: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let (mut r0, mut r1) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    trim(&mut r0);
    trim(&mut r1);
    loop {
        if uni_is_zero(&r1) {
            return primitive_part(r0);
        }
        if r1.len() == 1 {
            // nonzero constant in the main variable: primitive parts are coprime
            let n = r1[0].nvars();
            return vec![MultiPoly::one(n)];
        }
        let r = prem(&r0, &r1);
        if uni_is_zero(&r) {
            return primitive_part(r1);
        }
        let r = primitive_part(r);
        r0 = r1;
        r1 = r;
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiPoly {
    /// Compares term lists from the leading term down; only used to give
    /// collections of polynomials a deterministic order.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    let o = ma.cmp(mb).then_with(|| ca.cmp(cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn x(n: usize, v: usize) -> MultiPoly {
        MultiPoly::var(n, v)
    }

    fn c(n: usize, k: i64) -> MultiPoly {
        MultiPoly::constant(n, r(k))
    }

    #[test]
    fn grlex_leading_term() {
        // x0 + x1^2: degree 2 term leads
        let p = x(2, 0).add(&x(2, 1).pow(2));
        assert_eq!(p.leading().unwrap().0.exponents(), &[0, 2]);
        // x0*x1 vs x1^2: same degree, x0 exponent decides
        let p = x(2, 0).mul(&x(2, 1)).add(&x(2, 1).pow(2));
        assert_eq!(p.leading().unwrap().0.exponents(), &[1, 1]);
    }

    #[test]
    fn exact_division_and_failure() {
        let n = 2;
        let a = x(n, 0).add(&x(n, 1)); // x+y
        let b = x(n, 0).sub(&x(n, 1)); // x-y
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(p.div_exact(&x(n, 0).add(&c(n, 1))).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let n = 3;
        let f = x(n, 0).mul(&x(n, 1)).add(&c(n, 1)); // xy+1
        let g = x(n, 2).pow(2).sub(&x(n, 0)); // z^2-x
        let h = x(n, 1).add(&x(n, 2)).add(&c(n, 3)); // y+z+3
        let a = f.mul(&g).scale(&r(6));
        let b = f.mul(&h).scale(&r(-4));
        assert_eq!(gcd(&a, &b), f.normalized());
        assert!(gcd(&g, &h).is_one());
    }

    #[test]
    fn gcd_with_monomial_factors() {
        let n = 2;
        let a = x(n, 0).pow(3).mul(&x(n, 1)).mul(&x(n, 0).add(&c(n, 1)));
        let b = x(n, 0).pow(2).mul(&x(n, 1).pow(4));
        assert_eq!(gcd(&a, &b), x(n, 0).pow(2).mul(&x(n, 1)));
    }

    #[test]
    fn gcd_univariate_cyclotomic() {
        let n = 1;
        // (q^6 - 1) and (q^4 - 1) share q^2 - 1
        let a = x(n, 0).pow(6).sub(&c(n, 1));
        let b = x(n, 0).pow(4).sub(&c(n, 1));
        assert_eq!(gcd(&a, &b), x(n, 0).pow(2).sub(&c(n, 1)));
    }

    #[test]
    fn gcd_of_dense_three_variable_products() {
        let p = crate::coeff::ParamSet::standard();
        let f = |s: &str| crate::lang::parse_ratfunc(s, &p).unwrap().numer().clone();
        let shared = f("a*b - g^2 + 3");
        let a = f("-5*a^3*b^2*g^2 + 20*a^3*b^3 + 4*a^2*b*g^3 - 16*a^2*b^2*g + 15*a*b^2 - 12*b*g")
            .mul(&f("5*g^2 - 2*a"))
            .mul(&shared);
        let b = f("a*b^4*g - 3*a^3*b^2 + 5*a^2*b^3 - 3*a*b^2*g + 9*a^3 - 15*a^2*b")
            .mul(&f("g^2 - a - 5*b"))
            .mul(&shared);
        assert_eq!(gcd(&a, &b), shared.normalized());
    }

    #[test]
    fn substitute_and_eval() {
        let n = 2;
        let p = x(n, 0).pow(2).mul(&x(n, 1)).add(&c(n, 5));
        let s = p.substitute(0, &r(3));
        assert_eq!(s, x(n, 1).scale(&r(9)).add(&c(n, 5)));
        assert_eq!(p.eval(&[r(2), r(-1)]), r(1));
    }
}
