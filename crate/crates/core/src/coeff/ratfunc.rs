use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::{gcd, Monomial, MultiPoly};
use super::{CoeffError, ParamSet, Rational};

/// Normalized quotient of two polynomials in the parameters of a [`ParamSet`].
///
/// Invariants: `den != 0`; `gcd(num, den) = 1`; `den` has coprime integer
/// coefficients and a positive leading coefficient (graded lex order). Two
/// equal rational functions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    params: ParamSet,
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn zero(params: &ParamSet) -> Self {
        let n = params.len();
        RatFunc {
            params: params.clone(),
            num: MultiPoly::zero(n),
            den: MultiPoly::one(n),
        }
    }

    pub fn one(params: &ParamSet) -> Self {
        Self::from_rational(params, Rational::one())
    }

    pub fn from_int(params: &ParamSet, k: i64) -> Self {
        Self::from_rational(params, Rational::from_integer(k.into()))
    }

    pub fn from_rational(params: &ParamSet, c: Rational) -> Self {
        let n = params.len();
        RatFunc {
            params: params.clone(),
            num: MultiPoly::constant(n, c),
            den: MultiPoly::one(n),
        }
    }

    /// The parameter `name` as a rational function.
    pub fn param(params: &ParamSet, name: &str) -> Result<Self, CoeffError> {
        let v = params
            .index_of(name)
            .ok_or_else(|| CoeffError::UnknownParam(name.to_string()))?;
        Ok(Self::param_index(params, v))
    }

    pub fn param_index(params: &ParamSet, v: usize) -> Self {
        let n = params.len();
        RatFunc {
            params: params.clone(),
            num: MultiPoly::var(n, v),
            den: MultiPoly::one(n),
        }
    }

    pub fn from_poly(params: &ParamSet, num: MultiPoly) -> Self {
        assert_eq!(num.nvars(), params.len());
        RatFunc {
            params: params.clone(),
            num,
            den: MultiPoly::one(params.len()),
        }
    }

    /// Builds `num / den` in lowest terms.
    pub fn from_parts(params: &ParamSet, num: MultiPoly, den: MultiPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(params.clone(), num, den))
    }

    fn normalize(params: ParamSet, num: MultiPoly, den: MultiPoly) -> Self {
        let n = params.len();
        if num.is_zero() {
            return RatFunc {
                params,
                num: MultiPoly::zero(n),
                den: MultiPoly::one(n),
            };
        }
        if let Some(c) = den.as_constant() {
            return RatFunc {
                params,
                num: num.scale(&c.recip()),
                den: MultiPoly::one(n),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::fix_den(params, num, den)
    }

    /// Scales so that `den` is integer-primitive with positive leading coefficient.
    fn fix_den(params: ParamSet, num: MultiPoly, den: MultiPoly) -> Self {
        let n = params.len();
        if let Some(c) = den.as_constant() {
            return RatFunc {
                params,
                num: num.scale(&c.recip()),
                den: MultiPoly::one(n),
            };
        }
        let mut k = den.content();
        if den.leading().unwrap().1.is_negative() {
            k = -k;
        }
        if k.is_one() {
            return RatFunc { params, num, den };
        }
        let inv = k.recip();
        RatFunc {
            params,
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Number of stored terms; a rough size measure used for pivot choice.
    pub fn size(&self) -> usize {
        self.num.len() + self.den.len()
    }

    /// Names of the parameters that actually occur.
    pub fn used_params(&self) -> Vec<String> {
        (0..self.params.len())
            .filter(|&v| self.num.uses_var(v) || self.den.uses_var(v))
            .map(|v| self.params.name(v).to_string())
            .collect()
    }

    /// Re-expresses `self` over `target`, which must extend the current set.
    pub fn lift_to(&self, target: &ParamSet) -> Result<Self, CoeffError> {
        if self.params == *target {
            return Ok(self.clone());
        }
        if self.is_constant() {
            return Ok(RatFunc::from_rational(target, self.num.as_constant().unwrap()));
        }
        if self.params.is_prefix_of(target) {
            let n = target.len();
            return Ok(RatFunc {
                params: target.clone(),
                num: self.num.padded(n),
                den: self.den.padded(n),
            });
        }
        Err(CoeffError::ParamMismatch)
    }

    /// Brings two operands onto a shared parameter set.
    fn align(a: &RatFunc, b: &RatFunc) -> Result<(RatFunc, RatFunc), CoeffError> {
        if a.params.ptr_eq(&b.params) || a.params == b.params {
            return Ok((a.clone(), b.clone()));
        }
        if b.is_constant() || b.params.is_prefix_of(&a.params) {
            return Ok((a.clone(), b.lift_to(&a.params)?));
        }
        if a.is_constant() || a.params.is_prefix_of(&b.params) {
            return Ok((a.lift_to(&b.params)?, b.clone()));
        }
        Err(CoeffError::ParamMismatch)
    }

    fn same_params(&self, other: &RatFunc) -> bool {
        self.params.ptr_eq(&other.params) || self.params == other.params
    }

    pub fn checked_add(&self, other: &RatFunc) -> Result<RatFunc, CoeffError> {
        if !self.same_params(other) {
            let (a, b) = Self::align(self, other)?;
            return a.checked_add(&b);
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return Ok(RatFunc {
                    params: self.params.clone(),
                    num,
                    den: self.den.clone(),
                });
            }
            return Ok(Self::normalize(self.params.clone(), num, self.den.clone()));
        }
        if other.den.is_one() {
            let num = self.num.add(&other.num.mul(&self.den));
            return Ok(RatFunc {
                params: self.params.clone(),
                num,
                den: self.den.clone(),
            });
        }
        if self.den.is_one() {
            return other.checked_add(self);
        }
        // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*d/g)
        let g = gcd(&self.den, &other.den);
        let (bg, dg) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (self.den.div_exact(&g).unwrap(), other.den.div_exact(&g).unwrap())
        };
        let num = self.num.mul(&dg).add(&other.num.mul(&bg));
        let den = self.den.mul(&dg);
        Ok(Self::normalize(self.params.clone(), num, den))
    }

    pub fn checked_sub(&self, other: &RatFunc) -> Result<RatFunc, CoeffError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &RatFunc) -> Result<RatFunc, CoeffError> {
        if !self.same_params(other) {
            let (a, b) = Self::align(self, other)?;
            return a.checked_mul(&b);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(RatFunc::zero(&self.params));
        }
        if let Some(c) = other.as_rational() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.as_rational() {
            return Ok(other.scale(&c));
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(RatFunc {
                params: self.params.clone(),
                num: self.num.mul(&other.num),
                den: self.den.clone(),
            });
        }
        // cross-cancel: (a/b)(c/d) with g1 = gcd(a,d), g2 = gcd(c,b)
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let a = if g1.is_one() {
            self.num.clone()
        } else {
            self.num.div_exact(&g1).unwrap()
        };
        let d = if g1.is_one() {
            other.den.clone()
        } else {
            other.den.div_exact(&g1).unwrap()
        };
        let c = if g2.is_one() {
            other.num.clone()
        } else {
            other.num.div_exact(&g2).unwrap()
        };
        let b = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.div_exact(&g2).unwrap()
        };
        Ok(Self::fix_den(self.params.clone(), a.mul(&c), b.mul(&d)))
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(&self.params);
        }
        RatFunc {
            params: self.params.clone(),
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RatFunc, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::fix_den(self.params.clone(), self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc, CoeffError> {
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<RatFunc, CoeffError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = u32::try_from(e).map_err(|_| CoeffError::ExponentTooLarge)?;
        // num and den stay coprime under powers
        Ok(RatFunc {
            params: self.params.clone(),
            num: self.num.pow(e),
            den: self.den.pow(e),
        })
    }

    /// Partial evaluation at the given parameter values.
    pub fn substitute(&self, bindings: &BTreeMap<String, Rational>) -> Result<RatFunc, CoeffError> {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (name, value) in bindings {
            let v = self
                .params
                .index_of(name)
                .ok_or_else(|| CoeffError::UnknownParam(name.clone()))?;
            num = num.substitute(v, value);
            den = den.substitute(v, value);
        }
        if den.is_zero() {
            let assignment = bindings
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(CoeffError::Pole { assignment });
        }
        Ok(Self::normalize(self.params.clone(), num, den))
    }

    /// Replaces parameters by rational functions; parameters without an
    /// image stay as they are. Images must share one parameter set.
    pub fn compose(&self, images: &BTreeMap<String, RatFunc>) -> Result<RatFunc, CoeffError> {
        let target = match images.values().find(|r| !r.is_constant()) {
            Some(r) => r.params.clone(),
            None => self.params.clone(),
        };
        let mut values = Vec::with_capacity(self.params.len());
        for v in 0..self.params.len() {
            let name = self.params.name(v);
            let value = match images.get(name) {
                Some(r) => r.lift_to(&target)?,
                None => RatFunc::param(&target, name)?,
            };
            values.push(value);
        }
        for name in images.keys() {
            if self.params.index_of(name).is_none() {
                return Err(CoeffError::UnknownParam(name.clone()));
            }
        }
        let num = eval_at(&self.num, &values, &target)?;
        let den = eval_at(&self.den, &values, &target)?;
        if den.is_zero() {
            let assignment = images
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(CoeffError::Pole { assignment });
        }
        num.checked_div(&den)
    }

    /// Full evaluation; `point[i]` is the value of parameter `i`.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, CoeffError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(CoeffError::Pole {
                assignment: format!("{point:?}"),
            });
        }
        Ok(self.num.eval(point) / d)
    }

    /// Cross-multiplication equality test, independent of normalization.
    pub fn cross_eq(&self, other: &RatFunc) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

fn eval_at(p: &MultiPoly, values: &[RatFunc], target: &ParamSet) -> Result<RatFunc, CoeffError> {
    let mut acc = RatFunc::zero(target);
    let mut cache: BTreeMap<(usize, u32), RatFunc> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut t = RatFunc::from_rational(target, c.clone());
        for (v, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let f = match cache.get(&(v, e)) {
                Some(f) => f.clone(),
                None => {
                    let f = values[v].pow(e as i64)?;
                    cache.insert((v, e), f.clone());
                    f
                }
            };
            t = t.checked_mul(&f)?;
        }
        acc = acc.checked_add(&t)?;
    }
    Ok(acc)
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

/// True when the rendering needs parentheses to be used as a factor.
pub fn needs_parens(r: &RatFunc) -> bool {
    let s = render(r);
    let body = s.strip_prefix('-').unwrap_or(&s);
    body.contains(" + ") || body.contains(" - ") || (r.num.len() > 1)
}

fn render(r: &RatFunc) -> String {
    if r.den.is_one() {
        return render_laurent(&r.params, &r.num, None);
    }
    if r.den.is_monomial() {
        let (m, c) = r.den.leading().unwrap();
        debug_assert!(c.is_one());
        return render_laurent(&r.params, &r.num, Some(m));
    }
    let num = render_laurent(&r.params, &r.num, None);
    let den = render_laurent(&r.params, &r.den, None);
    let num = if r.num.len() > 1 { format!("({num})") } else { num };
    format!("{num}*({den})^-1")
}

fn render_laurent(params: &ParamSet, p: &MultiPoly, den: Option<&Monomial>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        for (v, &e) in m.exponents().iter().enumerate() {
            let d = den.map(|d| d.exponents()[v]).unwrap_or(0);
            let exp = e as i64 - d as i64;
            match exp {
                0 => {}
                1 => factors.push(params.name(v).to_string()),
                k => factors.push(format!("{}^{}", params.name(v), k)),
            }
        }
        if let Some(d) = den {
            for (v, &dexp) in d.exponents().iter().enumerate() {
                if dexp > 0 && m.exponents()[v] == 0 {
                    // already emitted above through exp < 0
                    let _ = v;
                }
            }
        }
        if factors.is_empty() || !abs.is_one() {
            factors.insert(0, abs.to_string());
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.checked_add(rhs).expect("parameter sets must agree")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.checked_sub(rhs).expect("parameter sets must agree")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.checked_mul(rhs).expect("parameter sets must agree")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            params: self.params.clone(),
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps() -> ParamSet {
        ParamSet::standard()
    }

    fn p(name: &str) -> RatFunc {
        RatFunc::param(&ps(), name).unwrap()
    }

    fn k(n: i64) -> RatFunc {
        RatFunc::from_int(&ps(), n)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn common_denominator_cancels() {
        let xi = p("xi");
        let d = (&k(1) + &xi).inv().unwrap();
        let s = &d + &(&xi * &d);
        assert!(s.is_one());
    }

    #[test]
    fn additive_identity() {
        let x = &p("q") * &(&p("xi") - &k(3)).inv().unwrap();
        assert_eq!(&RatFunc::zero(&ps()) + &x, x);
    }

    #[test]
    fn opposite_denominators() {
        // q/(q-1) + 1/(1-q) = 1
        let q = p("q");
        let a = &q * &(&q - &k(1)).inv().unwrap();
        let b = (&k(1) - &q).inv().unwrap();
        assert!((&a + &b).is_one());
    }

    #[test]
    fn difference_of_squares_with_inverse() {
        let q = p("q");
        let qi = q.inv().unwrap();
        let lhs = &(&q - &qi) * &(&q + &qi);
        let rhs = &q.pow(2).unwrap() - &q.pow(-2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_inverse() {
        let b = p("b");
        let bi = b.inv().unwrap();
        assert!(bi.numer().is_one());
        assert_eq!(bi.denom(), b.numer());
    }

    #[test]
    fn vartheta_zero_simplifies() {
        // q^-1 (1+q)^2 / (q - q^-1) = (1+q)/(q-1)
        let q = p("q");
        let one = k(1);
        let v = &(&q.pow(-1).unwrap() * &(&one + &q).pow(2).unwrap()) * &(&q - &q.inv().unwrap()).inv().unwrap();
        let expect = &(&one + &q) * &(&q - &one).inv().unwrap();
        assert_eq!(v, expect);
        assert_eq!(v.denom().len(), 2);
    }

    #[test]
    fn substitution_examples() {
        let xi = p("xi");
        let f = (&k(1) + &xi.pow(3).unwrap()).inv().unwrap();
        let mut b = BTreeMap::new();
        b.insert("xi".to_string(), rat(2, 1));
        assert_eq!(f.substitute(&b).unwrap().as_rational(), Some(rat(1, 9)));

        let q = p("q");
        let g = (&q - &q.inv().unwrap()).inv().unwrap();
        let mut b = BTreeMap::new();
        b.insert("q".to_string(), rat(1, 1));
        assert!(matches!(g.substitute(&b), Err(CoeffError::Pole { .. })));

        let h = (&k(1) + &xi.pow(3).unwrap()).pow(2).unwrap();
        let mut b = BTreeMap::new();
        b.insert("xi".to_string(), rat(-1, 1));
        assert!(h.substitute(&b).unwrap().is_zero());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(k(0).inv(), Err(CoeffError::DivisionByZero)));
    }

    #[test]
    fn denominator_is_normalized() {
        // 1/(-2q - 4) stored with den q + 2
        let q = p("q");
        let f = (&(&q * &k(-2)) - &k(4)).inv().unwrap();
        assert_eq!(f.denom(), (&q + &k(2)).numer());
        assert_eq!(f.numer().as_constant(), Some(rat(-1, 2)));
    }

    #[test]
    fn mismatched_param_sets() {
        let other = ParamSet::new(&["u", "v"]).unwrap();
        let u = RatFunc::param(&other, "u").unwrap();
        assert!(matches!(u.checked_add(&p("q")), Err(CoeffError::ParamMismatch)));
        // constants adapt to either side
        assert!(u.checked_add(&k(2)).is_ok());
    }

    #[test]
    fn rendering() {
        let q = p("q");
        assert_eq!((&q - &q.inv().unwrap()).to_string(), "q - q^-1");
        assert_eq!(k(-3).to_string(), "-3");
        let f = (&k(1) + &p("xi").pow(3).unwrap()).inv().unwrap();
        assert_eq!(f.to_string(), "1*(xi^3 + 1)^-1");
        assert_eq!(RatFunc::from_rational(&ps(), rat(-2, 3)).to_string(), "-2/3");
    }
}
