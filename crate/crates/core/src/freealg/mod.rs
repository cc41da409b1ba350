//! Free associative algebras: words, noncommutative polynomials and
//! degree-lexicographic monomial orders.

mod alphabet;
mod ncpoly;
mod order;
mod word;

pub use alphabet::GenAlphabet;
pub use ncpoly::NcPoly;
pub use order::MonomialOrder;
pub use word::Word;

use crate::coeff::CoeffError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeAlgError {
    #[error("operands live over different alphabets")]
    AlphabetMismatch,
    #[error("invalid generator name `{0}`")]
    BadGeneratorName(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid inverse pairing at `{0}`")]
    BadInversePair(String),
    #[error("alphabet exceeds 65535 generators")]
    AlphabetTooLarge,
    #[error("invalid precedence: {0}")]
    BadPrecedence(String),
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("every generator needs an image")]
    MissingImage,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{ParamSet, RatFunc};

    fn setup() -> (GenAlphabet, ParamSet) {
        (GenAlphabet::new(&["A", "B", "C"]).unwrap(), ParamSet::standard())
    }

    fn g(a: &GenAlphabet, p: &ParamSet, n: &str) -> NcPoly {
        NcPoly::generator(a, p, n).unwrap()
    }

    #[test]
    fn products_do_not_commute() {
        let (al, ps) = setup();
        let a = g(&al, &ps, "A");
        let b = g(&al, &ps, "B");
        let lhs = &(&a + &b) * &(&a - &b);
        assert_eq!(lhs.render(), "-B^2 + B*A - A*B + A^2");
        assert_eq!(lhs.len(), 4);
        assert_eq!(&lhs * &NcPoly::one(&al, &ps), lhs);
    }

    #[test]
    fn nested_bracket_expansion() {
        let (al, ps) = setup();
        let a = g(&al, &ps, "A");
        let b = g(&al, &ps, "B");
        let ab = a.bracket(&b).unwrap();
        assert!(a.bracket(&a).unwrap().is_zero());
        let aab = a.bracket(&ab).unwrap();
        let expect = &(&(&a * &(&a * &b)) - &(&a * &(&b * &a)).scale(&RatFunc::from_int(&ps, 2))) + &(&b * &(&a * &a));
        assert_eq!(aab, expect);
    }

    #[test]
    fn leading_terms() {
        let (al, ps) = setup();
        let ord = MonomialOrder::declaration(&al);
        let a = g(&al, &ps, "A");
        let b = g(&al, &ps, "B");
        let par = |n: &str| NcPoly::scalar(&al, &ps, RatFunc::param(&ps, n).unwrap());
        let rel = &(&(&(&b * &(&a * &a)) - &(&par("a") * &(&a * &(&b * &a)))) - &(&par("b") * &(&a * &(&a * &b))))
            - &(&par("g") * &a);
        let (w, c) = rel.leading_term(&ord).unwrap();
        assert_eq!(w.render(&al), "B*A^2");
        assert!(c.is_one());
        assert!(NcPoly::zero(&al, &ps).leading_term(&ord).is_err());

        let rev = MonomialOrder::with_precedence(&al, &["C", "B", "A"]).unwrap();
        let (w, _) = rel.leading_term(&rev).unwrap();
        assert_eq!(w.render(&al), "A^2*B");
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let (al, ps) = setup();
        let other = GenAlphabet::new(&["x"]).unwrap();
        let a = g(&al, &ps, "A");
        let x = g(&other, &ps, "x");
        assert_eq!(a.try_mul(&x), Err(FreeAlgError::AlphabetMismatch));
    }

    #[test]
    fn inverse_pairs_are_symmetric() {
        let al = GenAlphabet::with_inverses(&["x", "y", "yinv", "z"], &[("y", "yinv")]).unwrap();
        assert_eq!(al.inverse_of(1), Some(2));
        assert_eq!(al.inverse_of(2), Some(1));
        assert_eq!(al.inverse_of(0), None);
        assert_eq!(al.inverse_pairs(), vec![(1, 2)]);
    }
}
