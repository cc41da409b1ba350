//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' '-'? int)?
//! atom   := rational | ident | '[' expr ',' expr ']' | '(' expr ')'
//! ```
//!
//! Identifiers resolve against generators first, then parameters. Negative
//! powers are accepted only when the base lowers to a nonzero scalar.

use num_bigint::BigInt;

use super::LangError;
use crate::coeff::{ParamSet, RatFunc, Rational};
use crate::freealg::{GenAlphabet, NcPoly, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, LangError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, pos));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|p| p.1).collect();
            out.push((Tok::Int(s.parse().expect("digits")), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_' || chars[i].1 == '\'') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|p| p.1).collect();
            out.push((Tok::Ident(s), pos));
        } else {
            return Err(LangError::Lex { pos, ch: c });
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    Param(String),
    Gen(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Bracket(Box<Expr>, Box<Expr>),
    Paren(Box<Expr>),
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    alphabet: &'a GenAlphabet,
    params: &'a ParamSet,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), LangError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.syntax(&t.describe()))
        }
    }

    fn syntax(&self, expected: &str) -> LangError {
        LangError::Syntax {
            pos: self.pos(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Expr, LangError> {
        let mut lhs = match self.peek() {
            Tok::Minus => {
                self.bump();
                Expr::Neg(Box::new(self.term()?))
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, LangError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, LangError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let e: i64 = n.try_into().map_err(|_| LangError::ExponentTooLarge { pos })?;
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
            }
            _ => {
                self.at -= 1;
                Err(self.syntax("integer exponent"))
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, LangError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Tok::Int(d) if d != BigInt::from(0) => Ok(Expr::Rational(Rational::new(n, d))),
                        Tok::Int(_) => Err(LangError::ZeroDenominator { pos: dpos }),
                        _ => {
                            self.at -= 1;
                            Err(self.syntax("integer denominator"))
                        }
                    }
                } else {
                    Ok(Expr::Rational(Rational::from_integer(n)))
                }
            }
            Tok::Ident(name) => {
                self.bump();
                if self.alphabet.index_of(&name).is_some() {
                    Ok(Expr::Gen(name))
                } else if self.params.index_of(&name).is_some() {
                    Ok(Expr::Param(name))
                } else {
                    Err(LangError::UnknownIdent { pos, name })
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Paren(Box::new(e)))
            }
            Tok::LBrack => {
                self.bump();
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RBrack)?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            _ => Err(self.syntax("number, identifier, `(` or `[`")),
        }
    }
}

/// Parses `text` against the given generators and parameters.
pub fn parse_expr(text: &str, alphabet: &GenAlphabet, params: &ParamSet) -> Result<Expr, LangError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        alphabet,
        params,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.syntax("operator or end of input"));
    }
    Ok(e)
}

/// Expands brackets and powers into a noncommutative polynomial.
pub fn lower(e: &Expr, alphabet: &GenAlphabet, params: &ParamSet) -> Result<NcPoly, LangError> {
    Ok(match e {
        Expr::Rational(r) => NcPoly::scalar(alphabet, params, RatFunc::from_rational(params, r.clone())),
        Expr::Param(p) => NcPoly::scalar(alphabet, params, RatFunc::param(params, p)?),
        Expr::Gen(g) => NcPoly::word(
            alphabet,
            params,
            Word::letter(alphabet.index_of(g).expect("resolved while parsing")),
        ),
        Expr::Neg(a) => lower(a, alphabet, params)?.neg(),
        Expr::Add(a, b) => lower(a, alphabet, params)?.try_add(&lower(b, alphabet, params)?)?,
        Expr::Sub(a, b) => lower(a, alphabet, params)?.try_sub(&lower(b, alphabet, params)?)?,
        Expr::Mul(a, b) => lower(a, alphabet, params)?.try_mul(&lower(b, alphabet, params)?)?,
        Expr::Bracket(a, b) => lower(a, alphabet, params)?.bracket(&lower(b, alphabet, params)?)?,
        Expr::Paren(a) => lower(a, alphabet, params)?,
        Expr::Pow(a, k) => {
            let base = lower(a, alphabet, params)?;
            if *k >= 0 {
                let k = u32::try_from(*k).map_err(|_| LangError::ExponentTooLarge { pos: 0 })?;
                base.pow(k)
            } else {
                match base.as_scalar() {
                    Some(c) if !c.is_zero() => NcPoly::scalar(alphabet, params, c.pow(*k)?),
                    Some(_) => return Err(LangError::Coeff(crate::coeff::CoeffError::DivisionByZero)),
                    None => return Err(LangError::NegativeGeneratorPower),
                }
            }
        }
    })
}

/// Parses and lowers in one step.
pub fn parse_poly(text: &str, alphabet: &GenAlphabet, params: &ParamSet) -> Result<NcPoly, LangError> {
    lower(&parse_expr(text, alphabet, params)?, alphabet, params)
}

/// Parses a scalar expression in the parameters.
pub fn parse_ratfunc(text: &str, params: &ParamSet) -> Result<RatFunc, LangError> {
    let empty = GenAlphabet::new::<&str>(&[]).expect("empty alphabet");
    parse_poly(text, &empty, params)?
        .as_scalar()
        .ok_or(LangError::NotScalar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al() -> GenAlphabet {
        GenAlphabet::with_inverses(&["A", "B", "C", "x", "y", "yinv", "z"], &[("y", "yinv")]).unwrap()
    }

    #[test]
    fn bracket_expansion() {
        let (a, p) = (al(), ParamSet::standard());
        let e = parse_poly("[A,[A,B]] - g*A", &a, &p).unwrap();
        let f = parse_poly("A^2*B - 2*A*B*A + B*A^2 - g*A", &a, &p).unwrap();
        assert_eq!(e, f);
    }

    #[test]
    fn cleared_fraction_relation() {
        let (a, p) = (al(), ParamSet::standard());
        let e = parse_poly("q*x*y - q^-1*y*x - (q - q^-1)", &a, &p).unwrap();
        assert_eq!(e.len(), 3);
        let q = RatFunc::param(&p, "q").unwrap();
        assert_eq!(e.coeff(&a.word("x*y").unwrap()), Some(&q));
        assert_eq!(e.coeff(&a.word("y*x").unwrap()), Some(&-&q.inv().unwrap()));
    }

    #[test]
    fn zeroth_power_is_one() {
        let (a, p) = (al(), ParamSet::standard());
        assert_eq!(parse_poly("A^0", &a, &p).unwrap(), NcPoly::one(&a, &p));
    }

    #[test]
    fn errors_carry_positions() {
        let (a, p) = (al(), ParamSet::standard());
        assert!(matches!(
            parse_expr("A + ", &a, &p),
            Err(LangError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_expr("A * W", &a, &p),
            Err(LangError::UnknownIdent { pos: 4, .. })
        ));
        assert!(matches!(
            parse_expr("A $ B", &a, &p),
            Err(LangError::Lex { pos: 2, ch: '$' })
        ));
        assert!(matches!(
            parse_poly("A^-1", &a, &p),
            Err(LangError::NegativeGeneratorPower)
        ));
        assert!(matches!(parse_expr("[A B]", &a, &p), Err(LangError::Syntax { .. })));
    }

    #[test]
    fn rational_literals_and_scalars() {
        let p = ParamSet::standard();
        let r = parse_ratfunc("2/3*q^-2 + (1 + xi^3)^-1", &p).unwrap();
        let q = RatFunc::param(&p, "q").unwrap();
        let xi = RatFunc::param(&p, "xi").unwrap();
        let expect = &q.pow(-2).unwrap().scale(&Rational::new(2.into(), 3.into()))
            + &(&RatFunc::one(&p) + &xi.pow(3).unwrap()).inv().unwrap();
        assert_eq!(r, expect);
        assert!(matches!(
            parse_ratfunc("1/0", &p),
            Err(LangError::ZeroDenominator { .. })
        ));
    }

    #[test]
    fn rendering_reparses() {
        let (a, p) = (al(), ParamSet::standard());
        for text in [
            "q*x*y - q^-1*y*x - (q - q^-1)",
            "B*A^2 - a*A*B*A - b*A^2*B - g*A",
            "(1 + xi^3)^-2*A - xi^4*[A,B]",
            "-A + 2/3*B - theta",
            "y*yinv - 1",
        ] {
            let e = parse_poly(text, &a, &p).unwrap();
            let back = parse_poly(&e.render(), &a, &p).unwrap();
            assert_eq!(e, back, "{text} -> {}", e.render());
        }
    }
}
