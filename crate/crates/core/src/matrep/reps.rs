//! The explicit matrices: a three-cycle representation in `t`, the
//! `sl2` and `sl3` triples, the `sl3` loop triple, and the `sl3` identities
//! that express the matrix units through brackets of the triple.

use crate::coeff::{ParamSet, RatFunc};
use crate::lang::parse_ratfunc;
use crate::report::{CheckReport, Outcome};

use super::{MatElt, MatError};

fn mat3(texts: [&str; 9]) -> Result<MatElt, MatError> {
    MatElt::from_texts(3, &ParamSet::standard(), &texts)
}

fn coeff(text: &str) -> Result<RatFunc, MatError> {
    parse_ratfunc(text, &ParamSet::standard()).map_err(|source| MatError::Entry {
        text: text.to_string(),
        source,
    })
}

/// `sum c_i * m_i` with the coefficients given as expressions.
fn combo(terms: &[(&str, &MatElt)]) -> Result<MatElt, MatError> {
    let mut acc = MatElt::zero(terms[0].1.size(), terms[0].1.params());
    for (c, m) in terms {
        acc = acc.add(&m.scale(&coeff(c)?)?)?;
    }
    Ok(acc)
}

/// Matrices for `A, B, C` with entries in `t` and `-g/(a t)`. They satisfy
/// the cyclic down-up relations with parameters `(a, b, g)` for every `b`,
/// because each has square zero.
pub fn three_cycle_rep() -> Result<[MatElt; 3], MatError> {
    let s = "-g*a^-1*t^-1";
    Ok([
        mat3(["0", "t", "0", "0", "0", "0", "0", s, "0"])?,
        mat3(["0", "0", s, "0", "0", "t", "0", "0", "0"])?,
        mat3(["0", "0", "0", s, "0", "0", "t", "0", "0"])?,
    ])
}

/// The trace-zero `2 x 2` triple `A, B, C` with `[A,B] = C - A - B` and its
/// cyclic shifts.
pub fn sl2_triple() -> Result<[MatElt; 3], MatError> {
    let p = ParamSet::standard();
    Ok([
        MatElt::from_texts(2, &p, &["1", "-1", "1", "-1"])?,
        MatElt::from_texts(2, &p, &["0", "0", "1", "0"])?,
        MatElt::from_texts(2, &p, &["0", "-1", "0", "0"])?,
    ])
}

/// Named basis of `sl2`: the triple itself.
pub fn sl2_basis() -> Result<Vec<(String, MatElt)>, MatError> {
    let [a, b, c] = sl2_triple()?;
    Ok(vec![("A".into(), a), ("B".into(), b), ("C".into(), c)])
}

/// The `sl3` triple in `xi`.
pub fn sl3_triple() -> Result<[MatElt; 3], MatError> {
    Ok([
        mat3(["0", "1", "0", "0", "0", "0", "0", "xi", "0"])?,
        mat3(["0", "0", "xi", "0", "0", "1", "0", "0", "0"])?,
        mat3(["0", "0", "0", "xi", "0", "0", "1", "0", "0"])?,
    ])
}

/// The loop triple: the `sl3` triple with `t` on one entry and `xi/t` on
/// the other.
pub fn loop_sl3() -> Result<[MatElt; 3], MatError> {
    let s = "xi*t^-1";
    Ok([
        mat3(["0", "t", "0", "0", "0", "0", "0", s, "0"])?,
        mat3(["0", "0", s, "0", "0", "t", "0", "0", "0"])?,
        mat3(["0", "0", "0", s, "0", "0", "t", "0", "0"])?,
    ])
}

/// `E12, E23, E31, E21, E32, E13, H1, H2`.
pub fn sl3_units() -> Vec<(String, MatElt)> {
    let p = ParamSet::standard();
    let e = |i: usize, j: usize| MatElt::unit(3, i - 1, j - 1, &p);
    let h1 = e(1, 1).sub(&e(2, 2)).expect("same size");
    let h2 = e(2, 2).sub(&e(3, 3)).expect("same size");
    vec![
        ("E12".into(), e(1, 2)),
        ("E23".into(), e(2, 3)),
        ("E31".into(), e(3, 1)),
        ("E21".into(), e(2, 1)),
        ("E32".into(), e(3, 2)),
        ("E13".into(), e(1, 3)),
        ("H1".into(), h1),
        ("H2".into(), h2),
    ]
}

/// `A, B, C, [A,B], [B,C], [C,A], [A,[B,C]], [B,[C,A]]` for the `sl3` triple.
pub fn sl3_basis() -> Result<Vec<(String, MatElt)>, MatError> {
    let [a, b, c] = sl3_triple()?;
    let ab = a.bracket(&b)?;
    let bc = b.bracket(&c)?;
    let ca = c.bracket(&a)?;
    let a_bc = a.bracket(&bc)?;
    let b_ca = b.bracket(&ca)?;
    Ok(vec![
        ("A".into(), a),
        ("B".into(), b),
        ("C".into(), c),
        ("[A,B]".into(), ab),
        ("[B,C]".into(), bc),
        ("[C,A]".into(), ca),
        ("[A,[B,C]]".into(), a_bc),
        ("[B,[C,A]]".into(), b_ca),
    ])
}

fn compare(report: &mut CheckReport, label: &str, lhs: &MatElt, rhs: &MatElt) -> Result<(), MatError> {
    let diff = lhs.sub(rhs)?;
    let outcome = if diff.is_zero() {
        Outcome::Verified
    } else {
        Outcome::Refuted {
            witness: diff.to_string(),
        }
    };
    report.push(label, outcome);
    Ok(())
}

/// Checks the six brackets of the `sl3` triple against their stated
/// matrices, the Jacobi sum, and the eight formulas for the matrix units,
/// identically in `xi`.
pub fn verify_sl3_formulas() -> Result<CheckReport, MatError> {
    let [a, b, c] = sl3_triple()?;
    let ab = a.bracket(&b)?;
    let bc = b.bracket(&c)?;
    let ca = c.bracket(&a)?;
    let a_bc = a.bracket(&bc)?;
    let b_ca = b.bracket(&ca)?;
    let c_ab = c.bracket(&ab)?;
    let mut report = CheckReport::new("sl3 bracket identities");

    let stated = [
        ("[A,B]", &ab, ["0", "-xi^2", "1", "0", "-xi", "0", "0", "0", "xi"]),
        ("[B,C]", &bc, ["xi", "0", "0", "1", "0", "-xi^2", "0", "0", "-xi"]),
        ("[C,A]", &ca, ["-xi", "0", "0", "0", "xi", "0", "-xi^2", "1", "0"]),
        (
            "[A,[B,C]]",
            &a_bc,
            ["1", "-xi", "-xi^2", "0", "xi^3 - 1", "0", "xi", "xi^2", "-xi^3"],
        ),
        (
            "[B,[C,A]]",
            &b_ca,
            ["-xi^3", "xi", "xi^2", "-xi^2", "1", "-xi", "0", "0", "xi^3 - 1"],
        ),
        (
            "[C,[A,B]]",
            &c_ab,
            ["xi^3 - 1", "0", "0", "xi^2", "-xi^3", "xi", "-xi", "-xi^2", "1"],
        ),
    ];
    for (label, m, texts) in stated {
        compare(&mut report, label, m, &mat3(texts)?)?;
    }

    let jacobi = a_bc.add(&b_ca)?.add(&c_ab)?;
    compare(&mut report, "Jacobi sum", &jacobi, &MatElt::zero(3, a.params()))?;

    let d1 = "(1 + xi^3)^-1";
    let d2 = "(1 + xi^3)^-2";
    let units = sl3_units();
    let unit = |name: &str| units.iter().find(|u| u.0 == name).map(|u| u.1.clone()).expect("unit");
    let xi4 = format!("-xi^4*{d2}");
    let xi1 = format!("-xi*{d2}");
    let xi2 = format!("-xi^2*{d2}");
    let formulas: Vec<(&str, MatElt)> = vec![
        ("E12", combo(&[(d1, &a), (&xi4, &ab), (&xi1, &ca), (&xi2, &a_bc)])?),
        ("E23", combo(&[(d1, &b), (&xi4, &bc), (&xi1, &ab), (&xi2, &b_ca)])?),
        ("E31", combo(&[(d1, &c), (&xi4, &ca), (&xi1, &bc), (&xi2, &c_ab)])?),
        (
            "E21",
            combo(&[
                (&format!("xi^2*{d1}"), &c),
                (d2, &bc),
                (&format!("xi^3*{d2}"), &ca),
                (&format!("xi*{d2}"), &c_ab),
            ])?,
        ),
        (
            "E32",
            combo(&[
                (&format!("xi^2*{d1}"), &a),
                (d2, &ca),
                (&format!("xi^3*{d2}"), &ab),
                (&format!("xi*{d2}"), &a_bc),
            ])?,
        ),
        (
            "E13",
            combo(&[
                (&format!("xi^2*{d1}"), &b),
                (d2, &ab),
                (&format!("xi^3*{d2}"), &bc),
                (&format!("xi*{d2}"), &b_ca),
            ])?,
        ),
        (
            "H1",
            combo(&[
                (&format!("xi*{d1}"), &a),
                (&format!("-xi*{d1}"), &c),
                (&format!("xi^2*{d2}"), &ab),
                (&format!("xi^2*{d2}"), &bc),
                (&format!("-2*xi^2*{d2}"), &ca),
                (&format!("-{d2}"), &b_ca),
                (&format!("(xi^3 - 1)*{d2}"), &c_ab),
            ])?,
        ),
        (
            "H2",
            combo(&[
                (&format!("xi*{d1}"), &b),
                (&format!("-xi*{d1}"), &a),
                (&format!("xi^2*{d2}"), &bc),
                (&format!("xi^2*{d2}"), &ca),
                (&format!("-2*xi^2*{d2}"), &ab),
                (&format!("-{d2}"), &c_ab),
                (&format!("(xi^3 - 1)*{d2}"), &a_bc),
            ])?,
        ),
    ];
    for (name, rhs) in formulas {
        compare(&mut report, &format!("{name} from brackets"), &unit(name), &rhs)?;
    }
    Ok(report)
}
