use super::*;
use crate::catalog::{self, bindings};
use crate::coeff::Rational;

fn std() -> ParamSet {
    ParamSet::standard()
}

fn rf(text: &str) -> RatFunc {
    parse_ratfunc(text, &std()).unwrap()
}

#[test]
fn sl2_brackets_match_the_stated_relations() {
    let [a, b, c] = sl2_triple().unwrap();
    let expected = c.sub(&a).unwrap().sub(&b).unwrap();
    assert_eq!(a.bracket(&b).unwrap(), expected);
    let expected = a.sub(&b).unwrap().sub(&c).unwrap();
    assert_eq!(b.bracket(&c).unwrap(), expected);
    assert!(a.bracket(&a).unwrap().is_zero());
    assert_eq!(rank_span(&[a.clone(), b, c]).unwrap(), 3);
    assert_eq!(rank_span(&[a.clone(), a.neg()]).unwrap(), 1);
}

#[test]
fn traces_vanish() {
    for m in sl2_triple()
        .unwrap()
        .iter()
        .chain(sl3_triple().unwrap().iter())
        .chain(loop_sl3().unwrap().iter())
    {
        assert!(m.trace().unwrap().is_zero());
    }
}

#[test]
fn three_cycle_rep_satisfies_downup_relations() {
    let pres = catalog::make_symbolic("z3downup").unwrap();
    let rep = three_cycle_rep().unwrap();
    for r in &pres.relations {
        assert!(eval_ncpoly_indexed(r, &rep).unwrap().is_zero(), "{r}");
    }
}

#[test]
fn abca_is_a_scalar_multiple_of_a() {
    let pres = catalog::make_symbolic("z3downup").unwrap();
    let rep = three_cycle_rep().unwrap();
    let abca = eval_ncpoly_indexed(&pres.parse("A*B*C*A").unwrap(), &rep).unwrap();
    let expected = rep[0].scale(&rf("t^3")).unwrap();
    assert_eq!(abca, expected);
}

#[test]
fn powers_of_abc_are_independent_with_t_formal() {
    let pres = catalog::make_symbolic("z3downup").unwrap();
    let rep = three_cycle_rep().unwrap();
    let mut images = Vec::new();
    let mut text = "A".to_string();
    for _ in 0..6 {
        images.push(eval_ncpoly_indexed(&pres.parse(&text).unwrap(), &rep).unwrap());
        text = format!("A*B*C*{text}");
    }
    assert_eq!(rank_span(&images).unwrap(), 1);
    assert_eq!(rank_span_laurent(&images, "t").unwrap(), 6);
}

#[test]
fn laurent_split_of_a_mixed_entry() {
    let c = laurent_coefficients(&rf("(g*t^2 + a)*(a*t)^-1"), "t").unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!(c[&1], rf("g*a^-1"));
    assert_eq!(c[&-1], rf("1"));
    assert!(laurent_coefficients(&rf("(1 + t)^-1"), "t").is_err());
}

#[test]
fn sl3_formulas_hold() {
    let report = verify_sl3_formulas().unwrap();
    assert_eq!(report.entries.len(), 15);
    assert!(report.is_verified(), "{report}");
}

#[test]
fn sl3_basis_rank_is_eight_generically_and_drops_at_a_cube_root() {
    let basis: Vec<MatElt> = sl3_basis().unwrap().into_iter().map(|b| b.1).collect();
    assert_eq!(rank_span(&basis).unwrap(), 8);
    let at = bindings(&[("xi", "-1")]).unwrap();
    let special: Vec<MatElt> = basis.iter().map(|m| m.compose_params(&at).unwrap()).collect();
    assert!(rank_span(&special).unwrap() < 8);
}

#[test]
fn specializations_of_identities_vanish() {
    let [a, b, _] = sl3_triple().unwrap();
    let lhs = a.bracket(&a.bracket(&b).unwrap()).unwrap();
    for k in 2..22i64 {
        let at = bindings(&[("xi", &format!("{k}/3"))]).unwrap();
        let l = lhs.compose_params(&at).unwrap();
        let r = a.scale(&rf("-2*xi")).unwrap().compose_params(&at).unwrap();
        assert_eq!(l, r);
    }
}

#[test]
fn loop_triple_satisfies_the_lie_relations() {
    let pres = catalog::make("lie_L", &bindings(&[("g", "-2*xi")]).unwrap()).unwrap();
    let rep = loop_sl3().unwrap();
    for r in &pres.relations {
        assert!(eval_ncpoly_indexed(r, &rep).unwrap().is_zero());
    }
}

#[test]
fn structure_constants_reproduce_brackets() {
    let basis: Vec<MatElt> = sl3_units().into_iter().map(|u| u.1).collect();
    let sc = structure_constants(&basis).unwrap();
    let p = std();
    for i in 0..8 {
        for j in 0..8 {
            let mut acc = MatElt::zero(3, &p);
            for k in 0..8 {
                acc = acc.add(&basis[k].scale(&sc[i][j][k]).unwrap()).unwrap();
            }
            assert_eq!(acc, basis[i].bracket(&basis[j]).unwrap());
        }
    }
}

#[test]
fn enveloping_sl2_is_confluent() {
    let pres = enveloping_sl2().unwrap();
    assert_eq!(pres.relations.len(), 3);
    let mut sys = pres.system().unwrap();
    assert!(sys.check_confluence().is_verified());
    assert_eq!(sys.count_by_degree(3), vec![1, 3, 6, 10]);
}

#[test]
fn enveloping_sl3_has_pbw_growth() {
    let pres = enveloping_sl3().unwrap();
    assert_eq!(pres.relations.len(), 28);
    let mut sys = pres.system().unwrap();
    assert!(sys.check_confluence().is_verified());
    assert_eq!(sys.count_by_degree(2), vec![1, 8, 36]);
}

#[test]
fn mismatched_sizes_are_rejected() {
    let p = std();
    let e = MatElt::identity(2, &p).mul(&MatElt::identity(3, &p)).unwrap_err();
    assert_eq!(e, MatError::SizeMismatch(2, 3));
    assert!(MatElt::from_texts(2, &p, &["1"]).is_err());
}

#[test]
fn missing_image_is_reported() {
    let pres = catalog::make_symbolic("z3downup").unwrap();
    let images = BTreeMap::from([("A".to_string(), MatElt::identity(2, &std()))]);
    assert!(matches!(
        eval_ncpoly(&pres.relations[0], &images),
        Err(MatError::MissingImage(_))
    ));
    let _ = Rational::from_integer(1.into());
}
