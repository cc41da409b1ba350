use super::*;

fn same_relations(a: &Presentation, b: &Presentation) -> bool {
    a.relations.len() == b.relations.len() && a.relations.iter().zip(&b.relations).all(|(x, y)| x == y)
}

#[test]
fn every_entry_builds() {
    for e in entries() {
        let p = make_symbolic(e.name).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        assert!(!p.relations.is_empty(), "{}", e.name);
        for name in &p.parameters {
            assert!(e.parameters.contains(&name.as_str()), "{} declares {name}", e.name);
        }
    }
}

#[test]
fn shapes_of_selected_presentations() {
    let z = make_symbolic("z3downup").unwrap();
    assert_eq!(z.alphabet.len(), 3);
    assert_eq!(z.relations.len(), 6);
    let u = make_symbolic("uq_a21").unwrap();
    assert_eq!(u.alphabet.len(), 12);
    let b = make_symbolic("bip_t").unwrap();
    assert_eq!(b.relations.len(), 6);
    assert!(b.relations.iter().all(|r| r.degree() == 4));
    assert_eq!(make_symbolic("reduced").unwrap().relations.len(), 9);
}

#[test]
fn downup_relation_in_first_shape() {
    let z = make_symbolic("z3downup").unwrap();
    let expected = z.parse("B*A^2 - a*A*B*A - b*A^2*B - g*A").unwrap();
    assert_eq!(z.relations[0], expected);
}

#[test]
fn lie_presentation_expands_to_downup_at_two_minus_one() {
    let lie = make_symbolic("lie_L").unwrap();
    let du = make("z3downup", &bindings(&[("a", "2"), ("b", "-1")]).unwrap()).unwrap();
    for r in &lie.relations {
        let neg = r.neg();
        assert!(du.relations.iter().any(|d| d == r || d == &neg), "{r}");
    }
}

#[test]
fn literal_families_match_their_dictionaries() {
    for (pres, dict, binds) in [
        ("nbg", "nbg", vec![]),
        ("nbg1", "nbg1", vec![]),
        ("nbng", "nbng", vec![]),
    ] {
        let lit = make_symbolic(pres).unwrap();
        let b = bindings(&binds).unwrap();
        let inst = make("z3downup", &downup_bindings(dict, &b).unwrap()).unwrap();
        assert!(same_relations(&lit, &inst), "{pres}");
    }
}

#[test]
fn dictionary_values() {
    let b = bindings(&[("theta", "theta"), ("xi", "xi")]).unwrap();
    let [a, bb, g] = downup_params_for("weyl", &b).unwrap();
    let p = ParamSet::standard();
    let parse = |s: &str| crate::lang::parse_ratfunc(s, &p).unwrap();
    assert_eq!(a, parse("xi + 1"));
    assert_eq!(bb, parse("-xi"));
    assert_eq!(g, parse("(xi - 1)*theta"));
    let [_, _, g] = downup_params_for("uq_sl2_nu", &Bindings::new()).unwrap();
    assert_eq!(g, parse("q^3*(q - q^-1)*(q^2 - q^-2)"));
    let at = bindings(&[("t", "3")]).unwrap();
    let [a, bb, g] = downup_params_for("nbng", &at).unwrap();
    assert!(a.is_zero());
    assert_eq!(bb, parse("1/3"));
    assert_eq!(g, parse("-2/3"));
    assert!(matches!(
        downup_params_for("nope", &Bindings::new()),
        Err(CatalogError::UnknownDictionary(_))
    ));
}

#[test]
fn derived_elements() {
    let u = make_symbolic("uq_sl2_equitable").unwrap();
    assert_eq!(derived_element("nu_x", &u).unwrap(), u.parse("q - q*y*z").unwrap());
    let k = make_symbolic("uq_a21").unwrap();
    assert_eq!(derived_element("K", &k).unwrap(), k.parse("K1*K2*K3").unwrap());
    let r = make_symbolic("reduced").unwrap();
    assert_eq!(derived_element("A+5", &r).unwrap(), r.parse("A*B*C*A*B").unwrap());
    assert_eq!(derived_element("A-3", &r).unwrap(), r.parse("A*C*B").unwrap());
    assert!(derived_element("A+1", &r).is_err());
    let w = make_symbolic("z3weyl").unwrap();
    assert_eq!(derived_element("C_neg", &w).unwrap(), w.parse("-A - B").unwrap());
    assert!(matches!(
        derived_element("nu_x", &w),
        Err(CatalogError::UnknownElement { .. })
    ));
}

#[test]
fn binding_errors() {
    assert!(matches!(
        make("nope", &Bindings::new()),
        Err(CatalogError::UnknownName(_))
    ));
    let b = bindings(&[("q", "2")]).unwrap();
    assert!(matches!(make("weyl", &b), Err(CatalogError::UnknownParam { .. })));
    let zero = bindings(&[("g", "0")]).unwrap();
    assert!(make("s_gamma", &zero).is_ok());
}

#[test]
fn binding_substitutes_values() {
    let p = make("z3downup", &bindings(&[("a", "0"), ("b", "0"), ("g", "1")]).unwrap()).unwrap();
    assert_eq!(p.relations[0], p.parse("B*A^2 - A").unwrap());
}

#[test]
fn relations_round_trip_through_text() {
    for e in entries() {
        let p = make_symbolic(e.name).unwrap();
        for r in &p.relations {
            assert_eq!(&p.parse(&r.render()).unwrap(), r, "{}", e.name);
        }
    }
}

#[test]
fn cartan_matrix_is_affine_a2() {
    let c = cartan_a21();
    for i in 0..3 {
        assert_eq!(c[i].iter().sum::<i64>(), 0);
        assert_eq!(c[i][i], 2);
    }
}
