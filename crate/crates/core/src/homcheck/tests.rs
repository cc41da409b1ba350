use super::*;
use crate::catalog::{bindings, downup_bindings, make, make_symbolic};
use crate::matrep::three_cycle_rep;

fn z3(dict: &str, b: &[(&str, &str)]) -> Presentation {
    make("z3downup", &downup_bindings(dict, &bindings(b).unwrap()).unwrap()).unwrap()
}

fn hom(src: &Presentation, tgt: &Presentation, images: &[&str]) -> CheckReport {
    let m = GenMap::from_texts(src, tgt, images, Direction::Homomorphism).unwrap();
    check_hom(&m, None).unwrap()
}

#[test]
fn rotation_is_an_automorphism_of_order_three() {
    let z = make_symbolic("z3downup").unwrap();
    let rho = GenMap::from_texts(&z, &z, &["B", "C", "A"], Direction::Homomorphism).unwrap();
    assert!(check_hom(&rho, None).unwrap().is_verified());
    let rho3 = compose(&compose(&rho, &rho).unwrap(), &rho).unwrap();
    assert!(is_identity(&rho3, None).unwrap().is_verified());
}

#[test]
fn sign_map_and_its_square() {
    let z = make_symbolic("z3downup").unwrap();
    let zeta = GenMap::from_texts(&z, &z, &["-A", "-B", "-C"], Direction::Homomorphism).unwrap();
    assert!(check_hom(&zeta, None).unwrap().is_verified());
    assert!(is_identity(&compose(&zeta, &zeta).unwrap(), None)
        .unwrap()
        .is_verified());
}

#[test]
fn reflection_antiautomorphisms_compose_to_the_rotation() {
    let z = make_symbolic("z3downup").unwrap();
    let anti = |im: [&str; 3]| GenMap::from_texts(&z, &z, &im, Direction::Antihomomorphism).unwrap();
    let sa = anti(["A", "C", "B"]);
    let sb = anti(["C", "B", "A"]);
    assert!(check_hom(&sa, None).unwrap().is_verified());
    let c = compose(&sb, &sa).unwrap();
    assert_eq!(c.direction, Direction::Homomorphism);
    let rho = GenMap::from_texts(&z, &z, &["B", "C", "A"], Direction::Homomorphism).unwrap();
    // sigma_A sigma_B applies sigma_B first
    let sa_sb = compose(&sb, &sa).unwrap();
    assert!(agree_on_generators(&sa_sb, &rho, None).unwrap().is_verified());
    assert!(!agree_on_generators(&compose(&sa, &sb).unwrap(), &rho, None)
        .unwrap()
        .is_verified());
}

#[test]
fn swapping_two_generators_is_not_a_homomorphism() {
    let z = make_symbolic("z3downup").unwrap();
    let m = GenMap::from_texts(&z, &z, &["B", "A", "C"], Direction::Homomorphism).unwrap();
    let rep = check_hom(&m, None).unwrap();
    assert!(!rep.is_verified());
}

#[test]
fn weyl_maps() {
    let src = z3("weyl", &[]);
    assert!(hom(&src, &make_symbolic("z3weyl").unwrap(), &["A", "B", "C"]).is_verified());
    assert!(hom(&src, &make_symbolic("weyl").unwrap(), &["A", "B", "-A - B"]).is_verified());
}

#[test]
fn reduced_map() {
    let src = make_symbolic("z3downup").unwrap();
    let tgt = make("reduced", &bindings(&[("theta", "-g*a^-1")]).unwrap()).unwrap();
    assert!(hom(&src, &tgt, &["A", "B", "C"]).is_verified());
}

#[test]
fn matrix_target() {
    let z = make_symbolic("z3downup").unwrap();
    let m = GenMap::matrix(&z, three_cycle_rep().unwrap().to_vec(), Direction::Homomorphism).unwrap();
    assert!(check_hom(&m, None).unwrap().is_verified());
}

#[test]
fn nbweyl_implications() {
    let nb = make_symbolic("nbweyl_plus").unwrap();
    let sys = nb.system().unwrap();
    let good = z3("nbweyl", &[]);
    assert!(ideal_implication(&good.relations, &sys, 5).unwrap().is_verified());
    let spec_tuple = make(
        "z3downup",
        &bindings(&[("a", "q^2*xi + q^-2"), ("b", "-xi"), ("g", "(xi - q^-2)*q^-1*vt")]).unwrap(),
    )
    .unwrap();
    let r = ideal_implication(&spec_tuple.relations, &sys, 5).unwrap();
    assert!(!r.is_verified());
    assert!(r.failures().all(|e| matches!(e.outcome, Outcome::Inconclusive { .. })));
    let t = make_symbolic("nbweyl_minus_t").unwrap();
    let good = z3("nbweyl_t", &[]);
    assert!(ideal_implication(&good.relations, &t.system().unwrap(), 5)
        .unwrap()
        .is_verified());
}

#[test]
fn sl2_and_sl3_targets() {
    let src = z3("sl2", &[]);
    assert!(hom(&src, &make_symbolic("u_sl2").unwrap(), &["A", "B", "C"]).is_verified());
    let src = z3("sl3", &[]);
    let r = hom(
        &src,
        &make_symbolic("u_sl3").unwrap(),
        &["E12 + xi*E32", "xi*E13 + E23", "xi*E21 + E31"],
    );
    assert!(r.is_verified(), "{r}");
}

#[test]
fn uq_sl2_equitable() {
    let src = z3("uq_sl2", &[]);
    let r = hom(&src, &make_symbolic("uq_sl2_equitable").unwrap(), &["x", "y", "z"]);
    assert!(r.is_verified(), "{r}");
    let src = z3("uq_sl2_nu", &[]);
    let r = hom(
        &src,
        &make_symbolic("uq_sl2_equitable").unwrap(),
        &["q*(1 - y*z)", "q*(1 - z*x)", "q*(1 - x*y)"],
    );
    assert!(r.is_verified(), "{r}");
}

#[test]
fn kac_moody_target() {
    let src = z3("kacmoody", &[]);
    let r = hom(
        &src,
        &make_symbolic("kacmoody_a21").unwrap(),
        &["e1 + xi*f2", "e2 + xi*f3", "e3 + xi*f1"],
    );
    assert!(r.is_verified(), "{r}");
}

#[test]
fn uq_a21_target() {
    let src = z3("uq_a21_kinv", &[]);
    let r = hom(
        &src,
        &make_symbolic("uq_a21").unwrap(),
        &[
            "(E1 + xi*F2*K1inv*K2inv*K3inv)*K3",
            "(E2 + xi*F3*K1inv*K2inv*K3inv)*K1",
            "(E3 + xi*F1*K1inv*K2inv*K3inv)*K2",
        ],
    );
    assert!(r.is_verified(), "{r}");
}
