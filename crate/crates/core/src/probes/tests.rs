use super::*;
use crate::catalog::make_symbolic;
use crate::homcheck::Direction;

fn bound(name: &str, pairs: &[(&str, &str)]) -> Presentation {
    make(name, &bindings(pairs).unwrap()).unwrap()
}

#[test]
fn three_cycle_powers_are_independent_over_laurent_t() {
    let r = probe_infinite_dimension(InfiniteDimensionCase::AlphaNonzero, 5).unwrap();
    assert_eq!(r.verdict, ProbeVerdict::ConsistentWithClaim, "{r}");
    assert_eq!(r.evidence["powers_of_abc_times_a"]["rank"], 6);
    assert_eq!(r.evidence["ab_ba"]["rank"], 2);
}

#[test]
fn duplicate_elements_give_a_dependency() {
    let z = make_symbolic("z3downup").unwrap();
    let rep = three_cycle_rep().unwrap();
    let a = z.parse("A").unwrap();
    let r = probe_matrix_independence("dup", &rep, &[a.clone(), a], None).unwrap();
    assert_eq!(r.evidence["rank"], 1);
    assert_eq!(r.verdict, ProbeVerdict::CounterexampleFound);
    assert!(r.witness.is_some());
}

#[test]
fn finite_dimension_of_the_collapsed_algebra() {
    let r = probe_finite_dimension(&z3("0", "0", "1").unwrap(), 6).unwrap();
    assert_eq!(r.verdict, ProbeVerdict::FiniteDimensionCertified, "{r}");
    assert_eq!(r.evidence["dimension"], 3);
    assert_eq!(r.witness.as_deref(), Some("basis {1, A, A^2}"));
    let s = probe_finite_dimension(&bound("s_gamma", &[("g", "1")]), 6).unwrap();
    assert_eq!(s.evidence["dimension"], 3);
    assert_eq!(s.witness.as_deref(), Some("basis {1, D, D^2}"));
}

#[test]
fn free_growth_is_not_certified() {
    let r = probe_finite_dimension(&z3("0", "0", "0").unwrap(), 4).unwrap();
    assert_eq!(r.verdict, ProbeVerdict::Inconclusive);
    assert_eq!(r.evidence["growth"], json!(["1", "3", "9", "21", "51"]));
}

fn natural(g: &str) -> (GenMap, RewriteSystem) {
    let src = bound("downup", &[("a", "0"), ("b", "0"), ("g", g)]);
    let tgt = z3("0", "0", g).unwrap();
    let m = identity_images(&src, &tgt).unwrap();
    let sys = completed(&tgt.system().unwrap(), 6).unwrap();
    (m, sys)
}

#[test]
fn natural_map_is_injective_without_gamma() {
    let (m, sys) = natural("0");
    let r = probe_injectivity("natural", &m, &sys, 4).unwrap();
    assert_eq!(r.verdict, ProbeVerdict::ConsistentWithClaim, "{r}");
    assert_eq!(r.evidence["image_rank"], r.evidence["source_words"]);
    let ranks: Vec<u64> = serde_json::from_value(r.evidence["prefix_ranks"].clone()).unwrap();
    assert!(ranks.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(ranks, vec![1, 3, 7, 13, 22]);
}

#[test]
fn natural_map_collapses_with_gamma() {
    let (m, sys) = natural("1");
    let r = probe_injectivity("natural", &m, &sys, 3).unwrap();
    assert_eq!(r.verdict, ProbeVerdict::CounterexampleFound, "{r}");
    assert_eq!(r.evidence["source_counts"], json!(["1", "2", "4", "6"]));
    assert_eq!(r.evidence["image_rank"], 3);
    assert!(r.witness.is_some());
}

#[test]
fn identity_is_injective() {
    let w = make_symbolic("z3weyl").unwrap();
    let m = identity_images(&w, &w).unwrap();
    let mut sys = w.system().unwrap();
    sys.check_confluence();
    let r = probe_injectivity("identity", &m, &sys, 4).unwrap();
    assert_eq!(r.verdict, ProbeVerdict::ConsistentWithClaim);
    assert_eq!(r.evidence["image_rank"], 35);
}

#[test]
fn unverified_maps_are_rejected() {
    let z = make_symbolic("z3downup").unwrap();
    let m = GenMap::from_texts(&z, &z, &["B", "A", "C"], Direction::Homomorphism).unwrap();
    let sys = z.system().unwrap();
    assert!(matches!(
        probe_injectivity("swap", &m, &sys, 3),
        Err(ProbeError::NotVerified(_))
    ));
}

#[test]
fn case_names_parse() {
    for c in InfiniteDimensionCase::ALL {
        assert_eq!(c.as_str().parse::<InfiniteDimensionCase>().unwrap(), c);
    }
    assert!(matches!(
        "beta-two".parse::<InfiniteDimensionCase>(),
        Err(ProbeError::UnknownCase(_))
    ));
}

#[test]
fn all_four_cases_are_consistent() {
    for c in InfiniteDimensionCase::ALL {
        let r = probe_infinite_dimension(c, 4).unwrap();
        assert_eq!(r.verdict, ProbeVerdict::ConsistentWithClaim, "{r}");
    }
    let r = probe_infinite_dimension(InfiniteDimensionCase::BetaOne, 3).unwrap();
    assert_eq!(r.evidence["target_growth"], json!(["1", "3", "6", "10"]));
}

#[test]
fn probes_are_deterministic() {
    let (m, sys) = natural("1");
    let a = probe_injectivity("natural", &m, &sys, 3).unwrap();
    let b = probe_injectivity("natural", &m, &sys, 3).unwrap();
    assert_eq!(a, b);
}

#[test]
fn bracket_words_count() {
    let z = make_symbolic("z3downup").unwrap();
    assert_eq!(bracket_words(&z, 3).unwrap().len(), 3 + 9 + 27);
}

#[test]
fn lie_map_into_the_reduced_algebra() {
    let src = z3("2", "-1", "-2*theta").unwrap();
    let tgt = make_symbolic("reduced").unwrap();
    let m = identity_images(&src, &tgt).unwrap();
    let r = probe_lie_injectivity("lie", &m, 4, None).unwrap();
    println!("{r}");
    assert_eq!(r.verdict, ProbeVerdict::ConsistentWithClaim, "{r}");
}
