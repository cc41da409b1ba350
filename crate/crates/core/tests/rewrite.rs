//! Rewriting engine checks against hand reductions and brute-force oracles.

use std::collections::BTreeSet;

use z3du::catalog::{bindings, make, make_symbolic, Presentation};
use z3du::freealg::{GenAlphabet, MonomialOrder, Word};
use z3du::rewrite::{CompletionOptions, RewriteError, Status};

fn pres(names: &[&str], rels: &[&str]) -> Presentation {
    let al = GenAlphabet::new(names).unwrap();
    let order = MonomialOrder::declaration(&al);
    Presentation::from_texts("test", al, &["q", "theta"], rels, order).unwrap()
}

fn words(letters: u16, n: usize) -> Vec<Vec<u16>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..letters).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn weyl_reduction_by_hand() {
    let w = make_symbolic("weyl").unwrap();
    let sys = w.system().unwrap();
    // B^2 A = B (AB - theta) = (AB - theta) B - theta B
    let nf = sys.normal_form(&w.parse("B*B*A").unwrap()).unwrap();
    assert_eq!(nf, w.parse("A*B*B - 2*theta*B").unwrap());
    assert!(sys.reduces_to_zero(&w.parse("B*A - A*B + theta").unwrap()).unwrap());
}

#[test]
fn commutative_plane_counts() {
    let p = pres(&["x", "y"], &["y*x - x*y"]);
    let mut sys = p.system().unwrap();
    assert!(sys.check_confluence().is_verified());
    assert_eq!(sys.status(), Status::Confluent);
    let counts = sys.count_by_degree(7);
    assert_eq!(counts, (0..=7u128).map(|n| n + 1).collect::<Vec<_>>());
}

#[test]
fn overlaps_of_the_free_case_match_a_brute_force_count() {
    let z = make("z3downup", &bindings(&[("a", "0"), ("b", "0"), ("g", "0")]).unwrap()).unwrap();
    let sys = z.system().unwrap();
    let lhs: Vec<Word> = sys.rules().iter().map(|r| r.lhs.clone()).collect();
    let mut expected = 0;
    for a in &lhs {
        for b in &lhs {
            for k in 1..a.len().min(b.len()) {
                if a.letters()[a.len() - k..] == b.letters()[..k] {
                    expected += 1;
                }
            }
        }
    }
    assert_eq!(lhs.len(), 6);
    assert_eq!(sys.enumerate_overlaps().len(), expected);
}

#[test]
fn normal_words_are_exactly_the_irreducible_words() {
    let r = make_symbolic("reduced").unwrap();
    let sys = r.system().unwrap();
    let lhs: Vec<Vec<u16>> = sys.rules().iter().map(|r| r.lhs.letters().to_vec()).collect();
    let got: BTreeSet<Vec<u16>> = sys.normal_words(5).iter().map(|w| w.letters().to_vec()).collect();
    let want: BTreeSet<Vec<u16>> = (0..=5)
        .flat_map(|n| words(3, n))
        .filter(|w| !lhs.iter().any(|l| w.windows(l.len()).any(|s| s == l.as_slice())))
        .collect();
    assert_eq!(got, want);
    for w in &got {
        assert!(sys.is_normal_word(&Word::from(w.clone())));
    }
    let counts = sys.count_by_degree(5);
    for n in 0..=5 {
        assert_eq!(counts[n] as usize, got.iter().filter(|w| w.len() == n).count());
    }
}

#[test]
fn completion_finds_the_missing_rules() {
    // xyx reduces to x and to xx, yxy to y and to yy
    let p = pres(&["x", "y"], &["x*y - y", "y*x - x"]);
    let mut raw = p.system().unwrap();
    let report = raw.check_confluence();
    assert!(!report.is_verified());
    let (sys, rep) = raw.complete(CompletionOptions::new(4)).unwrap();
    assert_eq!(rep.status, Status::Confluent);
    assert_eq!(sys.count_by_degree(4), vec![1, 2, 0, 0, 0]);
    assert_eq!(rep.added.len(), 2, "{:?}", rep.added);
    assert!(sys.reduces_to_zero(&p.parse("x*x - x").unwrap()).unwrap());
}

#[test]
fn completion_certificates_express_rules_in_the_relations() {
    let z = make("z3downup", &bindings(&[("a", "0"), ("b", "0"), ("g", "1")]).unwrap()).unwrap();
    let (sys, rep) = z.system_tracked().unwrap().complete(CompletionOptions::new(6)).unwrap();
    assert_eq!(rep.status, Status::Confluent);
    assert!(sys.tracks_certificates());
    for id in sys.rule_ids() {
        assert_eq!(sys.verify_certificate(id), Some(true), "rule {id}");
    }
}

#[test]
fn degree_bound_below_the_rules_is_an_error() {
    let z = make_symbolic("z3downup").unwrap();
    assert!(matches!(
        z.system().unwrap().complete(CompletionOptions::new(2)),
        Err(RewriteError::DegreeBelowRules {
            max_deg: 2,
            rule_deg: 3
        })
    ));
}

#[test]
fn truncated_completion_reports_its_degree() {
    let z = make_symbolic("z3downup").unwrap();
    let (sys, rep) = z.system().unwrap().complete(CompletionOptions::new(3)).unwrap();
    assert_eq!(rep.status, Status::CompleteToDegree(3));
    assert_eq!(sys.status(), Status::CompleteToDegree(3));
}

#[test]
fn inverse_pairs_cancel() {
    let u = make_symbolic("uq_sl2_equitable").unwrap();
    let sys = u.system().unwrap();
    assert_eq!(
        sys.normal_form(&u.parse("yinv*y*x*y*yinv").unwrap()).unwrap(),
        u.parse("x").unwrap()
    );
}

#[test]
fn foreign_polynomials_are_rejected() {
    let w = make_symbolic("weyl").unwrap();
    let r = make_symbolic("reduced").unwrap();
    let sys = w.system().unwrap();
    assert_eq!(
        sys.normal_form(&r.parse("A").unwrap()),
        Err(RewriteError::AlphabetMismatch)
    );
}

#[test]
fn order_changes_the_normal_words() {
    let p = pres(&["x", "y"], &["y*x - q*x*y"]);
    let rev = p.with_order(MonomialOrder::with_precedence(&p.alphabet, &["y", "x"]).unwrap());
    let a = p.system().unwrap();
    let b = rev.system().unwrap();
    let yx = p.parse("y*x").unwrap();
    assert_eq!(a.normal_form(&yx).unwrap(), p.parse("q*x*y").unwrap());
    assert_eq!(b.normal_form(&yx).unwrap(), yx);
    assert_eq!(
        b.normal_form(&p.parse("x*y").unwrap()).unwrap(),
        p.parse("q^-1*y*x").unwrap()
    );
}
