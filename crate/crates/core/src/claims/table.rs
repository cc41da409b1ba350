use crate::catalog::{derived_element, Presentation};
use crate::homcheck::{compose, ideal_implication, presentations_equal, GenMap};
use crate::matrep::{
    loop_generator, loop_sl3, rank_span, sl2_triple, sl3_basis, sl3_triple, three_cycle_rep, verify_sl3_formulas,
    MatElt,
};
use crate::probes::{
    probe_finite_dimension, probe_infinite_dimension, probe_injectivity, probe_lie_injectivity, InfiniteDimensionCase,
    ProbeVerdict,
};
use crate::rewrite::CompletionOptions;

use super::helpers::*;
use super::{Claim, ClaimError, ClaimVerdict, Finding};

pub const TOPICS: &[&str] = &[
    "conjectures",
    "downup",
    "extreme-cases",
    "grading",
    "kac-moody",
    "lie",
    "loop",
    "lr-triples",
    "observations",
    "parameters",
    "qweyl",
    "reduced",
    "representation",
    "sl2",
    "sl3",
    "symmetries",
    "uq-a21",
    "uq-sl2",
    "weyl",
];

macro_rules! claim {
    ($id:literal, $reference:literal, $check:expr) => {
        Claim {
            id: $id,
            reference: $reference,
            check: $check,
        }
    };
}

pub fn claims() -> Vec<Claim> {
    vec![
        // the down-up algebra on two generators
        claim!("downup/basis", "down-up algebra PBW basis A^i (BA)^j B^k", || {
            basis_is(&sym("downup")?, 8, is_pbw)
        }),
        claim!(
            "downup/counit",
            "down-up algebra maps to the field with A, B -> 0",
            || { hom(&sym("downup")?, &sym("downup")?, &["0", "0"]) }
        ),
        claim!(
            "downup/commuting-products",
            "[AB, BA] = 0 in the down-up algebra",
            || { identities(&sym("downup")?, &[("[AB,BA]", "[A*B, B*A]".into())], 6) }
        ),
        // symmetries of the Z3-symmetric algebra
        claim!(
            "symmetries/natural",
            "down-up algebra maps into the Z3-symmetric algebra",
            || { hom(&sym("downup")?, &sym("z3downup")?, &["A", "B"]) }
        ),
        claim!("symmetries/counit", "Z3-symmetric algebra maps to the field", || {
            let z = sym("z3downup")?;
            hom(&z, &z, &["0", "0", "0"])
        }),
        claim!(
            "symmetries/rotation",
            "rotation automorphism rho with rho^3 = 1",
            || {
                let z = sym("z3downup")?;
                let rho = map(&z, &z, &["B", "C", "A"], false)?;
                Ok(hom(&z, &z, &["B", "C", "A"])?.and(identity(&power(&rho, 3)?, "rho^3")?))
            }
        ),
        claim!("symmetries/sign", "sign automorphism zeta with zeta^2 = 1", || {
            let z = sym("z3downup")?;
            let zeta = map(&z, &z, &["-A", "-B", "-C"], false)?;
            Ok(hom(&z, &z, &["-A", "-B", "-C"])?.and(identity(&power(&zeta, 2)?, "zeta^2")?))
        }),
        claim!(
            "symmetries/reflections",
            "antiautomorphisms sigma_A, sigma_B, sigma_C of order two",
            || {
                let z = sym("z3downup")?;
                let mut out = Vec::new();
                for (name, im) in reflections() {
                    out.push(antihom(&z, &z, &im)?);
                    let s = map(&z, &z, &im, true)?;
                    out.push(identity(&power(&s, 2)?, &format!("{name}^2"))?);
                }
                Ok(all(out))
            }
        ),
        claim!(
            "symmetries/reflection-products",
            "products of reflections give rho and rho^-1",
            reflection_products
        ),
        claim!(
            "symmetries/sign-commutes",
            "zeta commutes with the reflections and rho",
            || {
                let z = sym("z3downup")?;
                let zeta = map(&z, &z, &["-A", "-B", "-C"], false)?;
                let mut others: Vec<(String, GenMap)> = reflections()
                    .into_iter()
                    .map(|(n, im)| Ok((n.to_string(), map(&z, &z, &im, true)?)))
                    .collect::<Result<_, ClaimError>>()?;
                others.push(("rho".into(), map(&z, &z, &["B", "C", "A"], false)?));
                let mut out = Vec::new();
                for (name, m) in &others {
                    out.push(agree(
                        &compose(m, &zeta)?,
                        &compose(&zeta, m)?,
                        &format!("zeta {name} = {name} zeta"),
                    )?);
                }
                Ok(all(out))
            }
        ),
        claim!(
            "symmetries/commuting-products",
            "[AB, BA] = [BC, CB] = [CA, AC] = 0",
            || {
                identities(
                    &sym("z3downup")?,
                    &[
                        ("[AB,BA]", "[A*B, B*A]".into()),
                        ("[BC,CB]", "[B*C, C*B]".into()),
                        ("[CA,AC]", "[C*A, A*C]".into()),
                    ],
                    6,
                )
            }
        ),
        // changing the parameters
        claim!(
            "parameters/scaling",
            "scaling by xi changes gamma to xi^-2 gamma",
            || { hom(&sym("z3downup")?, &z3("a", "b", "xi^-2*g")?, &["xi*A", "xi*B", "xi*C"]) }
        ),
        claim!("parameters/swap", "swapping A and B inverts beta", || {
            hom(&sym("z3downup")?, &z3("-a*b^-1", "b^-1", "-g*b^-1")?, &["B", "A", "C"])
        }),
        claim!(
            "parameters/reversal",
            "identity antiisomorphism onto the inverted parameters",
            || { antihom(&sym("z3downup")?, &z3("-a*b^-1", "b^-1", "-g*b^-1")?, &["A", "B", "C"]) }
        ),
        claim!(
            "parameters/beta-minus-one",
            "at beta = -1 the swap and the reversal are (anti)automorphisms",
            || {
                let z = z3("a", "-1", "g")?;
                Ok(hom(&z, &z, &["B", "A", "C"])?.and(antihom(&z, &z, &["A", "B", "C"])?))
            }
        ),
        // the Z2-grading
        claim!("grading/odd-relations", "every relation term has odd length", || {
            let z = sym("z3downup")?;
            let even: Vec<String> = z
                .relations
                .iter()
                .flat_map(|r| r.terms().map(|(w, _)| w.clone()).collect::<Vec<_>>())
                .filter(|w| w.len() % 2 == 0)
                .map(|w| w.render(&z.alphabet))
                .collect();
            Ok(if even.is_empty() {
                Finding::new(ClaimVerdict::Verified, "all relation words have odd length")
            } else {
                Finding::new(ClaimVerdict::Refuted, format!("even words {}", even.join(", ")))
            })
        }),
        // the extreme parameter values
        claim!(
            "extreme-cases/free-basis",
            "A(0,0,0) basis avoids six forbidden triples",
            || { basis_is(&z3("0", "0", "0")?, 8, avoids_forbidden_triples) }
        ),
        claim!(
            "extreme-cases/downup-counts",
            "down-up (0,0,0) counts agree with its PBW basis",
            || { basis_is(&bound("downup", &[("a", "0"), ("b", "0"), ("g", "0")])?, 8, is_pbw) }
        ),
        claim!(
            "extreme-cases/natural-injective",
            "down-up (0,0,0) embeds in A(0,0,0)",
            || {
                let src = bound("downup", &[("a", "0"), ("b", "0"), ("g", "0")])?;
                let tgt = z3("0", "0", "0")?;
                let mut sys = tgt.system()?;
                sys.check_confluence();
                let m = map(&src, &tgt, &["A", "B"], false)?;
                Ok(probe(
                    probe_injectivity("natural map, gamma = 0", &m, &sys, 4)?,
                    ProbeVerdict::ConsistentWithClaim,
                ))
            }
        ),
        claim!(
            "extreme-cases/onto-s-gamma",
            "A(0,0,gamma) maps onto S(gamma) with A, B, C -> D",
            || { hom(&z3("0", "0", "g")?, &sym("s_gamma")?, &["D", "D", "D"]) }
        ),
        claim!("extreme-cases/s-gamma-basis", "S(gamma) has basis 1, D, D^2", || {
            basis_is(&sym("s_gamma")?, 6, |w| w.len() <= 2)
        }),
        claim!(
            "extreme-cases/collapse",
            "A(0,0,gamma) has dimension 3 for gamma != 0",
            || {
                let r = probe_finite_dimension(&z3("0", "0", "1")?, 6)?;
                let dim = r.evidence["dimension"].as_u64();
                let f = probe(r, ProbeVerdict::FiniteDimensionCertified);
                Ok(
                    if f.verdict == ClaimVerdict::FiniteDimensionCertified && dim != Some(3) {
                        Finding::new(
                            ClaimVerdict::Refuted,
                            format!("dimension {dim:?}, expected 3; {}", f.detail),
                        )
                    } else {
                        f
                    },
                )
            }
        ),
        claim!(
            "extreme-cases/natural-not-injective",
            "down-up (0,0,gamma) does not embed for gamma != 0",
            || {
                let src = bound("downup", &[("a", "0"), ("b", "0"), ("g", "1")])?;
                let tgt = z3("0", "0", "1")?;
                let sys = tgt.system()?.complete(CompletionOptions::new(6))?.0;
                let m = map(&src, &tgt, &["A", "B"], false)?;
                Ok(probe(
                    probe_injectivity("natural map, gamma = 1", &m, &sys, 3)?,
                    ProbeVerdict::CounterexampleFound,
                ))
            }
        ),
        // homomorphisms that retract and represent
        claim!(
            "representation/retraction",
            "for gamma = 0, C -> 0 retracts onto the down-up algebra",
            || { hom(&z3("a", "b", "0")?, &bound("downup", &[("g", "0")])?, &["A", "B", "0"]) }
        ),
        claim!(
            "representation/composite-identity",
            "natural map then retraction is the identity",
            || {
                let du = bound("downup", &[("g", "0")])?;
                let z = z3("a", "b", "0")?;
                let nat = map(&du, &z, &["A", "B"], false)?;
                let ret = map(&z, &du, &["A", "B", "0"], false)?;
                identity(&compose(&nat, &ret)?, "retraction after natural map")
            }
        ),
        claim!(
            "representation/three-cycle",
            "3x3 Laurent matrices satisfy the relations for alpha != 0",
            || { matrix_hom(&sym("z3downup")?, &three_cycle_rep()?) }
        ),
        // the Weyl algebras
        claim!(
            "weyl/c-relations",
            "C = -A - B satisfies the cyclic Weyl relations",
            || {
                let c = "(-A - B)";
                identities(
                    &sym("weyl")?,
                    &[
                        ("AB - BA", "A*B - B*A - theta".into()),
                        ("BC - CB", format!("B*{c} - {c}*B - theta")),
                        ("CA - AC", format!("{c}*A - A*{c} - theta")),
                    ],
                    4,
                )
            }
        ),
        claim!(
            "weyl/onto-weyl",
            "A(xi+1, -xi, (xi-1)theta) maps to the Weyl algebra",
            || { hom(&z3_dict("weyl")?, &sym("weyl")?, &["A", "B", "-A - B"]) }
        ),
        claim!(
            "weyl/z3weyl-basis",
            "Z3-symmetric Weyl algebra basis A^i B^j C^k",
            || { basis_is(&sym("z3weyl")?, 6, nondecreasing) }
        ),
        claim!(
            "weyl/onto-z3weyl",
            "A(xi+1, -xi, (xi-1)theta) maps to the Z3-symmetric Weyl algebra",
            || { hom_same_names(&z3_dict("weyl")?, &sym("z3weyl")?) }
        ),
        // the Lie algebra L(gamma)
        claim!(
            "lie/enveloping",
            "A(2, -1, gamma) is the enveloping algebra of L(gamma)",
            || {
                Ok(from_report(&presentations_equal(
                    &sym("lie_L")?,
                    &z3("2", "-1", "g")?,
                    4,
                )?))
            }
        ),
        // the reduced algebra
        claim!("reduced/map", "A(alpha, beta, gamma) maps to R(-gamma/alpha)", || {
            hom_same_names(&sym("z3downup")?, &bound("reduced", &[("theta", "-g*a^-1")])?)
        }),
        claim!(
            "reduced/basis",
            "R(theta) basis: no repeated letter at distance one or two",
            || {
                basis_is(&sym("reduced")?, 7, |w| {
                    w.windows(2).all(|p| p[0] != p[1]) && w.windows(3).all(|p| p[0] != p[2])
                })
            }
        ),
        claim!(
            "reduced/cyclic-words",
            "R(theta) basis words are the cyclic words G+n, G-n",
            reduced_cyclic_words
        ),
        claim!(
            "reduced/lie-relations",
            "L(-2theta) maps to R(theta) as a Lie algebra",
            || { hom_same_names(&z3("2", "-1", "-2*theta")?, &sym("reduced")?) }
        ),
        // sl2
        claim!(
            "sl2/brackets",
            "sl2 elements A, B, C form a basis with cyclic brackets",
            sl2_brackets
        ),
        claim!(
            "sl2/relations",
            "sl2 elements satisfy the Lie relations with gamma = 2",
            || { matrix_hom(&z3_dict("sl2")?, &sl2_triple()?) }
        ),
        claim!("sl2/enveloping", "A(2, -1, 2) maps to U(sl2)", || {
            hom_same_names(&z3_dict("sl2")?, &sym("u_sl2")?)
        }),
        // sl3
        claim!(
            "sl3/brackets",
            "sl3 bracket table, Jacobi sum and matrix unit formulas",
            || { Ok(from_report(&verify_sl3_formulas()?)) }
        ),
        claim!("sl3/basis", "A, B, C and five brackets span sl3", || {
            let mats: Vec<MatElt> = sl3_basis()?.into_iter().map(|(_, m)| m).collect();
            let r = rank_span(&mats)?;
            Ok(Finding::new(
                if r == 8 {
                    ClaimVerdict::Verified
                } else {
                    ClaimVerdict::Refuted
                },
                format!("rank {r} over Q(xi), expected 8"),
            ))
        }),
        claim!(
            "sl3/relations",
            "sl3 elements satisfy the Lie relations with gamma = -2xi",
            || { matrix_hom(&z3_dict("sl3")?, &sl3_triple()?) }
        ),
        claim!("sl3/enveloping", "A(2, -1, -2xi) maps to U(sl3)", || {
            hom(
                &z3_dict("sl3")?,
                &sym("u_sl3")?,
                &["E12 + xi*E32", "xi*E13 + E23", "xi*E21 + E31"],
            )
        }),
        // the sl3 loop algebra
        claim!(
            "loop/relations",
            "loop elements satisfy the Lie relations with gamma = -2xi",
            || { matrix_hom(&z3_dict("loop")?, &loop_sl3()?) }
        ),
        claim!("loop/enveloping", "A(2, -1, -2xi) maps to U(sl3 loop algebra)", || {
            let ims = loop_images();
            let refs: Vec<&str> = ims.iter().map(String::as_str).collect();
            hom(&z3_dict("loop")?, &sym("u_sl3_loop")?, &refs)
        }),
        // the Kac-Moody algebra
        claim!(
            "kac-moody/positive-part",
            "Serre relations are the down-up relations (2, -1, 0)",
            || {
                let plus = sym("kacmoody_plus")?;
                Ok(from_report(&presentations_equal(
                    &on_generators_of(&z3("2", "-1", "0")?, &plus)?,
                    &plus,
                    4,
                )?))
            }
        ),
        claim!(
            "kac-moody/chevalley",
            "A(2, -1, 0) maps to U(A2^(1)) with A, B, C -> e1, e2, e3",
            || { hom(&z3_dict("kacmoody_serre")?, &sym("kacmoody_a21")?, &["e1", "e2", "e3"]) }
        ),
        claim!(
            "kac-moody/ef-map",
            "A(2, -1, -2xi) maps to U(A2^(1)) with A -> e1 + xi f2",
            || {
                hom(
                    &z3_dict("kacmoody")?,
                    &sym("kacmoody_a21")?,
                    &["e1 + xi*f2", "e2 + xi*f3", "e3 + xi*f1"],
                )
            }
        ),
        // the q-Weyl algebra
        claim!("qweyl/basis", "Z3-symmetric q-Weyl algebra basis A^i B^j C^k", || {
            basis_is(&sym("z3qweyl")?, 6, nondecreasing)
        }),
        claim!(
            "qweyl/map",
            "A(q xi + 1/q, -xi, (xi - 1/q)theta) maps to the Z3-symmetric q-Weyl algebra",
            || { hom_same_names(&z3_dict("qweyl")?, &sym("z3qweyl")?) }
        ),
        // U_q(sl2)
        claim!(
            "uq-sl2/basis",
            "equitable U_q(sl2) basis y^j x^i z^k with j an integer",
            || {
                // letters x, y, yinv, z
                let rank = |g: u16| [2, 0, 1, 3][g as usize];
                basis_is(&sym("uq_sl2_equitable")?, 6, |w| {
                    w.windows(2).all(|p| rank(p[0]) <= rank(p[1])) && !(w.contains(&1) && w.contains(&2))
                })
            }
        ),
        claim!(
            "uq-sl2/equitable-map",
            "A(q^2 + xi, -q^2 xi, (1-q^2)(1-xi)) maps to U_q(sl2)",
            || { hom(&z3_dict("uq_sl2")?, &sym("uq_sl2_equitable")?, &["x", "y", "z"]) }
        ),
        claim!(
            "uq-sl2/nu-commutation",
            "x nu_y = q^2 nu_y x and its cyclic companions",
            || {
                let [nx, ny, nz] = NU;
                let rows = [
                    ("x nu_y", format!("x*{ny} - q^2*{ny}*x")),
                    ("x nu_z", format!("x*{nz} - q^-2*{nz}*x")),
                    ("y nu_z", format!("y*{nz} - q^2*{nz}*y")),
                    ("y nu_x", format!("y*{nx} - q^-2*{nx}*y")),
                    ("z nu_x", format!("z*{nx} - q^2*{nx}*z")),
                    ("z nu_y", format!("z*{ny} - q^-2*{ny}*z")),
                ];
                identities(&sym("uq_sl2_equitable")?, &rows, 6)
            }
        ),
        claim!(
            "uq-sl2/nu-q-commutators",
            "q-commutators of the nu elements are 1 - z^2, 1 - x^2, 1 - y^2",
            || {
                let [nx, ny, nz] = NU;
                let row = |a: &str, b: &str, g: &str| format!("q*{a}*{b} - q^-1*{b}*{a} - (q - q^-1)*(1 - {g}*{g})");
                let rows = [
                    ("nu_x nu_y", row(nx, ny, "z")),
                    ("nu_y nu_z", row(ny, nz, "x")),
                    ("nu_z nu_x", row(nz, nx, "y")),
                ];
                identities(&sym("uq_sl2_equitable")?, &rows, 6)
            }
        ),
        claim!(
            "uq-sl2/nu-cubic",
            "cubic q-Serre type relations among the nu elements",
            || {
                let [nx, ny, nz] = NU;
                let c = "(q^2 - q^-2)*(q - q^-1)";
                let left =
                    |a: &str, b: &str| format!("q^3*{a}*{a}*{b} - (q + q^-1)*{a}*{b}*{a} + q^-3*{b}*{a}*{a} - {c}*{a}");
                let right =
                    |a: &str, b: &str| format!("q^3*{a}*{b}*{b} - (q + q^-1)*{b}*{a}*{b} + q^-3*{b}*{b}*{a} - {c}*{b}");
                let rows = [
                    ("nu_x^2 nu_y", left(nx, ny)),
                    ("nu_y^2 nu_z", left(ny, nz)),
                    ("nu_z^2 nu_x", left(nz, nx)),
                    ("nu_x nu_y^2", right(nx, ny)),
                    ("nu_y nu_z^2", right(ny, nz)),
                    ("nu_z nu_x^2", right(nz, nx)),
                ];
                identities(&sym("uq_sl2_equitable")?, &rows, 6)
            }
        ),
        claim!(
            "uq-sl2/nu-map",
            "A(q^3(q + 1/q), -q^6, q^3(q - 1/q)(q^2 - q^-2)) maps to the nu elements",
            || { hom(&z3_dict("uq_sl2_nu")?, &sym("uq_sl2_equitable")?, &NU) }
        ),
        // U_q(A2^(1))
        claim!(
            "uq-a21/positive-part",
            "q-Serre relations are the down-up relations (q + 1/q, -1, 0)",
            || {
                let plus = sym("uq_a21_plus")?;
                Ok(from_report(&presentations_equal(
                    &on_generators_of(&z3("q + q^-1", "-1", "0")?, &plus)?,
                    &plus,
                    4,
                )?))
            }
        ),
        claim!(
            "uq-a21/chevalley",
            "A(q + 1/q, -1, 0) maps to U_q(A2^(1)) with A, B, C -> E1, E2, E3",
            || { hom(&z3_dict("uq_a21_serre")?, &sym("uq_a21")?, &["E1", "E2", "E3"]) }
        ),
        claim!(
            "uq-a21/kinv-map",
            "(E1 + xi F2 K^-1) K3 and its rotations satisfy the down-up relations",
            || { uq_a21_map("uq_a21_kinv", "kinv") }
        ),
        claim!(
            "uq-a21/k-map",
            "(E1 + xi F2 K) K3^-1 and its rotations satisfy the down-up relations",
            || { uq_a21_map("uq_a21_k", "k") }
        ),
        // the four cases of the infinite-dimensionality argument
        claim!(
            "observations/gamma-zero",
            "gamma = 0: infinite-dimensional and noncommutative",
            || { observation(InfiniteDimensionCase::GammaZero) }
        ),
        claim!(
            "observations/alpha-nonzero",
            "gamma != 0, alpha != 0: (ABC)^n A independent",
            || { observation(InfiniteDimensionCase::AlphaNonzero) }
        ),
        claim!(
            "observations/beta-one",
            "gamma != 0, alpha = 0, beta = 1: onto a Weyl algebra",
            || { observation(InfiniteDimensionCase::BetaOne) }
        ),
        claim!(
            "observations/beta-generic",
            "gamma != 0, alpha = 0, beta != 0, 1: onto a q-Weyl algebra",
            || { observation(InfiniteDimensionCase::BetaGeneric) }
        ),
        // LR triples
        claim!(
            "lr-triples/nbweyl-plus",
            "NBWeyl+ relations imply the down-up relations",
            || { implication("nbweyl_plus", "nbweyl") }
        ),
        claim!(
            "lr-triples/nbweyl-minus",
            "NBWeyl- relations imply the down-up relations",
            || { implication("nbweyl_minus", "nbweyl") }
        ),
        claim!(
            "lr-triples/nbweyl-minus-t",
            "NBWeyl-(t) relations imply the down-up relations",
            || { implication("nbweyl_minus_t", "nbweyl_t") }
        ),
        claim!(
            "lr-triples/nbg",
            "NBG(q) is the down-up instance (q^-2(q+1), -q^-3, q^-2(q+1))",
            || { literal_instance("nbg") }
        ),
        claim!("lr-triples/nbg1", "NBG(1) is the down-up instance (2, -1, 2)", || {
            literal_instance("nbg1")
        }),
        claim!(
            "lr-triples/nbng",
            "NBNG(t) is the down-up instance (0, 1/t, 1/t - 1)",
            || { literal_instance("nbng") }
        ),
        claim!(
            "lr-triples/bipartite",
            "bipartite families load as six degree-4 relations",
            bipartite
        ),
        // injectivity questions, probed to degree 4
        claim!("conjectures/lie-reduced", "L(-2theta) -> R(theta) is injective", || {
            let m = map(&z3("2", "-1", "-2*theta")?, &sym("reduced")?, &["A", "B", "C"], false)?;
            Ok(probe(
                probe_lie_injectivity("L(-2theta) -> R(theta)", &m, 4, None)?,
                ProbeVerdict::ConsistentWithClaim,
            ))
        }),
        claim!(
            "conjectures/lie-loop",
            "L(-2xi) -> sl3 loop algebra is injective",
            || {
                let m = GenMap::matrix(
                    &z3_dict("loop")?,
                    loop_sl3()?.to_vec(),
                    crate::homcheck::Direction::Homomorphism,
                )?;
                Ok(probe(
                    probe_lie_injectivity("L(-2xi) -> sl3 loop", &m, 4, Some("t"))?,
                    ProbeVerdict::ConsistentWithClaim,
                ))
            }
        ),
        claim!(
            "conjectures/loop",
            "A(2, -1, -2xi) -> U(sl3 loop algebra) is injective",
            || {
                let ims = loop_images();
                let refs: Vec<&str> = ims.iter().map(String::as_str).collect();
                injective(&z3_dict("loop")?, &sym("u_sl3_loop")?, &refs, "A -> U(sl3 loop)")
            }
        ),
        claim!(
            "conjectures/kac-moody",
            "A(2, -1, -2xi) -> U(A2^(1)) is injective",
            || {
                injective(
                    &z3_dict("kacmoody")?,
                    &sym("kacmoody_a21")?,
                    &["e1 + xi*f2", "e2 + xi*f3", "e3 + xi*f1"],
                    "A -> U(A2^(1))",
                )
            }
        ),
        claim!(
            "conjectures/uq-a21-kinv",
            "the K^-1 map into U_q(A2^(1)) is injective",
            || { uq_a21_injective("uq_a21_kinv", "kinv") }
        ),
        claim!(
            "conjectures/uq-a21-k",
            "the K map into U_q(A2^(1)) is injective",
            || { uq_a21_injective("uq_a21_k", "k") }
        ),
    ]
}

const NU: [&str; 3] = ["(q*(1 - y*z))", "(q*(1 - z*x))", "(q*(1 - x*y))"];

fn reflections() -> [(&'static str, [&'static str; 3]); 3] {
    [
        ("sigma_A", ["A", "C", "B"]),
        ("sigma_B", ["C", "B", "A"]),
        ("sigma_C", ["B", "A", "C"]),
    ]
}

fn reflection_products() -> Res {
    let z = sym("z3downup")?;
    let s = |i: usize| map(&z, &z, &reflections()[i].1, true);
    let (sa, sb, sc) = (s(0)?, s(1)?, s(2)?);
    let rho = map(&z, &z, &["B", "C", "A"], false)?;
    let rho_inv = map(&z, &z, &["C", "A", "B"], false)?;
    // `then(f, g)` is g after f, written g f
    let then = |f: &GenMap, g: &GenMap| compose(f, g);
    let rows: Vec<(&str, GenMap, &GenMap)> = vec![
        ("sigma_A sigma_B = rho", then(&sb, &sa)?, &rho),
        ("sigma_B sigma_C = rho", then(&sc, &sb)?, &rho),
        ("sigma_C sigma_A = rho", then(&sa, &sc)?, &rho),
        ("sigma_B sigma_A = rho^-1", then(&sa, &sb)?, &rho_inv),
        ("sigma_C sigma_B = rho^-1", then(&sb, &sc)?, &rho_inv),
        ("sigma_A sigma_C = rho^-1", then(&sc, &sa)?, &rho_inv),
        ("rho sigma_A = sigma_C", then(&sa, &rho)?, &sc),
        ("sigma_B rho = sigma_C", then(&rho, &sb)?, &sc),
        ("rho sigma_B = sigma_A", then(&sb, &rho)?, &sa),
        ("sigma_C rho = sigma_A", then(&rho, &sc)?, &sa),
        ("rho sigma_C = sigma_B", then(&sc, &rho)?, &sb),
        ("sigma_A rho = sigma_B", then(&rho, &sa)?, &sb),
    ];
    let mut out = Vec::new();
    for (label, lhs, rhs) in &rows {
        out.push(agree(lhs, rhs, label)?);
    }
    Ok(all(out))
}

/// Words `A^i (BA)^j B^k` over the letters `A = 0`, `B = 1`.
fn is_pbw(w: &[u16]) -> bool {
    let mut rest = w;
    while rest.first() == Some(&0) {
        rest = &rest[1..];
    }
    while rest.len() >= 2 && rest[0] == 1 && rest[1] == 0 {
        rest = &rest[2..];
    }
    rest.iter().all(|&g| g == 1)
}

fn nondecreasing(w: &[u16]) -> bool {
    w.windows(2).all(|p| p[0] <= p[1])
}

/// No factor BAA, BBA, CBB, CCB, ACC, AAC.
fn avoids_forbidden_triples(w: &[u16]) -> bool {
    const FORBIDDEN: [[u16; 3]; 6] = [[1, 0, 0], [1, 1, 0], [2, 1, 1], [2, 2, 1], [0, 2, 2], [0, 0, 2]];
    w.windows(3).all(|t| !FORBIDDEN.iter().any(|f| f == t))
}

fn reduced_cyclic_words() -> Res {
    let r = sym("reduced")?;
    let mut sys = r.system()?;
    sys.check_confluence();
    let words = sys.normal_words(6);
    let mut out = Vec::new();
    for n in 2..=6usize {
        let got: std::collections::BTreeSet<String> = words
            .iter()
            .filter(|w| w.len() == n)
            .map(|w| w.render(&r.alphabet))
            .collect();
        let mut want = std::collections::BTreeSet::new();
        for g in ["A", "B", "C"] {
            for dir in ['+', '-'] {
                want.insert(derived_element(&format!("{g}{dir}{n}"), &r)?.to_string());
            }
        }
        out.push(if got == want {
            Finding::new(ClaimVerdict::Verified, format!("degree {n}: {}", got.len()))
        } else {
            Finding::new(ClaimVerdict::Refuted, format!("degree {n}: {got:?} vs {want:?}"))
        });
    }
    Ok(all(out))
}

fn sl2_brackets() -> Res {
    let [a, b, c] = sl2_triple()?;
    let checks = [
        ("[A,B] = C - A - B", a.bracket(&b)?, c.sub(&a)?.sub(&b)?),
        ("[B,C] = A - B - C", b.bracket(&c)?, a.sub(&b)?.sub(&c)?),
        ("[C,A] = B - C - A", c.bracket(&a)?, b.sub(&c)?.sub(&a)?),
    ];
    let mut out = Vec::new();
    for (label, lhs, rhs) in checks {
        out.push(if lhs == rhs {
            Finding::new(ClaimVerdict::Verified, label)
        } else {
            Finding::new(ClaimVerdict::Refuted, format!("{label}: {lhs} vs {rhs}"))
        });
    }
    let r = rank_span(&[a, b, c])?;
    out.push(Finding::new(
        if r == 3 {
            ClaimVerdict::Verified
        } else {
            ClaimVerdict::Refuted
        },
        format!("rank {r}, expected 3"),
    ));
    Ok(all(out))
}

fn loop_images() -> [String; 3] {
    let term = |x: &str, y: &str| format!("{} + xi*{}", loop_generator(x, 1), loop_generator(y, -1));
    [term("E12", "E32"), term("E23", "E13"), term("E31", "E21")]
}

/// The relations of `src` written over the generators of `like`, matched
/// by position.
fn on_generators_of(src: &Presentation, like: &Presentation) -> Result<Presentation, ClaimError> {
    let rels = src
        .relations
        .iter()
        .map(|r| {
            r.substitute_generators(&like.generators(), false)?
                .lift_params(&like.params)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Presentation::new(
        format!("{} on {}", src.name, like.alphabet.names().join(", ")),
        like.alphabet.clone(),
        like.params.clone(),
        src.parameters.clone(),
        rels,
        like.order.clone(),
    )?)
}

fn uq_a21_images(suffix: &str) -> Result<Vec<String>, ClaimError> {
    let tgt = sym("uq_a21")?;
    ["A", "B", "C"]
        .iter()
        .map(|g| Ok(derived_element(&format!("{g}_{suffix}"), &tgt)?.to_string()))
        .collect()
}

fn uq_a21_map(dict: &str, suffix: &str) -> Res {
    let ims = uq_a21_images(suffix)?;
    let refs: Vec<&str> = ims.iter().map(String::as_str).collect();
    hom(&z3_dict(dict)?, &sym("uq_a21")?, &refs)
}

fn injective(src: &Presentation, tgt: &Presentation, images: &[&str], name: &str) -> Res {
    let m = map(src, tgt, images, false)?;
    let mut sys = tgt.system()?;
    sys.check_confluence();
    Ok(probe(
        probe_injectivity(name, &m, &sys, 4)?,
        ProbeVerdict::ConsistentWithClaim,
    ))
}

fn uq_a21_injective(dict: &str, suffix: &str) -> Res {
    let ims = uq_a21_images(suffix)?;
    let refs: Vec<&str> = ims.iter().map(String::as_str).collect();
    injective(
        &z3_dict(dict)?,
        &sym("uq_a21")?,
        &refs,
        &format!("A -> U_q(A2^(1)), {suffix}"),
    )
}

fn observation(case: InfiniteDimensionCase) -> Res {
    Ok(probe(
        probe_infinite_dimension(case, 4)?,
        ProbeVerdict::ConsistentWithClaim,
    ))
}

fn implication(family: &str, dict: &str) -> Res {
    let sys = sym(family)?.system()?;
    Ok(from_report(&ideal_implication(&z3_dict(dict)?.relations, &sys, 5)?))
}

fn literal_instance(family: &str) -> Res {
    Ok(from_report(&presentations_equal(&sym(family)?, &z3_dict(family)?, 4)?))
}

fn bipartite() -> Res {
    let mut out = Vec::new();
    for name in ["bip_t", "bip_1", "bip_2"] {
        let p = sym(name)?;
        let shape = p.relations.len() == 6 && p.relations.iter().all(|r| r.degree() == 4);
        let mut round_trip = true;
        for r in &p.relations {
            round_trip &= p.parse(&r.render())? == *r;
        }
        out.push(Finding::new(
            if shape && round_trip {
                ClaimVerdict::Verified
            } else {
                ClaimVerdict::Refuted
            },
            format!(
                "{name}: {} relations of degree {}, round trip {}",
                p.relations.len(),
                p.max_relation_degree(),
                if round_trip { "exact" } else { "differs" }
            ),
        ));
    }
    Ok(all(out))
}
