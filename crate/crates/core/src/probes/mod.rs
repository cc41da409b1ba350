//! Evidence generators: truncated injectivity, finite-dimension detection,
//! linear independence of matrix images, and the four-case
//! infinite-dimensionality argument.
//!
//! A probe never proves an open claim. Its strongest positive verdict is
//! "consistent with claim"; a counterexample is only reported when the
//! dependency it exhibits is certified by confluent systems.

mod span;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{bindings, make, CatalogError, Presentation};
use crate::coeff::{CoeffError, RatFunc};
use crate::freealg::{FreeAlgError, NcPoly, Word};
use crate::homcheck::{check_hom_in, compose, is_identity, GenMap, HomError, MapTarget};
use crate::matrep::{eval_ncpoly_indexed, laurent_rows, linalg, three_cycle_rep, MatElt, MatError};
use crate::rewrite::{CompletionOptions, RewriteError, RewriteSystem, Status};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProbeError {
    #[error("map is not a verified homomorphism:\n{0}")]
    NotVerified(String),
    #[error("unknown case `{0}` (expected gamma-zero, alpha-nonzero, beta-one or beta-generic)")]
    UnknownCase(String),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Matrix(#[from] MatError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeVerdict {
    ConsistentWithClaim,
    CounterexampleFound,
    FiniteDimensionCertified,
    /// The data neither supports nor contradicts the claim, e.g. a
    /// dependency found over a spanning set that is not known to be a basis.
    Inconclusive,
}

impl fmt::Display for ProbeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProbeVerdict::ConsistentWithClaim => "consistent-with-claim",
            ProbeVerdict::CounterexampleFound => "counterexample-found",
            ProbeVerdict::FiniteDimensionCertified => "finite-dimension-certified",
            ProbeVerdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeResult {
    pub name: String,
    pub max_deg: usize,
    pub evidence: Value,
    pub verdict: ProbeVerdict,
    /// Present for counterexamples and finite-dimension certificates.
    pub witness: Option<String>,
}

impl fmt::Display for ProbeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (degree <= {}): {}", self.name, self.max_deg, self.verdict)?;
        writeln!(f, "  evidence: {}", self.evidence)?;
        if let Some(w) = &self.witness {
            writeln!(f, "  witness: {w}")?;
        }
        Ok(())
    }
}

/// Rank of the images of `elements` under the generator images `rep`.
///
/// With `laurent_var` set, entries are expanded in that variable first, so
/// the rank is taken over the coefficients free of it.
pub fn probe_matrix_independence(
    name: &str,
    rep: &[MatElt],
    elements: &[NcPoly],
    laurent_var: Option<&str>,
) -> Result<ProbeResult, ProbeError> {
    let mats = elements
        .iter()
        .map(|e| eval_ncpoly_indexed(e, rep))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = laurent_rows(&mats, laurent_var)?;
    let rank = linalg::rank(&rows)?;
    let (verdict, witness) = match elements.first() {
        Some(e) if rank < elements.len() => {
            let k = linalg::kernel_vector(&rows, e.params())?.expect("rank deficit implies a kernel vector");
            (
                ProbeVerdict::CounterexampleFound,
                Some(render_combination(&k, elements)),
            )
        }
        _ => (ProbeVerdict::ConsistentWithClaim, None),
    };
    Ok(ProbeResult {
        name: name.to_string(),
        max_deg: elements.iter().map(NcPoly::degree).max().unwrap_or(0),
        evidence: json!({
            "count": elements.len(),
            "rank": rank,
            "laurent_var": laurent_var,
        }),
        verdict,
        witness,
    })
}

fn render_combination(coeffs: &[RatFunc], elements: &[NcPoly]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .zip(elements)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, e)| format!("({c})*({e})"))
        .collect();
    parts.join(" + ")
}

fn is_homogeneous(p: &Presentation) -> bool {
    p.relations.iter().all(|r| r.degree() == r.min_degree())
}

fn completed(sys: &RewriteSystem, max_deg: usize) -> Result<RewriteSystem, ProbeError> {
    if sys.is_confluent() {
        return Ok(sys.clone());
    }
    let deg = max_deg.max(sys.max_lhs_len());
    Ok(sys.complete(CompletionOptions::new(deg))?.0)
}

/// Whether the normal words of length at most `max_deg` of `sys` are
/// linearly independent in the quotient.
fn basis_certified(sys: &RewriteSystem, pres: &Presentation, max_deg: usize) -> bool {
    match sys.status() {
        Status::Confluent => true,
        // for homogeneous relations every ideal element of degree d is
        // reached through ambiguities of length at most d
        Status::CompleteToDegree(d) => d >= max_deg && is_homogeneous(pres),
        Status::Raw => false,
    }
}

/// Normal forms of the images of `words` under `m`, built letter by letter
/// so each product is reduced before it grows. Every word's proper prefixes
/// must precede it in `words`.
fn word_images(m: &GenMap, words: &[Word], tgt: &RewriteSystem) -> Result<Vec<NcPoly>, ProbeError> {
    let MapTarget::Presented { target, images } = &m.target else {
        return Err(HomError::NotPresented.into());
    };
    let gens = images
        .iter()
        .map(|im| tgt.normal_form(im))
        .collect::<Result<Vec<_>, _>>()?;
    let mut memo: HashMap<Word, NcPoly> = HashMap::new();
    let mut out = Vec::with_capacity(words.len());
    for w in words {
        let img = match w.letters().split_last() {
            None => NcPoly::one(&target.alphabet, &target.params),
            Some((&last, prefix)) => {
                let head = memo
                    .get(&Word::from(prefix))
                    .cloned()
                    .expect("prefixes of normal words come first");
                let g = &gens[last as usize];
                let prod = if m.direction.is_anti() {
                    g.try_mul(&head)?
                } else {
                    head.try_mul(g)?
                };
                tgt.normal_form(&prod)?
            }
        };
        memo.insert(w.clone(), img.clone());
        out.push(img);
    }
    Ok(out)
}

/// Truncated injectivity: the images of the source normal words of length at
/// most `max_deg`, reduced in `tgt_sys`, are tested for linear independence.
///
/// The map must pass [`check_hom_in`] against `tgt_sys` first. A dependency
/// is a counterexample only when the source words are a certified basis and
/// `tgt_sys` is confluent; otherwise it is inconclusive.
pub fn probe_injectivity(
    name: &str,
    m: &GenMap,
    tgt_sys: &RewriteSystem,
    max_deg: usize,
) -> Result<ProbeResult, ProbeError> {
    let report = check_hom_in(m, tgt_sys, None)?;
    if !report.is_verified() {
        return Err(ProbeError::NotVerified(report.to_string()));
    }
    let src = completed(&m.source.system()?, max_deg)?;
    let certified = basis_certified(&src, &m.source, max_deg);
    let words = src.normal_words(max_deg);
    let imgs = word_images(m, &words, tgt_sys)?;
    let src_polys: Vec<NcPoly> = words
        .iter()
        .map(|w| NcPoly::word(&m.source.alphabet, &m.source.params, w.clone()))
        .collect();
    let outcome = span::compare(&src_polys, &imgs)?;
    let prefix_ranks = prefix_by_degree(&words, &outcome.ranks, max_deg);
    let counts = src.count_by_degree(max_deg);
    let verdict = match (&outcome.witness, certified && tgt_sys.is_confluent()) {
        (None, _) => ProbeVerdict::ConsistentWithClaim,
        (Some(_), true) => ProbeVerdict::CounterexampleFound,
        (Some(_), false) => ProbeVerdict::Inconclusive,
    };
    Ok(ProbeResult {
        name: name.to_string(),
        max_deg,
        evidence: json!({
            "source_counts": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "source_words": words.len(),
            "image_rank": outcome.ranks.last().copied().unwrap_or(0),
            "prefix_ranks": prefix_ranks,
            "source_status": src.status().to_string(),
            "source_basis_certified": certified,
            "target_status": tgt_sys.status().to_string(),
        }),
        verdict,
        witness: outcome.witness.map(|w| w.to_string()),
    })
}

/// The running rank after the last word of each length.
fn prefix_by_degree(words: &[Word], ranks: &[usize], max_deg: usize) -> Vec<usize> {
    (0..=max_deg)
        .map(|d| {
            words
                .iter()
                .zip(ranks)
                .filter(|(w, _)| w.len() <= d)
                .map(|(_, r)| *r)
                .next_back()
                .unwrap_or(0)
        })
        .collect()
}

/// Completes `pres` to `max_deg`; certifies finite dimension when the result
/// is confluent and has no normal words of some length below `max_deg`.
pub fn probe_finite_dimension(pres: &Presentation, max_deg: usize) -> Result<ProbeResult, ProbeError> {
    let sys = completed(&pres.system()?, max_deg)?;
    let counts = sys.count_by_degree(max_deg);
    let vanish = counts.iter().position(|&c| c == 0);
    let evidence = |extra: Value| {
        let mut v = json!({
            "growth": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "status": sys.status().to_string(),
        });
        if let (Value::Object(a), Value::Object(b)) = (&mut v, extra) {
            a.extend(b);
        }
        v
    };
    match vanish {
        Some(d0) if sys.is_confluent() && d0 < max_deg => {
            let basis = sys.normal_words(d0);
            let rendered: Vec<String> = basis.iter().map(|w| w.render(&pres.alphabet)).collect();
            Ok(ProbeResult {
                name: format!("finite dimension of {}", pres.name),
                max_deg,
                evidence: evidence(json!({ "dimension": basis.len() })),
                verdict: ProbeVerdict::FiniteDimensionCertified,
                witness: Some(format!("basis {{{}}}", rendered.join(", "))),
            })
        }
        _ => Ok(ProbeResult {
            name: format!("finite dimension of {}", pres.name),
            max_deg,
            evidence: evidence(json!({})),
            verdict: ProbeVerdict::Inconclusive,
            witness: None,
        }),
    }
}

/// The four parameter regimes of the infinite-dimensionality argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InfiniteDimensionCase {
    /// gamma = 0: the down-up algebra embeds.
    GammaZero,
    /// gamma != 0, alpha != 0: the three-cycle matrices.
    AlphaNonzero,
    /// gamma != 0, alpha = 0, beta = 1: onto the Z3-symmetric Weyl algebra.
    BetaOne,
    /// gamma != 0, alpha = 0, beta = q^-2: onto the Z3-symmetric q-Weyl algebra.
    BetaGeneric,
}

impl InfiniteDimensionCase {
    pub const ALL: [InfiniteDimensionCase; 4] = [
        InfiniteDimensionCase::GammaZero,
        InfiniteDimensionCase::AlphaNonzero,
        InfiniteDimensionCase::BetaOne,
        InfiniteDimensionCase::BetaGeneric,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InfiniteDimensionCase::GammaZero => "gamma-zero",
            InfiniteDimensionCase::AlphaNonzero => "alpha-nonzero",
            InfiniteDimensionCase::BetaOne => "beta-one",
            InfiniteDimensionCase::BetaGeneric => "beta-generic",
        }
    }
}

impl FromStr for InfiniteDimensionCase {
    type Err = ProbeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InfiniteDimensionCase::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| ProbeError::UnknownCase(s.to_string()))
    }
}

fn z3(a: &str, b: &str, g: &str) -> Result<Presentation, ProbeError> {
    Ok(make("z3downup", &bindings(&[("a", a), ("b", b), ("g", g)])?)?)
}

fn identity_images(src: &Presentation, tgt: &Presentation) -> Result<GenMap, ProbeError> {
    let names: Vec<&str> = src.alphabet.names().iter().map(String::as_str).collect();
    Ok(GenMap::from_texts(
        src,
        tgt,
        &names,
        crate::homcheck::Direction::Homomorphism,
    )?)
}

/// Whether `x*y` and `y*x` have different normal forms in a confluent system.
fn noncommuting(sys: &RewriteSystem, pres: &Presentation, x: &str, y: &str) -> Result<bool, ProbeError> {
    let xy = pres.parse(&format!("{x}*{y} - {y}*{x}"))?;
    Ok(sys.is_confluent() && !sys.normal_form(&xy)?.is_zero())
}

/// Runs one case of the infinite-dimensionality and noncommutativity
/// argument for the Z3-symmetric down-up algebra.
pub fn probe_infinite_dimension(case: InfiniteDimensionCase, max_deg: usize) -> Result<ProbeResult, ProbeError> {
    let name = format!("infinite dimension, case {}", case.as_str());
    match case {
        InfiniteDimensionCase::GammaZero => gamma_zero(&name, max_deg),
        InfiniteDimensionCase::AlphaNonzero => alpha_nonzero(&name),
        InfiniteDimensionCase::BetaOne => onto_weyl(&name, max_deg, "0", "1", "z3weyl", &[("theta", "-1/2*g")]),
        InfiniteDimensionCase::BetaGeneric => onto_weyl(
            &name,
            max_deg,
            "0",
            "q^-2",
            "z3qweyl",
            &[("theta", "-q^2*g*(q + 1)^-1")],
        ),
    }
}

fn gamma_zero(name: &str, max_deg: usize) -> Result<ProbeResult, ProbeError> {
    let down = make("downup", &bindings(&[("g", "0")])?)?;
    let big = z3("a", "b", "0")?;
    let natural = identity_images(&down, &big)?;
    let back = GenMap::from_texts(&big, &down, &["A", "B", "0"], crate::homcheck::Direction::Homomorphism)?;
    let back_ok = check_hom_in(&back, &down.system()?, None)?.is_verified();
    let round_trip = is_identity(&compose(&natural, &back)?, None)?.is_verified();
    let tgt = completed(&big.system()?, max_deg)?;
    let inj = probe_injectivity(name, &natural, &tgt, max_deg)?;
    let mut down_sys = down.system()?;
    down_sys.check_confluence();
    let noncomm = noncommuting(&down_sys, &down, "A", "B")?;
    let ok = back_ok && round_trip && noncomm && inj.verdict == ProbeVerdict::ConsistentWithClaim;
    Ok(ProbeResult {
        name: name.to_string(),
        max_deg,
        evidence: json!({
            "retraction_is_homomorphism": back_ok,
            "composite_is_identity": round_trip,
            "source_ab_ne_ba": noncomm,
            "injectivity": inj.evidence,
        }),
        verdict: if ok {
            ProbeVerdict::ConsistentWithClaim
        } else {
            ProbeVerdict::Inconclusive
        },
        witness: inj.witness,
    })
}

fn alpha_nonzero(name: &str) -> Result<ProbeResult, ProbeError> {
    let src = crate::catalog::make_symbolic("z3downup")?;
    let rep = three_cycle_rep()?;
    let elements = (0..=5)
        .map(|n| src.parse(&format!("(A*B*C)^{n}*A")))
        .collect::<Result<Vec<_>, _>>()?;
    let powers = probe_matrix_independence(name, &rep, &elements, Some("t"))?;
    let pair = [src.parse("A*B")?, src.parse("B*A")?];
    let ab = probe_matrix_independence(name, &rep, &pair, None)?;
    let ok = powers.verdict == ProbeVerdict::ConsistentWithClaim && ab.verdict == ProbeVerdict::ConsistentWithClaim;
    Ok(ProbeResult {
        name: name.to_string(),
        max_deg: powers.max_deg,
        evidence: json!({
            "powers_of_abc_times_a": powers.evidence,
            "ab_ba": ab.evidence,
        }),
        verdict: if ok {
            ProbeVerdict::ConsistentWithClaim
        } else {
            ProbeVerdict::Inconclusive
        },
        witness: powers.witness.or(ab.witness),
    })
}

fn onto_weyl(
    name: &str,
    max_deg: usize,
    a: &str,
    b: &str,
    target: &str,
    target_bindings: &[(&str, &str)],
) -> Result<ProbeResult, ProbeError> {
    let src = z3(a, b, "g")?;
    let tgt = make(target, &bindings(target_bindings)?)?;
    let m = identity_images(&src, &tgt)?;
    let mut sys = tgt.system()?;
    let confluent = sys.check_confluence().is_verified();
    let hom = check_hom_in(&m, &sys, None)?.is_verified();
    let growth = sys.count_by_degree(max_deg);
    let growing = growth.windows(2).all(|w| w[1] > w[0]);
    let noncomm = noncommuting(&sys, &tgt, "A", "B")?;
    let ok = confluent && hom && growing && noncomm;
    Ok(ProbeResult {
        name: name.to_string(),
        max_deg,
        evidence: json!({
            "target": format!("{target}({})", target_bindings.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")),
            "homomorphism_verified": hom,
            "onto": "generators map to generators",
            "target_confluent": confluent,
            "target_growth": growth.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "target_ab_ne_ba": noncomm,
        }),
        verdict: if ok {
            ProbeVerdict::ConsistentWithClaim
        } else {
            ProbeVerdict::Inconclusive
        },
        witness: None,
    })
}

/// Left-normed brackets `[X1, [X2, ... Xk]]` of the generators of `pres`
/// for `1 <= k <= depth`, grouped by depth in declaration order.
pub fn bracket_words(pres: &Presentation, depth: usize) -> Result<Vec<(String, NcPoly)>, ProbeError> {
    let names = pres.alphabet.names().to_vec();
    let gens = pres.generators();
    let mut level: Vec<(String, NcPoly)> = names.iter().cloned().zip(gens.iter().cloned()).collect();
    let mut out = level.clone();
    for _ in 1..depth {
        let mut next = Vec::new();
        for (n, g) in names.iter().zip(&gens) {
            for (label, p) in &level {
                next.push((format!("[{n},{label}]"), g.bracket(p)?));
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

/// Injectivity of a Lie map on the span of bracket words of depth at most
/// `depth`: the bracket words are reduced in the source enveloping algebra
/// and their images in the target, and the two ranks are compared. Matrix
/// images are expanded in `laurent_var` when given.
pub fn probe_lie_injectivity(
    name: &str,
    m: &GenMap,
    depth: usize,
    laurent_var: Option<&str>,
) -> Result<ProbeResult, ProbeError> {
    let src_sys = completed(&m.source.system()?, depth)?;
    let certified = basis_certified(&src_sys, &m.source, depth);
    let words = bracket_words(&m.source, depth)?;
    let src = words
        .iter()
        .map(|(_, p)| src_sys.normal_form(p))
        .collect::<Result<Vec<_>, _>>()?;
    let (tgt, tgt_exact) = match &m.target {
        MapTarget::Presented { target, .. } => {
            let report = check_hom(m)?;
            if !report.is_verified() {
                return Err(ProbeError::NotVerified(report.to_string()));
            }
            let mut sys = target.system()?;
            sys.check_confluence();
            let imgs = words
                .iter()
                .map(|(_, p)| Ok(sys.normal_form(&m.apply(p)?)?))
                .collect::<Result<Vec<_>, ProbeError>>()?;
            (span::Vectors::Poly(imgs), sys.is_confluent())
        }
        MapTarget::Matrix { .. } => {
            let report = crate::homcheck::check_hom(m, None)?;
            if !report.is_verified() {
                return Err(ProbeError::NotVerified(report.to_string()));
            }
            let mats = words
                .iter()
                .map(|(_, p)| m.apply_matrix(p))
                .collect::<Result<Vec<_>, _>>()?;
            (span::Vectors::Matrix(mats, laurent_var.map(str::to_string)), true)
        }
    };
    let src_rank = span::rank_of_polys(&src)?;
    let outcome = span::compare_vectors(&src, &tgt)?;
    let tgt_rank = outcome.ranks.last().copied().unwrap_or(0);
    let verdict = match (&outcome.witness, certified && tgt_exact) {
        (None, _) => ProbeVerdict::ConsistentWithClaim,
        (Some(_), true) => ProbeVerdict::CounterexampleFound,
        (Some(_), false) => ProbeVerdict::Inconclusive,
    };
    let by_depth: Vec<usize> = (1..=depth)
        .map(|d| {
            let n: usize = (1..=d).map(|k| m.source.alphabet.len().pow(k as u32)).sum();
            outcome.ranks.get(n - 1).copied().unwrap_or(0)
        })
        .collect();
    Ok(ProbeResult {
        name: name.to_string(),
        max_deg: depth,
        evidence: json!({
            "candidates": words.len(),
            "source_rank": src_rank,
            "image_rank": tgt_rank,
            "image_rank_by_depth": by_depth,
            "source_status": src_sys.status().to_string(),
            "source_basis_certified": certified,
        }),
        verdict,
        witness: outcome.witness.map(|w| w.to_string()),
    })
}

fn check_hom(m: &GenMap) -> Result<crate::report::CheckReport, ProbeError> {
    Ok(crate::homcheck::check_hom(m, None)?)
}

#[cfg(test)]
mod tests;
