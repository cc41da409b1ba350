use std::collections::BTreeSet;

use crate::catalog::{bindings, downup_bindings, make, make_symbolic, Bindings, Presentation};
use crate::freealg::{NcPoly, Word};
use crate::homcheck::{agree_on_generators, check_hom, compose, is_identity, Direction, GenMap};
use crate::matrep::MatElt;
use crate::probes::{ProbeResult, ProbeVerdict};
use crate::report::{CheckReport, Verdict};
use crate::rewrite::CompletionOptions;

use super::{ClaimError, ClaimVerdict, Finding};

pub(super) type Res = Result<Finding, ClaimError>;

pub(super) fn bound(name: &str, pairs: &[(&str, &str)]) -> Result<Presentation, ClaimError> {
    Ok(make(name, &bindings(pairs)?)?)
}

pub(super) fn sym(name: &str) -> Result<Presentation, ClaimError> {
    Ok(make_symbolic(name)?)
}

pub(super) fn z3(a: &str, b: &str, g: &str) -> Result<Presentation, ClaimError> {
    bound("z3downup", &[("a", a), ("b", b), ("g", g)])
}

/// `z3downup` with the parameters of a named dictionary.
pub(super) fn z3_dict(dict: &str) -> Result<Presentation, ClaimError> {
    Ok(make("z3downup", &downup_bindings(dict, &Bindings::new())?)?)
}

pub(super) fn map(src: &Presentation, tgt: &Presentation, images: &[&str], anti: bool) -> Result<GenMap, ClaimError> {
    let dir = if anti {
        Direction::Antihomomorphism
    } else {
        Direction::Homomorphism
    };
    Ok(GenMap::from_texts(src, tgt, images, dir)?)
}

pub(super) fn from_report(report: &CheckReport) -> Finding {
    let verdict = match report.verdict() {
        Verdict::Verified => ClaimVerdict::Verified,
        Verdict::Inconclusive => ClaimVerdict::Inconclusive,
        Verdict::Refuted => ClaimVerdict::Refuted,
    };
    let detail = if report.is_verified() {
        format!("{}: {} checks pass", report.title, report.entries.len())
    } else {
        let failures: Vec<String> = report
            .failures()
            .map(|e| match &e.outcome {
                crate::report::Outcome::Refuted { witness } => format!("{} ({witness})", e.label),
                crate::report::Outcome::Inconclusive { residue } => format!("{} (residue {residue})", e.label),
                crate::report::Outcome::Verified => e.label.clone(),
            })
            .collect();
        format!("{}: {}", report.title, failures.join("; "))
    };
    Finding::new(verdict, detail)
}

pub(super) fn all(findings: Vec<Finding>) -> Finding {
    findings
        .into_iter()
        .reduce(Finding::and)
        .unwrap_or_else(|| Finding::new(ClaimVerdict::Verified, "nothing to check"))
}

pub(super) fn hom(src: &Presentation, tgt: &Presentation, images: &[&str]) -> Res {
    Ok(from_report(&check_hom(&map(src, tgt, images, false)?, None)?))
}

pub(super) fn antihom(src: &Presentation, tgt: &Presentation, images: &[&str]) -> Res {
    Ok(from_report(&check_hom(&map(src, tgt, images, true)?, None)?))
}

/// `A -> A, B -> B, ...` by generator name.
pub(super) fn hom_same_names(src: &Presentation, tgt: &Presentation) -> Res {
    let names: Vec<&str> = src.alphabet.names().iter().map(String::as_str).collect();
    hom(src, tgt, &names)
}

pub(super) fn matrix_hom(src: &Presentation, images: &[MatElt]) -> Res {
    let m = GenMap::matrix(src, images.to_vec(), Direction::Homomorphism)?;
    Ok(from_report(&check_hom(&m, None)?))
}

/// `m1 = m2` on generators.
pub(super) fn agree(m1: &GenMap, m2: &GenMap, label: &str) -> Res {
    let mut f = from_report(&agree_on_generators(m1, m2, None)?);
    f.detail = format!("{label}: {}", f.detail);
    Ok(f)
}

pub(super) fn identity(m: &GenMap, label: &str) -> Res {
    let mut f = from_report(&is_identity(m, None)?);
    f.detail = format!("{label}: {}", f.detail);
    Ok(f)
}

/// The `k`-fold composite `m . m . ... . m`.
pub(super) fn power(m: &GenMap, k: usize) -> Result<GenMap, ClaimError> {
    let mut acc = m.clone();
    for _ in 1..k {
        acc = compose(&acc, m)?;
    }
    Ok(acc)
}

/// Each `(label, expr)` is zero in `pres`: reduced by the raw system, then
/// after completion to `deg` if needed. A nonzero normal form refutes only
/// when the system is confluent.
pub(super) fn identities(pres: &Presentation, exprs: &[(&str, String)], deg: usize) -> Res {
    let mut sys = pres.system()?;
    sys.check_confluence();
    let mut report = CheckReport::new(format!("identities in {}", pres.name));
    let polys = exprs
        .iter()
        .map(|(l, e)| Ok((*l, pres.parse(e)?)))
        .collect::<Result<Vec<(&str, NcPoly)>, ClaimError>>()?;
    let mut completed = None;
    for (label, p) in polys {
        let mut nf = sys.normal_form(&p)?;
        let mut confluent = sys.is_confluent();
        if !nf.is_zero() && !confluent {
            if completed.is_none() {
                let d = deg.max(sys.max_lhs_len());
                completed = Some(sys.complete(CompletionOptions::new(d))?.0);
            }
            let c = completed.as_ref().expect("just set");
            nf = c.normal_form(&p)?;
            confluent = c.is_confluent();
        }
        let outcome = if nf.is_zero() {
            crate::report::Outcome::Verified
        } else if confluent {
            crate::report::Outcome::Refuted {
                witness: nf.to_string(),
            }
        } else {
            crate::report::Outcome::Inconclusive {
                residue: nf.to_string(),
            }
        };
        report.push(label, outcome);
    }
    Ok(from_report(&report))
}

/// The normal words of `pres` up to `max_deg` are exactly the words the
/// predicate accepts, and the system is confluent.
pub(super) fn basis_is(pres: &Presentation, max_deg: usize, accept: impl Fn(&[u16]) -> bool) -> Res {
    let mut sys = pres.system()?;
    let conf = from_report(&sys.check_confluence());
    let got: BTreeSet<Word> = sys.normal_words(max_deg).into_iter().collect();
    let want: BTreeSet<Word> = all_words(pres.alphabet.len() as u16, max_deg)
        .into_iter()
        .filter(|w| accept(w.letters()))
        .collect();
    let counts = sys.count_by_degree(max_deg);
    let basis = if got == want {
        Finding::new(
            ClaimVerdict::Verified,
            format!(
                "normal words match the stated basis through degree {max_deg}; counts {}",
                render_counts(&counts)
            ),
        )
    } else {
        let extra = got.difference(&want).next().map(|w| w.render(&pres.alphabet));
        let missing = want.difference(&got).next().map(|w| w.render(&pres.alphabet));
        Finding::new(
            ClaimVerdict::Refuted,
            format!("normal words differ from the stated basis: extra {extra:?}, missing {missing:?}"),
        )
    };
    Ok(conf.and(basis))
}

pub(super) fn render_counts(counts: &[u128]) -> String {
    counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

pub(super) fn all_words(letters: u16, max_deg: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_deg {
        let mut next = Vec::with_capacity(layer.len() * letters as usize);
        for w in &layer {
            for g in 0..letters {
                next.push(w.concat(&Word::letter(g)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Maps a probe result to a finding, given the verdict the claim predicts.
pub(super) fn probe(r: ProbeResult, expected: ProbeVerdict) -> Finding {
    let verdict = match (r.verdict, expected) {
        (v, e) if v == e => match v {
            ProbeVerdict::ConsistentWithClaim => ClaimVerdict::ConsistentWithClaim,
            ProbeVerdict::FiniteDimensionCertified => ClaimVerdict::FiniteDimensionCertified,
            // a certified kernel vector proves non-injectivity
            ProbeVerdict::CounterexampleFound => ClaimVerdict::Verified,
            ProbeVerdict::Inconclusive => ClaimVerdict::Inconclusive,
        },
        (ProbeVerdict::CounterexampleFound, _) => ClaimVerdict::Refuted,
        _ => ClaimVerdict::Inconclusive,
    };
    let mut detail = format!("{}: {}; evidence {}", r.name, r.verdict, r.evidence);
    if let Some(w) = &r.witness {
        detail.push_str(&format!("; witness {w}"));
    }
    Finding::new(verdict, detail)
}
