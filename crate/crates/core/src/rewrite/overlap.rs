use std::collections::BTreeSet;

use rayon::prelude::*;

use super::system::{cert_add_scaled, cert_sub, lin_add, lin_sub, Cert, Lin, Origin};
use super::{RewriteError, RewriteSystem, Status};
use crate::coeff::RatFunc;
use crate::freealg::{NcPoly, Word};
use crate::report::{CheckReport, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OverlapKind {
    /// A proper suffix of the left rule's lhs is a proper prefix of the right one's.
    Overlap,
    /// The right rule's lhs occurs inside the left rule's lhs.
    Inclusion,
}

/// An ambiguity between two rules; `offset` is where the right rule's lhs
/// starts inside `word`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap {
    pub left: usize,
    pub right: usize,
    pub offset: usize,
    pub kind: OverlapKind,
    pub word: Word,
}

/// Both reductions of an ambiguity word.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub overlap: Overlap,
    pub via_left: NcPoly,
    pub via_right: NcPoly,
}

impl Resolution {
    pub fn resolves(&self) -> bool {
        self.via_left == self.via_right
    }
}

/// Statistics and added rules of a completion run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionReport {
    pub status: Status,
    pub max_deg: usize,
    pub rules_before: usize,
    pub rules_after: usize,
    pub overlaps_examined: usize,
    /// Rules present at the end that were not rules of the starting system.
    pub added: Vec<String>,
    /// Ambiguity words longer than `max_deg` left unexamined during the run.
    pub skipped_beyond_degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionOptions {
    pub max_deg: usize,
    pub max_rules: usize,
}

impl CompletionOptions {
    pub fn new(max_deg: usize) -> Self {
        CompletionOptions {
            max_deg,
            max_rules: 5000,
        }
    }
}

type Pending = (Word, usize, usize, usize, OverlapKind);

impl RewriteSystem {
    fn pair_overlaps(&self, i: usize, j: usize, out: &mut Vec<Pending>) {
        let a = self.rules[i].as_ref().unwrap().lhs.letters();
        let b = self.rules[j].as_ref().unwrap().lhs.letters();
        for k in 1..a.len().min(b.len()) {
            if a[a.len() - k..] == b[..k] {
                let mut w = a.to_vec();
                w.extend_from_slice(&b[k..]);
                out.push((Word::from(w), i, j, a.len() - k, OverlapKind::Overlap));
            }
        }
        if i != j && b.len() <= a.len() {
            for p in 0..=a.len() - b.len() {
                if a[p..p + b.len()] == *b {
                    out.push((Word::from(a.to_vec()), i, j, p, OverlapKind::Inclusion));
                }
            }
        }
    }

    fn all_pending(&self) -> Vec<Pending> {
        let ids = self.rule_ids();
        let mut out = Vec::new();
        for &i in &ids {
            for &j in &ids {
                self.pair_overlaps(i, j, &mut out);
            }
        }
        out.sort();
        out
    }

    fn pending_to_overlap(&self, p: &Pending) -> Overlap {
        Overlap {
            left: p.1,
            right: p.2,
            offset: p.3,
            kind: p.4,
            word: self.unrank_word(&p.0),
        }
    }

    /// Every overlap and inclusion ambiguity among the rules, once each,
    /// sorted by ambiguity word in the system order.
    pub fn enumerate_overlaps(&self) -> Vec<Overlap> {
        self.all_pending().iter().map(|p| self.pending_to_overlap(p)).collect()
    }

    /// Reduces the ambiguity word once by each rule and then to normal form.
    /// With `track`, also returns certificates of `word - result` for both sides.
    fn resolve_pending(&self, p: &Pending, track: bool) -> (Lin, Lin, Option<(Cert, Cert)>) {
        let (word, i, j, offset, _) = p;
        let w = word.letters();
        let ri = self.rules[*i].as_ref().unwrap();
        let rj = self.rules[*j].as_ref().unwrap();

        let one = RatFunc::one(&self.params);
        let mut s1 = Lin::new();
        let v1 = &w[ri.lhs.len()..];
        for (r, c) in &ri.rhs {
            let mut nw = r.letters().to_vec();
            nw.extend_from_slice(v1);
            lin_add(&mut s1, Word::from(nw), c.clone());
        }
        let mut s2 = Lin::new();
        let u2 = &w[..*offset];
        let v2 = &w[offset + rj.lhs.len()..];
        for (r, c) in &rj.rhs {
            let mut nw = u2.to_vec();
            nw.extend_from_slice(r.letters());
            nw.extend_from_slice(v2);
            lin_add(&mut s2, Word::from(nw), c.clone());
        }
        if track {
            let mut c1 = Cert::new();
            cert_add_scaled(&mut c1, ri.cert.as_ref().unwrap(), &one, &[], v1);
            let mut c2 = Cert::new();
            cert_add_scaled(&mut c2, rj.cert.as_ref().unwrap(), &one, u2, v2);
            let n1 = self.reduce(s1, Some(&mut c1));
            let n2 = self.reduce(s2, Some(&mut c2));
            (n1, n2, Some((c1, c2)))
        } else {
            (self.reduce(s1, None), self.reduce(s2, None), None)
        }
    }

    /// Reduces both sides of every ambiguity.
    pub fn resolve_overlaps(&self) -> Vec<Resolution> {
        let pending = self.all_pending();
        pending
            .par_iter()
            .map(|p| {
                let (a, b, _) = self.resolve_pending(p, false);
                Resolution {
                    overlap: self.pending_to_overlap(p),
                    via_left: self.poly_of_lin(&a),
                    via_right: self.poly_of_lin(&b),
                }
            })
            .collect()
    }

    /// Confluence report without changing the status.
    pub fn confluence_report(&self) -> CheckReport {
        let mut report = CheckReport::new("confluence");
        for r in self.resolve_overlaps() {
            let al = &self.alphabet;
            let left = self.rules[r.overlap.left].as_ref().unwrap();
            let right = self.rules[r.overlap.right].as_ref().unwrap();
            let label = format!(
                "{} ({} / {})",
                r.overlap.word.render(al),
                self.unrank_word(&left.lhs).render(al),
                self.unrank_word(&right.lhs).render(al)
            );
            let outcome = if r.resolves() {
                Outcome::Verified
            } else {
                Outcome::Refuted {
                    witness: format!("{} vs {}", r.via_left, r.via_right),
                }
            };
            report.push(label, outcome);
        }
        report
    }

    /// Checks every ambiguity; on success the status becomes confluent.
    pub fn check_confluence(&mut self) -> CheckReport {
        let report = self.confluence_report();
        if report.is_verified() {
            self.status = Status::Confluent;
        }
        report
    }

    /// Degree-capped completion. Failing ambiguities are oriented as new
    /// rules in increasing ambiguity-word order; words longer than
    /// `opts.max_deg` are ignored.
    pub fn complete(&self, opts: CompletionOptions) -> Result<(RewriteSystem, CompletionReport), RewriteError> {
        let max_lhs = self.max_lhs_len();
        if opts.max_deg < max_lhs {
            return Err(RewriteError::DegreeBelowRules {
                max_deg: opts.max_deg,
                rule_deg: max_lhs,
            });
        }
        let mut sys = self.clone();
        let rules_before = sys.rule_count();
        let before: BTreeSet<String> = sys.rules().iter().map(|r| r.render()).collect();
        let track = sys.track;
        let mut pending: BTreeSet<Pending> = BTreeSet::new();
        let mut skipped = 0usize;
        let mut examined = 0usize;
        for p in sys.all_pending() {
            if p.0.len() <= opts.max_deg {
                pending.insert(p);
            } else {
                skipped += 1;
            }
        }
        let status = loop {
            while let Some(p) = pending.pop_first() {
                if sys.rules[p.1].is_none() || sys.rules[p.2].is_none() {
                    continue;
                }
                examined += 1;
                let (s1, s2, certs) = sys.resolve_pending(&p, track);
                let d = lin_sub(&s1, &s2);
                if d.is_empty() {
                    continue;
                }
                // word - s1 = c1 and word - s2 = c2, so s1 - s2 = c2 - c1
                let cert = certs.map(|(c1, c2)| cert_sub(&c2, &c1));
                let origin = Origin::Overlap(sys.unrank_word(&p.0));
                let created = sys.insert(vec![(d, cert, origin)], opts.max_rules)?;
                for n in created {
                    if sys.rules[n].is_none() {
                        continue;
                    }
                    let mut fresh = Vec::new();
                    for k in sys.rule_ids() {
                        sys.pair_overlaps(n, k, &mut fresh);
                        if k != n {
                            sys.pair_overlaps(k, n, &mut fresh);
                        }
                    }
                    for f in fresh {
                        if f.0.len() <= opts.max_deg {
                            pending.insert(f);
                        } else {
                            skipped += 1;
                        }
                    }
                }
            }
            // final sweep over the current rules guards against pairs whose
            // rules changed after they were examined
            let all = sys.all_pending();
            let failing: Vec<Pending> = all
                .par_iter()
                .filter(|p| {
                    let (a, b, _) = sys.resolve_pending(p, false);
                    a != b
                })
                .cloned()
                .collect();
            if failing.is_empty() {
                break Status::Confluent;
            }
            let low: Vec<Pending> = failing.into_iter().filter(|p| p.0.len() <= opts.max_deg).collect();
            if low.is_empty() {
                break Status::CompleteToDegree(opts.max_deg);
            }
            pending.extend(low);
        };
        sys.status = status;
        let added = sys
            .rules()
            .into_iter()
            .map(|r| r.render())
            .filter(|r| !before.contains(r))
            .collect();
        let report = CompletionReport {
            status,
            max_deg: opts.max_deg,
            rules_before,
            rules_after: sys.rule_count(),
            overlaps_examined: examined,
            added,
            skipped_beyond_degree: skipped,
        };
        Ok((sys, report))
    }
}
