use std::collections::{BTreeMap, HashMap, VecDeque};

use super::{CertTerm, Certificate, RewriteError, Status};
use crate::coeff::{ParamSet, RatFunc};
use crate::freealg::{GenAlphabet, MonomialOrder, NcPoly, Word};

/// Linear combination of rank-space words. Because rank-space words compare
/// by length then lexicographically, the map order is the system's order.
pub(crate) type Lin = BTreeMap<Word, RatFunc>;

/// Ideal-membership certificate in rank space: `(relation, left, right) -> c`
/// stands for `c * left * g_relation * right`.
pub(crate) type Cert = BTreeMap<(usize, Word, Word), RatFunc>;

pub(crate) fn lin_add(lin: &mut Lin, w: Word, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match lin.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub(crate) fn lin_sub(a: &Lin, b: &Lin) -> Lin {
    let mut out = a.clone();
    for (w, c) in b {
        lin_add(&mut out, w.clone(), -c);
    }
    out
}

fn cert_add(dst: &mut Cert, key: (usize, Word, Word), c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match dst.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// `dst += c * u * src * v`.
pub(crate) fn cert_add_scaled(dst: &mut Cert, src: &Cert, c: &RatFunc, u: &[u16], v: &[u16]) {
    for ((i, l, r), x) in src {
        let mut left = u.to_vec();
        left.extend_from_slice(l.letters());
        let mut right = r.letters().to_vec();
        right.extend_from_slice(v);
        cert_add(dst, (*i, Word::from(left), Word::from(right)), x * c);
    }
}

pub(crate) fn cert_sub(a: &Cert, b: &Cert) -> Cert {
    let mut out = a.clone();
    for (k, x) in b {
        cert_add(&mut out, k.clone(), -x);
    }
    out
}

/// How a rule entered the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// Orientation of an input relation (index into the relation list).
    Relation(usize),
    /// Resolution of a failing ambiguity; the word is in generator letters.
    Overlap(Word),
}

#[derive(Clone, Debug)]
pub(crate) struct IRule {
    pub(crate) lhs: Word,
    pub(crate) rhs: Lin,
    pub(crate) cert: Option<Cert>,
    pub(crate) origin: Origin,
}

/// A rule `lhs -> rhs` expressed in generator letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub id: usize,
    pub lhs: Word,
    pub rhs: NcPoly,
    pub origin: Origin,
}

impl Rule {
    pub fn render(&self) -> String {
        format!("{} -> {}", self.lhs.render(self.rhs.alphabet()), self.rhs)
    }
}

/// An interreduced set of oriented rules over a fixed monomial order.
///
/// Internally every word is stored in rank space (letters replaced by their
/// precedence rank), which makes the derived word order the system order.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    pub(crate) alphabet: GenAlphabet,
    pub(crate) params: ParamSet,
    pub(crate) order: MonomialOrder,
    pub(crate) unrank: Vec<u16>,
    /// Input relations in rank space; certificates refer to these.
    pub(crate) relations: Vec<Lin>,
    pub(crate) rules: Vec<Option<IRule>>,
    pub(crate) index: HashMap<Vec<u16>, usize>,
    /// Distinct left-hand-side lengths, ascending.
    pub(crate) lens: Vec<usize>,
    pub(crate) status: Status,
    pub(crate) track: bool,
}

impl RewriteSystem {
    /// Orients and interreduces `relations`. Unit relations `g g^-1 - 1` and
    /// `g^-1 g - 1` are appended for every declared inverse pair that is not
    /// already listed.
    pub fn orient(
        alphabet: &GenAlphabet,
        params: &ParamSet,
        relations: &[NcPoly],
        order: &MonomialOrder,
    ) -> Result<Self, RewriteError> {
        Self::build(alphabet, params, relations, order, false)
    }

    /// As [`orient`](Self::orient), additionally recording for every rule an
    /// expression of `lhs - rhs` as a combination of the input relations.
    pub fn orient_tracked(
        alphabet: &GenAlphabet,
        params: &ParamSet,
        relations: &[NcPoly],
        order: &MonomialOrder,
    ) -> Result<Self, RewriteError> {
        Self::build(alphabet, params, relations, order, true)
    }

    fn build(
        alphabet: &GenAlphabet,
        params: &ParamSet,
        relations: &[NcPoly],
        order: &MonomialOrder,
        track: bool,
    ) -> Result<Self, RewriteError> {
        if order.ranks().len() != alphabet.len() {
            return Err(RewriteError::OrderMismatch);
        }
        let mut all: Vec<NcPoly> = Vec::with_capacity(relations.len());
        for r in relations {
            if !r.alphabet().names().eq(alphabet.names()) {
                return Err(RewriteError::AlphabetMismatch);
            }
            if r.is_zero() {
                return Err(RewriteError::ZeroRelation);
            }
            all.push(r.lift_params(params).map_err(|_| RewriteError::ParamMismatch)?);
        }
        for (g, h) in alphabet.inverse_pairs() {
            for (a, b) in [(g, h), (h, g)] {
                let unit = &NcPoly::word(alphabet, params, Word::from(vec![a, b])) - &NcPoly::one(alphabet, params);
                if !all.contains(&unit) {
                    all.push(unit);
                }
            }
        }
        let mut sys = RewriteSystem {
            alphabet: alphabet.clone(),
            params: params.clone(),
            order: order.clone(),
            unrank: order.precedence(),
            relations: Vec::new(),
            rules: Vec::new(),
            index: HashMap::new(),
            lens: Vec::new(),
            status: Status::Raw,
            track,
        };
        sys.relations = all.iter().map(|p| sys.to_lin(p)).collect::<Result<_, _>>()?;
        let work: Vec<(Lin, Option<Cert>, Origin)> = sys
            .relations
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let cert = track.then(|| {
                    let mut c = Cert::new();
                    cert_add(&mut c, (i, Word::empty(), Word::empty()), RatFunc::one(params));
                    c
                });
                (p.clone(), cert, Origin::Relation(i))
            })
            .collect();
        sys.insert(work, usize::MAX)?;
        Ok(sys)
    }

    pub fn alphabet(&self) -> &GenAlphabet {
        &self.alphabet
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_confluent(&self) -> bool {
        self.status == Status::Confluent
    }

    pub fn tracks_certificates(&self) -> bool {
        self.track
    }

    /// Input relations, including automatically added unit relations.
    pub fn relations(&self) -> Vec<NcPoly> {
        self.relations.iter().map(|l| self.poly_of_lin(l)).collect()
    }

    pub fn rule_count(&self) -> usize {
        self.rules.iter().filter(|r| r.is_some()).count()
    }

    /// Live rules in increasing order of left-hand side.
    pub fn rules(&self) -> Vec<Rule> {
        let mut out: Vec<(Word, Rule)> = self
            .rules
            .iter()
            .enumerate()
            .filter_map(|(id, r)| {
                r.as_ref().map(|r| {
                    (
                        r.lhs.clone(),
                        Rule {
                            id,
                            lhs: self.unrank_word(&r.lhs),
                            rhs: self.poly_of_lin(&r.rhs),
                            origin: r.origin.clone(),
                        },
                    )
                })
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.into_iter().map(|(_, r)| r).collect()
    }

    pub fn rule(&self, id: usize) -> Option<Rule> {
        self.rules.get(id)?.as_ref().map(|r| Rule {
            id,
            lhs: self.unrank_word(&r.lhs),
            rhs: self.poly_of_lin(&r.rhs),
            origin: r.origin.clone(),
        })
    }

    pub fn max_lhs_len(&self) -> usize {
        self.lens.last().copied().unwrap_or(0)
    }

    /// Normal form of `p`; deterministic leftmost reduction of the largest
    /// reducible word first.
    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly, RewriteError> {
        let params = self.result_params(p)?;
        let lin = self.to_lin(p)?;
        let out = self.reduce(lin, None);
        Ok(self.poly_of_lin_params(&out, &params))
    }

    /// True when `p` reduces to zero.
    pub fn reduces_to_zero(&self, p: &NcPoly) -> Result<bool, RewriteError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Normal form of a single word given in generator letters.
    pub fn normal_form_word(&self, w: &Word) -> NcPoly {
        let mut lin = Lin::new();
        lin.insert(self.rank_word(w), RatFunc::one(&self.params));
        self.poly_of_lin(&self.reduce(lin, None))
    }

    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.find_redex(self.rank_word(w).letters()).is_none()
    }

    pub(crate) fn result_params(&self, p: &NcPoly) -> Result<ParamSet, RewriteError> {
        if !p.alphabet().names().eq(self.alphabet.names()) {
            return Err(RewriteError::AlphabetMismatch);
        }
        if p.params() == &self.params || p.params().is_prefix_of(&self.params) {
            Ok(self.params.clone())
        } else if self.params.is_prefix_of(p.params()) {
            Ok(p.params().clone())
        } else {
            Err(RewriteError::ParamMismatch)
        }
    }

    pub(crate) fn rank_word(&self, w: &Word) -> Word {
        Word::from(self.order.to_ranks(w.letters()))
    }

    pub(crate) fn unrank_word(&self, w: &Word) -> Word {
        Word::from(w.letters().iter().map(|&r| self.unrank[r as usize]).collect::<Vec<_>>())
    }

    pub(crate) fn to_lin(&self, p: &NcPoly) -> Result<Lin, RewriteError> {
        if !p.alphabet().names().eq(self.alphabet.names()) {
            return Err(RewriteError::AlphabetMismatch);
        }
        let mut lin = Lin::new();
        for (w, c) in p.terms() {
            lin_add(&mut lin, self.rank_word(w), c.clone());
        }
        Ok(lin)
    }

    pub(crate) fn poly_of_lin(&self, lin: &Lin) -> NcPoly {
        self.poly_of_lin_params(lin, &self.params)
    }

    fn poly_of_lin_params(&self, lin: &Lin, params: &ParamSet) -> NcPoly {
        NcPoly::from_terms(
            &self.alphabet,
            params,
            lin.iter().map(|(w, c)| (self.unrank_word(w), c.clone())),
        )
    }

    /// Leftmost redex: `(position, rule id)`.
    pub(crate) fn find_redex(&self, w: &[u16]) -> Option<(usize, usize)> {
        let n = w.len();
        let min = *self.lens.first()?;
        if n < min {
            return None;
        }
        for i in 0..=n - min {
            for &len in &self.lens {
                if i + len > n {
                    break;
                }
                if let Some(&id) = self.index.get(&w[i..i + len]) {
                    return Some((i, id));
                }
            }
        }
        None
    }

    /// Reduces `queue` to normal form. When `cert` is given, accumulates
    /// `input - output` as a combination of input relations.
    pub(crate) fn reduce(&self, mut queue: Lin, mut cert: Option<&mut Cert>) -> Lin {
        let mut out = Lin::new();
        while let Some((w, c)) = queue.pop_last() {
            match self.find_redex(w.letters()) {
                None => {
                    out.insert(w, c);
                }
                Some((pos, id)) => {
                    let rule = self.rules[id].as_ref().expect("indexed rule is live");
                    let letters = w.letters();
                    let u = &letters[..pos];
                    let v = &letters[pos + rule.lhs.len()..];
                    for (r, rc) in &rule.rhs {
                        let mut nw = Vec::with_capacity(u.len() + r.len() + v.len());
                        nw.extend_from_slice(u);
                        nw.extend_from_slice(r.letters());
                        nw.extend_from_slice(v);
                        lin_add(&mut queue, Word::from(nw), &c * rc);
                    }
                    if let Some(cert) = cert.as_deref_mut() {
                        let rc = rule.cert.as_ref().expect("tracked system keeps certificates");
                        cert_add_scaled(cert, rc, &c, u, v);
                    }
                }
            }
        }
        out
    }

    /// Adds polynomials as rules, keeping the system interreduced. Returns
    /// the ids of rules created (some may since have been removed).
    pub(crate) fn insert(
        &mut self,
        work: Vec<(Lin, Option<Cert>, Origin)>,
        max_rules: usize,
    ) -> Result<Vec<usize>, RewriteError> {
        let mut queue: VecDeque<(Lin, Option<Cert>, Origin)> = work.into();
        let mut created = Vec::new();
        while let Some((p, cert, origin)) = queue.pop_front() {
            let mut red_cert = cert.as_ref().map(|_| Cert::new());
            let r = self.reduce(p, red_cert.as_mut());
            if r.is_empty() {
                continue;
            }
            let cert = match (cert, red_cert) {
                (Some(c), Some(rc)) => Some(cert_sub(&c, &rc)),
                _ => None,
            };
            let (lead, lc) = r.iter().next_back().map(|(w, c)| (w.clone(), c.clone())).unwrap();
            let inv = lc.inv().expect("nonzero leading coefficient");
            let mut rhs = Lin::new();
            for (w, c) in r.iter() {
                if *w != lead {
                    lin_add(&mut rhs, w.clone(), -(c * &inv));
                }
            }
            let cert = cert.map(|c| c.into_iter().map(|(k, x)| (k, &x * &inv)).collect::<Cert>());

            // rules whose lhs contains the new lhs are superseded
            let stale: Vec<usize> = self
                .rules
                .iter()
                .enumerate()
                .filter_map(|(id, r)| r.as_ref().filter(|r| r.lhs.contains(&lead)).map(|_| id))
                .collect();
            for id in stale {
                let old = self.remove_rule(id);
                let mut poly = old.rhs.clone();
                for v in poly.values_mut() {
                    *v = -&*v;
                }
                lin_add(&mut poly, old.lhs.clone(), RatFunc::one(&self.params));
                queue.push_back((poly, old.cert, old.origin));
            }

            let id = self.rules.len();
            self.index.insert(lead.letters().to_vec(), id);
            if let Err(pos) = self.lens.binary_search(&lead.len()) {
                self.lens.insert(pos, lead.len());
            }
            self.rules.push(Some(IRule {
                lhs: lead.clone(),
                rhs,
                cert,
                origin,
            }));
            created.push(id);

            // right-hand sides mentioning the new lhs are renormalized
            let touched: Vec<usize> = self
                .rules
                .iter()
                .enumerate()
                .filter_map(|(rid, r)| {
                    r.as_ref()
                        .filter(|r| rid != id && r.rhs.keys().any(|w| w.contains(&lead)))
                        .map(|_| rid)
                })
                .collect();
            for rid in touched {
                let old_rhs = self.rules[rid].as_ref().unwrap().rhs.clone();
                let mut rc = self.track.then(Cert::new);
                let new_rhs = self.reduce(old_rhs, rc.as_mut());
                let rule = self.rules[rid].as_mut().unwrap();
                rule.rhs = new_rhs;
                if let (Some(c), Some(rc)) = (rule.cert.as_mut(), rc) {
                    // lhs - nf(rhs) = (lhs - rhs) + (rhs - nf(rhs))
                    for (k, x) in rc {
                        cert_add(c, k, x);
                    }
                }
            }
            if self.rule_count() > max_rules {
                return Err(RewriteError::RuleCap(max_rules));
            }
        }
        self.status = Status::Raw;
        Ok(created)
    }

    fn remove_rule(&mut self, id: usize) -> IRule {
        let rule = self.rules[id].take().expect("rule is live");
        self.index.remove(rule.lhs.letters());
        let len = rule.lhs.len();
        if !self.index.keys().any(|k| k.len() == len) {
            self.lens.retain(|&l| l != len);
        }
        rule
    }

    /// The recorded certificate of a rule, in generator letters.
    pub fn certificate(&self, id: usize) -> Option<Certificate> {
        let rule = self.rules.get(id)?.as_ref()?;
        let cert = rule.cert.as_ref()?;
        Some(Certificate {
            terms: cert
                .iter()
                .map(|((i, l, r), c)| CertTerm {
                    relation: *i,
                    left: self.unrank_word(l),
                    right: self.unrank_word(r),
                    coeff: c.clone(),
                })
                .collect(),
        })
    }

    /// Expands the certificate of rule `id` in the free algebra and compares
    /// it with `lhs - rhs`. `None` when no certificate was recorded.
    pub fn verify_certificate(&self, id: usize) -> Option<bool> {
        let rule = self.rules.get(id)?.as_ref()?;
        let cert = rule.cert.as_ref()?;
        let mut total = Lin::new();
        for ((i, l, r), c) in cert {
            for (w, x) in &self.relations[*i] {
                let word = l.concat(w).concat(r);
                lin_add(&mut total, word, x * c);
            }
        }
        let mut expect = Lin::new();
        lin_add(&mut expect, rule.lhs.clone(), RatFunc::one(&self.params));
        for (w, c) in &rule.rhs {
            lin_add(&mut expect, w.clone(), -c);
        }
        Some(total == expect)
    }

    /// Ids of live rules.
    pub fn rule_ids(&self) -> Vec<usize> {
        self.rules
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().map(|_| i))
            .collect()
    }
}
