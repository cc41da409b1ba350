//! Checking that generator assignments extend to homomorphisms or
//! antihomomorphisms, composing assignments, and ideal inclusions.
//!
//! Reduction to zero certifies membership in the target ideal. A nonzero
//! residue refutes a claim only when the target system is confluent (or the
//! target is a matrix algebra); otherwise the outcome is inconclusive.

use rayon::prelude::*;

use crate::catalog::{CatalogError, Presentation};
use crate::freealg::{FreeAlgError, NcPoly};
use crate::matrep::{eval_ncpoly_indexed, MatElt, MatError};
use crate::report::{CheckReport, Outcome};
use crate::rewrite::{CompletionOptions, RewriteError, RewriteSystem, Status};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error("expected {expected} images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image of `{generator}` lives over a different alphabet than the target")]
    ImageAlphabet { generator: String },
    #[error("the target of the first map is not the source of the second")]
    CarrierMismatch,
    #[error("operation needs a presented target")]
    NotPresented,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Matrix(#[from] MatError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Homomorphism,
    Antihomomorphism,
}

impl Direction {
    pub fn is_anti(self) -> bool {
        self == Direction::Antihomomorphism
    }

    /// Direction of a composite: two reversals cancel.
    pub fn then(self, other: Direction) -> Direction {
        if self.is_anti() == other.is_anti() {
            Direction::Homomorphism
        } else {
            Direction::Antihomomorphism
        }
    }
}

#[derive(Clone, Debug)]
pub enum MapTarget {
    Presented { target: Presentation, images: Vec<NcPoly> },
    Matrix { images: Vec<MatElt> },
}

/// An assignment of an image to every generator of `source`.
#[derive(Clone, Debug)]
pub struct GenMap {
    pub source: Presentation,
    pub target: MapTarget,
    pub direction: Direction,
}

impl GenMap {
    pub fn presented(
        source: &Presentation,
        target: &Presentation,
        images: Vec<NcPoly>,
        direction: Direction,
    ) -> Result<GenMap, HomError> {
        check_count(source, images.len())?;
        for (g, im) in source.alphabet.names().iter().zip(&images) {
            if im.alphabet() != &target.alphabet {
                return Err(HomError::ImageAlphabet { generator: g.clone() });
            }
        }
        Ok(GenMap {
            source: source.clone(),
            target: MapTarget::Presented {
                target: target.clone(),
                images,
            },
            direction,
        })
    }

    /// Images given as expressions over the target's generators, in the
    /// source's generator order.
    pub fn from_texts<S: AsRef<str>>(
        source: &Presentation,
        target: &Presentation,
        images: &[S],
        direction: Direction,
    ) -> Result<GenMap, HomError> {
        let images = images
            .iter()
            .map(|t| target.parse(t.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::presented(source, target, images, direction)
    }

    pub fn matrix(source: &Presentation, images: Vec<MatElt>, direction: Direction) -> Result<GenMap, HomError> {
        check_count(source, images.len())?;
        Ok(GenMap {
            source: source.clone(),
            target: MapTarget::Matrix { images },
            direction,
        })
    }

    pub fn target_presentation(&self) -> Option<&Presentation> {
        match &self.target {
            MapTarget::Presented { target, .. } => Some(target),
            MapTarget::Matrix { .. } => None,
        }
    }

    /// Image of an element of the source's free algebra, unreduced.
    pub fn apply(&self, p: &NcPoly) -> Result<NcPoly, HomError> {
        match &self.target {
            MapTarget::Presented { images, .. } => Ok(p.substitute_generators(images, self.direction.is_anti())?),
            MapTarget::Matrix { .. } => Err(HomError::NotPresented),
        }
    }

    /// Image of an element as a matrix.
    pub fn apply_matrix(&self, p: &NcPoly) -> Result<MatElt, HomError> {
        match &self.target {
            MapTarget::Matrix { images } => {
                let p = if self.direction.is_anti() {
                    p.reversed()
                } else {
                    p.clone()
                };
                Ok(eval_ncpoly_indexed(&p, images)?)
            }
            MapTarget::Presented { .. } => Err(HomError::NotPresented),
        }
    }

    /// Largest image degree; zero for matrix targets.
    pub fn max_image_degree(&self) -> usize {
        match &self.target {
            MapTarget::Presented { images, .. } => images.iter().map(NcPoly::degree).max().unwrap_or(0),
            MapTarget::Matrix { .. } => 0,
        }
    }

    /// `2 +` the largest degree among source relations and images.
    pub fn default_completion_degree(&self) -> usize {
        2 + self.source.max_relation_degree().max(self.max_image_degree())
    }
}

fn check_count(source: &Presentation, found: usize) -> Result<(), HomError> {
    if found != source.alphabet.len() {
        return Err(HomError::ImageCount {
            expected: source.alphabet.len(),
            found,
        });
    }
    Ok(())
}

/// Reduces each polynomial to normal form, completing the system to
/// `completion_deg` only if some polynomial fails to reduce to zero.
fn reduce_all(
    polys: &[(String, NcPoly)],
    sys: &RewriteSystem,
    completion_deg: usize,
    title: &str,
    refute_on_confluent: bool,
) -> Result<CheckReport, HomError> {
    let first: Vec<NcPoly> = polys
        .par_iter()
        .map(|(_, p)| sys.normal_form(p))
        .collect::<Result<_, _>>()?;
    let completed = if first.iter().any(|r| !r.is_zero()) {
        let deg = completion_deg.max(sys.max_lhs_len());
        match sys.complete(CompletionOptions::new(deg)) {
            Ok((c, _)) => Some(c),
            Err(RewriteError::RuleCap(_)) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    let mut report = CheckReport::new(title);
    for ((label, p), r) in polys.iter().zip(first) {
        if r.is_zero() {
            report.push(label.clone(), Outcome::Verified);
            continue;
        }
        let (residue, status) = match &completed {
            Some(c) => (c.normal_form(p)?, c.status()),
            None => (r, sys.status()),
        };
        let outcome = if residue.is_zero() {
            Outcome::Verified
        } else if refute_on_confluent && status == Status::Confluent {
            Outcome::Refuted {
                witness: residue.to_string(),
            }
        } else {
            Outcome::Inconclusive {
                residue: residue.to_string(),
            }
        };
        report.push(label.clone(), outcome);
    }
    Ok(report)
}

fn relation_label(i: usize, r: &NcPoly) -> String {
    format!("relation {}: {r}", i + 1)
}

/// Checks every source relation under `m`, building the target system.
pub fn check_hom(m: &GenMap, completion_deg: Option<usize>) -> Result<CheckReport, HomError> {
    match &m.target {
        MapTarget::Presented { target, .. } => {
            let sys = target.system()?;
            check_hom_in(m, &sys, completion_deg)
        }
        MapTarget::Matrix { .. } => check_hom_matrix(m),
    }
}

/// As [`check_hom`], against an already oriented (possibly completed)
/// target system.
pub fn check_hom_in(m: &GenMap, sys: &RewriteSystem, completion_deg: Option<usize>) -> Result<CheckReport, HomError> {
    if matches!(m.target, MapTarget::Matrix { .. }) {
        return check_hom_matrix(m);
    }
    let images = m
        .source
        .relations
        .iter()
        .enumerate()
        .map(|(i, r)| Ok((relation_label(i, r), m.apply(r)?)))
        .collect::<Result<Vec<_>, HomError>>()?;
    let deg = completion_deg.unwrap_or_else(|| m.default_completion_degree());
    reduce_all(&images, sys, deg, &title(m), true)
}

fn title(m: &GenMap) -> String {
    let kind = match m.direction {
        Direction::Homomorphism => "homomorphism",
        Direction::Antihomomorphism => "antihomomorphism",
    };
    let target = m.target_presentation().map_or("matrices", |t| t.name.as_str());
    format!("{kind} {} -> {target}", m.source.name)
}

fn check_hom_matrix(m: &GenMap) -> Result<CheckReport, HomError> {
    let results: Vec<Result<MatElt, HomError>> = m.source.relations.par_iter().map(|r| m.apply_matrix(r)).collect();
    let mut report = CheckReport::new(title(m));
    for (i, (r, res)) in m.source.relations.iter().zip(results).enumerate() {
        let mat = res?;
        let outcome = if mat.is_zero() {
            Outcome::Verified
        } else {
            Outcome::Refuted {
                witness: mat.to_string(),
            }
        };
        report.push(relation_label(i, r), outcome);
    }
    Ok(report)
}

/// `m2 . m1`: apply `m1`, then `m2`, reducing the images in the target of
/// `m2`.
pub fn compose(m1: &GenMap, m2: &GenMap) -> Result<GenMap, HomError> {
    let mid = m1.target_presentation().ok_or(HomError::NotPresented)?;
    let end = m2.target_presentation().ok_or(HomError::NotPresented)?;
    if mid.alphabet != m2.source.alphabet {
        return Err(HomError::CarrierMismatch);
    }
    let MapTarget::Presented { images, .. } = &m1.target else {
        return Err(HomError::NotPresented);
    };
    let sys = end.system()?;
    let composed = images
        .iter()
        .map(|im| Ok(sys.normal_form(&m2.apply(im)?)?))
        .collect::<Result<Vec<_>, HomError>>()?;
    GenMap::presented(&m1.source, end, composed, m1.direction.then(m2.direction))
}

/// Checks `nf(image(g)) = nf(g)` for each generator of an endomorphism.
pub fn is_identity(m: &GenMap, completion_deg: Option<usize>) -> Result<CheckReport, HomError> {
    let target = m.target_presentation().ok_or(HomError::NotPresented)?;
    if target.alphabet != m.source.alphabet {
        return Err(HomError::CarrierMismatch);
    }
    let MapTarget::Presented { images, .. } = &m.target else {
        return Err(HomError::NotPresented);
    };
    let diffs = target
        .generators()
        .into_iter()
        .zip(images)
        .zip(target.alphabet.names())
        .map(|((g, im), name)| Ok((format!("{name} fixed"), im.try_sub(&g)?)))
        .collect::<Result<Vec<_>, HomError>>()?;
    let sys = target.system()?;
    let deg = completion_deg.unwrap_or_else(|| m.default_completion_degree());
    reduce_all(&diffs, &sys, deg, &format!("identity on {}", target.name), true)
}

/// Checks that two maps with the same source and target agree on every
/// generator and have the same direction.
pub fn agree_on_generators(m1: &GenMap, m2: &GenMap, completion_deg: Option<usize>) -> Result<CheckReport, HomError> {
    let (MapTarget::Presented { target, images: i1 }, MapTarget::Presented { images: i2, .. }) =
        (&m1.target, &m2.target)
    else {
        return Err(HomError::NotPresented);
    };
    if m1.source.alphabet != m2.source.alphabet
        || m2.target_presentation().map(|t| &t.alphabet) != Some(&target.alphabet)
    {
        return Err(HomError::CarrierMismatch);
    }
    let mut diffs = Vec::new();
    for ((a, b), name) in i1.iter().zip(i2).zip(m1.source.alphabet.names()) {
        diffs.push((format!("images of {name} agree"), a.try_sub(b)?));
    }
    let sys = target.system()?;
    let deg = completion_deg.unwrap_or_else(|| m1.default_completion_degree());
    let mut report = reduce_all(&diffs, &sys, deg, "maps agree", true)?;
    let outcome = if m1.direction == m2.direction {
        Outcome::Verified
    } else {
        Outcome::Refuted {
            witness: format!("{:?} vs {:?}", m1.direction, m2.direction),
        }
    };
    report.push("same direction", outcome);
    Ok(report)
}

/// Whether each of `relations` lies in the ideal of `target_sys`. Failure to
/// reduce is reported as inconclusive, never refuted.
pub fn ideal_implication(
    relations: &[NcPoly],
    target_sys: &RewriteSystem,
    completion_deg: usize,
) -> Result<CheckReport, HomError> {
    let polys: Vec<(String, NcPoly)> = relations
        .iter()
        .enumerate()
        .map(|(i, r)| (relation_label(i, r), r.clone()))
        .collect();
    reduce_all(&polys, target_sys, completion_deg, "ideal inclusion", false)
}

/// Two presentations on the same generator names define the same ideal:
/// each relation set reduces to zero modulo the other.
pub fn presentations_equal(
    p1: &Presentation,
    p2: &Presentation,
    completion_deg: usize,
) -> Result<CheckReport, HomError> {
    let mut report = CheckReport::new(format!("{} = {}", p1.name, p2.name));
    for (a, b) in [(p1, p2), (p2, p1)] {
        let rels = a
            .relations
            .iter()
            .map(|r| r.relabel(&b.alphabet).and_then(|r| r.lift_params(&b.params)))
            .collect::<Result<Vec<_>, _>>()?;
        let sub = ideal_implication(&rels, &b.system()?, completion_deg)?;
        report.extend_from(&format!("{} in {}: ", a.name, b.name), sub);
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
