//! JSON documents for presentations and homomorphism checks.
//!
//! Both carry a `format_version`; documents with any other version are
//! rejected rather than guessed at.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::catalog::{downup_bindings, make, Bindings, CatalogError, Presentation};
use crate::coeff::ParamSet;
use crate::freealg::{GenAlphabet, MonomialOrder};
use crate::homcheck::{Direction, GenMap, HomError};
use crate::matrep::{MatElt, MatError};

use super::{parse_poly, parse_ratfunc, LangError};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("format_version {found} is not supported (expected {FORMAT_VERSION})")]
    Version { found: u32 },
    #[error("{0}")]
    Invalid(String),
    #[error("relation {index}: {source}")]
    Relation {
        index: usize,
        #[source]
        source: LangError,
    },
    #[error(transparent)]
    Lang(#[from] LangError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Matrix(#[from] MatError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDecl {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse_of: Option<String>,
}

/// A presentation as written in a file. Parameters must come from the
/// standard parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub format_version: u32,
    pub name: String,
    #[serde(default)]
    pub params: Vec<String>,
    pub generators: Vec<GeneratorDecl>,
    /// Generator names, smallest first; declaration order when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
    pub relations: Vec<String>,
}

impl PresentationFile {
    pub fn from_presentation(p: &Presentation) -> Self {
        let names = p.alphabet.names();
        let generators = (0..names.len() as u16)
            .map(|g| GeneratorDecl {
                name: names[g as usize].clone(),
                // record each pair once, on the later generator
                inverse_of: p
                    .alphabet
                    .inverse_of(g)
                    .filter(|&h| h < g)
                    .map(|h| names[h as usize].clone()),
            })
            .collect();
        let order = p.order.precedence_names(&p.alphabet);
        PresentationFile {
            format_version: FORMAT_VERSION,
            name: p.name.clone(),
            params: p.parameters.clone(),
            generators,
            order: (order != names).then_some(order),
            relations: p.relations.iter().map(|r| r.render()).collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<Presentation, FileError> {
        check_version(self.format_version)?;
        let names: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        let pairs: Vec<(&str, &str)> = self
            .generators
            .iter()
            .filter_map(|g| g.inverse_of.as_deref().map(|h| (h, g.name.as_str())))
            .collect();
        let alphabet = GenAlphabet::with_inverses(&names, &pairs).map_err(LangError::from)?;
        let order = match &self.order {
            Some(prec) => MonomialOrder::with_precedence(&alphabet, prec).map_err(LangError::from)?,
            None => MonomialOrder::declaration(&alphabet),
        };
        let params = ParamSet::standard();
        for p in &self.params {
            if params.index_of(p).is_none() {
                return Err(FileError::Invalid(format!(
                    "parameter `{p}` is not one of {}",
                    params.names().join(", ")
                )));
            }
        }
        let relations = self
            .relations
            .iter()
            .enumerate()
            .map(|(index, t)| parse_poly(t, &alphabet, &params).map_err(|source| FileError::Relation { index, source }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation::new(
            self.name.clone(),
            alphabet,
            params,
            self.params.clone(),
            relations,
            order,
        )?)
    }
}

/// Where a presentation comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum PresentationRef {
    /// A catalog entry, with parameter values as expressions.
    Catalog {
        name: String,
        #[serde(default)]
        bindings: BTreeMap<String, String>,
    },
    /// `z3downup` with the parameters of a named dictionary.
    Dictionary {
        name: String,
        #[serde(default)]
        bindings: BTreeMap<String, String>,
    },
    /// A presentation file, relative to the referring document.
    File {
        path: PathBuf,
    },
    Inline(PresentationFile),
}

impl PresentationRef {
    pub fn resolve(&self, base: &Path) -> Result<Presentation, FileError> {
        match self {
            PresentationRef::Catalog { name, bindings } => Ok(make(name, &parse_bindings(bindings)?)?),
            PresentationRef::Dictionary { name, bindings } => {
                Ok(make("z3downup", &downup_bindings(name, &parse_bindings(bindings)?)?)?)
            }
            PresentationRef::File { path } => load_presentation(&base.join(path)),
            PresentationRef::Inline(file) => file.to_presentation(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum TargetRef {
    Presentation(PresentationRef),
    /// `size` x `size` matrices over the standard parameter field.
    Matrices {
        size: usize,
    },
}

/// A generator image: an expression over the target, or the row-major
/// entries of a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ImageSpec {
    Expr(String),
    Matrix(Vec<String>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DirectionSpec {
    #[default]
    Homomorphism,
    Antihomomorphism,
}

impl From<DirectionSpec> for Direction {
    fn from(d: DirectionSpec) -> Direction {
        match d {
            DirectionSpec::Homomorphism => Direction::Homomorphism,
            DirectionSpec::Antihomomorphism => Direction::Antihomomorphism,
        }
    }
}

/// A homomorphism check: source, target, one image per source generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub format_version: u32,
    pub source: PresentationRef,
    pub target: TargetRef,
    pub images: Vec<ImageSpec>,
    #[serde(default)]
    pub direction: DirectionSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub completion_degree: Option<usize>,
}

impl CheckSpec {
    /// Builds the map; relative file references resolve against `base`.
    pub fn resolve(&self, base: &Path) -> Result<GenMap, FileError> {
        check_version(self.format_version)?;
        let source = self.source.resolve(base)?;
        let dir = self.direction.into();
        match &self.target {
            TargetRef::Presentation(r) => {
                let target = r.resolve(base)?;
                let texts = self
                    .images
                    .iter()
                    .map(|im| match im {
                        ImageSpec::Expr(t) => Ok(t.as_str()),
                        ImageSpec::Matrix(_) => Err(FileError::Invalid("matrix image for a presented target".into())),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(GenMap::from_texts(&source, &target, &texts, dir)?)
            }
            TargetRef::Matrices { size } => {
                let params = ParamSet::standard();
                let mats = self
                    .images
                    .iter()
                    .map(|im| match im {
                        ImageSpec::Matrix(entries) => Ok(MatElt::from_texts(*size, &params, entries)?),
                        ImageSpec::Expr(_) => Err(FileError::Invalid("expression image for a matrix target".into())),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(GenMap::matrix(&source, mats, dir)?)
            }
        }
    }
}

fn check_version(found: u32) -> Result<(), FileError> {
    if found == FORMAT_VERSION {
        Ok(())
    } else {
        Err(FileError::Version { found })
    }
}

pub fn parse_bindings(pairs: &BTreeMap<String, String>) -> Result<Bindings, FileError> {
    let params = ParamSet::standard();
    pairs
        .iter()
        .map(|(k, v)| Ok((k.clone(), parse_ratfunc(v, &params)?)))
        .collect()
}

fn read(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|e| FileError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, FileError> {
    serde_json::from_str(text).map_err(|e| FileError::Json(e.to_string()))
}

pub fn parse_presentation(text: &str) -> Result<Presentation, FileError> {
    from_json::<PresentationFile>(text)?.to_presentation()
}

pub fn load_presentation(path: &Path) -> Result<Presentation, FileError> {
    parse_presentation(&read(path)?)
}

pub fn save_presentation(p: &Presentation, path: &Path) -> Result<(), FileError> {
    let text = serde_json::to_string_pretty(&PresentationFile::from_presentation(p))
        .map_err(|e| FileError::Json(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| FileError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn load_check_spec(path: &Path) -> Result<(CheckSpec, GenMap), FileError> {
    let spec: CheckSpec = from_json(&read(path)?)?;
    let base = path.parent().unwrap_or(Path::new("."));
    let map = spec.resolve(base)?;
    Ok((spec, map))
}
