//! Named presentations, derived elements and parameter dictionaries.

mod defs;
mod dictionary;
mod elements;

use std::collections::BTreeMap;
use std::fmt;

pub use defs::{downup_relation_texts, entries, CatalogEntry};
pub use dictionary::{dictionary_names, downup_bindings, downup_params_for};
pub use elements::{derived_element, element_names};

use crate::coeff::{CoeffError, ParamSet, RatFunc};
use crate::freealg::{FreeAlgError, GenAlphabet, MonomialOrder, NcPoly};
use crate::lang::{parse_poly, LangError};
use crate::rewrite::{RewriteError, RewriteSystem};

/// Parameter name to value. Parameters without a binding stay symbolic.
pub type Bindings = BTreeMap<String, RatFunc>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown presentation `{0}`")]
    UnknownName(String),
    #[error("presentation `{presentation}` has no parameter `{param}`")]
    UnknownParam { presentation: String, param: String },
    #[error("no element `{element}` in `{presentation}`")]
    UnknownElement { element: String, presentation: String },
    #[error("unknown parameter dictionary `{0}`")]
    UnknownDictionary(String),
    #[error("relation {index} of `{presentation}` is zero")]
    ZeroRelation { presentation: String, index: usize },
    #[error("in `{presentation}`: {source}")]
    Parse {
        presentation: String,
        #[source]
        source: LangError,
    },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Matrix(#[from] crate::matrep::MatError),
}

/// Generators, parameters, relations and a default order.
///
/// Every relation is stored as a single polynomial `lhs - rhs`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub alphabet: GenAlphabet,
    pub params: ParamSet,
    /// Parameters the presentation is stated in, before any binding.
    pub parameters: Vec<String>,
    pub relations: Vec<NcPoly>,
    pub order: MonomialOrder,
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        alphabet: GenAlphabet,
        params: ParamSet,
        parameters: Vec<String>,
        relations: Vec<NcPoly>,
        order: MonomialOrder,
    ) -> Result<Self, CatalogError> {
        let name = name.into();
        for p in &parameters {
            if params.index_of(p).is_none() {
                return Err(CatalogError::UnknownParam {
                    presentation: name,
                    param: p.clone(),
                });
            }
        }
        let mut lifted = Vec::with_capacity(relations.len());
        for (index, r) in relations.into_iter().enumerate() {
            if r.is_zero() {
                return Err(CatalogError::ZeroRelation {
                    presentation: name,
                    index,
                });
            }
            if r.alphabet() != &alphabet {
                return Err(FreeAlgError::AlphabetMismatch.into());
            }
            lifted.push(r.lift_params(&params)?);
        }
        Ok(Presentation {
            name,
            alphabet,
            params,
            parameters,
            relations: lifted,
            order,
        })
    }

    /// Parses relation texts over the standard parameter set.
    pub fn from_texts<S: AsRef<str>>(
        name: &str,
        alphabet: GenAlphabet,
        parameters: &[&str],
        texts: &[S],
        order: MonomialOrder,
    ) -> Result<Self, CatalogError> {
        let params = ParamSet::standard();
        let mut relations = Vec::with_capacity(texts.len());
        for t in texts {
            let p = parse_poly(t.as_ref(), &alphabet, &params).map_err(|source| CatalogError::Parse {
                presentation: name.to_string(),
                source,
            })?;
            relations.push(p);
        }
        Presentation::new(
            name,
            alphabet,
            params,
            parameters.iter().map(|s| s.to_string()).collect(),
            relations,
            order,
        )
    }

    /// Substitutes parameter values into every relation.
    pub fn bind(&self, bindings: &Bindings) -> Result<Presentation, CatalogError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        for k in bindings.keys() {
            if !self.parameters.contains(k) {
                return Err(CatalogError::UnknownParam {
                    presentation: self.name.clone(),
                    param: k.clone(),
                });
            }
        }
        let mut relations = Vec::with_capacity(self.relations.len());
        for (index, r) in self.relations.iter().enumerate() {
            let s = r.compose_params(bindings)?.lift_params(&self.params)?;
            if s.is_zero() {
                return Err(CatalogError::ZeroRelation {
                    presentation: self.name.clone(),
                    index,
                });
            }
            relations.push(s);
        }
        Ok(Presentation {
            relations,
            ..self.clone()
        })
    }

    pub fn with_order(&self, order: MonomialOrder) -> Presentation {
        Presentation { order, ..self.clone() }
    }

    pub fn renamed(&self, name: impl Into<String>) -> Presentation {
        Presentation {
            name: name.into(),
            ..self.clone()
        }
    }

    /// Oriented, interreduced rewriting system under the default order.
    pub fn system(&self) -> Result<RewriteSystem, RewriteError> {
        RewriteSystem::orient(&self.alphabet, &self.params, &self.relations, &self.order)
    }

    pub fn system_tracked(&self) -> Result<RewriteSystem, RewriteError> {
        RewriteSystem::orient_tracked(&self.alphabet, &self.params, &self.relations, &self.order)
    }

    pub fn generator(&self, name: &str) -> Result<NcPoly, CatalogError> {
        Ok(NcPoly::generator(&self.alphabet, &self.params, name)?)
    }

    pub fn generators(&self) -> Vec<NcPoly> {
        (0..self.alphabet.len() as u16)
            .map(|g| NcPoly::word(&self.alphabet, &self.params, crate::freealg::Word::letter(g)))
            .collect()
    }

    /// Parses an expression over this presentation's generators.
    pub fn parse(&self, text: &str) -> Result<NcPoly, CatalogError> {
        parse_poly(text, &self.alphabet, &self.params).map_err(|source| CatalogError::Parse {
            presentation: self.name.clone(),
            source,
        })
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().map(|r| r.degree()).max().unwrap_or(0)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.name)?;
        writeln!(f, "  generators: {}", self.alphabet.names().join(", "))?;
        if !self.parameters.is_empty() {
            writeln!(f, "  parameters: {}", self.parameters.join(", "))?;
        }
        writeln!(
            f,
            "  order: {}",
            self.order.precedence_names(&self.alphabet).join(" < ")
        )?;
        writeln!(f, "  relations:")?;
        for r in &self.relations {
            writeln!(f, "    {r}")?;
        }
        Ok(())
    }
}

/// Builds a catalog presentation with the given parameter values.
pub fn make(name: &str, bindings: &Bindings) -> Result<Presentation, CatalogError> {
    defs::build(name)?.bind(bindings)
}

/// Builds a catalog presentation with every parameter symbolic.
pub fn make_symbolic(name: &str) -> Result<Presentation, CatalogError> {
    defs::build(name)
}

/// Convenience for building bindings from `(name, expression)` pairs over
/// the standard parameter set.
pub fn bindings(pairs: &[(&str, &str)]) -> Result<Bindings, CatalogError> {
    let params = ParamSet::standard();
    let mut out = Bindings::new();
    for (k, v) in pairs {
        let r = crate::lang::parse_ratfunc(v, &params).map_err(|source| CatalogError::Parse {
            presentation: format!("binding {k}"),
            source,
        })?;
        out.insert(k.to_string(), r);
    }
    Ok(out)
}

/// The Cartan matrix of type A2^(1).
pub fn cartan_a21() -> [[i64; 3]; 3] {
    [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
}

#[cfg(test)]
mod tests;
