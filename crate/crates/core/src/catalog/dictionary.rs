use crate::coeff::{ParamSet, RatFunc};
use crate::lang::parse_ratfunc;

use super::{Bindings, CatalogError};

/// `(name, alpha, beta, gamma)` written in the parameters the source uses.
const DICTIONARIES: &[(&str, &str, &str, &str)] = &[
    // elements A, B, C of a (Z3-symmetric) Weyl algebra
    ("weyl", "xi + 1", "-xi", "(xi - 1)*theta"),
    ("qweyl", "q*xi + q^-1", "-xi", "(xi - q^-1)*theta"),
    ("uq_sl2", "q^2 + xi", "-q^2*xi", "(1 - q^2)*(1 - xi)"),
    ("uq_sl2_nu", "q^3*(q + q^-1)", "-q^6", "q^3*(q - q^-1)*(q^2 - q^-2)"),
    ("uq_a21_kinv", "q^3*(q + q^-1)", "-q^6", "-xi*q^3*(q + q^-1)"),
    ("uq_a21_k", "q^-3*(q + q^-1)", "-q^-6", "-xi*q^-3*(q + q^-1)"),
    ("uq_a21_serre", "q + q^-1", "-1", "0"),
    ("nbg", "q^-2*(q + 1)", "-q^-3", "q^-2*(q + 1)"),
    ("nbg1", "2", "-1", "2"),
    ("nbng", "0", "t^-1", "t^-1 - 1"),
    ("sl2", "2", "-1", "2"),
    ("sl3", "2", "-1", "-2*xi"),
    ("loop", "2", "-1", "-2*xi"),
    ("kacmoody", "2", "-1", "-2*xi"),
    ("kacmoody_serre", "2", "-1", "0"),
    ("lie", "2", "-1", "g"),
    // qAB - q^-1 BA = vt is AB - q^-2 BA = q^-1 vt: the qweyl dictionary at q^-2
    ("nbweyl", "q^-2*xi + q^2", "-xi", "(xi - q^2)*q^-1*vt"),
    // AB - tBA = 2t/(1 - t): the qweyl dictionary at q = t
    ("nbweyl_t", "t*xi + t^-1", "-xi", "(xi - t^-1)*2*t*(1 - t)^-1"),
];

pub fn dictionary_names() -> Vec<&'static str> {
    DICTIONARIES.iter().map(|d| d.0).collect()
}

/// The down-up parameters `(alpha, beta, gamma)` of a named dictionary,
/// with `bindings` substituted.
pub fn downup_params_for(name: &str, bindings: &Bindings) -> Result<[RatFunc; 3], CatalogError> {
    let (_, a, b, g) = DICTIONARIES
        .iter()
        .find(|d| d.0 == name)
        .ok_or_else(|| CatalogError::UnknownDictionary(name.to_string()))?;
    let params = ParamSet::standard();
    let parse = |s: &str| {
        parse_ratfunc(s, &params).map_err(|source| CatalogError::Parse {
            presentation: format!("dictionary {name}"),
            source,
        })
    };
    let mut out = [parse(a)?, parse(b)?, parse(g)?];
    if !bindings.is_empty() {
        for r in out.iter_mut() {
            *r = r.compose(bindings)?.lift_to(&params)?;
        }
    }
    Ok(out)
}

/// Bindings `a, b, g` for `make("z3downup", ..)` from a dictionary.
pub fn downup_bindings(name: &str, bindings: &Bindings) -> Result<Bindings, CatalogError> {
    let [a, b, g] = downup_params_for(name, bindings)?;
    let mut out = Bindings::new();
    out.insert("a".into(), a);
    out.insert("b".into(), b);
    out.insert("g".into(), g);
    Ok(out)
}
