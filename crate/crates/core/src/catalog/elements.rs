use crate::freealg::NcPoly;

use super::{CatalogError, Presentation};

const ELEMENTS: &[(&str, &str, &str)] = &[
    ("uq_sl2_equitable", "nu_x", "q*(1 - y*z)"),
    ("uq_sl2_equitable", "nu_y", "q*(1 - z*x)"),
    ("uq_sl2_equitable", "nu_z", "q*(1 - x*y)"),
    ("uq_a21", "K", "K1*K2*K3"),
    ("uq_a21", "Kinv", "K1inv*K2inv*K3inv"),
    ("uq_a21", "A_kinv", "(E1 + xi*F2*K1inv*K2inv*K3inv)*K3"),
    ("uq_a21", "B_kinv", "(E2 + xi*F3*K1inv*K2inv*K3inv)*K1"),
    ("uq_a21", "C_kinv", "(E3 + xi*F1*K1inv*K2inv*K3inv)*K2"),
    ("uq_a21", "A_k", "(E1 + xi*F2*K1*K2*K3)*K3inv"),
    ("uq_a21", "B_k", "(E2 + xi*F3*K1*K2*K3)*K1inv"),
    ("uq_a21", "C_k", "(E3 + xi*F1*K1*K2*K3)*K2inv"),
    ("kacmoody_a21", "A_ef", "e1 + xi*f2"),
    ("kacmoody_a21", "B_ef", "e2 + xi*f3"),
    ("kacmoody_a21", "C_ef", "e3 + xi*f1"),
    ("kacmoody_a21", "h_sum", "h1 + h2 + h3"),
    ("weyl", "C_neg", "-A - B"),
    ("z3weyl", "C_neg", "-A - B"),
];

/// Names of the derived elements available in a presentation.
pub fn element_names(presentation: &str) -> Vec<String> {
    let mut out: Vec<String> = ELEMENTS
        .iter()
        .filter(|e| e.0 == presentation)
        .map(|e| e.1.to_string())
        .collect();
    if presentation == "reduced" {
        out.push("G+n, G-n (G in A, B, C; n >= 2)".to_string());
    }
    out
}

/// A named element of `pres` as a polynomial.
///
/// In `reduced`, `X+n` and `X-n` are the length-`n` words starting at `X`
/// that follow the cycle A -> B -> C -> A forwards or backwards.
pub fn derived_element(name: &str, pres: &Presentation) -> Result<NcPoly, CatalogError> {
    let unknown = || CatalogError::UnknownElement {
        element: name.to_string(),
        presentation: pres.name.clone(),
    };
    if let Some((_, _, text)) = ELEMENTS.iter().find(|e| e.0 == pres.name && e.1 == name) {
        return pres.parse(text);
    }
    if pres.name == "reduced" {
        let (word, _) = cyclic_word(name).ok_or_else(unknown)?;
        return pres.parse(&word);
    }
    Err(unknown())
}

fn cyclic_word(name: &str) -> Option<(String, usize)> {
    let mut chars = name.chars();
    let start = chars.next()?;
    let dir = chars.next()?;
    let n: usize = chars.as_str().parse().ok()?;
    let pos = "ABC".find(start)?;
    let step = match dir {
        '+' => 1,
        '-' => 2,
        _ => return None,
    };
    if n < 2 {
        return None;
    }
    let letters = ["A", "B", "C"];
    let word = (0..n)
        .map(|i| letters[(pos + i * step) % 3])
        .collect::<Vec<_>>()
        .join("*");
    Some((word, n))
}
