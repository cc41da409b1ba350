use crate::freealg::{GenAlphabet, MonomialOrder};

use super::{cartan_a21, CatalogError, Presentation};

/// A catalog name with its parameters and a one-line description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameters: &'static [&'static str],
    pub summary: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "downup",
        parameters: &["a", "b", "g"],
        summary: "down-up algebra on A, B",
    },
    CatalogEntry {
        name: "z3downup",
        parameters: &["a", "b", "g"],
        summary: "Z3-symmetric down-up algebra on A, B, C",
    },
    CatalogEntry {
        name: "s_gamma",
        parameters: &["g"],
        summary: "one generator D with D^3 = g*D",
    },
    CatalogEntry {
        name: "weyl",
        parameters: &["theta"],
        summary: "Weyl algebra AB - BA = theta",
    },
    CatalogEntry {
        name: "z3weyl",
        parameters: &["theta"],
        summary: "Z3-symmetric Weyl algebra",
    },
    CatalogEntry {
        name: "qweyl",
        parameters: &["q", "theta"],
        summary: "q-Weyl algebra AB - qBA = theta",
    },
    CatalogEntry {
        name: "z3qweyl",
        parameters: &["q", "theta"],
        summary: "Z3-symmetric q-Weyl algebra",
    },
    CatalogEntry {
        name: "reduced",
        parameters: &["theta"],
        summary: "reduced Z3-symmetric down-up algebra",
    },
    CatalogEntry {
        name: "lie_L",
        parameters: &["g"],
        summary: "enveloping algebra of the Z3-symmetric down-up Lie algebra",
    },
    CatalogEntry {
        name: "kacmoody_a21",
        parameters: &[],
        summary: "enveloping algebra of the Kac-Moody algebra A2^(1)",
    },
    CatalogEntry {
        name: "uq_sl2_equitable",
        parameters: &["q"],
        summary: "equitable presentation of U_q(sl2)",
    },
    CatalogEntry {
        name: "kacmoody_plus",
        parameters: &[],
        summary: "Serre relations in e1, e2, e3 (positive part of A2^(1))",
    },
    CatalogEntry {
        name: "uq_a21",
        parameters: &["q"],
        summary: "quantized enveloping algebra U_q(A2^(1))",
    },
    CatalogEntry {
        name: "uq_a21_plus",
        parameters: &["q"],
        summary: "q-Serre relations in E1, E2, E3 (positive part of U_q(A2^(1)))",
    },
    CatalogEntry {
        name: "nbweyl_plus",
        parameters: &["q", "vt"],
        summary: "LR family NBWeyl+ (j, q) with vt formal",
    },
    CatalogEntry {
        name: "nbweyl_minus",
        parameters: &["q", "vt"],
        summary: "LR family NBWeyl- (j, q) with vt formal",
    },
    CatalogEntry {
        name: "nbweyl_minus_t",
        parameters: &["t"],
        summary: "LR family NBWeyl- (t)",
    },
    CatalogEntry {
        name: "nbg",
        parameters: &["q"],
        summary: "LR family NBG (q)",
    },
    CatalogEntry {
        name: "nbg1",
        parameters: &[],
        summary: "LR family NBG (1)",
    },
    CatalogEntry {
        name: "nbng",
        parameters: &["t"],
        summary: "LR family NBNG (t)",
    },
    CatalogEntry {
        name: "bip_t",
        parameters: &["t", "r0", "r1", "r2"],
        summary: "bipartite LR family B(t, r0, r1, r2)",
    },
    CatalogEntry {
        name: "bip_1",
        parameters: &["r0", "r1", "r2"],
        summary: "bipartite LR family B(1, r0, r1, r2)",
    },
    CatalogEntry {
        name: "bip_2",
        parameters: &["r0", "r1", "r2"],
        summary: "bipartite LR family B_2(r0, r1, r2); same relations as bip_1",
    },
    CatalogEntry {
        name: "u_sl2",
        parameters: &[],
        summary: "U(sl2) on the basis A, B, C from structure constants",
    },
    CatalogEntry {
        name: "u_sl3",
        parameters: &[],
        summary: "U(sl3) on the matrix-unit basis from structure constants",
    },
    CatalogEntry {
        name: "u_sl3_loop",
        parameters: &[],
        summary: "U(sl3 loop algebra), t-degrees -4..4",
    },
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

/// The six Z3-symmetric down-up relations with coefficient texts spliced in.
pub fn downup_relation_texts(alpha: &str, beta: &str, gamma: &str) -> Vec<String> {
    let shapes = [
        ("B*A^2", "A*B*A", "A^2*B", "A"),
        ("B^2*A", "B*A*B", "A*B^2", "B"),
        ("C*B^2", "B*C*B", "B^2*C", "B"),
        ("C^2*B", "C*B*C", "B*C^2", "C"),
        ("A*C^2", "C*A*C", "C^2*A", "C"),
        ("A^2*C", "A*C*A", "C*A^2", "A"),
    ];
    shapes
        .iter()
        .map(|(l, x, y, z)| format!("{l} - ({alpha})*{x} - ({beta})*{y} - ({gamma})*{z}"))
        .collect()
}

fn abc() -> GenAlphabet {
    GenAlphabet::new(&["A", "B", "C"]).expect("static alphabet")
}

fn ab() -> GenAlphabet {
    GenAlphabet::new(&["A", "B"]).expect("static alphabet")
}

fn texts(name: &str, alphabet: GenAlphabet, params: &[&str], rels: &[String]) -> Result<Presentation, CatalogError> {
    let order = MonomialOrder::declaration(&alphabet);
    Presentation::from_texts(name, alphabet, params, rels, order)
}

fn owned(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub(super) fn build(name: &str) -> Result<Presentation, CatalogError> {
    match name {
        "downup" => texts(
            name,
            ab(),
            &["a", "b", "g"],
            &owned(&["B*A^2 - a*A*B*A - b*A^2*B - g*A", "B^2*A - a*B*A*B - b*A*B^2 - g*B"]),
        ),
        "z3downup" => texts(name, abc(), &["a", "b", "g"], &downup_relation_texts("a", "b", "g")),
        "s_gamma" => texts(name, GenAlphabet::new(&["D"])?, &["g"], &owned(&["D^3 - g*D"])),
        "weyl" => texts(name, ab(), &["theta"], &owned(&["A*B - B*A - theta"])),
        "z3weyl" => texts(
            name,
            abc(),
            &["theta"],
            &owned(&["A*B - B*A - theta", "B*C - C*B - theta", "C*A - A*C - theta"]),
        ),
        "qweyl" => texts(name, ab(), &["q", "theta"], &owned(&["A*B - q*B*A - theta"])),
        "z3qweyl" => texts(
            name,
            abc(),
            &["q", "theta"],
            &owned(&["A*B - q*B*A - theta", "B*C - q*C*B - theta", "C*A - q*A*C - theta"]),
        ),
        "reduced" => texts(
            name,
            abc(),
            &["theta"],
            &owned(&[
                "A^2",
                "B^2",
                "C^2",
                "A*B*A - theta*A",
                "B*C*B - theta*B",
                "C*A*C - theta*C",
                "B*A*B - theta*B",
                "C*B*C - theta*C",
                "A*C*A - theta*A",
            ]),
        ),
        "lie_L" => texts(
            name,
            abc(),
            &["g"],
            &owned(&[
                "[A,[A,B]] - g*A",
                "[B,[B,A]] - g*B",
                "[B,[B,C]] - g*B",
                "[C,[C,B]] - g*C",
                "[C,[C,A]] - g*C",
                "[A,[A,C]] - g*A",
            ]),
        ),
        "kacmoody_a21" => kac_moody(),
        "uq_sl2_equitable" => uq_sl2(),
        "uq_a21" => uq_a21(),
        "kacmoody_plus" => texts(name, GenAlphabet::new(&["e1", "e2", "e3"])?, &[], &serre("e", None)),
        "uq_a21_plus" => texts(
            name,
            GenAlphabet::new(&["E1", "E2", "E3"])?,
            &["q"],
            &serre("E", Some("q + q^-1")),
        ),
        "nbweyl_plus" | "nbweyl_minus" => texts(
            name,
            abc(),
            &["q", "vt"],
            &owned(&[
                "q*A*B - q^-1*B*A - vt",
                "q*B*C - q^-1*C*B - vt",
                "q*C*A - q^-1*A*C - vt",
            ]),
        ),
        "nbweyl_minus_t" => texts(
            name,
            abc(),
            &["t"],
            &owned(&[
                "A*B - t*B*A - 2*t*(1 - t)^-1",
                "B*C - t*C*B - 2*t*(1 - t)^-1",
                "C*A - t*A*C - 2*t*(1 - t)^-1",
            ]),
        ),
        "nbg" => texts(
            name,
            abc(),
            &["q"],
            &downup_relation_texts("q^-2*(q + 1)", "-q^-3", "q^-2*(q + 1)"),
        ),
        "nbg1" => texts(name, abc(), &[], &downup_relation_texts("2", "-1", "2")),
        "nbng" => texts(name, abc(), &["t"], &downup_relation_texts("0", "t^-1", "t^-1 - 1")),
        "bip_t" => texts(name, abc(), &["t", "r0", "r1", "r2"], &bipartite("t")),
        "bip_1" | "bip_2" => texts(name, abc(), &["r0", "r1", "r2"], &bipartite("1")),
        "u_sl2" => Ok(crate::matrep::enveloping_sl2()?),
        "u_sl3" => Ok(crate::matrep::enveloping_sl3()?),
        "u_sl3_loop" => Ok(crate::matrep::enveloping_sl3_loop(4)?),
        _ => Err(CatalogError::UnknownName(name.to_string())),
    }
}

fn bipartite(t: &str) -> Vec<String> {
    let cycles = [("A", "B", "r0"), ("B", "C", "r1"), ("C", "A", "r2")];
    let mut out = Vec::new();
    for (x, y, r) in cycles {
        out.push(format!(
            "{x}^3*{y} + {x}^2*{y}*{x} - {t}*{x}*{y}*{x}^2 - {t}*{y}*{x}^3 - ({r} + {t}*{r}^-1)*{x}^2"
        ));
    }
    for (x, y, r) in cycles {
        out.push(format!(
            "{x}*{y}^3 + {y}*{x}*{y}^2 - {t}*{y}^2*{x}*{y} - {t}*{y}^3*{x} - ({r} + {t}*{r}^-1)*{y}^2"
        ));
    }
    out
}

/// Serre relations for the all-ones off-diagonal Cartan matrix: classical
/// `[x_i,[x_i,x_j]]` or, given the quantum coefficient, their q-analogues.
fn serre(x: &str, quantum: Option<&str>) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                out.push(match quantum {
                    None => format!("[{x}{i},[{x}{i},{x}{j}]]"),
                    Some(c) => format!("{x}{i}^2*{x}{j} - ({c})*{x}{i}*{x}{j}*{x}{i} + {x}{j}*{x}{i}^2"),
                });
            }
        }
    }
    out
}

fn kac_moody() -> Result<Presentation, CatalogError> {
    let names = ["f1", "f2", "f3", "h1", "h2", "h3", "e1", "e2", "e3"];
    let alphabet = GenAlphabet::new(&names)?;
    let c = cartan_a21();
    let mut rels = Vec::new();
    for i in 1..=3 {
        for j in (i + 1)..=3 {
            rels.push(format!("[h{i},h{j}]"));
        }
    }
    for i in 1..=3 {
        for j in 1..=3 {
            let cij = c[i - 1][j - 1];
            rels.push(format!("[h{i},e{j}] - ({cij})*e{j}"));
            rels.push(format!("[h{i},f{j}] + ({cij})*f{j}"));
            if i == j {
                rels.push(format!("[e{i},f{j}] - h{i}"));
            } else {
                rels.push(format!("[e{i},f{j}]"));
            }
        }
    }
    rels.extend(serre("e", None));
    rels.extend(serre("f", None));
    texts("kacmoody_a21", alphabet, &[], &rels)
}

fn uq_sl2() -> Result<Presentation, CatalogError> {
    let alphabet = GenAlphabet::with_inverses(&["x", "y", "yinv", "z"], &[("y", "yinv")])?;
    let order = MonomialOrder::with_precedence(&alphabet, &["y", "yinv", "x", "z"])?;
    // the last two are the first two conjugated by yinv
    let rels = owned(&[
        "q*x*y - q^-1*y*x - (q - q^-1)",
        "q*y*z - q^-1*z*y - (q - q^-1)",
        "q*z*x - q^-1*x*z - (q - q^-1)",
        "q*yinv*x - q^-1*x*yinv - (q - q^-1)*yinv*yinv",
        "q*z*yinv - q^-1*yinv*z - (q - q^-1)*yinv*yinv",
    ]);
    Presentation::from_texts("uq_sl2_equitable", alphabet, &["q"], &rels, order)
}

fn uq_a21() -> Result<Presentation, CatalogError> {
    let names = [
        "F1", "F2", "F3", "K1", "K1inv", "K2", "K2inv", "K3", "K3inv", "E1", "E2", "E3",
    ];
    let alphabet = GenAlphabet::with_inverses(&names, &[("K1", "K1inv"), ("K2", "K2inv"), ("K3", "K3inv")])?;
    let c = cartan_a21();
    let mut rels = Vec::new();
    for i in 1..=3 {
        for j in (i + 1)..=3 {
            rels.push(format!("K{i}*K{j} - K{j}*K{i}"));
        }
    }
    // K_i E_j K_i^-1 = q^C E_j, multiplied on the right by K_i
    for i in 1..=3 {
        for j in 1..=3 {
            let cij = c[i - 1][j - 1];
            rels.push(format!("K{i}*E{j} - q^{cij}*E{j}*K{i}"));
            rels.push(format!("K{i}*F{j} - q^{}*F{j}*K{i}", -cij));
        }
    }
    for i in 1..=3 {
        for j in 1..=3 {
            if i == j {
                rels.push(format!("(q - q^-1)*(E{i}*F{i} - F{i}*E{i}) - (K{i} - K{i}inv)"));
            } else {
                rels.push(format!("E{i}*F{j} - F{j}*E{i}"));
            }
        }
    }
    rels.extend(serre("E", Some("q + q^-1")));
    rels.extend(serre("F", Some("q + q^-1")));
    texts("uq_a21", alphabet, &["q"], &rels)
}
