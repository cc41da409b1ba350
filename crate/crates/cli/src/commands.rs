use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use z3du::catalog::{dictionary_names, downup_bindings, downup_params_for, entries, make, Bindings, Presentation};
use z3du::claims::{self, ClaimReport};
use z3du::coeff::ParamSet;
use z3du::freealg::MonomialOrder;
use z3du::homcheck::{check_hom, MapTarget};
use z3du::lang::{load_check_spec, load_presentation, parse_ratfunc, save_presentation, PresentationFile};
use z3du::probes::{
    probe_finite_dimension, probe_infinite_dimension, probe_injectivity, probe_lie_injectivity, ProbeResult,
};
use z3du::rewrite::{CompletionOptions, RewriteSystem};

use crate::{Command, Format, PresArgs, PresentAction, ProbeKind};

/// A command's result in both renderings.
pub struct Output {
    text: String,
    json: Value,
    pub failed: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            failed: false,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => format!(
                "{}\n",
                serde_json::to_string_pretty(&self.json).expect("values serialize")
            ),
        }
    }
}

pub fn run(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Present { action } => present(action),
        Command::Nf { source, exprs, max_deg } => nf(&source, &exprs, max_deg),
        Command::Complete { source, max_deg, rules } => complete(&source, max_deg, rules),
        Command::Basis { source, max_deg } => basis(&source, max_deg),
        Command::Hilbert { source, max_deg } => hilbert(&source, max_deg),
        Command::Homcheck { spec, completion_deg } => homcheck(&spec, completion_deg),
        Command::Probe { kind } => probe(kind),
        Command::VerifyClaims { scopes, list } => verify(&scopes, list),
    }
}

fn parse_binds(binds: &[String]) -> Result<Bindings> {
    let params = ParamSet::standard();
    let mut out = Bindings::new();
    for b in binds {
        let (k, v) = b
            .split_once('=')
            .ok_or_else(|| anyhow!("binding `{b}` is not of the form name=value"))?;
        let r = parse_ratfunc(v.trim(), &params).with_context(|| format!("binding `{b}`"))?;
        out.insert(k.trim().to_string(), r);
    }
    Ok(out)
}

fn load(args: &PresArgs) -> Result<Presentation> {
    let binds = parse_binds(&args.binds)?;
    let p = if let Some(name) = &args.pres {
        make(name, &binds)?
    } else if let Some(dict) = &args.dict {
        make("z3downup", &downup_bindings(dict, &binds)?)?.renamed(format!("z3downup[{dict}]"))
    } else if let Some(path) = &args.file {
        let p = load_presentation(path)?;
        if binds.is_empty() {
            p
        } else {
            p.bind(&binds)?
        }
    } else {
        bail!("give one of --pres, --dict or --file");
    };
    Ok(match &args.order {
        Some(o) => {
            let names: Vec<&str> = o.split(',').map(str::trim).collect();
            let order = MonomialOrder::with_precedence(&p.alphabet, &names)?;
            p.with_order(order)
        }
        None => p,
    })
}

/// The system of `p`, confluence-checked, completed to `max_deg` when given
/// or when the raw system is not confluent and a degree is known.
fn system(p: &Presentation, complete_to: Option<usize>) -> Result<RewriteSystem> {
    let mut sys = p.system()?;
    sys.check_confluence();
    if let Some(d) = complete_to {
        if !sys.is_confluent() {
            sys = sys.complete(CompletionOptions::new(d.max(sys.max_lhs_len())))?.0;
        }
    }
    Ok(sys)
}

fn present(action: PresentAction) -> Result<Output> {
    match action {
        PresentAction::List => {
            let mut text = String::from("presentations:\n");
            let mut pres = Vec::new();
            for e in entries() {
                let params = e.parameters.join(", ");
                writeln!(text, "  {:<18} [{params}]  {}", e.name, e.summary)?;
                pres.push(json!({"name": e.name, "parameters": e.parameters, "summary": e.summary}));
            }
            text.push_str("dictionaries (alpha, beta, gamma of z3downup):\n");
            let mut dicts = Vec::new();
            for d in dictionary_names() {
                let [a, b, g] = downup_params_for(d, &Bindings::new())?;
                writeln!(text, "  {d:<18} ({a}, {b}, {g})")?;
                dicts.push(json!({"name": d, "alpha": a.to_string(), "beta": b.to_string(), "gamma": g.to_string()}));
            }
            Ok(Output::new(text, json!({"presentations": pres, "dictionaries": dicts})))
        }
        PresentAction::Show { source, save } => {
            let p = load(&source)?;
            if let Some(path) = &save {
                save_presentation(&p, path)?;
            }
            Ok(show(&p))
        }
        PresentAction::Load { path } => Ok(show(&load_presentation(&path)?)),
    }
}

fn show(p: &Presentation) -> Output {
    let file = PresentationFile::from_presentation(p);
    Output::new(
        p.to_string(),
        serde_json::to_value(file).expect("presentation files serialize"),
    )
}

fn nf(source: &PresArgs, exprs: &[String], max_deg: Option<usize>) -> Result<Output> {
    let p = load(source)?;
    let sys = system(&p, max_deg)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for e in exprs {
        let poly = p.parse(e).with_context(|| format!("expression `{e}`"))?;
        let n = sys.normal_form(&poly)?;
        writeln!(text, "{e}  ->  {n}")?;
        rows.push(json!({"input": e, "normal_form": n.render()}));
    }
    writeln!(text, "(system {})", sys.status())?;
    Ok(Output::new(
        text,
        json!({"presentation": p.name, "status": sys.status().to_string(), "results": rows}),
    ))
}

fn complete(source: &PresArgs, max_deg: usize, print_rules: bool) -> Result<Output> {
    let p = load(source)?;
    let (sys, report) = p.system()?.complete(CompletionOptions::new(max_deg))?;
    let mut text = format!(
        "{}: {} after completion to degree {max_deg}\n  rules {} -> {}, overlaps examined {}, skipped beyond degree {}\n",
        p.name, report.status, report.rules_before, report.rules_after, report.overlaps_examined, report.skipped_beyond_degree
    );
    if !report.added.is_empty() {
        writeln!(text, "  added rules:")?;
        for r in &report.added {
            writeln!(text, "    {r}")?;
        }
    }
    let rules: Vec<String> = sys.rules().iter().map(|r| r.render()).collect();
    if print_rules {
        writeln!(text, "  rules:")?;
        for r in &rules {
            writeln!(text, "    {r}")?;
        }
    }
    Ok(Output::new(
        text,
        json!({
            "presentation": p.name,
            "status": report.status.to_string(),
            "max_deg": max_deg,
            "rules_before": report.rules_before,
            "rules_after": report.rules_after,
            "overlaps_examined": report.overlaps_examined,
            "skipped_beyond_degree": report.skipped_beyond_degree,
            "added": report.added,
            "rules": rules,
        }),
    ))
}

fn basis(source: &PresArgs, max_deg: usize) -> Result<Output> {
    let p = load(source)?;
    let sys = system(&p, Some(max_deg))?;
    let words = sys.normal_words(max_deg);
    let mut by_degree: Vec<Vec<String>> = vec![Vec::new(); max_deg + 1];
    for w in &words {
        by_degree[w.len()].push(if w.is_empty() {
            "1".into()
        } else {
            w.render(&p.alphabet)
        });
    }
    let mut text = format!("{} (system {}):\n", p.name, sys.status());
    for (d, ws) in by_degree.iter().enumerate() {
        writeln!(text, "  {d}: {}", ws.join(" "))?;
    }
    Ok(Output::new(
        text,
        json!({"presentation": p.name, "status": sys.status().to_string(), "words": by_degree}),
    ))
}

fn hilbert(source: &PresArgs, max_deg: usize) -> Result<Output> {
    let p = load(source)?;
    let sys = system(&p, Some(max_deg))?;
    let counts: Vec<String> = sys.count_by_degree(max_deg).iter().map(u128::to_string).collect();
    let text = format!("{} (system {}): {}\n", p.name, sys.status(), counts.join(", "));
    Ok(Output::new(
        text,
        json!({"presentation": p.name, "status": sys.status().to_string(), "counts": counts}),
    ))
}

fn homcheck(spec: &Path, completion_deg: Option<usize>) -> Result<Output> {
    let (file, m) = load_check_spec(spec)?;
    let report = check_hom(&m, completion_deg.or(file.completion_degree))?;
    let mut out = Output::new(
        report.to_string(),
        json!({"verdict": report.verdict(), "report": report}),
    );
    out.failed = report.verdict() == z3du::report::Verdict::Refuted;
    Ok(out)
}

fn probe_output(r: ProbeResult) -> Output {
    Output::new(
        r.to_string(),
        serde_json::to_value(&r).expect("probe results serialize"),
    )
}

fn probe(kind: ProbeKind) -> Result<Output> {
    match kind {
        ProbeKind::FiniteDimension { source, max_deg } => {
            Ok(probe_output(probe_finite_dimension(&load(&source)?, max_deg)?))
        }
        ProbeKind::Injectivity {
            spec,
            max_deg,
            complete_target,
        } => {
            let (_, m) = load_check_spec(&spec)?;
            let MapTarget::Presented { target, .. } = &m.target else {
                bail!("injectivity needs a presented target; use lie-injectivity for matrices");
            };
            let sys = system(target, complete_target)?;
            let name = format!("{} -> {}", m.source.name, target.name);
            Ok(probe_output(probe_injectivity(&name, &m, &sys, max_deg)?))
        }
        ProbeKind::LieInjectivity {
            spec,
            depth,
            laurent_var,
        } => {
            let (_, m) = load_check_spec(&spec)?;
            let name = format!("Lie map from {}", m.source.name);
            Ok(probe_output(probe_lie_injectivity(
                &name,
                &m,
                depth,
                laurent_var.as_deref(),
            )?))
        }
        ProbeKind::InfiniteDimension { case, max_deg } => {
            Ok(probe_output(probe_infinite_dimension(case.parse()?, max_deg)?))
        }
    }
}

fn verify(scopes: &[String], list: bool) -> Result<Output> {
    if list {
        let selected = claims::select(scopes)?;
        let mut text = String::new();
        for c in &selected {
            writeln!(text, "{:<40} {}", c.id, c.reference)?;
        }
        let rows: Vec<Value> = selected
            .iter()
            .map(|c| json!({"claim_id": c.id, "reference": c.reference}))
            .collect();
        return Ok(Output::new(text, json!({"topics": claims::TOPICS, "claims": rows})));
    }
    let report: ClaimReport = claims::verify_claims(scopes)?;
    let mut out = Output::new(report.to_string(), serde_json::to_value(&report)?);
    out.failed = report.has_failures();
    Ok(out)
}
