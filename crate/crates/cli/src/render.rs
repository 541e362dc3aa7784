use keyslide::classify::Witness;
use keyslide::expansion::verify_expansion;
use keyslide::oracle::{stable_limit_check, sweep_record, universe, LimitCheck, SweepRecord};
use keyslide::{
    classify_with, enumerate_kohnert, enumerate_qkt, key_polynomial, slide_expansion, slide_polynomial, Limits,
    MonomialPolynomial, Result, WeakComposition,
};
use rayon::prelude::*;
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Latex,
}

fn json_line(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("output types serialize");
    s.push('\n');
    s
}

pub fn expand(a: &WeakComposition, limits: &Limits, format: Format) -> Result<String> {
    let e = slide_expansion(a, limits)?;
    Ok(match format {
        Format::Json => json_line(&e),
        Format::Text => format!("{}\n", e.to_text()),
        Format::Latex => format!("{}\n", e.to_latex()),
    })
}

fn polynomial(name: (&str, &str), a: &WeakComposition, p: &MonomialPolynomial, format: Format) -> String {
    match format {
        Format::Json => json_line(p),
        Format::Text => format!("{}_({}) = {}\n", name.0, a, zero_or(p.to_string())),
        Format::Latex => format!("{}_{{{}}} = {}\n", name.1, a.parenthesized(), zero_or(p.to_latex())),
    }
}

fn zero_or(s: String) -> String {
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

pub fn key(a: &WeakComposition, limits: &Limits, format: Format) -> Result<String> {
    Ok(polynomial(("κ", "\\kappa"), a, &key_polynomial(a, limits)?, format))
}

pub fn slide(a: &WeakComposition, limits: &Limits, format: Format) -> Result<String> {
    Ok(polynomial(
        ("𝔉", "\\mathfrak{F}"),
        a,
        &slide_polynomial(a, limits)?,
        format,
    ))
}

pub fn tableaux(a: &WeakComposition, all: bool, limits: &Limits, format: Format) -> Result<String> {
    let list = if all {
        enumerate_kohnert(a, limits)?
    } else {
        enumerate_qkt(a, limits)?
    };
    Ok(match format {
        Format::Json => json_line(&list),
        Format::Text => {
            let blocks: Vec<String> = list
                .iter()
                .map(|t| format!("weight ({})\n{}", t.weight(), t.render_ascii()))
                .collect();
            format!("{} tableaux\n\n{}", list.len(), blocks.join("\n"))
        }
        Format::Latex => list.iter().map(|t| format!("{}\n", t.to_latex())).collect(),
    })
}

fn describe_witness(w: &Witness) -> String {
    let tuple = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    match w {
        Witness::Pattern { positions } => format!("pattern at positions ({})", tuple(positions)),
        Witness::ClosedForm { terms } => {
            let terms: Vec<String> = terms.iter().map(|t| format!("({t})")).collect();
            format!("terms {}", terms.join(" "))
        }
        Witness::RepeatedWeight { weight, multiplicity } => {
            format!("weight ({weight}) has multiplicity {multiplicity}")
        }
    }
}

pub fn classify(a: &WeakComposition, brute: bool, limits: &Limits, format: Format) -> Result<String> {
    let report = classify_with(a, brute, limits)?;
    Ok(match format {
        Format::Json => json_line(&report),
        Format::Text | Format::Latex => {
            let mut line = format!("({}) {} by {}", report.index, report.verdict, report.theorem);
            if let Some(w) = &report.witness {
                line.push_str("; ");
                line.push_str(&describe_witness(w));
            }
            line.push('\n');
            line
        }
    })
}

pub fn verify(a: &WeakComposition, limits: &Limits, format: Format) -> Result<(String, bool)> {
    let holds = verify_expansion(a, limits)?;
    let e = slide_expansion(a, limits)?;
    let out = match format {
        Format::Json => json_line(&json!({ "index": a, "holds": holds, "expansion": e })),
        Format::Text => format!("{} {}\n", e.to_text(), if holds { "holds" } else { "FAILS" }),
        Format::Latex => format!("{}\n", e.to_latex()),
    };
    Ok((out, holds))
}

pub fn sweep(len: usize, entry_max: usize, limits: &Limits, format: Format) -> Result<String> {
    let indices: Vec<WeakComposition> = universe(len, entry_max, limits)?.collect();
    let records: Vec<SweepRecord> = indices
        .par_iter()
        .map(|a| sweep_record(a, limits))
        .collect::<Result<_>>()?;
    Ok(records
        .iter()
        .map(|r| match format {
            Format::Json => json_line(r),
            Format::Text => format!("({}) {} {}\n", r.index, r.max_multiplicity, r.classifier_verdict),
            Format::Latex => format!(
                "${}$ & {} & {} \\\\\n",
                r.index.parenthesized(),
                r.max_multiplicity,
                r.classifier_verdict.as_str().replace('_', "\\_")
            ),
        })
        .collect())
}

pub fn limit(a: &WeakComposition, vars: usize, mmax: usize, limits: &Limits, format: Format) -> Result<(String, bool)> {
    let check = stable_limit_check(a, vars, mmax, limits)?;
    let ok = !matches!(check, LimitCheck::Fail { .. });
    let target = a.sort_to_partition();
    let out = match format {
        Format::Json => json_line(&json!({
            "index": a,
            "vars": vars,
            "mmax": mmax,
            "target": target,
            "result": check,
        })),
        Format::Text | Format::Latex => {
            let detail = match &check {
                LimitCheck::Pass { from } => format!("stable from m = {from}, equals s_({target})"),
                LimitCheck::Fail { exponents, key, schur } => {
                    let e = exponents.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                    format!("coefficient of x^({e}) is {key}, s_({target}) has {schur}")
                }
                LimitCheck::Inconclusive => format!("not stable by m = {mmax}"),
            };
            let verdict = match check {
                LimitCheck::Pass { .. } => "PASS",
                LimitCheck::Fail { .. } => "FAIL",
                LimitCheck::Inconclusive => "INCONCLUSIVE",
            };
            format!("({a}) in {vars} variables: {verdict}, {detail}\n")
        }
    };
    Ok((out, ok))
}
