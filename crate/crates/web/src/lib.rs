//! Browser bindings. Every export takes an index string such as `0,0,3,2`
//! and returns a JSON document, or an error message.

use keyslide::{classify_with, enumerate_kohnert, enumerate_qkt, slide_expansion, Limits, WeakComposition};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Keeps page interactions responsive.
const LIMITS: Limits = Limits {
    max_sum: Some(16),
    max_len: Some(8),
};

fn parse(index: &str) -> Result<WeakComposition, String> {
    index.trim().parse().map_err(|e: keyslide::Error| e.to_string())
}

/// Slide expansion with display strings.
#[wasm_bindgen]
pub fn expand(index: &str) -> Result<String, String> {
    let a = parse(index)?;
    let e = slide_expansion(&a, &LIMITS).map_err(|e| e.to_string())?;
    Ok(json!({
        "expansion": e,
        "text": e.to_text(),
        "latex": e.to_latex(),
        "multiplicity_free": e.is_multiplicity_free(),
    })
    .to_string())
}

/// Quasi-Yamanouchi tableaux, or every Kohnert tableau when `all` is set.
#[wasm_bindgen]
pub fn tableaux(index: &str, all: bool) -> Result<String, String> {
    let a = parse(index)?;
    let list = if all {
        enumerate_kohnert(&a, &LIMITS)
    } else {
        enumerate_qkt(&a, &LIMITS)
    }
    .map_err(|e| e.to_string())?;
    let out: Vec<_> = list
        .iter()
        .map(|t| json!({ "tableau": t, "weight": t.weight(), "height": t.height(), "width": t.width() }))
        .collect();
    Ok(serde_json::Value::from(out).to_string())
}

/// Classification report, enumerating when `brute` is set and no closed
/// form applies.
#[wasm_bindgen]
pub fn classify(index: &str, brute: bool) -> Result<String, String> {
    let a = parse(index)?;
    let report = classify_with(&a, brute, &LIMITS).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}
