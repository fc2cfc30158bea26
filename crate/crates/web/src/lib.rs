//! Browser bindings. Every export takes strings and returns a JSON string;
//! errors surface as thrown JS exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use hyperarr::checkers::forbidden_patterns;
use hyperarr::derivations::{freeness_with, FreenessOptions};
use hyperarr::lattice::{char_data_from_lattice, mobius_values};
use hyperarr::roots::{display_poly, root_profile};
use hyperarr::{catalog, flats, Arrangement};

fn load(input: &str) -> Result<Arrangement, String> {
    let trimmed = input.trim();
    if let Some(name) = trimmed.strip_prefix("catalog:") {
        return catalog::get(name.trim())
            .map(|e| e.arrangement)
            .map_err(|e| e.to_string());
    }
    Arrangement::parse(input).map_err(|e| e.to_string())
}

pub fn chi_value(input: &str) -> Result<Value, String> {
    let a = load(input)?;
    let lattice = flats(&a);
    let data = char_data_from_lattice(&lattice);
    let profile = root_profile(&data.chi).map_err(|e| e.to_string())?;
    Ok(json!({
        "hyperplanes": a.len(),
        "dim": a.dim(),
        "rank": a.rank(),
        "rankProfile": lattice.rank_profile(),
        "chi": display_poly(&data.chi),
        "chi0": data.chi0.as_ref().map(display_poly),
        "b": data.b.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "splits": profile.splits_over_z,
        "realRooted": profile.real_rooted,
        "rank2Mobius": if a.rank() >= 2 { mobius_values(&lattice, 2) } else { Vec::new() },
    }))
}

pub fn forbidden_value(roots: &str) -> Result<Value, String> {
    let mut d = roots
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| format!("not an integer: {s}")))
        .collect::<Result<Vec<_>, _>>()?;
    if d.is_empty() || d.iter().any(|&r| r < 1) {
        return Err("give one or more positive integer roots".into());
    }
    d.sort_unstable();
    Ok(json!({ "roots": d, "forbidden": forbidden_patterns(&d) }))
}

pub fn freeness_value(input: &str, max_degree: Option<u32>) -> Result<Value, String> {
    let a = load(input)?;
    let opts = FreenessOptions {
        max_degree,
        ..FreenessOptions::default()
    };
    let v = freeness_with(&a, &opts).map_err(|e| e.to_string())?;
    let basis: Vec<String> = v
        .basis
        .iter()
        .flatten()
        .map(|t| t.to_string_with_partials())
        .collect();
    Ok(json!({ "summary": v.summary(), "exponents": v.exponents, "basis": basis }))
}

pub fn catalog_value() -> Value {
    let rows: Vec<Value> = catalog::list()
        .into_iter()
        .map(|(name, description)| {
            let text = catalog::get(&name)
                .map(|e| e.arrangement.emit())
                .unwrap_or_default();
            json!({ "name": name, "description": description, "text": text })
        })
        .collect();
    Value::Array(rows)
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

/// `input` is arrangement text or `catalog:<name>`.
#[wasm_bindgen]
pub fn chi(input: &str) -> Result<String, JsError> {
    to_js(chi_value(input))
}

/// `roots` are the roots of chi0, separated by spaces or commas.
#[wasm_bindgen]
pub fn forbidden(roots: &str) -> Result<String, JsError> {
    to_js(forbidden_value(roots))
}

#[wasm_bindgen]
pub fn freeness(input: &str, max_degree: Option<u32>) -> Result<String, JsError> {
    to_js(freeness_value(input, max_degree))
}

#[wasm_bindgen(js_name = catalogList)]
pub fn catalog_list() -> String {
    catalog_value().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_of_catalog_and_text() {
        let v = chi_value("catalog:paper-mult13").unwrap();
        assert_eq!(v["chi"], "(t - 1)(t^2 - 8t + 13)");
        let v = chi_value("dim 2\n1 0\n0 1\n1 1\n").unwrap();
        assert_eq!(v["chi"], "(t - 1)(t - 2)");
        assert!(chi_value("dim 2\n1 0 0\n").is_err());
    }

    #[test]
    fn forbidden_list() {
        let v = forbidden_value("2, 4 7").unwrap();
        assert_eq!(v["forbidden"].as_array().unwrap().len(), 12);
        assert!(forbidden_value("2 x").is_err());
        assert!(forbidden_value("").is_err());
    }

    #[test]
    fn freeness_summary() {
        let v = freeness_value("catalog:paper-ex9", None).unwrap();
        assert_eq!(v["summary"], "Free(1,3,5)");
        assert_eq!(v["basis"].as_array().unwrap().len(), 3);
        let capped = freeness_value("catalog:paper-ex9", Some(3)).unwrap();
        assert!(capped["summary"]
            .as_str()
            .unwrap()
            .starts_with("Inconclusive"));
    }

    #[test]
    fn catalog_entries_carry_text() {
        let v = catalog_value();
        assert!(v
            .as_array()
            .unwrap()
            .iter()
            .all(|e| e["text"].as_str().unwrap().contains("\ndim ")));
    }
}
