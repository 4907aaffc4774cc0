//! Browser bindings. Each export takes plain text input and returns a JSON
//! string; the `*_json` functions are the same operations for native callers.

use binomial_semigroups::cores::{enumerate_admissible, NumericalSet, MAX_ENUMERATION_FROBENIUS};
use binomial_semigroups::family::bn_report;
use binomial_semigroups::{Nat, NumericalSemigroup};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest window drawn by the membership strip.
pub const MAX_STRIP: u64 = 5000;

fn strs<T: ToString>(vs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(vs.into_iter().map(|v| Value::String(v.to_string())).collect())
}

fn parse_list(text: &str) -> Result<Vec<u64>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| format!("'{t}' is not a nonnegative integer")))
        .collect()
}

pub fn report_json(n: u64) -> Result<String, String> {
    let r = bn_report(n).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": n.to_string(),
        "generators": strs(&r.minimal_generators),
        "apery_base": r.apery_base.to_string(),
        "apery_set": strs(&r.apery_set),
        "frobenius": r.frobenius.to_string(),
        "genus": r.genus.to_string(),
        "type": r.type_of.to_string(),
        "symmetric": r.symmetric,
        "telescopic": r.telescopic,
    })
    .to_string())
}

/// Membership of `0..window` in the semigroup generated by `generators`.
pub fn semigroup_strip_json(generators: &str, window: u64) -> Result<String, String> {
    let gens = parse_list(generators)?;
    if gens.is_empty() {
        return Err("enter at least one generator".into());
    }
    let raw: Vec<Nat> = gens.iter().map(|&g| Nat::from(g)).collect();
    let s = NumericalSemigroup::new(&raw).map_err(|e| e.to_string())?;
    let window = window.min(MAX_STRIP);
    let members: Vec<bool> = (0..window).map(|v| s.contains(&Nat::from(v))).collect();
    Ok(json!({
        "generators": strs(s.generators()),
        "frobenius": s.frobenius().to_string(),
        "genus": s.genus().to_string(),
        "pseudo_frobenius": strs(s.pseudo_frobenius()),
        "members": members,
    })
    .to_string())
}

/// Young diagram of `λ_S` with hook lengths, for `S` given by its gaps or by generators.
pub fn core_diagram_json(input: &str, as_generators: bool) -> Result<String, String> {
    let values = parse_list(input)?;
    let set = if as_generators {
        let s = NumericalSemigroup::from_u64s(&values).map_err(|e| e.to_string())?;
        NumericalSet::from_semigroup(&s)
    } else {
        NumericalSet::from_gaps(&values)
    }
    .map_err(|e| e.to_string())?;
    let lambda = set.partition();
    let pairs = if set.frobenius() <= MAX_ENUMERATION_FROBENIUS as i64 {
        let ps = enumerate_admissible(&set).map_err(|e| e.to_string())?;
        Value::Array(ps.into_iter().map(|(s, p)| json!([s.to_string(), p.to_string()])).collect())
    } else {
        Value::Null
    };
    Ok(json!({
        "frobenius": set.frobenius().to_string(),
        "gaps": strs(set.gaps()),
        "partition": strs(lambda.parts()),
        "hooks": lambda.hook_lengths(),
        "hook_set": strs(lambda.hook_set()),
        "admissible_pairs": pairs,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn report(n: u32) -> Result<String, JsError> {
    report_json(n.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn semigroup_strip(generators: &str, window: u32) -> Result<String, JsError> {
    semigroup_strip_json(generators, window.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn core_diagram(input: &str, as_generators: bool) -> Result<String, JsError> {
    core_diagram_json(input, as_generators).map_err(|e| JsError::new(&e))
}
