//! Browser bindings for a few `dlcalc` computations.
//!
//! Each export has a plain Rust counterpart returning `Result<String, String>`
//! so the logic can be tested natively.

use dlcalc::cartan::CartanEngine;
use dlcalc::cofiber::{build_cofiber, check_nilpotent_in_cofiber};
use dlcalc::expr::{parse_expr, parse_generator, parse_sequence};
use dlcalc::free::{poincare_series, Bounds};
use dlcalc::{Arity, Prime};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn prime(p: u32) -> Result<Prime, String> {
    Prime::new(p).map_err(|e| e.to_string())
}

fn excess(e: i32) -> Option<i64> {
    (e >= 0).then_some(e as i64)
}

/// Applies `seq` to `expr` and returns the expansion as JSON.
pub fn expand_json(p: u32, expr: &str, seq: &str, weight_bound: u32) -> Result<String, String> {
    let p = prime(p)?;
    let f = parse_expr(expr, p)
        .and_then(|e| e.evaluate(p))
        .map_err(|e| e.to_string())?;
    let seq = parse_sequence(seq, p).map_err(|e| e.to_string())?;
    let out = CartanEngine::new(p, Some(weight_bound as u64))
        .apply_seq(&seq, &f)
        .map_err(|e| e.to_string())?;
    Ok(json!({
        "text": out.value.to_string(),
        "terms": out.value.len(),
        "adem_free": out.adem_free,
        "truncated": out.truncated,
    })
    .to_string())
}

/// Poincaré series of the free E_k-algebra; `k < 0` means k = ∞ and a
/// negative excess bound means none.
pub fn series_json(p: u32, k: i32, t: i32, weight_bound: u32, excess_bound: i32) -> Result<String, String> {
    let p = prime(p)?;
    let k = if k < 0 { Arity::Infinite } else { Arity::Finite(k as u32) };
    let bounds = Bounds::new(weight_bound as u64, excess(excess_bound));
    let series = poincare_series(p, k, t as i64, bounds).map_err(|e| e.to_string())?;
    serde_json::to_string(&series.to_json()).map_err(|e| e.to_string())
}

/// Nilpotence of a class in the model of F_p{x}//x^p.
pub fn nilpotence_json(
    p: u32,
    class: &str,
    weight_bound: u32,
    excess_bound: i32,
    max_power: u32,
) -> Result<String, String> {
    let p = prime(p)?;
    let g = parse_generator(class, p).map_err(|e| e.to_string())?;
    let pres = build_cofiber(p, Bounds::new(weight_bound as u64, excess(excess_bound)))
        .map_err(|e| e.to_string())?;
    let report = check_nilpotent_in_cofiber(&g, &pres, max_power).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn expand(p: u32, expr: &str, seq: &str, weight_bound: u32) -> Result<String, JsValue> {
    expand_json(p, expr, seq, weight_bound).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn series(p: u32, k: i32, t: i32, weight_bound: u32, excess_bound: i32) -> Result<String, JsValue> {
    series_json(p, k, t, weight_bound, excess_bound).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn nilpotence(
    p: u32,
    class: &str,
    weight_bound: u32,
    excess_bound: i32,
    max_power: u32,
) -> Result<String, JsValue> {
    nilpotence_json(p, class, weight_bound, excess_bound, max_power).map_err(|e| JsValue::from_str(&e))
}
