//! WebAssembly bindings for the static demo page in `www/`.
//!
//! The exported functions take the same string inputs as the command line
//! and return text; the plain Rust versions (`*_text`) are what the tests
//! call, since `JsError` only exists inside a JavaScript host.

use wasm_bindgen::prelude::*;

use lieweyl::embedding::embed;
use lieweyl::levimodule::parse_lambda;
use lieweyl::liealgebra::ChevalleyAlgebra;
use lieweyl::parabolic::parse_crossed;
use lieweyl::rootsystem::{RootSystem, SimpleType};
use lieweyl::verify::{lie_closure, ClosureOptions};
use lieweyl::{EmbeddingResult, Rational};

fn compute(ty: &str, crossed: &str, lambda: &str) -> Result<EmbeddingResult, String> {
    let ty: SimpleType = ty.parse().map_err(|e: lieweyl::Error| e.to_string())?;
    let crossed = parse_crossed(crossed).map_err(|e| e.to_string())?;
    let lambda = if lambda.trim().is_empty() {
        vec![Rational::zero(); ty.rank]
    } else {
        parse_lambda(lambda).map_err(|e| e.to_string())?
    };
    embed(ty, &crossed, &lambda).map_err(|e| e.to_string())
}

/// Images of the Chevalley generators as `text`, `latex` or `json`.
pub fn embed_operators_text(ty: &str, crossed: &str, lambda: &str, format: &str) -> Result<String, String> {
    let res = compute(ty, crossed, lambda)?;
    match format {
        "latex" => Ok(res.to_latex()),
        "json" => Ok(res.to_json()),
        "text" => Ok(res.to_text()),
        other => Err(format!("unknown format {other:?}")),
    }
}

pub fn bracket_table_text(ty: &str, latex: bool) -> Result<String, String> {
    let ty: SimpleType = ty.parse().map_err(|e: lieweyl::Error| e.to_string())?;
    let alg = ChevalleyAlgebra::new(RootSystem::build(ty));
    Ok(if latex { alg.bracket_table_latex() } else { alg.bracket_table_text() })
}

/// Dimension of the Lie algebra generated by the simple-generator images,
/// as a JSON report.
pub fn closure_check_text(ty: &str, crossed: &str, lambda: &str) -> Result<String, String> {
    let res = compute(ty, crossed, lambda)?;
    let ops: Vec<_> = res.simple_images().into_iter().cloned().collect();
    let report = lie_closure(&ops, res.simple_type.dimension(), ClosureOptions::default());
    serde_json::to_string_pretty(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn embed_operators(ty: &str, crossed: &str, lambda: &str, format: &str) -> Result<String, JsError> {
    embed_operators_text(ty, crossed, lambda, format).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bracket_table(ty: &str, latex: bool) -> Result<String, JsError> {
    bracket_table_text(ty, latex).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn closure_check(ty: &str, crossed: &str, lambda: &str) -> Result<String, JsError> {
    closure_check_text(ty, crossed, lambda).map_err(|e| JsError::new(&e))
}
