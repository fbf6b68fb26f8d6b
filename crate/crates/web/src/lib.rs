//! wasm-bindgen entry points for the static page in `www/`. Each export
//! returns a JSON string or throws the error message.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use zrank_core::bounds::OracleBounds;
use zrank_core::cauchy::{build_matrix, check_spec, parse_spec, skew_from_sequences};
use zrank_core::code::rank;
use zrank_core::poly::fraction_string;
use zrank_core::specialization::y_value;
use zrank_core::verify::{inspect_shape, verify_shape};
use zrank_core::SkewShape;

/// Larger shapes make the page stall.
pub const MAX_CELLS: usize = 40;

fn parse(text: &str) -> Result<SkewShape, String> {
    let shape: SkewShape = text.trim().parse().map_err(|e| format!("{e}"))?;
    if shape.size() > MAX_CELLS {
        return Err(format!("{} cells; the demo takes at most {MAX_CELLS}", shape.size()));
    }
    Ok(shape)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn inspect_inner(text: &str) -> Result<String, String> {
    to_json(&inspect_shape(&parse(text)?))
}

pub fn verify_inner(text: &str) -> Result<String, String> {
    to_json(&verify_shape(&parse(text)?, &OracleBounds::default()))
}

#[derive(Serialize)]
struct CauchyView {
    spec: String,
    order: usize,
    class: &'static str,
    matrix: Vec<Vec<String>>,
    det: String,
    reducible: bool,
    failures: Vec<String>,
    shape: String,
    shape_rank: usize,
    shape_y: String,
}

pub fn cauchy_inner(text: &str) -> Result<String, String> {
    let spec = parse_spec(text.trim()).map_err(|e| e.to_string())?;
    let check = check_spec(&spec);
    let shape = skew_from_sequences(&spec).map_err(|e| e.to_string())?;
    to_json(&CauchyView {
        spec: spec.to_string(),
        order: spec.order(),
        class: check.class.as_str(),
        matrix: build_matrix(&spec)
            .iter()
            .map(|row| row.iter().map(fraction_string).collect())
            .collect(),
        det: fraction_string(&check.det),
        reducible: check.reducible,
        failures: check.failures,
        shape_rank: rank(&shape),
        shape_y: fraction_string(&y_value(&shape)),
        shape: shape.to_string(),
    })
}

#[wasm_bindgen]
pub fn inspect(shape: &str) -> Result<String, JsError> {
    inspect_inner(shape).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn verify(shape: &str) -> Result<String, JsError> {
    verify_inner(shape).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn cauchy(spec: &str) -> Result<String, JsError> {
    cauchy_inner(spec).map_err(|e| JsError::new(&e))
}
