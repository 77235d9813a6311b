//! Browser bindings for three operations: dual-web curvature, the inflection
//! divisor and local singularity invariants.
//!
//! Each binding is a thin wrapper over a plain function returning
//! `Result<String, String>`, so the logic also runs and is tested natively.

use wasm_bindgen::prelude::*;

use webflat::field::Field;
use webflat::parse::{parse_components, parse_field_spec, parse_scalar};
use webflat::singularities::classify_singularity;
use webflat::web::{dual_curvature, homogenize, inflection_divisor, AffineVectorField};
use webflat::FieldScalar;

fn field(spec: &str) -> Result<Option<Field>, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(None);
    }
    parse_field_spec(spec).map(Some).map_err(|e| e.to_string())
}

fn vector_field(src: &str, k: Option<&Field>) -> Result<AffineVectorField, String> {
    let comps = parse_components(src, k).map_err(|e| e.to_string())?;
    let [a, b] = <[_; 2]>::try_from(comps).map_err(|_| "enter the field as \"A ; B\"".to_string())?;
    AffineVectorField::new(a, b).map_err(|e| e.to_string())
}

/// Curvature of the dual web of `A ; B`, as text.
pub fn curvature_text(vf: &str, field_spec: &str) -> Result<String, String> {
    let k = field(field_spec)?;
    let vf = vector_field(vf, k.as_ref())?;
    let c = dual_curvature(&vf).map_err(|e| e.to_string())?;
    Ok(format!(
        "flat: {}\nnumerator: {}\ndenominator: {}\nform: ({}) dp^dq",
        c.is_zero(),
        c.coeff().numerator(),
        c.coeff().denominator(),
        c.coeff()
    ))
}

/// Inflection divisor of the projective closure of `A ; B`, as text.
pub fn inflection_text(vf: &str, field_spec: &str) -> Result<String, String> {
    let k = field(field_spec)?;
    let vf = vector_field(vf, k.as_ref())?;
    let h = homogenize(&vf, vf.degree()).map_err(|e| e.to_string())?;
    let i = inflection_divisor(&h);
    let degree = i.total_degree().map_or("none".to_string(), |d| d.to_string());
    Ok(format!("inflection: {i}\ndegree: {degree}"))
}

/// Multiplicity, tau and radiality of `A ; B` at `x0,y0`, as text.
pub fn singularity_text(vf: &str, at: &str, field_spec: &str) -> Result<String, String> {
    let k = field(field_spec)?;
    let vf = vector_field(vf, k.as_ref())?;
    let pt: Vec<FieldScalar> = at
        .split(',')
        .map(|s| parse_scalar(s, k.as_ref()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let pt = <[FieldScalar; 2]>::try_from(pt).map_err(|_| "enter the point as \"x0,y0\"".to_string())?;
    let r = classify_singularity(&vf, &pt).map_err(|e| e.to_string())?;
    Ok(format!("nu: {}\ntau: {}\nradial: {}\nspecial: {}", r.nu, r.tau, r.radial, r.special))
}

#[wasm_bindgen]
pub fn curvature(vf: &str, field_spec: &str) -> Result<String, JsError> {
    curvature_text(vf, field_spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn inflection(vf: &str, field_spec: &str) -> Result<String, JsError> {
    inflection_text(vf, field_spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn singularity(vf: &str, at: &str, field_spec: &str) -> Result<String, JsError> {
    singularity_text(vf, at, field_spec).map_err(|e| JsError::new(&e))
}
