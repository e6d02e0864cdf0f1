//! Browser bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string. Exponents and angles are exact
//! rationals rendered as strings; the page converts them to numbers only
//! for plotting.

use limspec::{
    char_poly, check_symmetry, eigenvalues_gamma_c, euler_specialization, infer_isolated_weights,
    milnor_basis, milnor_sp_prime, nearby_fiber_class, parse_polynomial, sp_from_basis,
    sp_prime_of_class, sp_product_formula, sp_twist, FracPoly, NearbyVariant, SncModel,
    WeightVector,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn terms(s: &FracPoly) -> Value {
    s.terms().iter().map(|(e, c)| json!({"exponent": e.to_string(), "coefficient": c})).collect()
}

fn spectrum_fields(sp: &FracPoly, n: i64) -> Result<Value, String> {
    let sprime = sp_twist(sp, n);
    let eigen = eigenvalues_gamma_c(&sprime).map_err(|e| e.to_string())?;
    let cp = char_poly(&eigen).map_err(|e| e.to_string())?;
    let angles: Value = eigen
        .entries()
        .iter()
        .map(|(r, m)| json!({"angle": r.to_string(), "multiplicity": m}))
        .collect();
    Ok(json!({
        "spectrum": sp.to_string(),
        "terms": terms(sp),
        "symmetric": check_symmetry(sp, n),
        "eigenvalues": angles,
        "char_poly": cp.to_string(),
    }))
}

fn split_vars(vars: &str) -> Vec<String> {
    vars.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect()
}

/// Spectrum of a polynomial by both routes; `weights` may be empty.
pub fn polynomial_spectrum(text: &str, vars: &str, weights: &str) -> Result<String, String> {
    let vars = split_vars(vars);
    if vars.is_empty() {
        return Err("list the variables, e.g. x,y".into());
    }
    let f = parse_polynomial(text, &vars).map_err(|e| e.to_string())?;
    let w = if weights.trim().is_empty() {
        infer_isolated_weights(&f).map_err(|e| e.to_string())?
    } else {
        weights.parse::<WeightVector>().map_err(|e| e.to_string())?
    };
    let basis = milnor_basis(&f, &w).map_err(|e| e.to_string())?;
    let sp = sp_product_formula(&w).map_err(|e| e.to_string())?;
    if sp != sp_from_basis(&basis) {
        return Err(format!("internal: the two routes disagree for {f}"));
    }
    let mut out = spectrum_fields(&sp, vars.len() as i64)?;
    out["polynomial"] = json!(f.to_string());
    out["weights"] = json!(w.to_string());
    out["n"] = json!(vars.len());
    out["mu"] = json!(basis.len());
    out["basis"] = json!(basis.render(&vars));
    Ok(out.to_string())
}

/// Spectrum from weights alone (product formula), e.g. `"1/2,1/3"`.
pub fn weights_spectrum(weights: &str) -> Result<String, String> {
    let w: WeightVector = weights.parse().map_err(|e: limspec::PolyError| e.to_string())?;
    let sp = sp_product_formula(&w).map_err(|e| e.to_string())?;
    let mut out = spectrum_fields(&sp, w.len() as i64)?;
    out["weights"] = json!(w.to_string());
    out["n"] = json!(w.len());
    out["mu"] = json!(sp.coefficient_sum());
    Ok(out.to_string())
}

/// Nearby-fiber class of a model given as JSON text.
pub fn model_nearby(model: &str, variant: &str) -> Result<String, String> {
    let v: NearbyVariant = variant.parse()?;
    let m = SncModel::from_json(model).map_err(|e| e.to_string())?;
    let class = nearby_fiber_class(&m, v);
    let sprime = match v {
        NearbyVariant::Local => milnor_sp_prime(&class, m.n),
        _ => sp_prime_of_class(&class),
    };
    let sp = sp_twist(&sprime, m.n);
    let entries: Value = class
        .entries()
        .iter()
        .map(|(k, c)| json!({"p": k.p, "q": k.q, "angle": k.angle.to_string(), "multiplicity": c}))
        .collect();
    Ok(json!({
        "n": m.n,
        "class": entries,
        "class_text": class.to_string(),
        "euler": euler_specialization(&class),
        "spectrum": sp.to_string(),
        "terms": terms(&sp),
        "unused": m.unused_components(),
    })
    .to_string())
}

#[wasm_bindgen(js_name = polynomialSpectrum)]
pub fn polynomial_spectrum_js(text: &str, vars: &str, weights: &str) -> Result<String, JsError> {
    polynomial_spectrum(text, vars, weights).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = weightsSpectrum)]
pub fn weights_spectrum_js(weights: &str) -> Result<String, JsError> {
    weights_spectrum(weights).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = modelNearby)]
pub fn model_nearby_js(model: &str, variant: &str) -> Result<String, JsError> {
    model_nearby(model, variant).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = cuspModel)]
pub fn cusp_model() -> String {
    limspec::fixtures::CUSP_LOCAL.to_string()
}

#[wasm_bindgen(js_name = ellipticModel)]
pub fn elliptic_model() -> String {
    limspec::fixtures::I2_ELLIPTIC.to_string()
}
