//! Browser bindings: each export takes plain strings and returns a JSON
//! report, or throws the error message.

use serde_json::{json, Value};
use spacecurves::curve::{Curve, CurveOptions};
use spacecurves::koszul::{KoszulData, KoszulType};
use spacecurves::liaison::{elementary_biliaison, FactoredSurface};
use spacecurves::report::CurveReport;
use spacecurves::{parse_poly, Poly, PrimeField};
use wasm_bindgen::prelude::*;

fn generators(field: PrimeField, text: &str) -> Result<Vec<Poly>, String> {
    let gens = text
        .split(['\n', ','])
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .map(|l| parse_poly(field, l).map_err(|e| format!("{l}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if gens.is_empty() {
        return Err("no generators".into());
    }
    Ok(gens)
}

fn curve(field: PrimeField, text: &str) -> Result<Curve, String> {
    Curve::new(field, generators(field, text)?, CurveOptions::default()).map_err(|e| e.to_string())
}

fn report(c: &Curve) -> Value {
    let mut v = serde_json::to_value(CurveReport::new(c)).unwrap();
    v["betti_table"] = Value::from(c.betti().to_string());
    v
}

pub fn curve_info_json(text: &str) -> Result<String, String> {
    let c = curve(PrimeField::default(), text)?;
    Ok(report(&c).to_string())
}

/// `ty` is "n1,n2,n3,n4".
pub fn koszul_json(ty: &str, seed: u64) -> Result<String, String> {
    let n: Vec<u32> = ty
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| format!("bad degree '{x}'")))
        .collect::<Result<_, _>>()?;
    let n: [u32; 4] = n.try_into().map_err(|_| "a type has four degrees".to_string())?;
    let ty = KoszulType::new(n).map_err(|e| e.to_string())?;
    let data = KoszulData::generate(PrimeField::default(), ty, seed).map_err(|e| e.to_string())?;
    let c = data.minimal_curve(CurveOptions::default()).map_err(|e| e.to_string())?;
    let (mu, s0, e) = ty.predicted_invariants();
    Ok(json!({
        "type": ty.to_string(),
        "mu": mu,
        "predicted": { "s0": s0, "e": e },
        "module_dimensions": ty.module_dimensions(),
        "curve": report(&c),
    })
    .to_string())
}

pub fn biliaison_json(text: &str, surface: &str, mult: &str) -> Result<String, String> {
    let f = PrimeField::default();
    let c = curve(f, text)?;
    let q = parse_poly(f, surface).map_err(|e| e.to_string())?;
    let q = FactoredSurface::unfactored(q).map_err(|e| e.to_string())?;
    let m = parse_poly(f, mult).map_err(|e| e.to_string())?;
    let step = elementary_biliaison(&c, &q, &m).map_err(|e| e.to_string())?;
    Ok(json!({
        "height": step.height,
        "source": report(&step.source),
        "target": report(&step.target),
        "shift_holds": step.shift_holds,
        "degree_holds": step.degree_holds,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn curve_info(text: &str) -> Result<String, JsValue> {
    curve_info_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn koszul_explorer(ty: &str, seed: u32) -> Result<String, JsValue> {
    koszul_json(ty, seed as u64).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn biliaison_demo(text: &str, surface: &str, mult: &str) -> Result<String, JsValue> {
    biliaison_json(text, surface, mult).map_err(|e| JsValue::from_str(&e))
}
