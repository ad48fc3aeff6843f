//! Named experiments diffed against golden JSON files.
//!
//! Goldens only hold seed-independent data: invariants and verdicts, never
//! witnesses or the random forms themselves.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};
use spacecurves::curve::Curve;
use spacecurves::koszul::{KoszulData, KoszulType};
use spacecurves::liaison::{self, FactoredSurface};
use spacecurves::{corpus, parse_poly, PrimeField};

use crate::commands::{koszul_surfaces, module_window, rao_shift, JobConfig};

const GRID: [[u32; 4]; 6] = [
    [1, 1, 1, 1],
    [1, 1, 1, 2],
    [1, 1, 2, 2],
    [1, 2, 2, 3],
    [2, 2, 2, 2],
    [1, 1, 2, 3],
];

const SUBCANONICAL: [[u32; 4]; 3] = [[1, 1, 2, 2], [2, 2, 2, 2], [1, 2, 2, 3]];

fn invariants(c: &Curve) -> Value {
    json!({
        "degree": c.degree(),
        "genus": c.genus(),
        "s0": c.s0(),
        "e": c.e(),
        "rao_dims": c.rao_dims().to_map(),
        "alpha": c.subcanonical_alpha(),
        "locally_cm": c.is_locally_cm(),
        "betti": c.betti().ranks,
    })
}

fn p(field: PrimeField, s: &str) -> spacecurves::Poly {
    parse_poly(field, s).unwrap()
}

type Experiment = fn(&JobConfig) -> Result<Value>;

fn curve_info(name: &str, cfg: &JobConfig) -> Result<Value> {
    let c = corpus::by_name(cfg.field, name).context("corpus curve")?;
    Ok(invariants(&c))
}

fn raise(cfg: &JobConfig) -> Result<Value> {
    let f = cfg.field;
    let step = liaison::elementary_biliaison(&corpus::skew_lines(f), &corpus::skew_quadric(f), &p(f, "X"))?;
    Ok(json!({
        "height": step.height,
        "target": invariants(&step.target),
        "shift_holds": step.shift_holds,
        "degree_holds": step.degree_holds,
    }))
}

fn link(cfg: &JobConfig) -> Result<Value> {
    let f = cfg.field;
    let l = liaison::link(&corpus::skew_lines(f), &p(f, "X*Z - Y*T"), &p(f, "X*Z*T + Y*T^2 + Y*Z^2"))?;
    Ok(json!({
        "degrees": [l.degrees.0, l.degrees.1],
        "linked": invariants(&l.curve),
        "degree_holds": l.degree_holds,
        "duality_holds": l.duality_holds,
    }))
}

fn obstruct(cfg: &JobConfig) -> Result<Value> {
    let f = cfg.field;
    let c = corpus::raised_skew_lines(f);
    let surfaces = [corpus::skew_quadric(f)];
    let r = liaison::descending_obstruction_report(&c, &surfaces, -2..=-1, cfg.seed)?;
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "h": e.test.h,
                "dim_hom": e.test.dim_hom,
                "verdict": e.test.verdict,
                "has_witness": e.test.witness.is_some(),
            })
        })
        .collect();
    Ok(json!({ "entries": entries, "descent": r.descent, "routes_agree": r.routes_agree }))
}

fn descend(cfg: &JobConfig) -> Result<Value> {
    let f = cfg.field;
    let step = liaison::execute_descent(&corpus::raised_skew_lines(f), &corpus::skew_quadric(f), -1, cfg.seed)?;
    Ok(json!({
        "height": step.height,
        "target": invariants(&step.target),
        "shift_holds": step.shift_holds,
        "degree_holds": step.degree_holds,
    }))
}

fn diagram(cfg: &JobConfig) -> Result<Value> {
    let f = cfg.field;
    let d = liaison::fundamental_diagram_check(&corpus::skew_lines(f), &corpus::skew_quadric(f), &p(f, "X"), (-3, 2))?;
    Ok(json!({ "passed": d.passed, "first_failure": d.first_failure }))
}

fn koszul_formulas(cfg: &JobConfig) -> Result<Value> {
    let mut rows = Vec::new();
    for n in GRID {
        let ty = KoszulType::new(n)?;
        let (_, s0, e) = ty.predicted_invariants();
        for k in 0..3 {
            let data = KoszulData::generate(cfg.field, ty, cfg.seed.wrapping_add(k))?;
            let c = data.minimal_curve(Default::default())?;
            rows.push(json!({
                "type": ty.to_string(),
                "draw": k,
                "predicted": [s0, e],
                "computed": [c.s0(), c.e()],
            }));
        }
    }
    Ok(Value::Array(rows))
}

fn koszul_rao(cfg: &JobConfig) -> Result<Value> {
    let mut rows = Vec::new();
    for n in GRID {
        let ty = KoszulType::new(n)?;
        let data = KoszulData::generate(cfg.field, ty, cfg.seed)?;
        let c = data.minimal_curve(Default::default())?;
        let module = module_window(&ty);
        rows.push(json!({
            "type": ty.to_string(),
            "module_dimensions": module.to_map(),
            "rao_dims": c.rao_dims().to_map(),
            "shift": rao_shift(c.rao_dims(), &module),
            "degree": c.degree(),
            "genus": c.genus(),
            "alpha": c.subcanonical_alpha(),
        }));
    }
    Ok(Value::Array(rows))
}

fn verify_min(cfg: &JobConfig) -> Result<Value> {
    let mut rows = Vec::new();
    for n in SUBCANONICAL {
        let ty = KoszulType::new(n)?;
        let data = KoszulData::generate(cfg.field, ty, cfg.seed)?;
        let c = data.minimal_curve(Default::default())?;
        let surfaces: Vec<FactoredSurface> = koszul_surfaces(&data, &c, cfg.seed);
        let r = liaison::verify_minimality_subcanonical(&c, &surfaces, cfg.seed)?;
        rows.push(json!({
            "type": ty.to_string(),
            "verdict": if r.pass { "PASS" } else { "FAIL" },
            "alpha": r.alpha,
            "s0": r.s0,
            "e": r.e,
            "admissible": r.admissible,
            "bookkeeping_holds": r.bookkeeping_holds,
        }));
    }
    Ok(Value::Array(rows))
}

pub fn experiments() -> Vec<(&'static str, Experiment)> {
    vec![
        ("curve-info-skew-lines", |c| curve_info("skew-lines", c)),
        ("curve-info-ci-2-2", |c| curve_info("ci-2-2", c)),
        ("curve-info-twisted-cubic", |c| curve_info("twisted-cubic", c)),
        ("curve-info-rational-quartic", |c| curve_info("rational-quartic", c)),
        ("biliaison-raise-skew-lines", raise),
        ("link-skew-lines", link),
        ("obstruct-raised-skew-lines", obstruct),
        ("descend-raised-skew-lines", descend),
        ("diagram-skew-lines", diagram),
        ("koszul-formulas", koszul_formulas),
        ("koszul-rao", koszul_rao),
        ("verify-min-koszul", verify_min),
    ]
}

/// First difference between two JSON values, as a path and a message.
pub fn diff(expected: &Value, actual: &Value, path: &str) -> Option<String> {
    match (expected, actual) {
        (Value::Object(a), Value::Object(b)) => {
            for (k, x) in a {
                match b.get(k) {
                    Some(y) => {
                        if let Some(d) = diff(x, y, &format!("{path}.{k}")) {
                            return Some(d);
                        }
                    }
                    None => return Some(format!("{path}.{k}: missing")),
                }
            }
            b.keys()
                .find(|k| !a.contains_key(*k))
                .map(|k| format!("{path}.{k}: unexpected"))
        }
        (Value::Array(a), Value::Array(b)) => {
            if a.len() != b.len() {
                return Some(format!("{path}: expected {} items, got {}", a.len(), b.len()));
            }
            a.iter()
                .zip(b)
                .enumerate()
                .find_map(|(i, (x, y))| diff(x, y, &format!("{path}[{i}]")))
        }
        (x, y) if x == y => None,
        (x, y) => Some(format!("{path}: expected {x}, got {y}")),
    }
}

pub struct Outcome {
    pub name: &'static str,
    pub failure: Option<String>,
}

pub fn run(cfg: &JobConfig, goldens: &Path, bless: bool) -> Result<Vec<Outcome>> {
    if bless {
        fs::create_dir_all(goldens)?;
    }
    let mut out = Vec::new();
    for (name, exp) in experiments() {
        let path = goldens.join(format!("{name}.json"));
        let failure = match exp(cfg) {
            Err(e) => Some(format!("error: {e}")),
            Ok(actual) if bless => {
                fs::write(&path, serde_json::to_string_pretty(&actual)? + "\n")?;
                None
            }
            Ok(actual) => match fs::read_to_string(&path) {
                Err(_) => Some(format!("missing golden {}", path.display())),
                Ok(text) => match serde_json::from_str::<Value>(&text) {
                    Err(e) => Some(format!("unreadable golden: {e}")),
                    Ok(expected) => diff(&expected, &actual, "$"),
                },
            },
        };
        out.push(Outcome { name, failure });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_paths() {
        let a = json!({"x": [1, {"y": 2}]});
        assert_eq!(diff(&a, &a, "$"), None);
        let b = json!({"x": [1, {"y": 3}]});
        assert_eq!(diff(&a, &b, "$").unwrap(), "$.x[1].y: expected 2, got 3");
        assert!(diff(&a, &json!({"x": [1]}), "$").unwrap().contains("items"));
        assert!(diff(&a, &json!({"x": [1, {"y": 2}], "z": 0}), "$").unwrap().contains("unexpected"));
    }
}
