use std::collections::BTreeMap;
use std::fs;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use spacecurves::curve::{Curve, CurveOptions};
use spacecurves::hilbert::IntegerWindowFunction;
use spacecurves::ideal::GradedIdeal;
use spacecurves::koszul::{KoszulData, KoszulType};
use spacecurves::liaison::{self, FactoredSurface};
use spacecurves::module::GradedModule;
use spacecurves::report::CurveReport;
use spacecurves::{corpus, parse_poly, Error, Poly, PrimeField};

use crate::input::{parse_factors, parse_ideal_file};

#[derive(Clone, Copy, Debug)]
pub struct JobConfig {
    pub field: PrimeField,
    pub seed: u64,
    pub window: Option<(i32, i32)>,
    pub strict_cm: bool,
}

impl JobConfig {
    fn options(&self) -> CurveOptions {
        CurveOptions {
            strict_cm: self.strict_cm,
        }
    }
}

/// Generators and surfaces from a file, `corpus:NAME` or `koszul:n1,n2,n3,n4`.
pub struct Input {
    pub generators: Vec<Poly>,
    pub surfaces: Vec<FactoredSurface>,
    pub koszul: Option<KoszulData>,
}

pub fn parse_type(text: &str) -> Result<KoszulType> {
    let parts: Vec<u32> = text
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            pos: 0,
            message: format!("bad Koszul type '{text}'"),
        })?;
    let n: [u32; 4] = parts.try_into().map_err(|_| Error::Parse {
        pos: 0,
        message: format!("a Koszul type has four degrees, got '{text}'"),
    })?;
    Ok(KoszulType::new(n)?)
}

pub fn load_input(cfg: &JobConfig, source: &str) -> Result<Input> {
    if let Some(name) = source.strip_prefix("corpus:") {
        let curve = corpus::by_name(cfg.field, name)
            .with_context(|| format!("unknown corpus curve '{name}'"))?;
        return Ok(Input {
            generators: curve.generators().to_vec(),
            surfaces: Vec::new(),
            koszul: None,
        });
    }
    if let Some(ty) = source.strip_prefix("koszul:") {
        let data = KoszulData::generate(cfg.field, parse_type(ty)?, cfg.seed)?;
        return Ok(Input {
            generators: data.curve_generators(),
            surfaces: Vec::new(),
            koszul: Some(data),
        });
    }
    let text = fs::read_to_string(source).with_context(|| format!("cannot read {source}"))?;
    let file = parse_ideal_file(cfg.field, &text)?;
    if file.generators.is_empty() {
        bail!(Error::Parse {
            pos: 0,
            message: format!("{source} has no generators"),
        });
    }
    Ok(Input {
        generators: file.generators,
        surfaces: file.surfaces,
        koszul: None,
    })
}

fn ideal_of(cfg: &JobConfig, input: &Input) -> Result<GradedIdeal> {
    Ok(GradedIdeal::new(cfg.field, input.generators.clone())?)
}

pub fn curve_of(cfg: &JobConfig, input: &Input) -> Result<Curve> {
    Ok(Curve::new(cfg.field, input.generators.clone(), cfg.options())?)
}

fn strings(ps: &[Poly]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn poly(cfg: &JobConfig, text: &str) -> Result<Poly> {
    Ok(parse_poly(cfg.field, text)?)
}

/// `--surface` plus an optional `--factors` line.
pub fn surface(cfg: &JobConfig, q: &str, factors: Option<&str>) -> Result<FactoredSurface> {
    let q = poly(cfg, q)?;
    Ok(match factors {
        Some(f) => FactoredSurface::new(q, parse_factors(cfg.field, f)?)?,
        None => FactoredSurface::unfactored(q)?,
    })
}

pub fn cmd_gb(cfg: &JobConfig, input: &Input) -> Result<Value> {
    let ideal = ideal_of(cfg, input)?;
    Ok(json!({
        "generators": strings(ideal.generators()),
        "groebner_basis": strings(&ideal.groebner_basis()),
        "minimal_generators": strings(ideal.minimal_generators()),
    }))
}

pub fn cmd_resolve(cfg: &JobConfig, input: &Input) -> Result<Value> {
    let ideal = ideal_of(cfg, input)?;
    let ring = GradedModule::quotient_ring(&ideal);
    let res = ring.resolution();
    let betti = res.betti();
    Ok(json!({
        "betti": betti.ranks,
        "projective_dimension": betti.projective_dimension(),
        "regularity": res.regularity(),
    }))
}

pub fn cmd_hilbert(cfg: &JobConfig, input: &Input) -> Result<Value> {
    let ideal = ideal_of(cfg, input)?;
    let series = ideal.hilbert_series();
    let hp = series.polynomial();
    let (lo, hi) = cfg.window.unwrap_or((0, 8));
    let values: BTreeMap<i32, i64> = (lo..=hi).map(|n| (n, ideal.quotient_dimension(n))).collect();
    Ok(json!({
        "numerator": series.coefficients(),
        "hilbert_polynomial": hp.to_string(),
        "dimension": hp.degree(),
        "values": values,
    }))
}

pub fn cmd_curve_info(cfg: &JobConfig, input: &Input) -> Result<Value> {
    let c = curve_of(cfg, input)?;
    Ok(serde_json::to_value(CurveReport::new(&c))?)
}

pub fn cmd_link(cfg: &JobConfig, input: &Input, f: &str, g: &str) -> Result<Value> {
    let c = curve_of(cfg, input)?;
    let l = liaison::link(&c, &poly(cfg, f)?, &poly(cfg, g)?)?;
    Ok(json!({
        "degrees": [l.degrees.0, l.degrees.1],
        "linked": CurveReport::new(&l.curve),
        "degree_holds": l.degree_holds,
        "duality_holds": l.duality_holds,
    }))
}

fn step_value(step: &liaison::BiliaisonStep) -> Value {
    json!({
        "surface": step.surface.equation().to_string(),
        "height": step.height,
        "multiplier": step.multiplier.as_ref().map(|p| p.to_string()),
        "images": step.images.as_ref().map(|v| strings(v)),
        "target": CurveReport::new(&step.target),
        "shift_holds": step.shift_holds,
        "degree_holds": step.degree_holds,
    })
}

/// Ascending with `mult`, descending with a negative `h`.
pub fn cmd_biliaison(
    cfg: &JobConfig,
    input: &Input,
    q: &FactoredSurface,
    mult: Option<&str>,
    h: Option<i32>,
) -> Result<Value> {
    let c = curve_of(cfg, input)?;
    let step = match (mult, h) {
        (Some(f), None) => liaison::elementary_biliaison(&c, q, &poly(cfg, f)?)?,
        (None, Some(h)) => liaison::execute_descent(&c, q, h, cfg.seed)?,
        _ => bail!(Error::precondition("give exactly one of --mult and --h")),
    };
    Ok(step_value(&step))
}

/// Surfaces of least degree among the minimal generators, when none are given.
fn default_surfaces(c: &Curve) -> Result<Vec<FactoredSurface>> {
    let s0 = c.s0();
    c.generators()
        .iter()
        .filter(|g| g.degree() == Some(s0 as u32))
        .map(|g| Ok(FactoredSurface::unfactored(g.clone())?))
        .collect()
}

pub fn cmd_obstruct(
    cfg: &JobConfig,
    input: &Input,
    mut surfaces: Vec<FactoredSurface>,
    h: Option<i32>,
) -> Result<Value> {
    let c = curve_of(cfg, input)?;
    surfaces.extend(input.surfaces.iter().cloned());
    if surfaces.is_empty() {
        surfaces = default_surfaces(&c)?;
    }
    let range = match (h, cfg.window) {
        (Some(h), _) => h..=h,
        (None, Some((lo, hi))) => lo..=hi,
        (None, None) => -1..=-1,
    };
    let report = liaison::descending_obstruction_report(&c, &surfaces, range, cfg.seed)?;
    Ok(serde_json::to_value(report)?)
}

/// The h with rao(n) = module(n - h), if the two agree up to shift.
pub fn rao_shift(rao: &IntegerWindowFunction, module: &IntegerWindowFunction) -> Option<i32> {
    let h = rao.support()?.0 - module.support()?.0;
    (module.shifted(h) == *rao).then_some(h)
}

pub fn module_window(ty: &KoszulType) -> IntegerWindowFunction {
    let dims = ty.module_dimensions();
    IntegerWindowFunction::from_fn(0, dims.len() as i32 - 1, |n| dims[n as usize])
}

pub fn cmd_koszul(cfg: &JobConfig, ty: KoszulType) -> Result<Value> {
    let data = KoszulData::generate(cfg.field, ty, cfg.seed)?;
    let c = data.minimal_curve(cfg.options())?;
    let (mu, s0, e) = ty.predicted_invariants();
    let module = module_window(&ty);
    Ok(json!({
        "type": ty.to_string(),
        "mu": mu,
        "forms": strings(&data.forms),
        "f": data.f.to_string(),
        "g": data.g.to_string(),
        "draws": data.draws,
        "predicted": { "s0": s0, "e": e },
        "formulas_hold": c.s0() == s0 && c.e() == e,
        "module_dimensions": module.to_map(),
        "rao_shift": rao_shift(c.rao_dims(), &module),
        "subcanonical_class": ty.is_subcanonical_class(),
        "curve": CurveReport::new(&c),
    }))
}

/// Surfaces f1 * r in every admissible degree of a Koszul minimal curve.
pub fn koszul_surfaces(data: &KoszulData, c: &Curve, seed: u64) -> Vec<FactoredSurface> {
    (c.s0()..=c.e() + 3)
        .flat_map(|s| data.factored_surfaces(s as u32, 2, seed ^ s as u64))
        .collect()
}

pub fn cmd_verify_min(cfg: &JobConfig, input: &Input, mut surfaces: Vec<FactoredSurface>) -> Result<Value> {
    let c = curve_of(cfg, input)?;
    surfaces.extend(input.surfaces.iter().cloned());
    if let Some(data) = &input.koszul {
        surfaces.extend(koszul_surfaces(data, &c, cfg.seed));
    }
    let report = liaison::verify_minimality_subcanonical(&c, &surfaces, cfg.seed)?;
    Ok(json!({
        "verdict": if report.pass { "PASS" } else { "FAIL" },
        "report": report,
    }))
}
