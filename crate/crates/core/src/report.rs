//! Serializable summaries.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::curve::Curve;

#[derive(Clone, Debug, Serialize)]
pub struct CurveReport {
    pub generators: Vec<String>,
    pub betti: Vec<BTreeMap<i32, usize>>,
    pub hilbert_polynomial: String,
    pub degree: i64,
    pub genus: i64,
    pub rao_dims: BTreeMap<i32, i64>,
    pub e: i32,
    pub s0: i32,
    pub alpha: Option<i32>,
    pub locally_cm: bool,
    pub regularity: i32,
}

impl CurveReport {
    pub fn new(c: &Curve) -> Self {
        CurveReport {
            generators: c.generators().iter().map(|g| g.to_string()).collect(),
            betti: c.betti().ranks,
            hilbert_polynomial: c.hilbert_polynomial().to_string(),
            degree: c.degree(),
            genus: c.genus(),
            rao_dims: c.rao_dims().to_map(),
            e: c.e(),
            s0: c.s0(),
            alpha: c.subcanonical_alpha(),
            locally_cm: c.is_locally_cm(),
            regularity: c.regularity(),
        }
    }
}
