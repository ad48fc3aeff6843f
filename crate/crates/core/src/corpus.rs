//! Named curves used across tests, the CLI and the demo.

use crate::curve::{Curve, CurveOptions};
use crate::error::Result;
use crate::field::PrimeField;
use crate::ideal::GradedIdeal;
use crate::liaison::{elementary_biliaison, FactoredSurface};
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::random;

pub const LINE: &[&str] = &["X", "Y"];
pub const SKEW_LINES: &[&str] = &["X*Z", "X*T", "Y*Z", "Y*T"];
pub const CI_22: &[&str] = &["X*Z - Y*T", "X^2 + Y^2 + Z^2 + T^2"];
pub const TWISTED_CUBIC: &[&str] = &["X*Z - Y^2", "Y*T - Z^2", "X*T - Y*Z"];
pub const RATIONAL_QUARTIC: &[&str] = &["Y*Z - X*T", "Z^3 - Y*T^2", "Y^3 - X^2*Z", "X*Z^2 - Y^2*T"];
/// The smooth quadric through the skew lines.
pub const SKEW_QUADRIC: &str = "X*Z - Y*T";

fn curve(field: PrimeField, gens: &[&str]) -> Curve {
    Curve::parse(field, gens).expect("corpus curve")
}

pub fn line(field: PrimeField) -> Curve {
    curve(field, LINE)
}

pub fn skew_lines(field: PrimeField) -> Curve {
    curve(field, SKEW_LINES)
}

pub fn ci_22(field: PrimeField) -> Curve {
    curve(field, CI_22)
}

pub fn twisted_cubic(field: PrimeField) -> Curve {
    curve(field, TWISTED_CUBIC)
}

pub fn rational_quartic(field: PrimeField) -> Curve {
    curve(field, RATIONAL_QUARTIC)
}

pub fn skew_quadric(field: PrimeField) -> FactoredSurface {
    FactoredSurface::irreducible(parse_poly(field, SKEW_QUADRIC).unwrap()).unwrap()
}

/// Skew lines raised by X on their quadric: degree 4, Rao module k in degree 1.
pub fn raised_skew_lines(field: PrimeField) -> Curve {
    let x = Poly::var(field, 0);
    elementary_biliaison(&skew_lines(field), &skew_quadric(field), &x)
        .expect("X is a nonzerodivisor on the quadric")
        .target
}

/// Complete intersection of two random forms of degrees a and b.
pub fn random_complete_intersection(field: PrimeField, a: u32, b: u32, seed: u64) -> Result<(Poly, Poly, Curve)> {
    let mut rng = random::rng(seed);
    loop {
        let f = Poly::random_form(field, a, &mut rng);
        let g = Poly::random_form(field, b, &mut rng);
        let ideal = GradedIdeal::new(field, vec![f.clone(), g.clone()])?;
        if ideal.hilbert_series().polynomial().degree() == 1 {
            let c = Curve::from_ideal(&ideal, CurveOptions::default())?;
            return Ok((f, g, c));
        }
    }
}

/// Every named corpus curve.
pub fn all(field: PrimeField) -> Vec<(&'static str, Curve)> {
    vec![
        ("line", line(field)),
        ("skew-lines", skew_lines(field)),
        ("ci-2-2", ci_22(field)),
        ("twisted-cubic", twisted_cubic(field)),
        ("rational-quartic", rational_quartic(field)),
        ("raised-skew-lines", raised_skew_lines(field)),
    ]
}

pub fn by_name(field: PrimeField, name: &str) -> Option<Curve> {
    all(field).into_iter().find(|(n, _)| *n == name).map(|(_, c)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn invariants() {
        let f = PrimeField::default();
        let q = rational_quartic(f);
        assert_eq!(q.degree_genus(), (4, 0));
        assert_eq!(q.rao_dims().to_map(), BTreeMap::from([(1, 1)]));
        let r = raised_skew_lines(f);
        // basic double link: g' = g + h d + s h (s + h - 4) / 2 with s = 2, h = 1
        assert_eq!(r.degree_genus(), (4, -1 + 2 + 2 * (2 + 1 - 4) / 2));
        assert_eq!(r.rao_dims().to_map(), BTreeMap::from([(1, 1)]));
        let (_, _, c) = random_complete_intersection(f, 2, 3, 4).unwrap();
        assert_eq!(c.degree_genus(), (6, 4));
        assert!(c.is_acm());
    }
}
