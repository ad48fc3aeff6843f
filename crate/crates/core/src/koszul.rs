//! Koszul modules R/(f1, f2, f3, f4) and the minimal curves of their
//! biliaison classes.
//!
//! For degrees n1 <= n2 <= n3 <= n4 and mu = max(n1 + n4, n2 + n3) the curve
//! is cut out by
//!
//! ```text
//! f f1^2,  f1 f2,  g f2^2,  f f1 f4 + g f2 f3
//! ```
//!
//! with deg f = mu - n1 - n4 and deg g = mu - n2 - n3, and satisfies
//! s0 = mu + n1 - n4, e = 2 mu - n3 - n4 - 4.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{Curve, CurveOptions};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ideal::GradedIdeal;
use crate::liaison::FactoredSurface;
use crate::module::GradedModule;
use crate::poly::Poly;
use crate::random;

const MAX_DRAWS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KoszulType {
    pub n: [u32; 4],
}

impl KoszulType {
    pub fn new(n: [u32; 4]) -> Result<Self> {
        if n[0] < 1 || !n.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::precondition(format!(
                "Koszul degrees must satisfy 1 <= n1 <= n2 <= n3 <= n4, got {n:?}"
            )));
        }
        Ok(KoszulType { n })
    }

    pub fn mu(&self) -> u32 {
        let [n1, n2, n3, n4] = self.n;
        (n1 + n4).max(n2 + n3)
    }

    pub fn deg_f(&self) -> u32 {
        self.mu() - self.n[0] - self.n[3]
    }

    pub fn deg_g(&self) -> u32 {
        self.mu() - self.n[1] - self.n[2]
    }

    /// (mu, s0, e) from the closed formulas.
    pub fn predicted_invariants(&self) -> (i32, i32, i32) {
        let [n1, _, n3, n4] = self.n.map(|x| x as i32);
        let mu = self.mu() as i32;
        (mu, mu + n1 - n4, 2 * mu - n3 - n4 - 4)
    }

    pub fn is_subcanonical_class(&self) -> bool {
        self.n[0] + self.n[3] == self.n[1] + self.n[2]
    }

    /// Degreewise dimensions of the Koszul module: coefficients of
    /// prod (1 + t + ... + t^{n_i - 1}).
    pub fn module_dimensions(&self) -> Vec<i64> {
        let mut poly = vec![1i64];
        for &ni in &self.n {
            let mut next = vec![0i64; poly.len() + ni as usize - 1];
            for (k, c) in poly.iter().enumerate() {
                for j in 0..ni as usize {
                    next[k + j] += c;
                }
            }
            poly = next;
        }
        poly
    }
}

impl fmt::Display for KoszulType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.n;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// Concrete forms realizing a Koszul type.
#[derive(Clone, Debug)]
pub struct KoszulData {
    pub ty: KoszulType,
    pub forms: [Poly; 4],
    pub f: Poly,
    pub g: Poly,
    /// Number of draws needed to pass the genericity checks.
    pub draws: usize,
}

fn hp_degree(field: PrimeField, gens: &[Poly]) -> i32 {
    GradedIdeal::new(field, gens.to_vec())
        .unwrap()
        .hilbert_series()
        .polynomial()
        .degree()
}

/// Two forms share no factor iff they cut out a codimension-two scheme.
fn coprime(field: PrimeField, a: &Poly, b: &Poly) -> bool {
    if a.is_constant() || b.is_constant() {
        return true;
    }
    hp_degree(field, &[a.clone(), b.clone()]) <= 1
}

impl KoszulData {
    /// Draws forms from the seed, redrawing until the sequence is regular, f
    /// and g are nonzero and no two of f, g, f1..f4 share a factor.
    pub fn generate(field: PrimeField, ty: KoszulType, seed: u64) -> Result<Self> {
        let mut rng = random::rng(seed);
        for draw in 1..=MAX_DRAWS {
            let forms = ty.n.map(|d| Poly::random_form(field, d, &mut rng));
            let f = Poly::random_form(field, ty.deg_f(), &mut rng);
            let g = Poly::random_form(field, ty.deg_g(), &mut rng);
            if f.is_zero() || g.is_zero() || forms.iter().any(|p| p.is_zero()) {
                continue;
            }
            if hp_degree(field, &forms) != -1 {
                continue;
            }
            let aux_ok = forms
                .iter()
                .all(|fi| coprime(field, fi, &f) && coprime(field, fi, &g))
                && coprime(field, &f, &g);
            if !aux_ok {
                continue;
            }
            return Ok(KoszulData {
                ty,
                forms,
                f,
                g,
                draws: draw,
            });
        }
        Err(Error::Genericity {
            attempts: MAX_DRAWS,
            reason: format!("no admissible forms for type {ty}"),
        })
    }

    /// Forms given explicitly (checked for regularity only).
    pub fn from_forms(ty: KoszulType, forms: [Poly; 4], f: Poly, g: Poly) -> Result<Self> {
        let field = f.field();
        for (p, d) in forms.iter().zip(ty.n) {
            if p.degree() != Some(d) {
                return Err(Error::precondition(format!("form {p} should have degree {d}")));
            }
        }
        if f.degree() != Some(ty.deg_f()) || g.degree() != Some(ty.deg_g()) {
            return Err(Error::precondition("auxiliary forms have the wrong degrees"));
        }
        if hp_degree(field, &forms) != -1 {
            return Err(Error::precondition("the forms are not a regular sequence"));
        }
        Ok(KoszulData {
            ty,
            forms,
            f,
            g,
            draws: 0,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.f.field()
    }

    /// R/(f1, f2, f3, f4).
    pub fn module(&self) -> GradedModule {
        GradedModule::quotient_ring(&GradedIdeal::new(self.field(), self.forms.to_vec()).unwrap())
    }

    /// The four generators of the minimal curve's ideal.
    pub fn curve_generators(&self) -> Vec<Poly> {
        let [f1, f2, f3, f4] = &self.forms;
        let (f, g) = (&self.f, &self.g);
        vec![
            f.mul(&f1.pow(2)),
            f1.mul(f2),
            g.mul(&f2.pow(2)),
            f.mul(f1).mul(f4).add(&g.mul(f2).mul(f3)),
        ]
    }

    /// (f f1^2, f1 f2): every surface of degree s <= e + 3 containing the
    /// curve lies in this ideal.
    pub fn low_degree_ideal(&self) -> GradedIdeal {
        let [f1, f2, _, _] = &self.forms;
        GradedIdeal::new(
            self.field(),
            vec![self.f.mul(&f1.pow(2)), f1.mul(f2)],
        )
        .unwrap()
    }

    /// Surfaces f1 * r of degree s with r drawn from (f f1, f2), carrying
    /// the factorization {f1, r}.
    pub fn factored_surfaces(&self, s: u32, count: usize, seed: u64) -> Vec<FactoredSurface> {
        let [f1, f2, _, _] = &self.forms;
        let n1 = self.ty.n[0];
        if s <= n1 {
            return Vec::new();
        }
        let cofactors = GradedIdeal::new(self.field(), vec![self.f.mul(f1), f2.clone()]).unwrap();
        let mut rng = random::rng(seed);
        let mut out = Vec::new();
        for _ in 0..count * 4 {
            if out.len() == count {
                break;
            }
            let r = random::random_element_of_degree(&cofactors, s - n1, &mut rng);
            if r.is_zero() {
                continue;
            }
            let q = f1.mul(&r);
            out.push(FactoredSurface::new(q, vec![(f1.clone(), 1), (r, 1)]).unwrap());
        }
        out
    }

    pub fn minimal_curve(&self, opts: CurveOptions) -> Result<Curve> {
        let ideal = GradedIdeal::new(self.field(), self.curve_generators())?;
        Curve::from_ideal(&ideal, opts)
    }
}

/// Convenience: forms from `seed` and the resulting curve.
pub fn minimal_curve(field: PrimeField, ty: KoszulType, seed: u64) -> Result<(KoszulData, Curve)> {
    let data = KoszulData::generate(field, ty, seed)?;
    let curve = data.minimal_curve(CurveOptions::default())?;
    Ok((data, curve))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: [u32; 4]) -> KoszulType {
        KoszulType::new(n).unwrap()
    }

    #[test]
    fn predicted() {
        assert_eq!(t([1, 1, 2, 2]).predicted_invariants(), (3, 2, -2));
        assert_eq!(t([1, 1, 1, 2]).predicted_invariants(), (3, 2, -1));
        assert_eq!(t([1, 2, 2, 3]).predicted_invariants(), (4, 2, -1));
        assert!(t([1, 1, 2, 2]).is_subcanonical_class());
        assert!(!t([1, 1, 1, 2]).is_subcanonical_class());
        assert!(t([2, 2, 2, 2]).is_subcanonical_class());
        assert!(KoszulType::new([2, 1, 1, 1]).is_err());
        assert!(KoszulType::new([0, 1, 1, 1]).is_err());
    }

    #[test]
    fn module_dimensions() {
        assert_eq!(t([1, 1, 1, 1]).module_dimensions(), vec![1]);
        assert_eq!(t([1, 1, 1, 2]).module_dimensions(), vec![1, 1]);
        assert_eq!(t([1, 1, 2, 2]).module_dimensions(), vec![1, 2, 1]);
    }

    #[test]
    fn generated_module_matches_product_formula() {
        let f = PrimeField::default();
        let data = KoszulData::generate(f, t([1, 1, 2, 2]), 7).unwrap();
        let dims = data.module().finite_dimensions().unwrap();
        assert_eq!(dims.to_map(), [(0, 1), (1, 2), (2, 1)].into_iter().collect());
    }

    #[test]
    fn curve_1122() {
        let f = PrimeField::default();
        let (data, c) = minimal_curve(f, t([1, 1, 2, 2]), 1).unwrap();
        assert!(data.f.is_constant() && data.g.is_constant());
        assert_eq!((c.s0(), c.e()), (2, -2));
        // double line of genus -2: M_C = R/(f1, f2, f3, f4)(1)
        assert_eq!(c.degree_genus(), (2, -2));
        assert_eq!(c.rao_dims().to_map(), [(-1, 1), (0, 2), (1, 1)].into_iter().collect());
    }

    #[test]
    fn surfaces_of_1112_are_divisible_by_f1() {
        let f = PrimeField::default();
        let (data, c) = minimal_curve(f, t([1, 1, 1, 2]), 2).unwrap();
        let low = data.low_degree_ideal();
        for s in c.s0()..=c.e() + 3 {
            assert_eq!(low.dimension(s), c.h0_ideal(s));
        }
        for q in data.factored_surfaces(2, 3, 9) {
            assert!(c.ideal().contains(q.equation()));
            assert_eq!(q.factors()[0].0, data.forms[0]);
        }
    }

    #[test]
    fn equal_low_degrees_give_unshifted_rao() {
        let f = PrimeField::default();
        let (_, c) = minimal_curve(f, t([1, 1, 1, 2]), 3).unwrap();
        assert_eq!(c.rao_dims().to_map(), [(0, 1), (1, 1)].into_iter().collect());
        assert_eq!(c.subcanonical_alpha(), None);
    }
}
