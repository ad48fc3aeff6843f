//! Curves in P^3: saturated ideals with Hilbert polynomial of degree one, and
//! their cohomological invariants read off Ext modules by graded duality:
//!
//! * dim (M_C)_n  = dim Ext^3(R/I, R)_{-n-4}
//! * h^1 O_C(n)   = dim Ext^2(R/I, R)_{-n-4}
//! * omega_C      = Ext^2(R/I, R)(-4)

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::hilbert::{HilbertPolynomial, IntegerWindowFunction};
use crate::ideal::GradedIdeal;
use crate::module::{BettiTable, GradedModule, Resolution};
use crate::poly::Poly;
use crate::random;
use crate::vector::Vector;

const SUBCANONICAL_SEED: u64 = 0x5eed_a1fa;
const SUBCANONICAL_DRAWS: usize = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CurveOptions {
    /// Reject curves whose Ext^3(R/I, R) does not have finite length, i.e.
    /// curves that are not locally Cohen-Macaulay of pure dimension one.
    pub strict_cm: bool,
}

pub struct Curve {
    ideal: GradedIdeal,
    ring: GradedModule,
    hp: HilbertPolynomial,
    ext2: OnceLock<GradedModule>,
    ext3: OnceLock<GradedModule>,
    omega: OnceLock<GradedModule>,
    rao: OnceLock<IntegerWindowFunction>,
    subcanonical: OnceLock<Option<SubcanonicalCertificate>>,
}

impl Clone for Curve {
    fn clone(&self) -> Self {
        Curve {
            ideal: self.ideal.clone(),
            ring: self.ring.clone(),
            hp: self.hp.clone(),
            ext2: self.ext2.clone(),
            ext3: self.ext3.clone(),
            omega: self.omega.clone(),
            rao: self.rao.clone(),
            subcanonical: self.subcanonical.clone(),
        }
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve{:?}", self.ideal)
    }
}

/// Evidence that omega_C is isomorphic to O_C(alpha): a section theta of
/// omega in degree -alpha whose annihilator is I_C and whose cokernel has
/// finite length.
#[derive(Clone, Debug)]
pub struct SubcanonicalCertificate {
    pub alpha: i32,
    pub theta: Vector,
    /// Whether the graded module omega itself is cyclic (true for ACM curves).
    pub omega_cyclic: bool,
}

impl Curve {
    /// Saturates and validates the ideal generated by `gens`.
    pub fn new(field: PrimeField, gens: Vec<Poly>, opts: CurveOptions) -> Result<Curve> {
        let ideal = GradedIdeal::new(field, gens)?;
        Curve::from_ideal(&ideal, opts)
    }

    pub fn parse(field: PrimeField, gens: &[&str]) -> Result<Curve> {
        Curve::from_ideal(&GradedIdeal::parse(field, gens)?, CurveOptions::default())
    }

    pub fn from_ideal(ideal: &GradedIdeal, opts: CurveOptions) -> Result<Curve> {
        let sat = ideal.saturate_irrelevant();
        Curve::from_saturated(sat, opts)
    }

    /// Trusts that `ideal` is saturated.
    pub fn from_saturated(ideal: GradedIdeal, opts: CurveOptions) -> Result<Curve> {
        let ideal = ideal.minimized();
        let hp = ideal.hilbert_series().polynomial();
        if hp.degree() != 1 {
            return Err(Error::NotACurve {
                polynomial: hp.to_string(),
            });
        }
        let ring = GradedModule::quotient_ring(&ideal);
        let curve = Curve {
            ideal,
            ring,
            hp,
            ext2: OnceLock::new(),
            ext3: OnceLock::new(),
            omega: OnceLock::new(),
            rao: OnceLock::new(),
            subcanonical: OnceLock::new(),
        };
        if opts.strict_cm && !curve.is_locally_cm() {
            return Err(Error::precondition(
                "Ext^3(R/I, R) has positive dimension: the curve is not locally Cohen-Macaulay",
            ));
        }
        Ok(curve)
    }

    pub fn field(&self) -> PrimeField {
        self.ideal.field()
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Poly] {
        self.ideal.generators()
    }

    pub fn coordinate_ring(&self) -> &GradedModule {
        &self.ring
    }

    pub fn hilbert_polynomial(&self) -> &HilbertPolynomial {
        &self.hp
    }

    pub fn degree(&self) -> i64 {
        self.hp.multiplicity()
    }

    /// Arithmetic genus, from HP(n) = d n + 1 - g.
    pub fn genus(&self) -> i64 {
        1 - self.hp.eval_int(0)
    }

    pub fn degree_genus(&self) -> (i64, i64) {
        (self.degree(), self.genus())
    }

    pub fn resolution(&self) -> &Resolution {
        self.ring.resolution()
    }

    pub fn betti(&self) -> BettiTable {
        self.resolution().betti()
    }

    pub fn ext2(&self) -> &GradedModule {
        self.ext2.get_or_init(|| self.ring.ext(2))
    }

    pub fn ext3(&self) -> &GradedModule {
        self.ext3.get_or_init(|| self.ring.ext(3))
    }

    /// The dualizing module Ext^2(R/I, R)(-4).
    pub fn omega(&self) -> &GradedModule {
        self.omega.get_or_init(|| self.ext2().shift(-4))
    }

    /// Ext^3(R/I, R) of finite length certifies that the sheaf Ext^3 vanishes,
    /// which for a one-dimensional saturated ideal means locally CM and pure.
    pub fn is_locally_cm(&self) -> bool {
        self.ext3().is_finite_length()
    }

    /// s_0: least degree of a surface containing the curve.
    pub fn s0(&self) -> i32 {
        self.ideal.initial_degree().expect("curve ideal is nonzero") as i32
    }

    /// e: largest n with h^1 O_C(n) != 0.
    pub fn e(&self) -> i32 {
        -self
            .omega()
            .initial_degree()
            .expect("a curve has a nonzero dualizing module")
    }

    /// h^0 J_C(n) = dim (I_C)_n.
    pub fn h0_ideal(&self, n: i32) -> i64 {
        self.ideal.dimension(n)
    }

    /// h^1 O_C(n) = dim Ext^2_{-n-4}.
    pub fn h1_structure(&self, n: i32) -> i64 {
        self.ext2().hilbert_function(-n - 4)
    }

    /// h^0 O_C(n) = chi(O_C(n)) + h^1 O_C(n).
    pub fn h0_structure(&self, n: i32) -> i64 {
        self.hp.eval_int(n as i64) + self.h1_structure(n)
    }

    /// h^0 omega_C(n).
    pub fn h0_omega(&self, n: i32) -> i64 {
        self.omega().hilbert_function(n)
    }

    /// dim (M_C)_n via Ext^3.
    pub fn rao_dims(&self) -> &IntegerWindowFunction {
        self.rao.get_or_init(|| {
            let e3 = self.ext3();
            match e3.finite_dimensions() {
                Some(w) => w.reflected(-4),
                // Not locally CM: report the window values only.
                None => {
                    let (lo, hi) = e3.window().unwrap_or((0, -1));
                    IntegerWindowFunction::from_fn(-4 - hi, -4 - lo, |n| {
                        e3.hilbert_function(-n - 4)
                    })
                }
            }
        })
    }

    /// Degrees outside which every quantity used by [`Curve::rao_dims_euler`]
    /// is certified to follow its polynomial and the difference vanishes.
    pub fn certified_window(&self) -> (i32, i32) {
        let (rlo, rhi) = self.ring.window().unwrap_or((0, 0));
        let (elo, ehi) = self.ext2().window().unwrap_or((0, 0));
        (rlo.min(-4 - ehi), rhi.max(-4 - elo))
    }

    /// dim (M_C)_n from the cohomology sequence of 0 -> J_C -> O_P -> O_C -> 0:
    /// h^0 O_C(n) - dim (R/I)_n.
    pub fn rao_dims_euler(&self) -> IntegerWindowFunction {
        let (lo, hi) = self.certified_window();
        IntegerWindowFunction::from_fn(lo, hi, |n| {
            self.h0_structure(n) - self.ring.hilbert_function(n)
        })
    }

    /// Regularity of R/I from the resolution.
    pub fn regularity(&self) -> i32 {
        self.resolution().regularity().unwrap_or(0)
    }

    pub fn is_acm(&self) -> bool {
        self.rao_dims().is_zero()
    }

    /// alpha with omega_C ≅ O_C(alpha), certified by a section; `None` if the
    /// curve is not subcanonical.
    pub fn subcanonical(&self) -> Option<&SubcanonicalCertificate> {
        self.subcanonical
            .get_or_init(|| self.find_subcanonical(SUBCANONICAL_SEED))
            .as_ref()
    }

    pub fn subcanonical_alpha(&self) -> Option<i32> {
        self.subcanonical().map(|c| c.alpha)
    }

    fn find_subcanonical(&self, seed: u64) -> Option<SubcanonicalCertificate> {
        let (d, g) = self.degree_genus();
        if (2 * g - 2) % d != 0 {
            return None;
        }
        let alpha = ((2 * g - 2) / d) as i32;
        let omega = self.omega();
        let basis = omega.degree_basis(-alpha);
        if basis.is_empty() {
            return None;
        }
        let f = self.field();
        let mut rng = random::rng(seed);
        for _ in 0..SUBCANONICAL_DRAWS {
            let coords = random::random_vector(f, basis.len(), &mut rng);
            let theta = omega.element(&coords, &basis);
            if theta.is_zero() {
                continue;
            }
            if omega.annihilator_of(&theta) != self.ideal {
                continue;
            }
            let mut rels = omega.relations().to_vec();
            rels.push(theta.clone());
            let coker = GradedModule::new(f, omega.generator_degrees().to_vec(), rels);
            if coker.is_finite_length() {
                return Some(SubcanonicalCertificate {
                    alpha,
                    theta,
                    omega_cyclic: omega.is_cyclic_in_degree().is_some(),
                });
            }
        }
        None
    }

    /// Same curve with ideal equality.
    pub fn same_as(&self, other: &Curve) -> bool {
        self.ideal == other.ideal
    }
}

/// Outcome of the residual construction together with its checks.
#[derive(Debug)]
pub struct Residual {
    pub curve: Curve,
    pub alpha: i32,
    /// Ann(I_Cp / I_C) equals I_C''.
    pub annihilator_matches: bool,
    /// Ext^2(I_Cp/I_C, R)_{n-4} has dimension h^0 O_C''(n + alpha) for all n,
    /// i.e. I_Cp/I_C and omega_C''(-alpha) define sheaves with equal
    /// cohomology.
    pub dual_matches: bool,
    /// The same comparison with the roles of Cp and C'' exchanged.
    pub dual_matches_symmetric: bool,
    /// Hilbert polynomials of I_Cp/I_C and of omega_C''(-alpha) agree.
    pub polynomial_matches: bool,
}

impl Residual {
    pub fn all_checks_pass(&self) -> bool {
        self.annihilator_matches
            && self.dual_matches
            && self.dual_matches_symmetric
            && self.polynomial_matches
    }
}

/// Compares dim Ext^2(sub, R)_{n-4} with h^0 O_D(n + alpha) for every n.
fn dual_profile_matches(sub: &GradedModule, d: &Curve, alpha: i32) -> bool {
    let e2 = sub.ext(2);
    // Left side: n -> HF(e2, n - 4); polynomial for n - 4 above the window.
    let (elo, ehi) = e2.window().unwrap_or((0, -1));
    let (dlo, dhi) = d.certified_window();
    let lo = (elo + 4).min(dlo - alpha) - 1;
    let hi = (ehi + 4).max(dhi - alpha) + 1;
    let values_match = (lo..=hi).all(|n| e2.hilbert_function(n - 4) == d.h0_structure(n + alpha));
    // Beyond the window both sides are polynomial; compare the polynomials
    // at enough points to pin down degree one.
    let lp = e2.hilbert_polynomial();
    let poly_match = (0..4).all(|k| {
        let n = hi + 1 + k;
        lp.eval_int((n - 4) as i64) == d.hilbert_polynomial().eval_int((n + alpha) as i64)
    });
    values_match && poly_match
}

/// Residual C'' of Cp in the subcanonical curve C: I_C'' = (I_C : I_Cp).
pub fn residual_subcurve(c: &Curve, cp: &Curve) -> Result<Residual> {
    let alpha = c.subcanonical_alpha().ok_or(Error::NotSubcanonical)?;
    if !cp.ideal().contains_ideal(c.ideal()) {
        return Err(Error::precondition("I_C is not contained in I_Cp"));
    }
    if cp.same_as(c) {
        return Err(Error::precondition("Cp equals C; the residual is empty"));
    }
    let q = c.ideal().quotient(cp.ideal());
    let residual = Curve::from_ideal(&q, CurveOptions::default())?;
    let sub = GradedModule::ideal_quotient(cp.ideal(), c.ideal());
    let sub2 = GradedModule::ideal_quotient(residual.ideal(), c.ideal());
    let annihilator_matches = sub.annihilator() == *residual.ideal();
    let dual_matches = dual_profile_matches(&sub, &residual, alpha);
    let dual_matches_symmetric = dual_profile_matches(&sub2, cp, alpha);
    // HP(I_Cp/I_C)(n) = chi(omega_C''(n - alpha)) = -HP_C''(alpha - n).
    let hs = sub.hilbert_polynomial();
    let polynomial_matches = (0..4).all(|n| {
        hs.eval_int(n) == -residual.hilbert_polynomial().eval_int(alpha as i64 - n)
    });
    Ok(Residual {
        curve: residual,
        alpha,
        annihilator_matches,
        dual_matches,
        dual_matches_symmetric,
        polynomial_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn line() {
        let c = Curve::parse(f(), &["X", "Y"]).unwrap();
        assert_eq!(c.degree_genus(), (1, 0));
        assert!(c.is_acm());
        // omega of a line is O(-2): dim max(0, n - 1)
        for n in -3..5 {
            assert_eq!(c.h0_omega(n), (n - 1).max(0) as i64);
        }
        assert_eq!(c.subcanonical_alpha(), Some(-2));
    }

    #[test]
    fn plane_is_rejected() {
        let err = Curve::parse(f(), &["X^2", "X*Y"]).unwrap_err();
        assert!(matches!(err, Error::NotACurve { .. }));
    }

    #[test]
    fn skew_lines() {
        let c = Curve::parse(f(), &["X*Z", "X*T", "Y*Z", "Y*T"]).unwrap();
        assert_eq!(c.degree_genus(), (2, -1));
        assert_eq!(c.rao_dims().to_map(), BTreeMap::from([(0, 1)]));
        assert_eq!(c.rao_dims_euler(), *c.rao_dims());
        assert_eq!((c.e(), c.s0()), (-2, 2));
        assert_eq!(c.h1_structure(-2), 2);
        assert_eq!(c.h1_structure(0), 0);
        assert_eq!(c.h0_ideal(1), 0);
        assert_eq!(c.h0_ideal(2), 4);
        assert_eq!(c.subcanonical_alpha(), Some(-2));
        assert!(!c.subcanonical().unwrap().omega_cyclic);
        assert!(c.is_locally_cm());
    }

    #[test]
    fn complete_intersection_of_quadrics() {
        let c = Curve::parse(f(), &["X*Z - Y*T", "X^2 + Y^2 + Z^2 + T^2"]).unwrap();
        assert_eq!(c.degree_genus(), (4, 1));
        assert!(c.rao_dims().is_zero());
        assert_eq!((c.e(), c.s0()), (0, 2));
        assert_eq!(c.h1_structure(0), 1);
        assert_eq!(c.h0_ideal(2), 2);
        assert_eq!(c.subcanonical_alpha(), Some(0));
        assert!(c.subcanonical().unwrap().omega_cyclic);
        for n in -3..6 {
            assert_eq!(c.h0_omega(n), c.coordinate_ring().hilbert_function(n));
        }
    }

    #[test]
    fn twisted_cubic_is_not_subcanonical() {
        let c = Curve::parse(f(), &["X*Z - Y^2", "Y*T - Z^2", "X*T - Y*Z"]).unwrap();
        assert_eq!(c.degree_genus(), (3, 0));
        assert!(c.is_acm());
        // 2g - 2 = -2 is not divisible by 3
        assert_eq!(c.subcanonical_alpha(), None);
    }

    #[test]
    fn skew_lines_residual() {
        let c = Curve::parse(f(), &["X*Z", "X*T", "Y*Z", "Y*T"]).unwrap();
        let l = Curve::parse(f(), &["X", "Y"]).unwrap();
        let r = residual_subcurve(&c, &l).unwrap();
        assert_eq!(*r.curve.ideal(), GradedIdeal::parse(f(), &["Z", "T"]).unwrap());
        assert!(r.all_checks_pass(), "{r:?}");
        let back = residual_subcurve(&c, &r.curve).unwrap();
        assert!(back.curve.same_as(&l));
        assert!(residual_subcurve(&c, &c).is_err());
    }
}
