//! Liaison and biliaison of space curves.
//!
//! Surfaces are carried with a factorization supplied by the caller (and
//! checked exactly): the descending-biliaison test only needs the maximal
//! strict divisors q/p_i of the surface equation.
//!
//! Homomorphisms J_{C/Q} -> O_Q(h) are handled through their graded avatar
//! Hom_R(I_C/(q), R/(q))_h, computed by linear algebra from the syzygies of
//! (q, g_1, .., g_r).

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::curve::{Curve, CurveOptions};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::hilbert::HilbertPolynomial;
use crate::ideal::GradedIdeal;
use crate::linalg::DenseMatrix;
use crate::matrix::GradedMatrix;
use crate::module::GradedModule;
use crate::poly::Poly;
use crate::random;
use crate::vector::Vector;

/// Number of random draws before a witness search gives up.
pub const WITNESS_RETRIES: usize = 32;

#[derive(Clone, Debug)]
pub struct FactoredSurface {
    q: Poly,
    factors: Vec<(Poly, u32)>,
    /// The factorization was not supplied; q is treated as irreducible.
    assumed_irreducible: bool,
}

impl FactoredSurface {
    /// Checks that the product of the factors is q up to a nonzero scalar.
    pub fn new(q: Poly, factors: Vec<(Poly, u32)>) -> Result<Self> {
        if q.is_zero() || !q.is_homogeneous() || q.is_constant() {
            return Err(Error::precondition("a surface needs a nonconstant form"));
        }
        if factors.is_empty() {
            return Err(Error::precondition("empty factorization"));
        }
        let f = q.field();
        let mut prod = Poly::one(f);
        for (p, m) in &factors {
            if p.is_constant() || *m == 0 {
                return Err(Error::precondition(format!("degenerate factor {p}")));
            }
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous(p.to_string()));
            }
            prod = prod.mul(&p.pow(*m));
        }
        if prod.monic() != q.monic() {
            return Err(Error::precondition(format!(
                "factors multiply to {prod}, not a multiple of {q}"
            )));
        }
        Ok(FactoredSurface {
            q,
            factors,
            assumed_irreducible: false,
        })
    }

    /// q declared irreducible by the caller.
    pub fn irreducible(q: Poly) -> Result<Self> {
        FactoredSurface::new(q.clone(), vec![(q, 1)])
    }

    /// q with no known factorization. Tests on such a surface can only
    /// over-report injectivity.
    pub fn unfactored(q: Poly) -> Result<Self> {
        let mut s = FactoredSurface::irreducible(q)?;
        s.assumed_irreducible = true;
        Ok(s)
    }

    pub fn equation(&self) -> &Poly {
        &self.q
    }

    pub fn degree(&self) -> i32 {
        self.q.degree().unwrap() as i32
    }

    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    pub fn assumed_irreducible(&self) -> bool {
        self.assumed_irreducible
    }

    /// q / p_i for each factor, skipping the constant quotient of an
    /// irreducible q.
    pub fn maximal_divisors(&self) -> Vec<(usize, Poly)> {
        let f = self.q.field();
        let mut out = Vec::new();
        for i in 0..self.factors.len() {
            let mut d = Poly::one(f);
            for (k, (p, m)) in self.factors.iter().enumerate() {
                let e = if k == i { m - 1 } else { *m };
                d = d.mul(&p.pow(e));
            }
            if !d.is_constant() {
                out.push((i, d));
            }
        }
        out
    }

    fn check_contains(&self, c: &Curve) -> Result<()> {
        if c.ideal().contains(&self.q) {
            Ok(())
        } else {
            Err(Error::precondition(format!(
                "the surface {} does not contain the curve",
                self.q
            )))
        }
    }
}

#[derive(Clone, Debug)]
pub struct BiliaisonStep {
    pub surface: FactoredSurface,
    pub height: i32,
    /// The multiplier f for an ascending step.
    pub multiplier: Option<Poly>,
    /// Images u(g_j) of the generators of I_C for a descending step.
    pub images: Option<Vec<Poly>>,
    pub source: Curve,
    pub target: Curve,
    /// rao(target)(n) = rao(source)(n - h).
    pub shift_holds: bool,
    /// deg target = deg source + h s.
    pub degree_holds: bool,
}

impl BiliaisonStep {
    pub fn verified(&self) -> bool {
        self.shift_holds && self.degree_holds
    }

    fn build(
        surface: FactoredSurface,
        height: i32,
        multiplier: Option<Poly>,
        images: Option<Vec<Poly>>,
        source: &Curve,
        target: Curve,
    ) -> Self {
        let shift_holds = *target.rao_dims() == source.rao_dims().shifted(height);
        let degree_holds =
            target.degree() == source.degree() + height as i64 * surface.degree() as i64;
        BiliaisonStep {
            surface,
            height,
            multiplier,
            images,
            source: source.clone(),
            target,
            shift_holds,
            degree_holds,
        }
    }
}

fn hp_degree(field: PrimeField, gens: Vec<Poly>) -> i32 {
    GradedIdeal::new(field, gens)
        .unwrap()
        .hilbert_series()
        .polynomial()
        .degree()
}

#[derive(Debug)]
pub struct Link {
    pub curve: Curve,
    pub degrees: (i32, i32),
    /// deg C' = ab - deg C.
    pub degree_holds: bool,
    /// dim M_C'(n) = dim M_C(a + b - 4 - n).
    pub duality_holds: bool,
}

/// The curve linked to C by the complete intersection (F, G).
pub fn link(c: &Curve, big_f: &Poly, big_g: &Poly) -> Result<Link> {
    let field = c.field();
    for p in [big_f, big_g] {
        if p.is_zero() || !p.is_homogeneous() {
            return Err(Error::precondition(format!("{p} is not a nonzero form")));
        }
        if !c.ideal().contains(p) {
            return Err(Error::precondition(format!("{p} does not vanish on the curve")));
        }
    }
    if hp_degree(field, vec![big_f.clone(), big_g.clone()]) != 1 {
        return Err(Error::precondition("(F, G) is not a complete intersection curve"));
    }
    let a = big_f.degree().unwrap() as i32;
    let b = big_g.degree().unwrap() as i32;
    let ci = GradedIdeal::new(field, vec![big_f.clone(), big_g.clone()])?;
    let linked = Curve::from_ideal(&ci.quotient(c.ideal()), CurveOptions::default())?;
    let degree_holds = linked.degree() == (a * b) as i64 - c.degree();
    let duality_holds = *linked.rao_dims() == c.rao_dims().reflected(a + b - 4);
    Ok(Link {
        curve: linked,
        degrees: (a, b),
        degree_holds,
        duality_holds,
    })
}

/// Ascending biliaison of height deg f on Q: I_C' = sat(f I_C + (q)).
pub fn elementary_biliaison(c: &Curve, surface: &FactoredSurface, f: &Poly) -> Result<BiliaisonStep> {
    surface.check_contains(c)?;
    let h = match f.degree() {
        Some(d) if d >= 1 && !f.is_zero() => d as i32,
        _ => return Err(Error::precondition("the multiplier must be a form of positive degree")),
    };
    // f is a nonzerodivisor on R/(q) iff (q, f) has codimension two.
    if hp_degree(c.field(), vec![surface.q.clone(), f.clone()]) > 1 {
        return Err(Error::precondition(format!(
            "{f} shares a factor with the surface equation"
        )));
    }
    let ideal = c.ideal().scaled_by(f).sum(&GradedIdeal::new(c.field(), vec![surface.q.clone()])?);
    let target = Curve::from_ideal(&ideal, CurveOptions::default())?;
    Ok(BiliaisonStep::build(
        surface.clone(),
        h,
        Some(f.clone()),
        None,
        c,
        target,
    ))
}

/// dim H^0 omega_C(4 - s + h), the dimension of Hom(J_{C/Q}, O_Q(h)) for h < 0.
pub fn hom_dimension(c: &Curve, surface: &FactoredSurface, h: i32) -> Result<i64> {
    if h >= 0 {
        return Err(Error::precondition("the Hom/omega dictionary needs h < 0"));
    }
    surface.check_contains(c)?;
    Ok(c.h0_omega(4 - surface.degree() + h))
}

/// Hom_R(I_C/(q), R/(q))_h with an explicit basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub degree: i32,
    /// Generators g_1..g_r of I_C; a homomorphism is given by their images.
    pub generators: Vec<Poly>,
    /// Each basis element lists u(g_1), .., u(g_r) reduced modulo q.
    pub basis: Vec<Vec<Poly>>,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The homomorphism with the given coordinates.
    pub fn combination(&self, coords: &[u32]) -> Vec<Poly> {
        let f = self.generators[0].field();
        let mut out = vec![Poly::zero(f); self.generators.len()];
        for (b, &x) in self.basis.iter().zip(coords) {
            if x == 0 {
                continue;
            }
            for (o, p) in out.iter_mut().zip(b) {
                *o = o.add(&p.scale(x));
            }
        }
        out
    }
}

pub fn hom_space(c: &Curve, surface: &FactoredSurface, h: i32) -> HomSpace {
    let field = c.field();
    let q = &surface.q;
    let gens = c.generators().to_vec();
    let oq = GradedModule::quotient_ring(&GradedIdeal::new(field, vec![q.clone()]).unwrap());
    let mut inputs = vec![q.clone()];
    inputs.extend(gens.iter().cloned());
    let degrees: Vec<i32> = inputs.iter().map(|p| p.degree().unwrap() as i32).collect();
    let row = GradedMatrix::from_columns(
        field,
        vec![0],
        inputs.iter().map(|p| Vector::from_poly(p, 0)).collect(),
    );
    let syz = row.syzygies();
    // Unknowns: coordinates of u(g_j) in (R/q)_{d_j + h}; u(q) = 0.
    let blocks: Vec<_> = degrees[1..].iter().map(|d| oq.degree_basis(d + h)).collect();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.len();
            Some(o)
        })
        .collect();
    let nunknowns: usize = blocks.iter().map(|b| b.len()).sum();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (sigma, d) in syz.columns().iter().zip(syz.col_degrees()) {
        let tgt = oq.degree_basis(d + h);
        if tgt.is_empty() {
            continue;
        }
        let mut block = vec![vec![0u32; nunknowns]; tgt.len()];
        for (j, b) in blocks.iter().enumerate() {
            let coeff = sigma.component(j + 1);
            if coeff.is_zero() {
                continue;
            }
            for (k, (_, m)) in b.elements.iter().enumerate() {
                let v = Vector::from_poly(&coeff.mul_term(1, m), 0);
                for (r, x) in oq.coordinates(&v, &tgt).into_iter().enumerate() {
                    block[r][offsets[j] + k] = x;
                }
            }
        }
        rows.extend(block);
    }
    let kernel = if rows.is_empty() {
        (0..nunknowns)
            .map(|i| {
                let mut v = vec![0; nunknowns];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        DenseMatrix::from_rows(field, nunknowns, &rows).kernel()
    };
    let basis = kernel
        .iter()
        .map(|v| {
            blocks
                .iter()
                .enumerate()
                .map(|(j, b)| {
                    let coords = &v[offsets[j]..offsets[j] + b.len()];
                    oq.element(coords, b).component(0)
                })
                .collect()
        })
        .collect();
    HomSpace {
        degree: h,
        generators: gens,
        basis,
    }
}

/// Hilbert polynomial of the image of u: its ideal is (q, u(g_1), ..).
fn image_ideal(surface: &FactoredSurface, images: &[Poly]) -> GradedIdeal {
    let mut gens = vec![surface.q.clone()];
    gens.extend(images.iter().filter(|p| !p.is_zero()).cloned());
    GradedIdeal::new(surface.q.field(), gens).unwrap()
}

/// u is injective iff its image J_{C'/Q} has the Hilbert polynomial of
/// J_{C/Q}(-h); a kernel would be supported on a component of Q and lower
/// the leading coefficient.
fn is_injective(c: &Curve, surface: &FactoredSurface, h: i32, images: &[Poly]) -> bool {
    let field = c.field();
    let oq = GradedIdeal::new(field, vec![surface.q.clone()])
        .unwrap()
        .hilbert_series()
        .polynomial();
    let img = image_ideal(surface, images).hilbert_series().polynomial();
    let hc: &HilbertPolynomial = c.hilbert_polynomial();
    (0..5i64).all(|n| {
        oq.eval_int(n) - img.eval_int(n) == oq.eval_int(n - h as i64) - hc.eval_int(n - h as i64)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    NoNonzeroHom,
    AllAnnihilated { divisor: String },
    InjectiveExists,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorKernel {
    pub factor: String,
    pub multiplicity: u32,
    /// The maximal strict divisor q / factor.
    pub divisor: String,
    pub kernel_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomTest {
    pub s: i32,
    pub h: i32,
    pub dim_hom: i64,
    pub factors: Vec<FactorKernel>,
    pub verdict: Verdict,
    /// A section of omega_C(4 - s + h) killed by no strict divisor.
    pub witness: Option<String>,
    #[serde(skip)]
    pub theta: Option<Vector>,
    /// dim Hom_R(I_C/(q), R/(q))_h from linear algebra.
    pub dim_hom_direct: usize,
    /// Whether a random homomorphism passed the injectivity test.
    pub injective_hom_found: bool,
    pub surface_assumed_irreducible: bool,
}

impl HomTest {
    /// The section route and the homomorphism route agree.
    pub fn routes_agree(&self) -> bool {
        self.dim_hom == self.dim_hom_direct as i64
            && (self.verdict == Verdict::InjectiveExists) == self.injective_hom_found
    }
}

/// Decides whether some u: J_{C/Q}(-h) -> O_Q is injective, for h < 0.
pub fn injective_hom_exists(c: &Curve, surface: &FactoredSurface, h: i32, seed: u64) -> Result<HomTest> {
    if h >= 0 {
        return Err(Error::precondition("descending biliaison needs h < 0"));
    }
    surface.check_contains(c)?;
    let field = c.field();
    let s = surface.degree();
    let omega = c.omega();
    let k = 4 - s + h;
    let v = omega.degree_basis(k);
    let mut rng = random::rng(seed);

    let divisors = surface.maximal_divisors();
    let maps: Vec<DenseMatrix> = divisors
        .iter()
        .map(|(_, d)| omega.multiplication_map(d, k))
        .collect();
    let factors = divisors
        .iter()
        .zip(&maps)
        .map(|((i, d), m)| {
            let (p, mult) = &surface.factors[*i];
            FactorKernel {
                factor: p.to_string(),
                multiplicity: *mult,
                divisor: d.to_string(),
                kernel_dim: v.len() - m.rank(),
            }
        })
        .collect::<Vec<_>>();

    let mut theta = None;
    let verdict = if v.is_empty() {
        Verdict::NoNonzeroHom
    } else if let Some(j) = factors.iter().position(|fk| fk.kernel_dim == v.len()) {
        Verdict::AllAnnihilated {
            divisor: divisors[j].1.to_string(),
        }
    } else {
        // No K_i is all of V, and fewer than p proper subspaces cannot cover
        // it: a random vector avoids them with high probability.
        for _ in 0..WITNESS_RETRIES {
            let x = random::random_vector(field, v.len(), &mut rng);
            if maps.iter().all(|m| m.apply(&x).iter().any(|&y| y != 0)) && x.iter().any(|&y| y != 0) {
                theta = Some(omega.element(&x, &v));
                break;
            }
        }
        if theta.is_none() {
            return Err(Error::Genericity {
                attempts: WITNESS_RETRIES,
                reason: "no section outside the annihilator kernels was drawn".into(),
            });
        }
        Verdict::InjectiveExists
    };

    let hom = hom_space(c, surface, h);
    let mut injective_hom_found = false;
    if hom.dimension() > 0 {
        for _ in 0..WITNESS_RETRIES {
            let x = random::random_vector(field, hom.dimension(), &mut rng);
            if is_injective(c, surface, h, &hom.combination(&x)) {
                injective_hom_found = true;
                break;
            }
        }
    }

    Ok(HomTest {
        s,
        h,
        dim_hom: v.len() as i64,
        factors,
        verdict,
        witness: theta.as_ref().map(|t| format!("{t:?}")),
        theta,
        dim_hom_direct: hom.dimension(),
        injective_hom_found,
        surface_assumed_irreducible: surface.assumed_irreducible,
    })
}

/// Carries out a descending elementary biliaison of height h < 0 on Q with a
/// random injective u, when one exists.
pub fn execute_descent(c: &Curve, surface: &FactoredSurface, h: i32, seed: u64) -> Result<BiliaisonStep> {
    if h >= 0 {
        return Err(Error::precondition("descending biliaison needs h < 0"));
    }
    surface.check_contains(c)?;
    let hom = hom_space(c, surface, h);
    if hom.dimension() == 0 {
        return Err(Error::precondition(format!(
            "Hom(J_C/Q, O_Q({h})) vanishes; no descent"
        )));
    }
    let mut rng = random::rng(seed);
    for _ in 0..WITNESS_RETRIES {
        let x = random::random_vector(c.field(), hom.dimension(), &mut rng);
        let images = hom.combination(&x);
        if !is_injective(c, surface, h, &images) {
            continue;
        }
        let target = Curve::from_ideal(&image_ideal(surface, &images), CurveOptions::default())?;
        return Ok(BiliaisonStep::build(
            surface.clone(),
            h,
            None,
            Some(images),
            c,
            target,
        ));
    }
    Err(Error::precondition(format!(
        "no injective homomorphism of degree {h} found in {WITNESS_RETRIES} draws"
    )))
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionEntry {
    pub surface: usize,
    pub equation: String,
    #[serde(flatten)]
    pub test: HomTest,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub entries: Vec<ObstructionEntry>,
    /// (surface index, h) of the first pair where a section avoids every
    /// annihilating divisor and a random u is certified injective.
    pub descent: Option<(usize, i32)>,
    /// Pairs where only the section route claims injectivity. This happens
    /// on surfaces whose factorization was not supplied.
    pub unconfirmed: Vec<(usize, i32)>,
    /// The two routes agree on every surface with a supplied factorization.
    pub routes_agree: bool,
}

impl ObstructionReport {
    fn from_entries(entries: Vec<ObstructionEntry>) -> Self {
        let claims = |e: &&ObstructionEntry| e.test.verdict == Verdict::InjectiveExists;
        let descent = entries
            .iter()
            .filter(claims)
            .find(|e| e.test.injective_hom_found)
            .map(|e| (e.surface, e.test.h));
        let unconfirmed = entries
            .iter()
            .filter(claims)
            .filter(|e| !e.test.injective_hom_found)
            .map(|e| (e.surface, e.test.h))
            .collect();
        let routes_agree = entries
            .iter()
            .filter(|e| !e.test.surface_assumed_irreducible)
            .all(|e| e.test.routes_agree());
        ObstructionReport {
            entries,
            descent,
            unconfirmed,
            routes_agree,
        }
    }

    pub fn descending_biliaison_found(&self) -> bool {
        self.descent.is_some()
    }
}

fn map_tasks<T: Sync, U: Send>(tasks: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        tasks.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        tasks.iter().map(f).collect()
    }
}

/// Runs [`injective_hom_exists`] over every surface and every h in
/// `h_range`, ordered by (s, h, surface index).
pub fn descending_obstruction_report(
    c: &Curve,
    surfaces: &[FactoredSurface],
    h_range: RangeInclusive<i32>,
    seed: u64,
) -> Result<ObstructionReport> {
    if *h_range.end() >= 0 {
        return Err(Error::precondition("the h range must be negative"));
    }
    for s in surfaces {
        s.check_contains(c)?;
    }
    let mut tasks: Vec<(i32, i32, usize)> = Vec::new();
    for (i, s) in surfaces.iter().enumerate() {
        for h in h_range.clone() {
            tasks.push((s.degree(), h, i));
        }
    }
    tasks.sort();
    // Fill caches once before fanning out.
    let _ = c.omega().gb();
    let results = map_tasks(&tasks, |&(_, h, i)| {
        let entry_seed = seed ^ ((i as u64) << 32) ^ (h as i64 as u64);
        injective_hom_exists(c, &surfaces[i], h, entry_seed)
    });
    let mut entries = Vec::new();
    for (&(_, _, i), r) in tasks.iter().zip(results) {
        entries.push(ObstructionEntry {
            surface: i,
            equation: surfaces[i].q.to_string(),
            test: r?,
        });
    }
    Ok(ObstructionReport::from_entries(entries))
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramCheck {
    pub passed: bool,
    pub first_failure: Option<i32>,
    pub window: (i32, i32),
}

/// Rank bookkeeping for the diagram attached to u = multiplication by f:
/// dim Hom(J_{C/Q}, O_Q(h')) = h^0 O_Q(h') + h^0 omega_C(4 - s + h') for h'
/// in the window, u is a homomorphism coming from O_Q, and multiplication by
/// f commutes with the inclusion I_C/(q) -> R/(q) degree by degree.
pub fn fundamental_diagram_check(
    c: &Curve,
    surface: &FactoredSurface,
    f: &Poly,
    window: (i32, i32),
) -> Result<DiagramCheck> {
    surface.check_contains(c)?;
    if f.is_zero() || !f.is_homogeneous() {
        return Err(Error::precondition("the multiplier must be a nonzero form"));
    }
    let field = c.field();
    let s = surface.degree();
    let df = f.degree().unwrap() as i32;
    let q_ideal = GradedIdeal::new(field, vec![surface.q.clone()])?;
    let oq = GradedModule::quotient_ring(&q_ideal);
    let sub = GradedModule::ideal_quotient(c.ideal(), &q_ideal);
    let gens = c.ideal().minimal_generators().to_vec();

    let check = |n: i32| -> bool {
        // rank bookkeeping
        let hom = hom_space(c, surface, n);
        if hom.dimension() as i64 != oq.hilbert_function(n) + c.h0_omega(4 - s + n) {
            return false;
        }
        // u = f lies in Hom_{deg f}: f g_j satisfy every relation mod q
        if n == df {
            let images: Vec<Poly> = gens.iter().map(|g| q_ideal.normal_form(&g.mul(f))).collect();
            let x = hom_solve(&hom, &images);
            if x.is_none() {
                return false;
            }
        }
        // f o j = j o f on degree n
        let src = sub.degree_basis(n);
        let mid = oq.degree_basis(n);
        let tgt_sub = sub.degree_basis(n + df);
        let tgt = oq.degree_basis(n + df);
        let incl = |basis: &crate::module::DegreeBasis, into: &crate::module::DegreeBasis| {
            let cols: Vec<Vec<u32>> = basis
                .elements
                .iter()
                .map(|(j, m)| {
                    let v = Vector::from_poly(&gens[*j as usize].mul_term(1, m), 0);
                    oq.coordinates(&v, into)
                })
                .collect();
            DenseMatrix::from_columns(field, into.len(), &cols)
        };
        if src.is_empty() {
            return true;
        }
        let j_n = incl(&src, &mid);
        let j_next = incl(&tgt_sub, &tgt);
        let left = oq.multiplication_map(f, n).mul(&j_n);
        let right = j_next.mul(&sub.multiplication_map(f, n));
        left == right
    };
    let first_failure = (window.0..=window.1).find(|&n| !check(n));
    Ok(DiagramCheck {
        passed: first_failure.is_none(),
        first_failure,
        window,
    })
}

/// Coordinates of a homomorphism (given by its images) in the Hom basis.
fn hom_solve(hom: &HomSpace, images: &[Poly]) -> Option<Vec<u32>> {
    let field = images[0].field();
    // Flatten polynomials into coefficient vectors over a common monomial list.
    let mut monos = Vec::new();
    let mut push = |p: &Poly, j: usize| {
        for (_, m) in p.terms() {
            if !monos.contains(&(j, *m)) {
                monos.push((j, *m));
            }
        }
    };
    for b in &hom.basis {
        for (j, p) in b.iter().enumerate() {
            push(p, j);
        }
    }
    for (j, p) in images.iter().enumerate() {
        push(p, j);
    }
    let flatten = |ps: &[Poly]| -> Vec<u32> {
        monos
            .iter()
            .map(|(j, m)| ps[*j].coefficient(m))
            .collect()
    };
    let cols: Vec<Vec<u32>> = hom.basis.iter().map(|b| flatten(b)).collect();
    let target = flatten(images);
    if cols.is_empty() {
        return target.iter().all(|&x| x == 0).then(Vec::new);
    }
    DenseMatrix::from_columns(field, monos.len(), &cols).solve(&target)
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalityReport {
    pub alpha: i32,
    pub e: i32,
    pub s0: i32,
    pub acm: bool,
    /// Admissible (s, h): s0 <= s <= e + 4 + h, h >= s - 4 - e, h < 0.
    pub admissible: Vec<(i32, i32)>,
    /// alpha + h - s < 0 for every admissible pair.
    pub bookkeeping_holds: bool,
    pub report: Option<ObstructionReport>,
    pub surfaces_tested: usize,
    pub pass: bool,
}

/// Number of random surfaces drawn per admissible degree.
const RANDOM_SURFACES: usize = 2;

/// Searches for a descending elementary biliaison of a subcanonical curve
/// over the supplied surfaces plus, in each admissible degree, the Gröbner
/// basis elements and a few random elements of I_C. PASS means none was
/// found over that family. Surfaces without a factorization count as
/// irreducible; a claim they produce is only counted once a random u is
/// certified injective.
pub fn verify_minimality_subcanonical(
    c: &Curve,
    surfaces: &[FactoredSurface],
    seed: u64,
) -> Result<MinimalityReport> {
    let alpha = c.subcanonical_alpha().ok_or(Error::NotSubcanonical)?;
    let (e, s0) = (c.e(), c.s0());
    let acm = c.is_acm();
    let mut admissible = Vec::new();
    for s in s0..=e + 3 {
        for h in (s - 4 - e)..=-1 {
            admissible.push((s, h));
        }
    }
    let bookkeeping_holds = admissible.iter().all(|&(s, h)| alpha + h - s < 0);
    if acm || admissible.is_empty() {
        return Ok(MinimalityReport {
            alpha,
            e,
            s0,
            acm,
            admissible,
            bookkeeping_holds,
            report: None,
            surfaces_tested: 0,
            pass: true,
        });
    }
    let mut family: Vec<FactoredSurface> = surfaces.to_vec();
    let mut rng = random::rng(seed);
    let degrees: std::collections::BTreeSet<i32> = admissible.iter().map(|p| p.0).collect();
    for &s in &degrees {
        for g in c.ideal().groebner_basis() {
            if g.degree() == Some(s as u32) {
                family.push(FactoredSurface::unfactored(g)?);
            }
        }
        for _ in 0..RANDOM_SURFACES {
            let q = random::random_element_of_degree(c.ideal(), s as u32, &mut rng);
            if !q.is_zero() {
                family.push(FactoredSurface::unfactored(q)?);
            }
        }
    }
    family.retain(|q| degrees.contains(&q.degree()));
    let mut entries = Vec::new();
    for (i, q) in family.iter().enumerate() {
        let s = q.degree();
        let lo = s - 4 - e;
        if lo > -1 {
            continue;
        }
        let r = descending_obstruction_report(c, std::slice::from_ref(q), lo..=-1, seed ^ i as u64)?;
        entries.extend(r.entries.into_iter().map(|mut en| {
            en.surface = i;
            en
        }));
    }
    let report = ObstructionReport::from_entries(entries);
    let pass = !report.descending_biliaison_found();
    Ok(MinimalityReport {
        alpha,
        e,
        s0,
        acm,
        admissible,
        bookkeeping_holds,
        surfaces_tested: family.len(),
        report: Some(report),
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use std::collections::BTreeMap;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn p(s: &str) -> Poly {
        parse_poly(f(), s).unwrap()
    }

    fn skew() -> Curve {
        Curve::parse(f(), &["X*Z", "X*T", "Y*Z", "Y*T"]).unwrap()
    }

    fn quadric() -> FactoredSurface {
        FactoredSurface::irreducible(p("X*Z - Y*T")).unwrap()
    }

    fn raised() -> BiliaisonStep {
        elementary_biliaison(&skew(), &quadric(), &p("X")).unwrap()
    }

    #[test]
    fn factorization_is_checked() {
        assert!(FactoredSurface::new(p("X*Z"), vec![(p("X"), 1), (p("Z"), 1)]).is_ok());
        assert!(FactoredSurface::new(p("2*X*Z"), vec![(p("X"), 1), (p("Z"), 1)]).is_ok());
        assert!(FactoredSurface::new(p("X*Z"), vec![(p("X"), 1), (p("T"), 1)]).is_err());
        assert!(FactoredSurface::new(p("X^2"), vec![(p("X"), 1)]).is_err());
        let sq = FactoredSurface::new(p("X^2*Y"), vec![(p("X"), 2), (p("Y"), 1)]).unwrap();
        let divs: Vec<String> = sq.maximal_divisors().iter().map(|(_, d)| d.to_string()).collect();
        assert_eq!(divs, vec!["X*Y", "X^2"]);
        assert!(quadric().maximal_divisors().is_empty());
    }

    #[test]
    fn raise_skew_lines() {
        let step = raised();
        assert!(step.verified());
        assert_eq!(step.target.degree(), 4);
        assert_eq!(step.target.rao_dims().to_map(), BTreeMap::from([(1, 1)]));
        // zerodivisor rejected
        let reducible = FactoredSurface::new(p("X*Z"), vec![(p("X"), 1), (p("Z"), 1)]).unwrap();
        let c = Curve::parse(f(), &["X", "Y"]).unwrap();
        assert!(elementary_biliaison(&c, &reducible, &p("X")).is_err());
    }

    #[test]
    fn shifts_compose() {
        let two = elementary_biliaison(&skew(), &quadric(), &p("X*Y + Z^2")).unwrap();
        let one = elementary_biliaison(&raised().target, &quadric(), &p("T")).unwrap();
        assert!(two.verified() && one.verified());
        assert_eq!(two.target.rao_dims(), one.target.rao_dims());
        assert_eq!(two.target.rao_dims().to_map(), BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn hom_dimensions() {
        assert_eq!(hom_dimension(&skew(), &quadric(), -1).unwrap(), 0);
        assert!(hom_dimension(&skew(), &quadric(), 0).is_err());
        let c1 = raised().target;
        assert!(hom_dimension(&c1, &quadric(), -1).unwrap() >= 1);
        for h in -3..=-1 {
            let direct = hom_space(&c1, &quadric(), h).dimension() as i64;
            assert_eq!(direct, hom_dimension(&c1, &quadric(), h).unwrap(), "h = {h}");
        }
    }

    #[test]
    fn raised_curve_descends() {
        let c1 = raised().target;
        let t = injective_hom_exists(&c1, &quadric(), -1, 5).unwrap();
        assert_eq!(t.verdict, Verdict::InjectiveExists);
        assert!(t.routes_agree());
        let down = execute_descent(&c1, &quadric(), -1, 5).unwrap();
        assert!(down.verified());
        assert_eq!(down.target.rao_dims().to_map(), BTreeMap::from([(0, 1)]));
        assert_eq!(down.target.degree_genus(), (2, -1));
    }

    #[test]
    fn skew_lines_report() {
        let r = descending_obstruction_report(&skew(), &[quadric()], -2..=-1, 1).unwrap();
        assert!(r.entries.iter().all(|e| e.test.verdict == Verdict::NoNonzeroHom));
        assert!(!r.descending_biliaison_found());
        assert!(r.routes_agree);
    }

    #[test]
    fn link_skew_lines() {
        let c = skew();
        let g = p("X*Z*T + Y*T^2 + Y*Z^2");
        let l = link(&c, &p("X*Z - Y*T"), &g).unwrap();
        assert!(l.degree_holds && l.duality_holds);
        assert_eq!(l.curve.degree(), 4);
        assert_eq!(l.curve.rao_dims().to_map(), BTreeMap::from([(1, 1)]));
        let back = link(&l.curve, &p("X*Z - Y*T"), &g).unwrap();
        assert!(back.curve.same_as(&c));
        // not a complete intersection
        let line = Curve::parse(f(), &["X", "Y"]).unwrap();
        assert!(link(&line, &p("X"), &p("X^2")).is_err());
    }

    #[test]
    fn diagram() {
        let d = fundamental_diagram_check(&skew(), &quadric(), &p("X"), (-4, 4)).unwrap();
        assert!(d.passed, "{d:?}");
        let d = fundamental_diagram_check(&skew(), &quadric(), &p("X*Z - Y*T"), (-4, 4)).unwrap();
        assert!(d.passed);
    }

    #[test]
    fn minimality() {
        let r = verify_minimality_subcanonical(&skew(), &[quadric()], 3).unwrap();
        assert!(r.pass && r.bookkeeping_holds);
        let ci = Curve::parse(f(), &["X*Z - Y*T", "X^2 + Y^2 + Z^2 + T^2"]).unwrap();
        assert!(verify_minimality_subcanonical(&ci, &[], 3).unwrap().pass);
        let cubic = Curve::parse(f(), &["X*Z - Y^2", "Y*T - Z^2", "X*T - Y*Z"]).unwrap();
        assert!(matches!(
            verify_minimality_subcanonical(&cubic, &[], 3),
            Err(Error::NotSubcanonical)
        ));
    }
}
