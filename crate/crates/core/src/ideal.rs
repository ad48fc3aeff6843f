//! Homogeneous ideals of R = F_p[X,Y,Z,T] with a cached reduced Gröbner basis.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{self, GroebnerBasis};
use crate::hilbert::HilbertSeries;
use crate::monomial::{Monomial, NVARS};
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::vector::Vector;

pub struct GradedIdeal {
    field: PrimeField,
    gens: Vec<Poly>,
    gb: OnceLock<GroebnerBasis>,
    mingens: OnceLock<Vec<Poly>>,
    saturated: OnceLock<bool>,
}

impl Clone for GradedIdeal {
    fn clone(&self) -> Self {
        GradedIdeal {
            field: self.field,
            gens: self.gens.clone(),
            gb: self.gb.clone(),
            mingens: self.mingens.clone(),
            saturated: self.saturated.clone(),
        }
    }
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl PartialEq for GradedIdeal {
    /// Ideal equality via identical reduced Gröbner bases.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.gb().elements() == other.gb().elements()
    }
}

impl GradedIdeal {
    pub fn new(field: PrimeField, gens: Vec<Poly>) -> Result<Self> {
        for g in &gens {
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(g.to_string()));
            }
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GradedIdeal {
            field,
            gens,
            gb: OnceLock::new(),
            mingens: OnceLock::new(),
            saturated: OnceLock::new(),
        })
    }

    /// Parses each string as a generator.
    pub fn parse(field: PrimeField, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| parse_poly(field, s))
            .collect::<Result<Vec<_>>>()?;
        GradedIdeal::new(field, polys)
    }

    pub fn zero(field: PrimeField) -> Self {
        GradedIdeal::new(field, Vec::new()).unwrap()
    }

    pub fn unit(field: PrimeField) -> Self {
        GradedIdeal::new(field, vec![Poly::one(field)]).unwrap()
    }

    /// The irrelevant ideal (X, Y, Z, T).
    pub fn maximal(field: PrimeField) -> Self {
        GradedIdeal::new(field, (0..NVARS).map(|i| Poly::var(field, i)).collect()).unwrap()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    fn gen_vectors(&self) -> Vec<Vector> {
        self.gens.iter().map(|g| Vector::from_poly(g, 0)).collect()
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| groebner::compute(self.field, &[0], &self.gen_vectors(), false).basis)
    }

    /// The reduced Gröbner basis, monic, sorted by decreasing lead term.
    pub fn groebner_basis(&self) -> Vec<Poly> {
        self.gb().elements().iter().map(|v| v.component(0)).collect()
    }

    /// A minimal homogeneous generating set taken from the generators.
    pub fn minimal_generators(&self) -> &[Poly] {
        self.mingens.get_or_init(|| {
            let r = groebner::compute(self.field, &[0], &self.gen_vectors(), false);
            let _ = self.gb.set(r.basis);
            r.minimal_inputs.iter().map(|&i| self.gens[i].clone()).collect()
        })
    }

    /// Same ideal, generators replaced by a minimal monic set.
    pub fn minimized(&self) -> GradedIdeal {
        let gens = self.minimal_generators().iter().map(|g| g.monic()).collect();
        let ideal = GradedIdeal::new(self.field, gens).unwrap();
        let _ = ideal.gb.set(self.gb().clone());
        ideal
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb()
            .elements()
            .iter()
            .any(|e| e.lead().unwrap().mono.degree() == 0)
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        self.gb().normal_form(&Vector::from_poly(f, 0)).component(0)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &GradedIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::of_monomial_quotient(&[0], &self.gb().leads())
    }

    /// dim (R/I)_n
    pub fn quotient_dimension(&self, n: i32) -> i64 {
        self.hilbert_series().value(n)
    }

    /// dim I_n
    pub fn dimension(&self, n: i32) -> i64 {
        Monomial::count_of_degree(n as i64) - self.quotient_dimension(n)
    }

    /// Least degree of a nonzero element, `None` for the zero ideal.
    pub fn initial_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).min()
    }

    pub fn sum(&self, other: &GradedIdeal) -> GradedIdeal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        GradedIdeal::new(self.field, g).unwrap()
    }

    pub fn product(&self, other: &GradedIdeal) -> GradedIdeal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        GradedIdeal::new(self.field, g).unwrap()
    }

    pub fn scaled_by(&self, f: &Poly) -> GradedIdeal {
        GradedIdeal::new(self.field, self.gens.iter().map(|g| g.mul(f)).collect()).unwrap()
    }

    /// I ∩ J from the syzygies of [g_1 .. g_r, h_1 .. h_s].
    pub fn intersect(&self, other: &GradedIdeal) -> GradedIdeal {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return GradedIdeal::zero(f);
        }
        let mut inputs = self.gen_vectors();
        inputs.extend(other.gen_vectors());
        let r = groebner::compute(f, &[0], &inputs, true);
        let r_len = self.gens.len();
        let gens: Vec<Poly> = r
            .syzygies
            .iter()
            .map(|s| s.project(0..r_len).dot(&self.gens))
            .filter(|p| !p.is_zero())
            .collect();
        GradedIdeal::new(f, gens).unwrap().minimized()
    }

    /// (I : f).
    pub fn quotient_by(&self, g: &Poly) -> GradedIdeal {
        let f = self.field;
        if g.is_zero() {
            return GradedIdeal::unit(f);
        }
        if let Some(v) = single_variable(g) {
            return self.quotient_by_variable(v, false);
        }
        if self.is_zero() {
            return GradedIdeal::zero(f);
        }
        let mut inputs = vec![Vector::from_poly(g, 0)];
        inputs.extend(self.gen_vectors());
        let r = groebner::compute(f, &[0], &inputs, true);
        let gens: Vec<Poly> = r
            .syzygies
            .iter()
            .map(|s| s.component(0))
            .filter(|p| !p.is_zero())
            .collect();
        GradedIdeal::new(f, gens).unwrap().minimized()
    }

    /// (I : x_v) or (I : x_v^∞), reading the answer off a Gröbner basis in
    /// which x_v is the last variable.
    pub fn quotient_by_variable(&self, v: usize, saturate: bool) -> GradedIdeal {
        let f = self.field;
        if self.is_zero() {
            return GradedIdeal::zero(f);
        }
        // swap v and T
        let mut perm = [0, 1, 2, 3];
        perm.swap(v, NVARS - 1);
        let permuted: Vec<Vector> = self
            .gens
            .iter()
            .map(|g| Vector::from_poly(&g.permute_variables(&perm), 0))
            .collect();
        let gb = groebner::compute(f, &[0], &permuted, false).basis;
        let t = Monomial::var(NVARS - 1);
        let gens: Vec<Poly> = gb
            .elements()
            .iter()
            .map(|e| {
                let mut p = e.component(0);
                while let Some(q) = p.div_monomial(&t) {
                    p = q;
                    if !saturate {
                        break;
                    }
                }
                p.permute_variables(&perm)
            })
            .collect();
        GradedIdeal::new(f, gens).unwrap().minimized()
    }

    /// (I : J) = ∩_j (I : f_j).
    pub fn quotient(&self, other: &GradedIdeal) -> GradedIdeal {
        let f = self.field;
        let mut acc: Option<GradedIdeal> = None;
        for g in other.minimal_generators() {
            let q = self.quotient_by(g);
            acc = Some(match acc {
                None => q,
                Some(a) if a.is_unit() => q,
                Some(a) if q.is_unit() => a,
                Some(a) => a.intersect(&q),
            });
        }
        acc.unwrap_or_else(|| GradedIdeal::unit(f))
    }

    /// (I : J^∞) by iterated quotients; returns the ideal and the number of
    /// quotient steps taken until the basis stopped changing.
    pub fn saturate(&self, other: &GradedIdeal) -> (GradedIdeal, usize) {
        let mut current = self.minimized();
        let mut steps = 0;
        loop {
            let next = current.quotient(other);
            steps += 1;
            if next == current {
                break;
            }
            current = next;
        }
        let is_max = *other == GradedIdeal::maximal(self.field);
        if is_max {
            let _ = current.saturated.set(true);
        }
        (current, steps)
    }

    /// Saturation with respect to (X, Y, Z, T).
    pub fn saturate_irrelevant(&self) -> GradedIdeal {
        self.saturate(&GradedIdeal::maximal(self.field)).0
    }

    pub fn is_saturated(&self) -> bool {
        *self.saturated.get_or_init(|| {
            let q = self.quotient(&GradedIdeal::maximal(self.field));
            q == *self
        })
    }

    /// Monomial multiples of the Gröbner basis spanning I_n.
    pub fn degree_part(&self, n: u32) -> Vec<Poly> {
        let mut out = Vec::new();
        for g in self.gb().elements() {
            let g = g.component(0);
            let d = g.degree().unwrap();
            if d <= n {
                for m in Monomial::all_of_degree(n - d) {
                    out.push(g.mul_term(1, &m));
                }
            }
        }
        out
    }
}

fn single_variable(g: &Poly) -> Option<usize> {
    if g.len() != 1 {
        return None;
    }
    let (_, m) = g.terms()[0];
    if m.degree() != 1 {
        return None;
    }
    m.exponents().iter().position(|e| *e == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn id(g: &[&str]) -> GradedIdeal {
        GradedIdeal::parse(f(), g).unwrap()
    }

    fn gb_strings(i: &GradedIdeal) -> Vec<String> {
        i.groebner_basis().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(gb_strings(&id(&["X^2", "X*Y"])), vec!["X^2", "X*Y"]);
        assert_eq!(gb_strings(&id(&["X", "X + Y"])), vec!["X", "Y"]);
        assert_eq!(id(&["X*Z", "X*T", "Y*Z", "Y*T"]).groebner_basis().len(), 4);
    }

    #[test]
    fn normal_forms() {
        let p = |s| parse_poly(f(), s).unwrap();
        assert!(id(&["X^2"]).normal_form(&p("X^2*Y")).is_zero());
        assert_eq!(id(&["X*Z - Y*T"]).normal_form(&p("X*Z + Y^2")), p("Y*T + Y^2"));
    }

    #[test]
    fn quotients() {
        assert_eq!(id(&["X^2", "X*Y"]).quotient(&id(&["X"])), id(&["X", "Y"]));
        let skew = id(&["X*Z", "X*T", "Y*Z", "Y*T"]);
        assert_eq!(skew.quotient(&id(&["X", "Y"])), id(&["Z", "T"]));
        assert_eq!(skew.quotient(&GradedIdeal::unit(f())), skew);
        // syzygy route and variable route agree
        let i = id(&["X^2*Z - Y^3", "X*T^2 - Z^3", "Y*Z*T"]);
        let x = parse_poly(f(), "X").unwrap();
        assert_eq!(i.quotient_by_variable(0, false), {
            let mut inputs = vec![Vector::from_poly(&x, 0)];
            inputs.extend(i.gen_vectors());
            let r = groebner::compute(f(), &[0], &inputs, true);
            GradedIdeal::new(f(), r.syzygies.iter().map(|s| s.component(0)).collect()).unwrap()
        });
    }

    #[test]
    fn intersections() {
        let a = id(&["X", "Y"]);
        let b = id(&["Z", "T"]);
        assert_eq!(a.intersect(&b), id(&["X*Z", "X*T", "Y*Z", "Y*T"]));
        assert_eq!(a.intersect(&a), a);
        assert_eq!(a.intersect(&GradedIdeal::unit(f())), a);
    }

    #[test]
    fn saturation() {
        let (s, _) = id(&["X^2", "X*Y", "X*Z", "X*T"]).saturate(&GradedIdeal::maximal(f()));
        assert_eq!(s, id(&["X"]));
        let skew = id(&["X*Z", "X*T", "Y*Z", "Y*T"]);
        let (s, steps) = skew.saturate(&GradedIdeal::maximal(f()));
        assert_eq!(s, skew);
        assert_eq!(steps, 1);
        assert!(skew.is_saturated());
        assert!(!id(&["X^2", "X*Y", "X*Z", "X*T"]).is_saturated());
        // a line with an embedded component along a line is already saturated
        assert_eq!(id(&["X^2", "X*Y"]).saturate_irrelevant(), id(&["X^2", "X*Y"]));
    }

    #[test]
    fn hilbert_counts() {
        let skew = id(&["X*Z", "X*T", "Y*Z", "Y*T"]);
        assert_eq!(skew.quotient_dimension(3), 8);
        assert_eq!(skew.dimension(2), 4);
        assert_eq!(skew.dimension(1), 0);
    }
}
