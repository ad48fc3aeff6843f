//! Polynomials in F_p[X,Y,Z,T] as sorted term lists.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, NVARS};

/// Terms are kept strictly decreasing in degrevlex with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    terms: Vec<(u32, Monomial)>,
}

impl Poly {
    pub fn zero(field: PrimeField) -> Self {
        Poly {
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, c: i64) -> Self {
        Poly::from_terms(field, vec![(field.from_i64(c), Monomial::ONE)])
    }

    pub fn one(field: PrimeField) -> Self {
        Poly::constant(field, 1)
    }

    pub fn var(field: PrimeField, i: usize) -> Self {
        Poly::monomial(field, 1, Monomial::var(i))
    }

    pub fn monomial(field: PrimeField, c: u32, m: Monomial) -> Self {
        Poly::from_terms(field, vec![(c, m)])
    }

    /// Builds a canonical polynomial from arbitrary terms: reduces
    /// coefficients, merges duplicates and drops zeros.
    pub fn from_terms(field: PrimeField, mut terms: Vec<(u32, Monomial)>) -> Self {
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<(u32, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            let c = c % field.characteristic();
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(last.0, c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|t| t.0 != 0);
        Poly { field, terms: out }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted(field: PrimeField, terms: Vec<(u32, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].1 > w[1].1));
        debug_assert!(terms.iter().all(|t| t.0 != 0));
        Poly { field, terms }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(u32, Monomial)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.1.degree() == 0)
    }

    pub fn leading_term(&self) -> Result<(u32, Monomial)> {
        self.terms.first().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.1)
    }

    pub fn lead_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<u32> {
        let d = self.terms.first()?.1.degree();
        self.terms
            .iter()
            .all(|t| t.1.degree() == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|t| m.cmp(&t.1))
            .map(|i| self.terms[i].0)
            .unwrap_or(0)
    }

    fn check_field(&self, other: &Poly) {
        assert_eq!(self.field, other.field, "{}", Error::FieldMismatch);
    }

    fn merge(&self, other: &Poly, negate_other: bool) -> Poly {
        self.check_field(other);
        let f = self.field;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: u32| if negate_other { f.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match a[i].1.cmp(&b[j].1) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((sign(b[j].0), b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].0, sign(b[j].0));
                    if c != 0 {
                        out.push((c, a[i].1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| (sign(t.0), t.1)));
        Poly { field: f, terms: out }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Poly {
        let f = self.field;
        Poly {
            field: f,
            terms: self.terms.iter().map(|t| (f.neg(t.0), t.1)).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = self.field;
        let c = c % f.characteristic();
        if c == 0 {
            return Poly::zero(f);
        }
        Poly {
            field: f,
            terms: self.terms.iter().map(|t| (f.mul(t.0, c), t.1)).collect(),
        }
    }

    /// Product with the single term `c * m`; order is preserved.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Poly {
        let f = self.field;
        if c == 0 {
            return Poly::zero(f);
        }
        Poly {
            field: f,
            terms: self
                .terms
                .iter()
                .map(|t| (f.mul(t.0, c), t.1.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_field(other);
        let f = self.field;
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Poly::zero(f);
        for &(c, m) in &small.terms {
            acc = acc.add(&big.mul_term(c, &m));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.lead_coeff() {
            Some(c) => self.scale(self.field.inv(c)),
            None => self.clone(),
        }
    }

    /// Exact division by a monomial when every term is divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Poly> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.1.checked_div(m).map(|q| (t.0, q)))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly {
            field: self.field,
            terms,
        })
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize; NVARS]) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|&(c, m)| {
                let e = m.exponents();
                let mut out = [0u16; NVARS];
                for i in 0..NVARS {
                    out[perm[i]] = e[i];
                }
                (c, Monomial::new(out))
            })
            .collect();
        Poly::from_terms(self.field, terms)
    }

    pub fn eval(&self, point: &[u32; NVARS]) -> u32 {
        let f = self.field;
        let mut acc = 0;
        for &(c, m) in &self.terms {
            let mut v = c;
            for (i, e) in m.exponents().iter().enumerate() {
                for _ in 0..*e {
                    v = f.mul(v, point[i]);
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Uniformly random form of degree `d` (dense).
    pub fn random_form<R: Rng + ?Sized>(field: PrimeField, d: u32, rng: &mut R) -> Poly {
        let p = field.characteristic();
        let terms = Monomial::all_of_degree(d)
            .into_iter()
            .map(|m| (rng.gen_range(0..p), m))
            .collect();
        Poly::from_terms(field, terms)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(c, m)) in self.terms.iter().enumerate() {
            let s = self.field.to_signed(c);
            let mag = s.unsigned_abs();
            if i == 0 {
                if s < 0 {
                    write!(f, "-")?;
                }
            } else if s < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(PrimeField::default(), s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert!(p("X").add(&p("-X")).is_zero());
        assert_eq!(p("X+Y").mul(&p("X-Y")), p("X^2 - Y^2"));
        let f = p("3*X^2*Y - Z*T^2 + 7*Y^3");
        assert_eq!(f.mul(&Poly::one(f.field())), f);
        assert_eq!(f.sub(&f), Poly::zero(f.field()));
    }

    #[test]
    fn leading_terms() {
        let f = PrimeField::default();
        assert_eq!(
            p("X^2 + X*Y + Y^2").leading_term().unwrap(),
            (1, Monomial::new([2, 0, 0, 0]))
        );
        assert_eq!(
            p("X*Z - Y*T").leading_term().unwrap(),
            (1, Monomial::new([1, 0, 1, 0]))
        );
        assert_eq!(
            p("5*T^4").leading_term().unwrap(),
            (5, Monomial::new([0, 0, 0, 4]))
        );
        assert_eq!(Poly::zero(f).leading_term(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn degrees() {
        assert_eq!(p("X*Z - Y*T").degree(), Some(2));
        assert_eq!(p("X + Y^2").degree(), None);
        assert!(!p("X + Y^2").is_homogeneous());
        assert!(Poly::zero(PrimeField::default()).is_homogeneous());
    }

    #[test]
    fn printing() {
        assert_eq!(p("X*Z - Y*T").to_string(), "X*Z - Y*T");
        assert_eq!(p("-2*X^2 + 3*Y*T").to_string(), "-2*X^2 + 3*Y*T");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("7").to_string(), "7");
    }

    #[test]
    fn permutation_moves_variables() {
        let f = p("X^2*T + Y");
        // X <-> T
        assert_eq!(f.permute_variables(&[3, 1, 2, 0]), p("T^2*X + Y"));
    }
}
