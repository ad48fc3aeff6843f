//! Elements of graded free modules R(-d_1) + ... + R(-d_r).
//!
//! Terms are ordered term-over-position: degrevlex on the monomial first and a
//! smaller component index breaking ties upward. Twists live with the owning
//! free module, not with each vector.

use std::cmp::Ordering;
use std::fmt;

use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
    pub comp: u32,
}

#[inline]
pub fn cmp_position(a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
    a.0.cmp(b.0).then(b.1.cmp(&a.1))
}

impl Term {
    #[inline]
    fn key_cmp(&self, other: &Term) -> Ordering {
        cmp_position((&self.mono, self.comp), (&other.mono, other.comp))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: PrimeField,
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero(field: PrimeField) -> Self {
        Vector {
            field,
            terms: Vec::new(),
        }
    }

    /// The basis vector e_i scaled by `c`.
    pub fn unit(field: PrimeField, i: usize, c: u32) -> Self {
        Vector::from_terms(
            field,
            vec![Term {
                coeff: c,
                mono: Monomial::ONE,
                comp: i as u32,
            }],
        )
    }

    pub fn from_terms(field: PrimeField, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| b.key_cmp(a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            let c = t.coeff % field.characteristic();
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.comp == t.comp => {
                    last.coeff = field.add(last.coeff, c)
                }
                _ => out.push(Term { coeff: c, ..t }),
            }
        }
        out.retain(|t| t.coeff != 0);
        Vector { field, terms: out }
    }

    /// Vector whose i-th component is `polys[i]`.
    pub fn from_polys(field: PrimeField, polys: &[Poly]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            for &(c, m) in p.terms() {
                terms.push(Term {
                    coeff: c,
                    mono: m,
                    comp: i as u32,
                });
            }
        }
        Vector::from_terms(field, terms)
    }

    /// The polynomial placed in component `i`.
    pub fn from_poly(p: &Poly, i: usize) -> Self {
        Vector {
            field: p.field(),
            terms: p
                .terms()
                .iter()
                .map(|&(c, m)| Term {
                    coeff: c,
                    mono: m,
                    comp: i as u32,
                })
                .collect(),
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Graded degree given the generator degrees of the ambient free module;
    /// `None` if zero or inhomogeneous.
    pub fn degree(&self, twists: &[i32]) -> Option<i32> {
        let t0 = self.terms.first()?;
        let d = t0.mono.degree() as i32 + twists[t0.comp as usize];
        self.terms
            .iter()
            .all(|t| t.mono.degree() as i32 + twists[t.comp as usize] == d)
            .then_some(d)
    }

    pub fn component(&self, i: usize) -> Poly {
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|t| t.comp as usize == i)
            .map(|t| (t.coeff, t.mono))
            .collect();
        Poly::from_sorted(self.field, terms)
    }

    /// All components, padded to `rank`.
    pub fn to_polys(&self, rank: usize) -> Vec<Poly> {
        let mut buckets: Vec<Vec<(u32, Monomial)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp as usize].push((t.coeff, t.mono));
        }
        buckets
            .into_iter()
            .map(|b| Poly::from_sorted(self.field, b))
            .collect()
    }

    pub fn max_component(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp as usize).max()
    }

    pub fn scale(&self, c: u32) -> Vector {
        let f = self.field;
        if c.is_multiple_of(f.characteristic()) {
            return Vector::zero(f);
        }
        Vector {
            field: f,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: f.mul(t.coeff, c),
                    ..*t
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> (Vector, u32) {
        match self.lead() {
            Some(t) => {
                let inv = self.field.inv(t.coeff);
                (self.scale(inv), inv)
            }
            None => (self.clone(), 1),
        }
    }

    pub fn mul_term(&self, c: u32, m: &Monomial) -> Vector {
        let f = self.field;
        if c == 0 {
            return Vector::zero(f);
        }
        Vector {
            field: f,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: f.mul(t.coeff, c),
                    mono: t.mono.mul(m),
                    comp: t.comp,
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> Vector {
        let mut acc = Vector::zero(self.field);
        for &(c, m) in p.terms() {
            acc = acc.add(&self.mul_term(c, &m));
        }
        acc
    }

    pub fn add(&self, other: &Vector) -> Vector {
        self.combine(1, other, 1, &Monomial::ONE)
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.combine(1, other, self.field.neg(1), &Monomial::ONE)
    }

    pub fn neg(&self) -> Vector {
        self.scale(self.field.neg(1))
    }

    /// `a * self + b * m * other` in a single merge pass.
    pub fn combine(&self, a: u32, other: &Vector, b: u32, m: &Monomial) -> Vector {
        let f = self.field;
        debug_assert_eq!(f, other.field);
        let (x, y) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        let scaled_x = |t: &Term| Term {
            coeff: if a == 1 { t.coeff } else { f.mul(t.coeff, a) },
            ..*t
        };
        let scaled_y = |t: &Term| Term {
            coeff: f.mul(t.coeff, b),
            mono: t.mono.mul(m),
            comp: t.comp,
        };
        if b == 0 {
            return if a == 0 {
                Vector::zero(f)
            } else {
                Vector {
                    field: f,
                    terms: x.iter().map(scaled_x).collect(),
                }
            };
        }
        while i < x.len() && j < y.len() {
            let ty = scaled_y(&y[j]);
            match x[i].key_cmp(&ty) {
                Ordering::Greater => {
                    out.push(scaled_x(&x[i]));
                    i += 1;
                }
                Ordering::Less => {
                    out.push(ty);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(scaled_x(&x[i]).coeff, ty.coeff);
                    if c != 0 {
                        out.push(Term { coeff: c, ..ty });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(x[i..].iter().map(scaled_x));
        out.extend(y[j..].iter().map(scaled_y));
        out.retain(|t| t.coeff != 0);
        Vector { field: f, terms: out }
    }

    /// Renumbers components; entries mapped to `None` are dropped.
    pub fn remap(&self, map: impl Fn(usize) -> Option<usize>) -> Vector {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                map(t.comp as usize).map(|c| Term {
                    comp: c as u32,
                    ..*t
                })
            })
            .collect();
        Vector::from_terms(self.field, terms)
    }

    /// Components in `range`, renumbered from zero.
    pub fn project(&self, range: std::ops::Range<usize>) -> Vector {
        self.remap(|c| range.contains(&c).then(|| c - range.start))
    }

    /// Dot product with a vector of polynomials: sum_i v_i * polys[i].
    pub fn dot(&self, polys: &[Poly]) -> Poly {
        let mut acc = Poly::zero(self.field);
        for t in &self.terms {
            acc = acc.add(&polys[t.comp as usize].mul_term(t.coeff, &t.mono));
        }
        acc
    }

    /// Linear combination sum_i v_i * cols[i] of module vectors.
    pub fn combine_columns(&self, cols: &[Vector]) -> Vector {
        let mut acc = Vector::zero(self.field);
        for t in &self.terms {
            acc = acc.combine(1, &cols[t.comp as usize], t.coeff, &t.mono);
        }
        acc
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = self.max_component().map_or(0, |c| c + 1);
        let polys = self.to_polys(rank);
        write!(f, "[")?;
        for (i, p) in polys.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
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
    fn components_round_trip() {
        let polys = vec![p("X*Z - Y*T"), p("0"), p("Y^2 + T^2")];
        let v = Vector::from_polys(PrimeField::default(), &polys);
        assert_eq!(v.to_polys(3), polys);
        assert_eq!(v.component(2), polys[2]);
        assert_eq!(v.degree(&[0, 5, 0]), Some(2));
        assert_eq!(v.degree(&[0, 0, 1]), None);
    }

    #[test]
    fn position_breaks_ties() {
        let v = Vector::from_polys(PrimeField::default(), &[p("Y"), p("Y")]);
        assert_eq!(v.lead().unwrap().comp, 0);
        let w = Vector::from_polys(PrimeField::default(), &[p("Y"), p("X")]);
        assert_eq!(w.lead().unwrap().comp, 1);
    }

    #[test]
    fn combine_cancels() {
        let f = PrimeField::default();
        let v = Vector::from_polys(f, &[p("X*Y"), p("Z^2")]);
        let w = Vector::from_polys(f, &[p("Y"), p("0")]);
        let x = Monomial::var(0);
        let r = v.combine(1, &w, f.neg(1), &x);
        assert_eq!(r.to_polys(2), vec![p("0"), p("Z^2")]);
        assert_eq!(v.dot(&[p("Z"), p("X")]), p("X*Y*Z + X*Z^2"));
    }
}
