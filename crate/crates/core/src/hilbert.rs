//! Hilbert series numerators, Hilbert polynomials and window functions.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::monomial::{Monomial, NVARS};

/// Numerator K(t) of a Hilbert series K(t)/(1-t)^4, as a Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HilbertSeries {
    coeffs: BTreeMap<i32, i64>,
}

impl HilbertSeries {
    pub fn zero() -> Self {
        HilbertSeries::default()
    }

    pub fn from_map(mut coeffs: BTreeMap<i32, i64>) -> Self {
        coeffs.retain(|_, v| *v != 0);
        HilbertSeries { coeffs }
    }

    /// Series of a free module with the given generator degrees.
    pub fn free(degrees: &[i32]) -> Self {
        let mut m = BTreeMap::new();
        for d in degrees {
            *m.entry(*d).or_insert(0) += 1;
        }
        HilbertSeries::from_map(m)
    }

    /// Series of F/L where L is generated by monomials in each component.
    pub fn of_monomial_quotient(twists: &[i32], leads: &[Vec<Monomial>]) -> Self {
        let mut total = BTreeMap::new();
        for (d, l) in twists.iter().zip(leads) {
            for (k, v) in numerator(l) {
                *total.entry(k as i32 + d).or_insert(0) += v;
            }
        }
        HilbertSeries::from_map(total)
    }

    pub fn coefficients(&self) -> &BTreeMap<i32, i64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &HilbertSeries, sign: i64) -> HilbertSeries {
        let mut m = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            *m.entry(*k).or_insert(0) += sign * v;
        }
        HilbertSeries::from_map(m)
    }

    pub fn shift(&self, h: i32) -> HilbertSeries {
        HilbertSeries::from_map(self.coeffs.iter().map(|(k, v)| (k - h, *v)).collect())
    }

    /// Exact value of the Hilbert function in degree n.
    pub fn value(&self, n: i32) -> i64 {
        self.coeffs
            .iter()
            .map(|(k, v)| v * Monomial::count_of_degree((n - k) as i64))
            .sum()
    }

    pub fn polynomial(&self) -> HilbertPolynomial {
        let mut acc = HilbertPolynomial::zero();
        for (k, v) in &self.coeffs {
            acc = acc.add(&HilbertPolynomial::shifted_binomial(*k).scale(*v));
        }
        acc
    }

    /// Degrees below `lo` have value 0; degrees above `hi` agree with the
    /// Hilbert polynomial. `None` for the zero series.
    pub fn window(&self) -> Option<(i32, i32)> {
        let lo = *self.coeffs.keys().next()?;
        let hi = *self.coeffs.keys().next_back()?;
        Some((lo, hi - NVARS as i32))
    }

    /// Values over the window for a module of finite length.
    pub fn finite_values(&self) -> Option<IntegerWindowFunction> {
        if !self.polynomial().is_zero() {
            return None;
        }
        Some(match self.window() {
            None => IntegerWindowFunction::zero(),
            Some((lo, hi)) => IntegerWindowFunction::from_fn(lo, hi, |n| self.value(n)),
        })
    }
}

/// Numerator of the Hilbert series of R/(monomials), indexed by t-degree.
fn numerator(gens: &[Monomial]) -> BTreeMap<u32, i64> {
    let gens = minimalize(gens);
    let mut out = BTreeMap::new();
    numerator_rec(gens, 0, 1, &mut out);
    out.retain(|_, v| *v != 0);
    out
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut g: Vec<Monomial> = gens.to_vec();
    g.sort_by_key(|m| m.degree());
    g.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in g {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Adds sign * t^shift * K(R/(gens)) into `out`.
fn numerator_rec(gens: Vec<Monomial>, shift: u32, sign: i64, out: &mut BTreeMap<u32, i64>) {
    if gens.is_empty() {
        *out.entry(shift).or_insert(0) += sign;
        return;
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        // prod (1 - t^{d_i})
        let mut poly: BTreeMap<u32, i64> = BTreeMap::from([(0, 1)]);
        for m in &gens {
            let d = m.degree();
            let mut next = poly.clone();
            for (k, v) in &poly {
                *next.entry(k + d).or_insert(0) -= v;
            }
            poly = next;
        }
        for (k, v) in poly {
            *out.entry(k + shift).or_insert(0) += sign * v;
        }
        return;
    }
    // Pivot on the variable occurring in the most generators.
    let mut counts = [0usize; NVARS];
    for m in &gens {
        for (i, e) in m.exponents().iter().enumerate() {
            if *e > 0 {
                counts[i] += 1;
            }
        }
    }
    let v = (0..NVARS).max_by_key(|&i| counts[i]).unwrap();
    let pivot = Monomial::var(v);
    // K(L) = K(L + (x)) + t * K(L : x)
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exponents()[v] == 0)
        .copied()
        .collect();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| m.checked_div(&pivot).unwrap_or(*m))
        .collect();
    numerator_rec(minimalize(&plus), shift, sign, out);
    numerator_rec(minimalize(&colon), shift + 1, sign, out);
}

/// Polynomial in n with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HilbertPolynomial {
    coeffs: Vec<Rational64>,
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        HilbertPolynomial::default()
    }

    pub fn from_coefficients(c: Vec<Rational64>) -> Self {
        let mut p = HilbertPolynomial { coeffs: c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == Rational64::from(0)) {
            self.coeffs.pop();
        }
    }

    /// C(n - k + 3, 3) as a polynomial in n.
    fn shifted_binomial(k: i32) -> Self {
        let mut acc = HilbertPolynomial::from_coefficients(vec![Rational64::from(1)]);
        for j in 1..=3i64 {
            // factor (n - k + j) / j
            let lin = HilbertPolynomial::from_coefficients(vec![
                Rational64::new(j - k as i64, j),
                Rational64::new(1, j),
            ]);
            acc = acc.mul(&lin);
        }
        acc
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return HilbertPolynomial::zero();
        }
        let mut c = vec![Rational64::from(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        HilbertPolynomial::from_coefficients(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational64::from(0);
        let c = (0..n)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(zero)
                    + other.coeffs.get(i).copied().unwrap_or(zero)
            })
            .collect();
        HilbertPolynomial::from_coefficients(c)
    }

    pub fn scale(&self, s: i64) -> Self {
        HilbertPolynomial::from_coefficients(
            self.coeffs.iter().map(|c| c * Rational64::from(s)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(&self) -> i32 {
        self.coeffs.len() as i32 - 1
    }

    pub fn coefficients(&self) -> &[Rational64] {
        &self.coeffs
    }

    pub fn eval(&self, n: i64) -> Rational64 {
        let mut acc = Rational64::from(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * Rational64::from(n) + c;
        }
        acc
    }

    /// Value at an integer, which is always an integer for Hilbert polynomials.
    pub fn eval_int(&self, n: i64) -> i64 {
        let v = self.eval(n);
        assert!(v.is_integer(), "non-integral Hilbert polynomial value");
        v.to_integer()
    }

    /// Leading coefficient times (degree)!, the degree of the projective scheme.
    pub fn multiplicity(&self) -> i64 {
        match self.coeffs.last() {
            None => 0,
            Some(c) => {
                let fact: i64 = (1..=self.degree() as i64).product();
                (c * Rational64::from(fact)).to_integer()
            }
        }
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == Rational64::from(0) {
                continue;
            }
            let neg = *c < Rational64::from(0);
            let mag = if neg { -c } else { *c };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let one = mag == Rational64::from(1);
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !one {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "n")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Integer-valued function of the degree that vanishes outside `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct IntegerWindowFunction {
    lo: i32,
    values: Vec<i64>,
}

impl IntegerWindowFunction {
    pub fn zero() -> Self {
        IntegerWindowFunction::default()
    }

    pub fn from_fn(lo: i32, hi: i32, f: impl Fn(i32) -> i64) -> Self {
        let values = if hi < lo {
            Vec::new()
        } else {
            (lo..=hi).map(f).collect()
        };
        let mut w = IntegerWindowFunction { lo, values };
        w.trim();
        w
    }

    pub fn from_map(m: &BTreeMap<i32, i64>) -> Self {
        match (m.keys().next(), m.keys().next_back()) {
            (Some(&lo), Some(&hi)) => {
                IntegerWindowFunction::from_fn(lo, hi, |n| m.get(&n).copied().unwrap_or(0))
            }
            _ => IntegerWindowFunction::zero(),
        }
    }

    fn trim(&mut self) {
        while self.values.last() == Some(&0) {
            self.values.pop();
        }
        let lead = self.values.iter().take_while(|v| **v == 0).count();
        self.values.drain(..lead);
        self.lo += lead as i32;
        if self.values.is_empty() {
            self.lo = 0;
        }
    }

    pub fn get(&self, n: i32) -> i64 {
        if n < self.lo {
            return 0;
        }
        self.values.get((n - self.lo) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Support bounds, `None` when identically zero.
    pub fn support(&self) -> Option<(i32, i32)> {
        (!self.values.is_empty()).then(|| (self.lo, self.lo + self.values.len() as i32 - 1))
    }

    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }

    /// g(n) = f(n - h).
    pub fn shifted(&self, h: i32) -> Self {
        let mut w = self.clone();
        if !w.values.is_empty() {
            w.lo += h;
        }
        w
    }

    /// g(n) = f(c - n).
    pub fn reflected(&self, c: i32) -> Self {
        match self.support() {
            None => IntegerWindowFunction::zero(),
            Some((lo, hi)) => IntegerWindowFunction::from_fn(c - hi, c - lo, |n| self.get(c - n)),
        }
    }

    pub fn to_map(&self) -> BTreeMap<i32, i64> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(i, v)| (self.lo + i as i32, *v))
            .collect()
    }
}

impl fmt::Display for IntegerWindowFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, v)) in self.to_map().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}:{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [u16; 4]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn polynomial_ring() {
        let s = HilbertSeries::free(&[0]);
        assert_eq!(s.value(2), 10);
        assert_eq!(s.value(-1), 0);
        assert_eq!(s.polynomial().eval_int(5), 56);
        assert_eq!(s.polynomial().to_string(), "1/6n^3 + n^2 + 11/6n + 1");
    }

    #[test]
    fn skew_lines() {
        let leads = vec![vec![m([1, 0, 1, 0]), m([1, 0, 0, 1]), m([0, 1, 1, 0]), m([0, 1, 0, 1])]];
        let s = HilbertSeries::of_monomial_quotient(&[0], &leads);
        assert_eq!(s.value(3), 8);
        assert_eq!(s.value(0), 1);
        assert_eq!(s.value(1), 4);
        assert_eq!(s.polynomial().to_string(), "2n + 2");
        assert_eq!(s.polynomial().multiplicity(), 2);
    }

    #[test]
    fn residue_field_has_finite_length() {
        let leads = vec![(0..4).map(Monomial::var).collect()];
        let s = HilbertSeries::of_monomial_quotient(&[0], &leads);
        assert!(s.polynomial().is_zero());
        let w = s.finite_values().unwrap();
        assert_eq!(w.to_map(), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn window_function_ops() {
        let w = IntegerWindowFunction::from_map(&BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
        assert_eq!(w.shifted(3).get(4), 2);
        assert_eq!(w.reflected(2).to_map(), w.to_map());
        let v = IntegerWindowFunction::from_fn(-3, 5, |n| if n == 1 { 7 } else { 0 });
        assert_eq!(v.support(), Some((1, 1)));
        assert_eq!(v.to_string(), "{1:7}");
    }

    #[test]
    fn hypersurface() {
        let s = HilbertSeries::of_monomial_quotient(&[0], &[vec![m([1, 1, 0, 0])]]);
        let p = s.polynomial();
        for n in 0..10 {
            let expect = Monomial::count_of_degree(n) - Monomial::count_of_degree(n - 2);
            assert_eq!(p.eval_int(n), expect);
            assert_eq!(s.value(n as i32), expect);
        }
    }
}
