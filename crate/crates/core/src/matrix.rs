//! Homogeneous maps between graded free modules.

use std::collections::HashMap;

use crate::field::PrimeField;
use crate::groebner;
use crate::linalg::DenseMatrix;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::vector::{Term, Vector};

/// A map F1 -> F0 stored by columns. Row `i` has generator degree
/// `row_degrees[i]`, column `j` has degree `col_degrees[j]`, so entry (i, j)
/// is a form of degree `col_degrees[j] - row_degrees[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    field: PrimeField,
    row_degrees: Vec<i32>,
    col_degrees: Vec<i32>,
    cols: Vec<Vector>,
}

impl GradedMatrix {
    /// Columns with their degrees inferred; zero columns need explicit degrees
    /// so use [`GradedMatrix::with_degrees`] when they can occur.
    pub fn from_columns(field: PrimeField, row_degrees: Vec<i32>, cols: Vec<Vector>) -> Self {
        let col_degrees = cols
            .iter()
            .map(|c| {
                c.degree(&row_degrees)
                    .expect("column must be nonzero and homogeneous")
            })
            .collect();
        GradedMatrix {
            field,
            row_degrees,
            col_degrees,
            cols,
        }
    }

    pub fn with_degrees(
        field: PrimeField,
        row_degrees: Vec<i32>,
        col_degrees: Vec<i32>,
        cols: Vec<Vector>,
    ) -> Self {
        assert_eq!(col_degrees.len(), cols.len());
        for (c, d) in cols.iter().zip(&col_degrees) {
            if !c.is_zero() {
                assert_eq!(c.degree(&row_degrees), Some(*d), "inhomogeneous column");
            }
        }
        GradedMatrix {
            field,
            row_degrees,
            col_degrees,
            cols,
        }
    }

    /// Matrix from a grid of entries `rows[i][j]`.
    pub fn from_entries(
        field: PrimeField,
        row_degrees: Vec<i32>,
        col_degrees: Vec<i32>,
        rows: &[Vec<Poly>],
    ) -> Self {
        let ncols = col_degrees.len();
        let cols = (0..ncols)
            .map(|j| {
                let col: Vec<Poly> = rows.iter().map(|r| r[j].clone()).collect();
                Vector::from_polys(field, &col)
            })
            .collect();
        GradedMatrix::with_degrees(field, row_degrees, col_degrees, cols)
    }

    pub fn identity(field: PrimeField, degrees: Vec<i32>) -> Self {
        let cols = (0..degrees.len()).map(|i| Vector::unit(field, i, 1)).collect();
        GradedMatrix {
            field,
            row_degrees: degrees.clone(),
            col_degrees: degrees,
            cols,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_degrees(&self) -> &[i32] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i32] {
        &self.col_degrees
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        self.cols[j].component(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// The transpose F0* -> F1*, where duals negate generator degrees.
    pub fn dual(&self) -> GradedMatrix {
        let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); self.nrows()];
        for (j, c) in self.cols.iter().enumerate() {
            for t in c.terms() {
                buckets[t.comp as usize].push(Term {
                    comp: j as u32,
                    ..*t
                });
            }
        }
        let cols = buckets
            .into_iter()
            .map(|b| Vector::from_terms(self.field, b))
            .collect();
        GradedMatrix {
            field: self.field,
            row_degrees: self.col_degrees.iter().map(|d| -d).collect(),
            col_degrees: self.row_degrees.iter().map(|d| -d).collect(),
            cols,
        }
    }

    /// Side-by-side concatenation [self | other] (same target).
    pub fn concat(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.row_degrees, other.row_degrees);
        let mut m = self.clone();
        m.col_degrees.extend_from_slice(&other.col_degrees);
        m.cols.extend(other.cols.iter().cloned());
        m
    }

    /// self ∘ other.
    pub fn compose(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.col_degrees, other.row_degrees);
        let cols = other
            .cols
            .iter()
            .map(|c| c.combine_columns(&self.cols))
            .collect();
        GradedMatrix {
            field: self.field,
            row_degrees: self.row_degrees.clone(),
            col_degrees: other.col_degrees.clone(),
            cols,
        }
    }

    /// Keeps rows in `range`.
    pub fn project_rows(&self, range: std::ops::Range<usize>) -> GradedMatrix {
        GradedMatrix {
            field: self.field,
            row_degrees: self.row_degrees[range.clone()].to_vec(),
            col_degrees: self.col_degrees.clone(),
            cols: self.cols.iter().map(|c| c.project(range.clone())).collect(),
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> GradedMatrix {
        GradedMatrix {
            field: self.field,
            row_degrees: self.row_degrees.clone(),
            col_degrees: idx.iter().map(|&j| self.col_degrees[j]).collect(),
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    /// Drops zero columns and reduces the rest to a minimal generating set of
    /// the image.
    pub fn minimize_columns(&self) -> GradedMatrix {
        let keep: Vec<usize> = (0..self.ncols()).filter(|&j| !self.cols[j].is_zero()).collect();
        let m = self.select_columns(&keep);
        let r = groebner::compute(self.field, &self.row_degrees, &m.cols, false);
        m.select_columns(&r.minimal_inputs)
    }

    /// Minimal generators of the kernel, as a matrix into the source module.
    pub fn syzygies(&self) -> GradedMatrix {
        let f = self.field;
        if self.ncols() == 0 {
            return GradedMatrix::with_degrees(f, Vec::new(), Vec::new(), Vec::new());
        }
        let r = groebner::compute(f, &self.row_degrees, &self.cols, true);
        let syz: Vec<Vector> = r.syzygies.into_iter().filter(|s| !s.is_zero()).collect();
        GradedMatrix::from_columns(f, self.col_degrees.clone(), syz).minimize_columns()
    }

    /// Basis of the degree-n part of the free module with generator degrees
    /// `degrees`, as (component, monomial) pairs.
    pub fn free_basis(degrees: &[i32], n: i32) -> Vec<(u32, Monomial)> {
        let mut out = Vec::new();
        for (i, d) in degrees.iter().enumerate() {
            if n >= *d {
                for m in Monomial::all_of_degree((n - d) as u32) {
                    out.push((i as u32, m));
                }
            }
        }
        out
    }

    /// The F_p-linear map F1_n -> F0_n.
    pub fn degree_block(&self, n: i32) -> DenseMatrix {
        let src = GradedMatrix::free_basis(&self.col_degrees, n);
        let tgt = GradedMatrix::free_basis(&self.row_degrees, n);
        let index: HashMap<(u32, Monomial), usize> =
            tgt.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let mut m = DenseMatrix::zeros(self.field, tgt.len(), src.len());
        for (j, (comp, mono)) in src.iter().enumerate() {
            let img = self.cols[*comp as usize].mul_term(1, mono);
            for t in img.terms() {
                m.set(index[&(t.comp, t.mono)], j, t.coeff);
            }
        }
        m
    }

    /// Applies the map to a vector of the source module.
    pub fn apply(&self, v: &Vector) -> Vector {
        v.combine_columns(&self.cols)
    }

    /// True when no entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.cols.iter().zip(&self.col_degrees).all(|(c, d)| {
            c.terms()
                .iter()
                .all(|t| t.mono.degree() != 0 || self.row_degrees[t.comp as usize] != *d)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn row(gens: &[&str]) -> GradedMatrix {
        let cols: Vec<Vector> = gens
            .iter()
            .map(|s| Vector::from_poly(&parse_poly(f(), s).unwrap(), 0))
            .collect();
        GradedMatrix::from_columns(f(), vec![0], cols)
    }

    #[test]
    fn koszul_relation() {
        let m = row(&["X", "Y"]);
        let s = m.syzygies();
        assert_eq!(s.ncols(), 1);
        assert_eq!(s.col_degrees(), &[2]);
        assert!(m.compose(&s).is_zero());
        let (a, b) = (s.entry(0, 0), s.entry(1, 0));
        assert!(a.to_string() == "-Y" && b.to_string() == "X" || a.to_string() == "Y" && b.to_string() == "-X");
    }

    #[test]
    fn quadric_monomials() {
        let m = row(&["X^2", "X*Y", "Y^2"]);
        let s = m.syzygies();
        assert_eq!(s.ncols(), 2);
        assert_eq!(s.col_degrees(), &[3, 3]);
        assert!(m.compose(&s).is_zero());
        assert!(s.is_minimal());
    }

    #[test]
    fn nonzerodivisor_has_no_syzygies() {
        assert_eq!(row(&["X*Z - Y*T"]).syzygies().ncols(), 0);
    }

    #[test]
    fn dual_is_involutive() {
        let m = row(&["X", "Y^2"]);
        assert_eq!(m.dual().dual(), m);
        assert_eq!(m.dual().row_degrees(), &[-1, -2]);
        assert_eq!(m.dual().col_degrees(), &[0]);
    }

    #[test]
    fn degree_block_shape() {
        let m = row(&["X", "Y"]);
        let b = m.degree_block(2);
        assert_eq!((b.nrows(), b.ncols()), (10, 8));
        assert_eq!(b.rank(), 7);
    }
}
