//! Finitely generated graded modules given by presentations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::field::PrimeField;
use crate::groebner::{self, GroebnerBasis};
use crate::hilbert::{HilbertPolynomial, HilbertSeries, IntegerWindowFunction};
use crate::ideal::GradedIdeal;
use crate::linalg::DenseMatrix;
use crate::matrix::GradedMatrix;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::vector::{Term, Vector};

/// coker(F1 -> F0) where F0 has generator degrees `gens`.
pub struct GradedModule {
    field: PrimeField,
    gens: Vec<i32>,
    relations: Vec<Vector>,
    gb: OnceLock<GroebnerBasis>,
    resolution: OnceLock<Resolution>,
    pruned: OnceLock<Box<GradedModule>>,
}

impl Clone for GradedModule {
    fn clone(&self) -> Self {
        GradedModule {
            field: self.field,
            gens: self.gens.clone(),
            relations: self.relations.clone(),
            gb: self.gb.clone(),
            resolution: self.resolution.clone(),
            pruned: OnceLock::new(),
        }
    }
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedModule")
            .field("gens", &self.gens)
            .field("relations", &self.relations)
            .finish()
    }
}

/// Basis of one graded piece: standard monomials e_i * m.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    pub degree: i32,
    pub elements: Vec<(u32, Monomial)>,
    index: HashMap<(u32, Monomial), usize>,
}

impl DegreeBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, comp: u32, mono: &Monomial) -> Option<usize> {
        self.index.get(&(comp, *mono)).copied()
    }
}

impl GradedModule {
    pub fn new(field: PrimeField, gens: Vec<i32>, relations: Vec<Vector>) -> Self {
        let relations: Vec<Vector> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        for r in &relations {
            assert!(r.degree(&gens).is_some(), "inhomogeneous relation {r:?}");
        }
        GradedModule {
            field,
            gens,
            relations,
            gb: OnceLock::new(),
            resolution: OnceLock::new(),
            pruned: OnceLock::new(),
        }
    }

    pub fn cokernel(m: &GradedMatrix) -> Self {
        GradedModule::new(m.field(), m.row_degrees().to_vec(), m.columns().to_vec())
    }

    pub fn free(field: PrimeField, degrees: Vec<i32>) -> Self {
        GradedModule::new(field, degrees, Vec::new())
    }

    pub fn zero(field: PrimeField) -> Self {
        GradedModule::new(field, Vec::new(), Vec::new())
    }

    /// R/I.
    pub fn quotient_ring(ideal: &GradedIdeal) -> Self {
        let rels = ideal
            .minimal_generators()
            .iter()
            .map(|g| Vector::from_poly(g, 0))
            .collect();
        let m = GradedModule::new(ideal.field(), vec![0], rels);
        let _ = m.gb.set(ideal.gb().clone());
        m
    }

    /// The submodule generated by the columns of `gens` in coker(`rels`),
    /// both matrices mapping into the same free module.
    pub fn subquotient(gens: &GradedMatrix, rels: Option<&GradedMatrix>) -> Self {
        let f = gens.field();
        let k = gens.ncols();
        let joined = match rels {
            Some(r) => gens.concat(r),
            None => gens.clone(),
        };
        let syz = joined.syzygies().project_rows(0..k);
        GradedModule::new(f, gens.col_degrees().to_vec(), syz.columns().to_vec())
    }

    /// J/I for ideals I ⊆ J.
    pub fn ideal_quotient(j: &GradedIdeal, i: &GradedIdeal) -> Self {
        let f = j.field();
        let row = |ideal: &GradedIdeal| {
            let cols = ideal
                .minimal_generators()
                .iter()
                .map(|g| Vector::from_poly(g, 0))
                .collect();
            GradedMatrix::from_columns(f, vec![0], cols)
        };
        if i.is_zero() {
            return GradedModule::subquotient(&row(j), None);
        }
        GradedModule::subquotient(&row(j), Some(&row(i)))
    }

    /// The ideal I regarded as a module.
    pub fn ideal_module(i: &GradedIdeal) -> Self {
        GradedModule::ideal_quotient(i, &GradedIdeal::zero(i.field()))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn generator_degrees(&self) -> &[i32] {
        &self.gens
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn presentation(&self) -> GradedMatrix {
        GradedMatrix::from_columns(self.field, self.gens.clone(), self.relations.clone())
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| groebner::compute(self.field, &self.gens, &self.relations, false).basis)
    }

    /// M(h), with M(h)_n = M_{n+h}.
    pub fn shift(&self, h: i32) -> GradedModule {
        let m = GradedModule::new(
            self.field,
            self.gens.iter().map(|d| d - h).collect(),
            self.relations.clone(),
        );
        if let Some(gb) = self.gb.get() {
            let _ = m.gb.set(gb.shifted(h));
        }
        m
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::of_monomial_quotient(&self.gens, &self.gb().leads())
    }

    pub fn hilbert_function(&self, n: i32) -> i64 {
        self.hilbert_series().value(n)
    }

    pub fn hilbert_polynomial(&self) -> HilbertPolynomial {
        self.hilbert_series().polynomial()
    }

    /// dim M_n as dim F0_n - rank of the degree-n block of the presentation.
    pub fn hilbert_function_by_rank(&self, n: i32) -> i64 {
        let free = GradedMatrix::free_basis(&self.gens, n).len() as i64;
        if self.relations.is_empty() {
            return free;
        }
        free - self.presentation().degree_block(n).rank() as i64
    }

    pub fn is_finite_length(&self) -> bool {
        self.hilbert_polynomial().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert_series().is_zero()
    }

    /// Degreewise dimensions of a finite-length module; `None` otherwise.
    pub fn finite_dimensions(&self) -> Option<IntegerWindowFunction> {
        self.hilbert_series().finite_values()
    }

    pub fn degree_basis(&self, n: i32) -> DegreeBasis {
        let gb = self.gb();
        let mut elements = Vec::new();
        for (i, d) in self.gens.iter().enumerate() {
            if n < *d {
                continue;
            }
            for m in Monomial::all_of_degree((n - d) as u32) {
                if !gb.is_lead_reducible(&m, i as u32) {
                    elements.push((i as u32, m));
                }
            }
        }
        let index = elements.iter().enumerate().map(|(k, e)| (*e, k)).collect();
        DegreeBasis {
            degree: n,
            elements,
            index,
        }
    }

    /// Representatives e_i * m of a basis of M_n.
    pub fn degreewise_basis(&self, n: i32) -> Vec<Vector> {
        self.degree_basis(n)
            .elements
            .iter()
            .map(|(c, m)| {
                Vector::from_terms(
                    self.field,
                    vec![Term {
                        coeff: 1,
                        mono: *m,
                        comp: *c,
                    }],
                )
            })
            .collect()
    }

    pub fn normal_form(&self, v: &Vector) -> Vector {
        self.gb().normal_form(v)
    }

    /// Coordinates of a homogeneous element of degree `basis.degree`.
    pub fn coordinates(&self, v: &Vector, basis: &DegreeBasis) -> Vec<u32> {
        let nf = self.normal_form(v);
        let mut out = vec![0; basis.len()];
        for t in nf.terms() {
            let k = basis
                .position(t.comp, &t.mono)
                .expect("element of the wrong degree");
            out[k] = t.coeff;
        }
        out
    }

    pub fn element(&self, coords: &[u32], basis: &DegreeBasis) -> Vector {
        let terms = basis
            .elements
            .iter()
            .zip(coords)
            .map(|((c, m), x)| Term {
                coeff: *x,
                mono: *m,
                comp: *c,
            })
            .collect();
        Vector::from_terms(self.field, terms)
    }

    /// Matrix of multiplication by a form f from M_n to M_{n + deg f}.
    pub fn multiplication_map(&self, f: &Poly, n: i32) -> DenseMatrix {
        let d = f.degree().unwrap_or(0) as i32;
        let src = self.degree_basis(n);
        let tgt = self.degree_basis(n + d);
        let cols: Vec<Vec<u32>> = src
            .elements
            .iter()
            .map(|(c, m)| {
                let v = Vector::from_poly(&f.mul_term(1, m), *c as usize);
                self.coordinates(&v, &tgt)
            })
            .collect();
        DenseMatrix::from_columns(self.field, tgt.len(), &cols)
    }

    /// Minimal presentation: generators that are redundant because of a unit
    /// entry in a relation are eliminated, then relations are minimized.
    pub fn pruned(&self) -> &GradedModule {
        self.pruned.get_or_init(|| Box::new(self.compute_pruned()))
    }

    fn compute_pruned(&self) -> GradedModule {
        let f = self.field;
        let mut gens = self.gens.clone();
        let mut rels = self.relations.clone();
        loop {
            let unit = rels.iter().enumerate().find_map(|(r, v)| {
                v.terms()
                    .iter()
                    .find(|t| t.mono.degree() == 0)
                    .map(|t| (r, t.comp as usize, t.coeff))
            });
            let Some((r, comp, c)) = unit else { break };
            let pivot = rels.swap_remove(r);
            let inv = f.inv(c);
            for s in rels.iter_mut() {
                let si = s.component(comp);
                if !si.is_zero() {
                    *s = s.sub(&pivot.mul_poly(&si.scale(inv)));
                }
            }
            gens.remove(comp);
            rels = rels
                .iter()
                .map(|s| {
                    debug_assert!(s.component(comp).is_zero());
                    s.remap(|k| Some(if k > comp { k - 1 } else { k }))
                })
                .filter(|s| !s.is_zero())
                .collect();
        }
        let r = groebner::compute(f, &gens, &rels, false);
        let rels = r.minimal_inputs.iter().map(|&i| rels[i].clone()).collect();
        let m = GradedModule::new(f, gens, rels);
        let _ = m.gb.set(r.basis);
        m
    }

    pub fn minimal_generator_degrees(&self) -> Vec<i32> {
        let mut d = self.pruned().gens.clone();
        d.sort_unstable();
        d
    }

    /// Degree of the single minimal generator, if there is exactly one.
    pub fn is_cyclic_in_degree(&self) -> Option<i32> {
        let p = self.pruned();
        (p.gens.len() == 1).then(|| p.gens[0])
    }

    /// Minimal free resolution of the pruned presentation.
    pub fn resolution(&self) -> &Resolution {
        self.resolution.get_or_init(|| {
            let p = self.pruned();
            let mut maps = Vec::new();
            if !p.gens.is_empty() {
                let mut d = p.presentation();
                while d.ncols() > 0 && maps.len() < 5 {
                    let next = d.syzygies();
                    maps.push(d);
                    d = next;
                }
            }
            Resolution {
                f0: p.gens.clone(),
                maps,
            }
        })
    }

    /// Ext^i_R(M, R) = ker(d_{i+1}^T) / im(d_i^T).
    pub fn ext(&self, i: usize) -> GradedModule {
        let f = self.field;
        let res = self.resolution();
        let len = res.maps.len();
        if i > len || res.f0.is_empty() {
            return GradedModule::zero(f);
        }
        let fi: Vec<i32> = res.free_degrees(i).iter().map(|d| -d).collect();
        let kernel = if i == len {
            GradedMatrix::identity(f, fi)
        } else {
            res.maps[i].dual().syzygies()
        };
        if kernel.ncols() == 0 {
            return GradedModule::zero(f);
        }
        let image = (i > 0).then(|| res.maps[i - 1].dual());
        let m = GradedModule::subquotient(&kernel, image.as_ref());
        m.pruned().clone()
    }

    /// (N : v) = {f : f v ∈ N} where N is the relation module.
    pub fn annihilator_of(&self, v: &Vector) -> GradedIdeal {
        let f = self.field;
        if v.is_zero() {
            return GradedIdeal::unit(f);
        }
        let mut cols = vec![v.clone()];
        cols.extend(self.relations.iter().cloned());
        let m = GradedMatrix::from_columns(f, self.gens.clone(), cols);
        let syz = m.syzygies();
        let gens = syz.columns().iter().map(|s| s.component(0)).collect();
        GradedIdeal::new(f, gens).unwrap().minimized()
    }

    /// Ann(M) = ∩_i (N : e_i).
    pub fn annihilator(&self) -> GradedIdeal {
        let f = self.field;
        let p = self.pruned();
        let mut acc: Option<GradedIdeal> = None;
        for i in 0..p.gens.len() {
            let a = p.annihilator_of(&Vector::unit(f, i, 1));
            acc = Some(match acc {
                None => a,
                Some(b) if b.is_unit() => a,
                Some(b) if a.is_unit() => b,
                Some(b) => b.intersect(&a),
            });
        }
        acc.unwrap_or_else(|| GradedIdeal::unit(f))
    }

    /// Degrees where the module can be nonzero and differ from its Hilbert
    /// polynomial, `None` for the zero module.
    pub fn window(&self) -> Option<(i32, i32)> {
        self.hilbert_series().window()
    }

    /// Least degree of a minimal generator.
    pub fn initial_degree(&self) -> Option<i32> {
        self.pruned().gens.iter().min().copied()
    }
}

/// Minimal free resolution: `maps[i]` is d_{i+1}: F_{i+1} -> F_i.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub f0: Vec<i32>,
    pub maps: Vec<GradedMatrix>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn free_degrees(&self, i: usize) -> Vec<i32> {
        if i == 0 {
            self.f0.clone()
        } else {
            self.maps
                .get(i - 1)
                .map(|m| m.col_degrees().to_vec())
                .unwrap_or_default()
        }
    }

    pub fn betti(&self) -> BettiTable {
        let mut ranks = Vec::new();
        for i in 0..=self.length() {
            let mut row = BTreeMap::new();
            for d in self.free_degrees(i) {
                *row.entry(d).or_insert(0usize) += 1;
            }
            if !row.is_empty() {
                ranks.push(row);
            }
        }
        BettiTable { ranks }
    }

    /// Alternating sum of the free modules' series.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let mut acc = HilbertSeries::zero();
        for i in 0..=self.length() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            acc = acc.add(&HilbertSeries::free(&self.free_degrees(i)), sign);
        }
        acc
    }

    /// max_i (max twist of F_i - i).
    pub fn regularity(&self) -> Option<i32> {
        (0..=self.length())
            .filter_map(|i| self.free_degrees(i).iter().max().map(|d| d - i as i32))
            .max()
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.is_minimal())
    }
}

/// Ranks β_{i,j}: `ranks[i][j]` is the number of generators of degree j in F_i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub ranks: Vec<BTreeMap<i32, usize>>,
}

impl BettiTable {
    pub fn total_ranks(&self) -> Vec<usize> {
        self.ranks.iter().map(|r| r.values().sum()).collect()
    }

    pub fn projective_dimension(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Macaulay-style: row r, column i holds β_{i, i+r}.
        let mut rows: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let n = self.ranks.len();
        for (i, r) in self.ranks.iter().enumerate() {
            for (j, b) in r {
                rows.entry(j - i as i32).or_insert_with(|| vec![0; n])[i] = *b;
            }
        }
        write!(f, "      ")?;
        for i in 0..n {
            write!(f, "{i:>4}")?;
        }
        writeln!(f)?;
        write!(f, "total:")?;
        for t in self.total_ranks() {
            write!(f, "{t:>4}")?;
        }
        for (r, row) in rows {
            writeln!(f)?;
            write!(f, "{r:>5}:")?;
            for b in row {
                if b == 0 {
                    write!(f, "{:>4}", ".")?;
                } else {
                    write!(f, "{b:>4}")?;
                }
            }
        }
        Ok(())
    }
}
