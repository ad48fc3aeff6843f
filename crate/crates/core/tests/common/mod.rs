//! Brute-force oracles built from dense linear algebra in a single degree.
#![allow(dead_code)]

use spacecurves::curve::Curve;
use spacecurves::ideal::GradedIdeal;
use spacecurves::linalg::{rank_of_vectors, DenseMatrix};
use spacecurves::matrix::GradedMatrix;
use spacecurves::module::GradedModule;
use spacecurves::monomial::Monomial;
use spacecurves::poly::Poly;
use spacecurves::random;
use spacecurves::PrimeField;

/// Coefficient vector of a form of degree n in the monomial basis of R_n.
pub fn coords(p: &Poly, n: u32) -> Vec<u32> {
    Monomial::all_of_degree(n).iter().map(|m| p.coefficient(m)).collect()
}

/// dim I_n as the rank of all monomial multiples of the generators.
pub fn ideal_dim(gens: &[Poly], n: i32) -> i64 {
    if n < 0 {
        return 0;
    }
    let n = n as u32;
    let mut vecs = Vec::new();
    for g in gens {
        let d = g.degree().unwrap();
        if d <= n {
            for m in Monomial::all_of_degree(n - d) {
                vecs.push(coords(&g.mul_term(1, &m), n));
            }
        }
    }
    let len = Monomial::count_of_degree(n as i64) as usize;
    match gens.first() {
        Some(g) => rank_of_vectors(g.field(), len, &vecs) as i64,
        None => 0,
    }
}

/// dim (R/I)_n without Gröbner bases.
pub fn quotient_dim(gens: &[Poly], n: i32) -> i64 {
    Monomial::count_of_degree(n as i64) - ideal_dim(gens, n)
}

/// Whether f lies in the span of the degree-n multiples of the generators.
pub fn in_span(gens: &[Poly], f: &Poly) -> bool {
    let n = f.degree().unwrap_or(0);
    if f.is_zero() {
        return true;
    }
    let mut with = gens.to_vec();
    with.push(f.clone());
    ideal_dim(gens, n as i32) == ideal_dim(&with, n as i32)
}

/// dim (I : m^k)_n: forms f of degree n with f * R_k inside I_{n+k}.
pub fn saturation_dim(ideal: &GradedIdeal, n: i32, k: u32) -> i64 {
    if n < 0 {
        return 0;
    }
    let field = ideal.field();
    let n = n as u32;
    let src = Monomial::all_of_degree(n);
    // Linear map f -> (NF(f m))_m; NF is linear.
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let big = Monomial::all_of_degree(n + k);
    for m in Monomial::all_of_degree(k) {
        let images: Vec<Vec<u32>> = src
            .iter()
            .map(|s| {
                let p = Poly::monomial(field, 1, s.mul(&m));
                let nf = ideal.normal_form(&p);
                big.iter().map(|b| nf.coefficient(b)).collect()
            })
            .collect();
        for r in 0..big.len() {
            rows.push(images.iter().map(|col| col[r]).collect());
        }
    }
    let a = DenseMatrix::from_rows(field, src.len(), &rows);
    (src.len() - a.rank()) as i64
}

pub fn free_dim(degrees: &[i32], n: i32) -> usize {
    GradedMatrix::free_basis(degrees, n).len()
}

/// dim Ext^i(M, R)_n from ranks of the dualized resolution in degree n.
pub fn ext_dim_brute(m: &GradedModule, i: usize, n: i32) -> i64 {
    let res = m.resolution();
    let len = res.maps.len();
    if i > len || res.f0.is_empty() {
        return 0;
    }
    let dual_degrees: Vec<i32> = res.free_degrees(i).iter().map(|d| -d).collect();
    let total = free_dim(&dual_degrees, n) as i64;
    let out_rank = if i < len {
        res.maps[i].dual().degree_block(n).rank() as i64
    } else {
        0
    };
    let in_rank = if i > 0 {
        res.maps[i - 1].dual().degree_block(n).rank() as i64
    } else {
        0
    };
    total - out_rank - in_rank
}

/// Exactness of the resolution in degree n, F_0 -> M measured by `hf`.
pub fn resolution_exact_in_degree(m: &GradedModule, n: i32, hf: i64) -> bool {
    let res = m.resolution();
    let ranks: Vec<i64> = res.maps.iter().map(|d| d.degree_block(n).rank() as i64).collect();
    let rank = |i: usize| ranks.get(i).copied().unwrap_or(0);
    if free_dim(&res.f0, n) as i64 - rank(0) != hf {
        return false;
    }
    (1..=res.maps.len()).all(|i| free_dim(&res.free_degrees(i), n) as i64 == rank(i - 1) + rank(i))
}

/// Random homogeneous ideal with `count` generators of degrees in 1..=2,
/// each a sparse combination of monomials.
pub fn random_ideal(field: PrimeField, seed: u64, count: usize) -> GradedIdeal {
    use rand::Rng;
    let mut rng = random::rng(seed);
    let mut gens = Vec::new();
    for _ in 0..count {
        let d = rng.gen_range(1..=2u32);
        let monos = Monomial::all_of_degree(d);
        let terms = rng.gen_range(1..=3usize);
        let mut p = Poly::zero(field);
        for _ in 0..terms {
            let m = monos[rng.gen_range(0..monos.len())];
            let c = rng.gen_range(1..field.characteristic());
            p = p.add(&Poly::monomial(field, c, m));
        }
        if !p.is_zero() {
            gens.push(p);
        }
    }
    GradedIdeal::new(field, gens).unwrap()
}

/// h^0 O_C(n) - dim (R/I)_n should vanish outside the Rao module support.
pub fn rao_by_euler_brute(c: &Curve, n: i32) -> i64 {
    c.h0_structure(n) - quotient_dim(c.generators(), n)
}

/// dim (I : f)_n: forms g of degree n with g f in I.
pub fn colon_dim(ideal: &GradedIdeal, f: &Poly, n: i32) -> i64 {
    if n < 0 {
        return 0;
    }
    let field = ideal.field();
    let n = n as u32;
    let d = f.degree().unwrap();
    let src = Monomial::all_of_degree(n);
    let big = Monomial::all_of_degree(n + d);
    let cols: Vec<Vec<u32>> = src
        .iter()
        .map(|s| {
            let nf = ideal.normal_form(&f.mul_term(1, s));
            big.iter().map(|b| nf.coefficient(b)).collect()
        })
        .collect();
    let a = DenseMatrix::from_columns(field, big.len(), &cols);
    (src.len() - a.rank()) as i64
}
