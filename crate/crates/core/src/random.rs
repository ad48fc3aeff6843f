//! Seeded randomness for generic choices.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::PrimeField;
use crate::ideal::GradedIdeal;
use crate::poly::Poly;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random element of I_d (zero when I_d = 0).
pub fn random_element_of_degree<R: Rng + ?Sized>(ideal: &GradedIdeal, d: u32, rng: &mut R) -> Poly {
    let f = ideal.field();
    let mut acc = Poly::zero(f);
    for g in ideal.minimal_generators() {
        let dg = g.degree().unwrap();
        if dg <= d {
            acc = acc.add(&Poly::random_form(f, d - dg, rng).mul(g));
        }
    }
    acc
}

/// Random nonzero scalar vector of length n.
pub fn random_vector<R: Rng + ?Sized>(field: PrimeField, n: usize, rng: &mut R) -> Vec<u32> {
    (0..n)
        .map(|_| rng.gen_range(0..field.characteristic()))
        .collect()
}
