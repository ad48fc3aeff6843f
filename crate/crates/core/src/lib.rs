//! Liaison invariants of space curves in P^3 over a prime field.

pub mod corpus;
pub mod curve;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod koszul;
pub mod liaison;
pub mod linalg;
pub mod matrix;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod random;
pub mod report;
pub mod vector;

pub use error::{Error, Result};
pub use field::{FieldScalar, PrimeField, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use poly::Poly;
pub use vector::Vector;
