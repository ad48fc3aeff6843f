//! Prime field arithmetic.
//!
//! Residues are stored as `u32` and every product is formed in `u64`, so any
//! prime below 2^31 works.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic.
pub const DEFAULT_PRIME: u32 = 32003;

/// The field F_p. Copy-able context carried by every polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // Extended Euclid on signed 64-bit values.
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        t0.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn div(self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// Symmetric representative in (-p/2, p/2], used for printing.
    pub fn to_signed(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn scalar(self, v: i64) -> FieldScalar {
        FieldScalar {
            value: self.from_i64(v),
            field: self,
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue together with its field, for callers that want a value type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    value: u32,
    field: PrimeField,
}

impl FieldScalar {
    pub fn new(field: PrimeField, value: u32) -> Self {
        FieldScalar {
            value: value % field.characteristic(),
            field,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Option<FieldScalar> {
        (self.value != 0).then(|| FieldScalar {
            value: self.field.inv(self.value),
            field: self.field,
        })
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.to_signed(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(7).is_ok());
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::default();
        for a in [1u32, 2, 3, 17, 16001, 32002] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let small = PrimeField::new(5).unwrap();
        for a in 1..5 {
            assert_eq!(small.mul(a, small.inv(a)), 1);
        }
    }

    #[test]
    fn large_prime_products_do_not_overflow() {
        let f = PrimeField::new(2147483629).unwrap();
        let a = 2147483628;
        assert_eq!(f.mul(a, a), 1);
        assert_eq!(f.add(a, a), a - 1);
    }

    #[test]
    fn signed_representatives() {
        let f = PrimeField::default();
        assert_eq!(f.to_signed(f.from_i64(-1)), -1);
        assert_eq!(f.to_signed(5), 5);
        assert_eq!(f.scalar(-3).to_string(), "-3");
    }
}
