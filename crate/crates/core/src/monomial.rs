//! Monomials in X, Y, Z, T ordered by degree reverse lexicographic order
//! with X > Y > Z > T.

use std::cmp::Ordering;
use std::fmt;

pub const NVARS: usize = 4;
pub const VARIABLE_NAMES: [char; NVARS] = ['X', 'Y', 'Z', 'T'];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; NVARS],
    deg: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; NVARS],
        deg: 0,
    };

    pub fn new(exps: [u16; NVARS]) -> Self {
        Monomial {
            exps,
            deg: exps.iter().sum(),
        }
    }

    pub fn var(i: usize) -> Self {
        let mut exps = [0; NVARS];
        exps[i] = 1;
        Monomial::new(exps)
    }

    #[inline]
    pub fn exponents(&self) -> [u16; NVARS] {
        self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e += o;
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    /// `self | other`
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps).all(|(a, b)| *a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e -= o;
        }
        Some(Monomial {
            exps,
            deg: self.deg - other.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e = (*e).max(o);
        }
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e = (*e).min(o);
        }
        Monomial::new(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps).all(|(a, b)| *a == 0 || b == 0)
    }

    /// All monomials of degree `d`, in decreasing order.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let d = d as u16;
        let mut out = Vec::new();
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                for c in (0..=d - a - b).rev() {
                    out.push(Monomial::new([a, b, c, d - a - b - c]));
                }
            }
        }
        out.sort_by(|x, y| y.cmp(x));
        out
    }

    /// Number of monomials of degree `d` (zero for negative `d`).
    pub fn count_of_degree(d: i64) -> i64 {
        if d < 0 {
            0
        } else {
            (d + 3) * (d + 2) * (d + 1) / 6
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        // Reverse lexicographic tiebreak: the monomial with the smaller
        // exponent in the last differing variable is larger.
        for i in (0..NVARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", VARIABLE_NAMES[i])?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
