//! Text parser for polynomials.
//!
//! ```text
//! poly := ['+'|'-'] term (('+'|'-') term)*
//! term := [int] ('*'? var ('^' int)?)*
//! var  := X | Y | Z | T
//! ```
//! Whitespace is ignored everywhere.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, NVARS, VARIABLE_NAMES};
use crate::poly::Poly;

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|c| c.1)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.i).map(|c| c.0).unwrap_or(self.src.len())
    }

    fn bump(&mut self) {
        self.i += 1;
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos(),
            message: message.into(),
        }
    }

    /// Digits reduced modulo p, plus whether any digit was read.
    fn integer(&mut self, p: u64) -> Option<u64> {
        let mut v: Option<u64> = None;
        while let Some(c) = self.peek().and_then(|c| c.to_digit(10)) {
            v = Some((v.unwrap_or(0) * 10 + c as u64) % p);
            self.bump();
        }
        v
    }

    fn exponent(&mut self) -> Result<u16> {
        let start = self.pos();
        let mut v: u32 = 0;
        let mut any = false;
        while let Some(c) = self.peek().and_then(|c| c.to_digit(10)) {
            v = v * 10 + c;
            if v > u16::MAX as u32 {
                return Err(Error::Parse {
                    pos: start,
                    message: "exponent too large".into(),
                });
            }
            any = true;
            self.bump();
        }
        if !any {
            return Err(self.err("expected exponent after '^'"));
        }
        Ok(v as u16)
    }
}

pub fn parse_poly(field: PrimeField, text: &str) -> Result<Poly> {
    let mut cur = Cursor {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        i: 0,
        src: text,
    };
    if cur.peek().is_none() {
        return Err(cur.err("empty polynomial"));
    }
    let p = field.characteristic() as u64;
    let mut terms = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let mut negative = false;
        match cur.peek() {
            Some('+') => cur.bump(),
            Some('-') => {
                negative = true;
                cur.bump()
            }
            _ if !first => return Err(cur.err("expected '+' or '-'")),
            _ => {}
        }
        first = false;
        let coeff = cur.integer(p);
        let mut exps = [0u16; NVARS];
        let mut saw_var = false;
        loop {
            let star = cur.peek() == Some('*');
            if star {
                cur.bump();
            }
            match cur.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let idx = VARIABLE_NAMES.iter().position(|v| *v == c).ok_or(
                        Error::UnknownVariable {
                            pos: cur.pos(),
                            name: c,
                        },
                    )?;
                    cur.bump();
                    let mut e = 1;
                    if cur.peek() == Some('^') {
                        cur.bump();
                        e = cur.exponent()?;
                    }
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| cur.err("exponent too large"))?;
                    saw_var = true;
                }
                _ if star => return Err(cur.err("expected a variable after '*'")),
                _ => break,
            }
        }
        if coeff.is_none() && !saw_var {
            return Err(cur.err("expected a term"));
        }
        let mut c = coeff.unwrap_or(1) as u32;
        if negative {
            c = field.neg(c);
        }
        terms.push((c, Monomial::new(exps)));
    }
    Ok(Poly::from_terms(field, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn parses_examples() {
        let q = parse_poly(f(), "X*Z - Y*T").unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.degree(), Some(2));
        assert!(parse_poly(f(), "0").unwrap().is_zero());
        assert_eq!(
            parse_poly(f(), "X^2 + 32003*Y^2").unwrap().to_string(),
            "X^2"
        );
    }

    #[test]
    fn flexible_syntax() {
        let a = parse_poly(f(), " - 2 X^2Y + 3*Z T ").unwrap();
        let b = parse_poly(f(), "-2*X^2*Y+3*Z*T").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly(f(), "XX").unwrap().to_string(), "X^2");
        assert_eq!(parse_poly(f(), "-1").unwrap().to_string(), "-1");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly(f(), "X + W").unwrap_err(),
            Error::UnknownVariable { pos: 4, name: 'W' }
        );
        assert!(matches!(
            parse_poly(f(), "X +").unwrap_err(),
            Error::Parse { pos: 3, .. }
        ));
        assert!(matches!(
            parse_poly(f(), "X^").unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(matches!(
            parse_poly(f(), "X*").unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(matches!(
            parse_poly(f(), "X Y 3").unwrap_err(),
            Error::Parse { pos: 4, .. }
        ));
        assert!(parse_poly(f(), "").is_err());
        assert!(parse_poly(f(), "x").is_err());
    }

    #[test]
    fn round_trip() {
        for s in ["X*Z - Y*T", "-X^3 + 2*Y*Z*T - 5", "T^7", "0"] {
            let q = parse_poly(f(), s).unwrap();
            assert_eq!(q.to_string(), s);
            assert_eq!(parse_poly(f(), &q.to_string()).unwrap(), q);
        }
    }
}
