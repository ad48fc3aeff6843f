//! Ideal files: one generator per line, `#` comments, `surface:` lines and
//! `factors:` lines attaching a factorization to the preceding surface.
//!
//! ```text
//! # two skew lines
//! X*Z
//! X*T
//! Y*Z
//! Y*T
//! surface: X*Z - Y*T
//! ```

use spacecurves::liaison::FactoredSurface;
use spacecurves::{parse_poly, Error, Poly, PrimeField};

#[derive(Debug, Default)]
pub struct IdealFile {
    pub generators: Vec<Poly>,
    pub surfaces: Vec<FactoredSurface>,
}

/// Error with the offending line number (1-based).
fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { pos, message } => Error::Parse {
            pos,
            message: format!("line {line}: {message}"),
        },
        Error::UnknownVariable { pos, name } => Error::Parse {
            pos,
            message: format!("line {line}: unknown variable '{name}'"),
        },
        other => other,
    }
}

/// `a; (b)^2` -> [(a, 1), (b, 2)].
pub fn parse_factors(field: PrimeField, text: &str) -> Result<Vec<(Poly, u32)>, Error> {
    let mut out = Vec::new();
    for item in text.split(';') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (body, mult) = match item.strip_prefix('(') {
            Some(rest) => {
                let close = rest.rfind(')').ok_or_else(|| Error::Parse {
                    pos: 0,
                    message: format!("unbalanced parenthesis in factor '{item}'"),
                })?;
                let tail = rest[close + 1..].trim();
                let mult = match tail.strip_prefix('^') {
                    Some(k) => k.trim().parse::<u32>().map_err(|_| Error::Parse {
                        pos: 0,
                        message: format!("bad multiplicity in factor '{item}'"),
                    })?,
                    None if tail.is_empty() => 1,
                    None => {
                        return Err(Error::Parse {
                            pos: 0,
                            message: format!("trailing text in factor '{item}'"),
                        })
                    }
                };
                (&rest[..close], mult)
            }
            None => (item, 1),
        };
        out.push((parse_poly(field, body)?, mult));
    }
    Ok(out)
}

/// A surface equation and the factorization supplied for it, if any.
type Pending = (Poly, Option<Vec<(Poly, u32)>>);

pub fn parse_ideal_file(field: PrimeField, text: &str) -> Result<IdealFile, Error> {
    let mut file = IdealFile::default();
    // factors for the most recent surface, applied when the next line arrives
    let mut pending: Option<Pending> = None;
    let flush = |pending: &mut Option<Pending>, file: &mut IdealFile| -> Result<(), Error> {
        if let Some((q, factors)) = pending.take() {
            let s = match factors {
                Some(f) => FactoredSurface::new(q, f)?,
                None => FactoredSurface::unfactored(q)?,
            };
            file.surfaces.push(s);
        }
        Ok(())
    };
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("surface:") {
            flush(&mut pending, &mut file)?;
            let q = parse_poly(field, rest).map_err(|e| at_line(k + 1, e))?;
            pending = Some((q, None));
        } else if let Some(rest) = line.strip_prefix("factors:") {
            let factors = parse_factors(field, rest).map_err(|e| at_line(k + 1, e))?;
            match pending.as_mut() {
                Some((_, slot @ None)) => *slot = Some(factors),
                _ => {
                    return Err(Error::Parse {
                        pos: 0,
                        message: format!("line {}: factors without a preceding surface", k + 1),
                    })
                }
            }
        } else {
            flush(&mut pending, &mut file)?;
            let g = parse_poly(field, line).map_err(|e| at_line(k + 1, e))?;
            file.generators.push(g);
        }
    }
    flush(&mut pending, &mut file)?;
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_surfaces_and_factors() {
        let f = PrimeField::default();
        let text = "# skew lines\nX*Z\nX*T  # inline\n\nY*Z\nY*T\nsurface: X*Z - Y*T\nsurface: X*Z\nfactors: X; (Z)^1\n";
        let file = parse_ideal_file(f, text).unwrap();
        assert_eq!(file.generators.len(), 4);
        assert_eq!(file.surfaces.len(), 2);
        assert!(file.surfaces[0].assumed_irreducible());
        assert_eq!(file.surfaces[1].factors().len(), 2);
    }

    #[test]
    fn factor_syntax() {
        let f = PrimeField::default();
        let v = parse_factors(f, "X + Y; (Z)^2").unwrap();
        assert_eq!(v[1].1, 2);
        assert!(parse_factors(f, "(Z^2").is_err());
        assert!(parse_factors(f, "(Z)^x").is_err());
    }

    #[test]
    fn errors() {
        let f = PrimeField::default();
        assert!(matches!(parse_ideal_file(f, "X*W"), Err(Error::Parse { .. })));
        assert!(parse_ideal_file(f, "factors: X").is_err());
        // wrong factorization is a precondition failure
        assert!(matches!(
            parse_ideal_file(f, "surface: X*Y\nfactors: X; Z"),
            Err(Error::Precondition(_))
        ));
    }
}
