//! Text form of integer polynomials.
//!
//! Grammar (whitespace ignored everywhere):
//!
//! ```text
//! poly := term (('+' | '-') term)*
//! term := coeff | coeff '*'? var | var
//! var  := 'x' ('^' uint)?
//! ```
//!
//! A sign may prefix the first term ("-7", "-x^2 + 1"); after that, signs
//! live in the separators, so "x^2 + + 1" is a syntax error at the second
//! '+'. Errors carry the byte offset into the original string.
//!
//! Formatting emits descending powers with '-' folded into the separator and
//! unit coefficients suppressed: `x^4 - 15*x^2 + 25`. Formatting then parsing
//! is the identity.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::error::{Error, Result};
use crate::limits;

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { bytes: s.as_bytes(), pos: 0 }
    }

    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        Error::Parse { offset: at, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(start, "expected a decimal integer"));
        }
        Ok(BigInt::parse_bytes(&self.bytes[start..self.pos], 10).expect("digit run"))
    }

    /// One unsigned term; returns (coefficient, power).
    fn term(&mut self) -> Result<(BigInt, usize)> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.uint()?;
                self.skip_ws();
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        self.skip_ws();
                        let power = self.var()?;
                        Ok((coeff, power))
                    }
                    Some(b'x') => {
                        let power = self.var()?;
                        Ok((coeff, power))
                    }
                    _ => Ok((coeff, 0)),
                }
            }
            Some(b'x') => {
                let power = self.var()?;
                Ok((BigInt::one(), power))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                Err(self.error(self.pos, format!("unknown variable '{}'", c as char)))
            }
            _ => Err(self.error(self.pos, "expected a term")),
        }
    }

    /// `x` with optional `^uint`; returns the power.
    fn var(&mut self) -> Result<usize> {
        match self.peek() {
            Some(b'x') => self.pos += 1,
            Some(c) if c.is_ascii_alphabetic() => {
                return Err(self.error(self.pos, format!("unknown variable '{}'", c as char)))
            }
            _ => return Err(self.error(self.pos, "expected variable 'x'")),
        }
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.uint()?;
            let max = limits::max_degree();
            match usize::try_from(&e) {
                Ok(e) if e <= max => Ok(e),
                _ => Err(self.error(at, format!("exponent {} exceeds the degree limit {}", e, max))),
            }
        } else {
            Ok(1)
        }
    }
}

/// Parses the polynomial grammar above.
pub fn parse_poly(input: &str) -> Result<IntPoly> {
    let mut p = Parser::new(input);
    let mut coeffs: Vec<BigInt> = Vec::new();
    let add_term = |coeffs: &mut Vec<BigInt>, c: BigInt, k: usize| {
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] += c;
    };

    p.skip_ws();
    // Optional sign on the first term only.
    let mut negate = false;
    match p.peek() {
        Some(b'-') => {
            negate = true;
            p.pos += 1;
        }
        Some(b'+') => {
            p.pos += 1;
        }
        _ => {}
    }
    let (c, k) = p.term()?;
    add_term(&mut coeffs, if negate { -c } else { c }, k);

    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => {
                p.pos += 1;
                let (c, k) = p.term()?;
                add_term(&mut coeffs, c, k);
            }
            Some(b'-') => {
                p.pos += 1;
                let (c, k) = p.term()?;
                add_term(&mut coeffs, -c, k);
            }
            Some(c) => {
                return Err(p.error(p.pos, format!("expected '+' or '-', found '{}'", c as char)))
            }
        }
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Canonical text rendering; inverse of [`parse_poly`].
pub fn format_poly(f: &IntPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let coeffs = f.coeffs();
    for k in (0..coeffs.len()).rev() {
        let c = &coeffs[k];
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        if k == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push('x');
            if k > 1 {
                out.push('^');
                out.push_str(&k.to_string());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    #[test]
    fn parses_the_display_form() {
        assert_eq!(parse_poly("x^4 - 15*x^2 + 25").unwrap(), p(&[25, 0, -15, 0, 1]));
    }

    #[test]
    fn parse_variants() {
        assert_eq!(parse_poly("3x").unwrap(), p(&[0, 3]));
        assert_eq!(parse_poly("3*x").unwrap(), p(&[0, 3]));
        assert_eq!(parse_poly("3 * x ^ 2").unwrap(), p(&[0, 0, 3]));
        assert_eq!(parse_poly("-7").unwrap(), p(&[-7]));
        assert_eq!(parse_poly("+5").unwrap(), p(&[5]));
        assert_eq!(parse_poly("-x^2 + 1").unwrap(), p(&[1, 0, -1]));
        assert_eq!(parse_poly("x + x").unwrap(), p(&[0, 2]));
        assert_eq!(parse_poly("0").unwrap(), IntPoly::zero());
        assert_eq!(parse_poly("x - x").unwrap(), IntPoly::zero());
    }

    #[test]
    fn doubled_sign_is_an_error_at_the_second_sign() {
        let err = parse_poly("x^2 + + 1").unwrap_err();
        assert_eq!(err, Error::Parse { offset: 6, message: "expected a term".into() });
    }

    #[test]
    fn unknown_variable_is_reported() {
        match parse_poly("3*y + 1").unwrap_err() {
            Error::Parse { offset, message } => {
                assert_eq!(offset, 2);
                assert!(message.contains("unknown variable 'y'"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trailing_garbage_is_an_error() {
        assert!(matches!(parse_poly("x^2 1").unwrap_err(), Error::Parse { offset: 4, .. }));
        assert!(matches!(parse_poly("").unwrap_err(), Error::Parse { offset: 0, .. }));
    }

    #[test]
    fn huge_exponent_is_rejected() {
        let err = parse_poly("x^99999999").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 2, .. }));
    }

    #[test]
    fn formatting_examples() {
        assert_eq!(format_poly(&p(&[25, 0, -15, 0, 1])), "x^4 - 15*x^2 + 25");
        assert_eq!(format_poly(&p(&[0, -1])), "-x");
        assert_eq!(format_poly(&p(&[0, 0, -3])), "-3*x^2");
        assert_eq!(format_poly(&p(&[1, 1])), "x + 1");
        assert_eq!(format_poly(&p(&[-5])), "-5");
        assert_eq!(format_poly(&IntPoly::zero()), "0");
        assert_eq!(format_poly(&p(&[0, 1])), "x");
    }

    #[test]
    fn format_parse_round_trip() {
        for f in [
            p(&[25, 0, -15, 0, 1]),
            p(&[-1, 0, -1]),
            p(&[0, 0, 7]),
            p(&[42]),
            p(&[-42]),
            IntPoly::zero(),
            p(&[0, 1]),
            p(&[0, -1]),
            p(&[3, -2, 0, 0, 5, -5]),
        ] {
            assert_eq!(parse_poly(&format_poly(&f)).unwrap(), f, "round trip failed for {f}");
        }
    }
}
