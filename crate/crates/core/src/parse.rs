//! Polynomial expressions: integers and fractions, variables `t0..tN`,
//! `^` with non-negative integer exponents, `*`, `+`, `-` and parentheses.

use std::fmt;

use num_bigint::BigInt;

use crate::poly::{Polynomial, Ring};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Zero-based byte offset into the parsed text.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.offset + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Ring,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = match e.try_into() {
                Ok(e) if e <= 1000 => e,
                _ => return self.err("exponent too large"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num = self.integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                match Scalar::from_fraction(&num, &den, self.ring.characteristic()) {
                    Ok(s) => Ok(self.ring.constant(s)),
                    Err(_) => Err(ParseError {
                        offset: start,
                        message: format!(
                            "denominator {den} is not invertible in characteristic {}",
                            self.ring.characteristic()
                        ),
                    }),
                }
            }
            Some(b't') => {
                let start = self.pos;
                self.pos += 1;
                if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    return self.err("expected a variable index after 't'");
                }
                let idx = self.integer()?;
                match usize::try_from(idx) {
                    Ok(i) if i < self.ring.nvars() => Ok(self.ring.var(i)),
                    _ => Err(ParseError {
                        offset: start,
                        message: format!("unknown variable (ring has t0..t{})", self.ring.nvars().saturating_sub(1)),
                    }),
                }
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial expression in `ring`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring: *ring };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses and panics on error; for tests and built-in instances.
pub fn poly(ring: &Ring, text: &str) -> Polynomial {
    parse_polynomial(ring, text).unwrap_or_else(|e| panic!("bad polynomial {text:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_expressions() {
        let r = Ring::projective(2, 0).unwrap();
        let f = poly(&r, "(t0 + t1)*(t0 - t1)");
        assert_eq!(f, poly(&r, "t0^2 - t1^2"));
        assert_eq!(poly(&r, "-3*t2^2 + 1/2*t0"), &(&r.int(-3) * &r.var(2).pow(2)) + &r.var(0).scale(&Scalar::from_fraction(&1.into(), &2.into(), 0).unwrap()));
        assert_eq!(poly(&r, "2^3"), r.int(8));
    }

    #[test]
    fn errors_carry_positions() {
        let r = Ring::projective(2, 0).unwrap();
        let e = parse_polynomial(&r, "t0 + t7").unwrap_err();
        assert_eq!(e.offset, 5);
        let e = parse_polynomial(&r, "t0 + ").unwrap_err();
        assert!(e.message.contains("end of input"));
        let r2 = Ring::projective(2, 2).unwrap();
        let e = parse_polynomial(&r2, "1/2*t0").unwrap_err();
        assert!(e.message.contains("not invertible"));
    }
}
