use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<(usize, &str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            // digits are ASCII
            Some((start, core::str::from_utf8(&self.s[start..self.pos]).unwrap()))
        }
    }
}

/// Parses `term (('+'|'-') term)*` with `term = [coeff]['x'['^'exp]]`.
///
/// A leading sign is accepted, as is an optional `*` between coefficient
/// and variable.
pub fn parse_poly(text: &str) -> Result<IntPolynomial> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = BigInt::one();
        match lx.peek() {
            Some(b'+') if !first => lx.pos += 1,
            Some(b'-') => {
                lx.pos += 1;
                sign = -sign;
            }
            Some(b'+') => lx.pos += 1,
            None if first => return Err(Error::Syntax { pos: lx.pos, msg: "empty polynomial" }),
            _ if !first => return Err(Error::Syntax { pos: lx.pos, msg: "expected '+' or '-'" }),
            _ => {}
        }
        first = false;
        let term_start = {
            lx.skip_ws();
            lx.pos
        };
        let coeff = lx.digits().map(|(_, d)| d.parse::<BigInt>().expect("digits"));
        if matches!(lx.peek(), Some(b'.') | Some(b'/') | Some(b'e') | Some(b'E')) && coeff.is_some() {
            return Err(Error::NonIntegerCoefficient { pos: term_start });
        }
        let mut has_x = false;
        if coeff.is_some() && lx.peek() == Some(b'*') {
            lx.pos += 1;
            if lx.peek() != Some(b'x') {
                return Err(Error::Syntax { pos: lx.pos, msg: "expected 'x' after '*'" });
            }
        }
        let mut exp = 0usize;
        if lx.peek() == Some(b'x') {
            lx.pos += 1;
            has_x = true;
            exp = 1;
            if lx.peek() == Some(b'^') {
                lx.pos += 1;
                let at = lx.pos;
                match lx.digits() {
                    Some((p, d)) => {
                        exp = d.parse::<usize>().map_err(|_| Error::Syntax { pos: p, msg: "exponent too large" })?;
                    }
                    None => return Err(Error::Syntax { pos: at, msg: "expected exponent" }),
                }
            }
        }
        if coeff.is_none() && !has_x {
            return Err(Error::Syntax { pos: lx.pos, msg: "expected a term" });
        }
        let c = coeff.unwrap_or_else(BigInt::one) * sign;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += c;
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_poly("x^2-3x+1").unwrap().coeffs_i64(), Some(alloc::vec![1, -3, 1]));
        assert_eq!(parse_poly("2x^2-6x+2").unwrap().coeffs_i64(), Some(alloc::vec![1, -3, 1]));
        assert!(parse_poly("x-x").unwrap().is_zero());
        assert_eq!(parse_poly(" - x ^ 3 + 2 * x").unwrap().coeffs_i64(), Some(alloc::vec![0, -2, 0, 1]));
    }

    #[test]
    fn reports_positions() {
        assert_eq!(parse_poly("x^2 + 1.5x"), Err(Error::NonIntegerCoefficient { pos: 6 }));
        assert!(matches!(parse_poly("x^"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("x y"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly(""), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_poly("x+"), Err(Error::Syntax { .. })));
    }
}
