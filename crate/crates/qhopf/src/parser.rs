//! Recursive-descent parser for algebra expressions.
//!
//! Grammar:
//!   expr   := ['-'] term (('+'|'-') term)*
//!   term   := factor ('*' factor)*
//!   factor := base ('^' intexp)?
//!   base   := 'a'|'b'|'c'|'d'|'q'|'zeta'|rational|'(' expr ')'
//! Negative exponents are allowed only on q. Juxtaposition is not
//! multiplication; '*' is required.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::exactq::RatQ;
use crate::ncalg::{Letter, NCPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

pub fn parse_expr(text: &str) -> Result<NCPoly, ParseError> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.input.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<NCPoly, ParseError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NCPoly, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base.to_poly());
        }
        self.bump();
        let exp_pos = self.pos;
        let e = self.integer()?;
        match base {
            Base::Q => Ok(NCPoly::scalar(RatQ::q_pow(e))),
            Base::Letter(x) => {
                if e < 0 {
                    return Err(ParseError {
                        pos: exp_pos,
                        msg: format!(
                            "negative exponent on '{}': only q may carry negative exponents",
                            x.symbol()
                        ),
                    });
                }
                Ok(NCPoly::generator(x).pow(e as u32))
            }
            Base::Poly(p) => {
                if e < 0 {
                    return Err(ParseError {
                        pos: exp_pos,
                        msg: "negative exponent: only q may carry negative exponents".to_string(),
                    });
                }
                Ok(p.pow(e as u32))
            }
        }
    }

    fn base(&mut self) -> Result<Base, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.bump();
                Ok(Base::Poly(e))
            }
            Some(b'a') => {
                self.bump();
                Ok(Base::Letter(Letter::A))
            }
            Some(b'b') => {
                self.bump();
                Ok(Base::Letter(Letter::B))
            }
            Some(b'c') => {
                self.bump();
                Ok(Base::Letter(Letter::C))
            }
            Some(b'd') => {
                self.bump();
                Ok(Base::Letter(Letter::D))
            }
            Some(b'q') => {
                self.bump();
                Ok(Base::Q)
            }
            Some(b'z') => {
                self.skip_ws();
                if self.input[self.pos..].starts_with(b"zeta") {
                    self.pos += 4;
                    Ok(Base::Poly(NCPoly::zeta()))
                } else {
                    Err(self.error("unknown identifier (expected 'zeta')"))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.bump();
                    let denom_pos = self.pos;
                    let d = self.integer()?;
                    if d == 0 {
                        return Err(ParseError {
                            pos: denom_pos,
                            msg: "zero denominator".to_string(),
                        });
                    }
                    Ok(Base::Poly(NCPoly::scalar(RatQ::from_rational(
                        BigRational::new(BigInt::from(n), BigInt::from(d)),
                    ))))
                } else {
                    Ok(Base::Poly(NCPoly::scalar(RatQ::from_int(n))))
                }
            }
            Some(_) => Err(self.error("expected a generator, 'q', 'zeta', a number, or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut sign = 1i64;
        if self.input.get(self.pos) == Some(&b'-') {
            sign = -1;
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self
            .input
            .get(self.pos)
            .map_or(false, |c| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(ParseError {
                pos: start,
                msg: "expected an integer".to_string(),
            });
        }
        let s = std::str::from_utf8(&self.input[digits_start..self.pos]).unwrap();
        s.parse::<i64>()
            .map(|v| sign * v)
            .map_err(|_| ParseError {
                pos: start,
                msg: "integer out of range".to_string(),
            })
    }
}

enum Base {
    Letter(Letter),
    Q,
    Poly(NCPoly),
}

impl Base {
    fn to_poly(self) -> NCPoly {
        match self {
            Base::Letter(x) => NCPoly::generator(x),
            Base::Q => NCPoly::scalar(RatQ::q_pow(1)),
            Base::Poly(p) => p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::normalize_letters;

    #[test]
    fn quantum_determinant() {
        let got = parse_expr("a*d - q^-1*b*c").unwrap();
        assert_eq!(got, NCPoly::one());
    }

    #[test]
    fn zeta_token() {
        assert_eq!(parse_expr("zeta").unwrap(), NCPoly::zeta());
        assert_eq!(parse_expr("-1*q^-1*b*c").unwrap(), NCPoly::zeta());
    }

    #[test]
    fn negative_letter_exponent_rejected() {
        let err = parse_expr("b^-1").unwrap_err();
        assert!(err.msg.contains("negative exponent"));
    }

    #[test]
    fn trailing_star_rejected() {
        let err = parse_expr("a*").unwrap_err();
        assert_eq!(err.pos, 2);
    }

    #[test]
    fn rationals_and_parens() {
        let got = parse_expr("(a*d + d*a) - 2 - (q + q^-1)*b*c").unwrap();
        assert_eq!(got, NCPoly::zero());
        let half = parse_expr("1/2 + 1/2").unwrap();
        assert_eq!(half, NCPoly::one());
    }

    #[test]
    fn normalization_through_parser() {
        assert_eq!(
            parse_expr("b*a").unwrap(),
            normalize_letters(&[Letter::B, Letter::A])
        );
        assert_eq!(parse_expr("b*c - c*b").unwrap(), NCPoly::zero());
    }
}
