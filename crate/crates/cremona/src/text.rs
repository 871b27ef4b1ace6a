//! Text grammar for polynomials: parser and printer.
//!
//! Grammar: integer literals, declared variable names, `+ - * / ^ ( )`.
//! `^` takes a nonnegative integer literal; `/` divides by a nonzero
//! constant (exact field division), which is what lets every printed
//! rational coefficient round-trip. Errors carry a byte position.
//!
//! The printer emits the same grammar: terms descending under the ring
//! order, `-` folded into coefficients, `^` only for exponents above 1.


use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use num_bigint::BigInt;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownVariable(String),
    UnexpectedChar(char),
    UnexpectedEnd,
    ExpectedExponent,
    DivisionByZero,
    NonConstantDivisor,
    TrailingInput,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnknownVariable(v) => {
                write!(f, "unknown variable '{}' at position {}", v, self.position)
            }
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character '{}' at position {}", c, self.position)
            }
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::ExpectedExponent => write!(
                f,
                "'^' requires a nonnegative integer literal at position {}",
                self.position
            ),
            ParseErrorKind::DivisionByZero => {
                write!(f, "division by zero at position {}", self.position)
            }
            ParseErrorKind::NonConstantDivisor => {
                write!(f, "division by a non-constant at position {}", self.position)
            }
            ParseErrorKind::TrailingInput => {
                write!(f, "trailing input at position {}", self.position)
            }
        }
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
}

impl<'a> Parser<'a> {
    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            position: self.pos,
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

    fn expression(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
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
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    if !d.is_constant() {
                        return Err(ParseError {
                            kind: ParseErrorKind::NonConstantDivisor,
                            position: at,
                        });
                    }
                    if d.is_zero() {
                        return Err(ParseError {
                            kind: ParseErrorKind::DivisionByZero,
                            position: at,
                        });
                    }
                    let inv = self
                        .ring
                        .field()
                        .inv(d.leading_coeff().unwrap())
                        .expect("nonzero constant");
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let e = self.integer_literal()?;
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| self.err(ParseErrorKind::ExpectedExponent))?;
                    Ok(base.pow(e))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c as char))),
                    None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer_literal()?;
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.input.len()
                    && (self.input[self.pos].is_ascii_alphanumeric() || self.input[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(ParseError {
                        kind: ParseErrorKind::UnknownVariable(name.to_string()),
                        position: start,
                    }),
                }
            }
            Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c as char))),
        }
    }

    fn integer_literal(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                Ok(s.parse().unwrap())
            }
            _ => Err(self.err(ParseErrorKind::ExpectedExponent)),
        }
    }
}

/// Parse an expression into a canonical polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &PolyRing) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = p.expression()?;
    if p.peek().is_some() {
        return Err(p.err(ParseErrorKind::TrailingInput));
    }
    Ok(poly)
}

fn render_monomial(m: &Monomial, ring: &PolyRing, out: &mut String) {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&ring.vars()[i]);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// Render in the text grammar; `parse_poly(print_poly(p)) == p`.
pub fn print_poly(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = p.ring();
    let field = ring.field();
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.prints_negative(field);
        let abs = c.render_abs(field);
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&abs);
        } else if abs == "1" {
            render_monomial(m, ring, &mut out);
        } else {
            out.push_str(&abs);
            out.push('*');
            render_monomial(m, ring, &mut out);
        }
    }
    out
}
