//! Text grammar for polynomials and the canonical printer.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' ['-'] int]
//! atom   := int ['/' int] | var | '(' expr ')'
//! ```
//!
//! Variables are `x,y,z,s,t`. Negative powers are accepted on monomials only.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

const ALL_VARS: [char; 5] = ['x', 'y', 'z', 's', 't'];

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = Poly::zero(5);
        let mut first = true;
        loop {
            let neg = if self.eat(b'+') {
                false
            } else if self.eat(b'-') {
                true
            } else if first {
                false
            } else {
                break;
            };
            first = false;
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(c) if c == b'(' || c.is_ascii_digit() || ALL_VARS.contains(&(c as char)) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let at = self.pos;
        let e = self.integer()?;
        let e: u32 = match u32::try_from(&e) {
            Ok(v) if v <= 10_000 => v,
            _ => {
                self.pos = at;
                return self.err("exponent too large");
            }
        };
        if !neg {
            return Ok(base.pow(e));
        }
        if base.len() != 1 {
            self.pos = at;
            return self.err("negative power of a non-monomial");
        }
        let (m, c) = base.leading_term().map(|(m, c)| (*m, c.clone())).unwrap();
        let inv = super::pow_rat(&c, -(e as i32));
        let mut mm = Monomial::one();
        for v in 0..5 {
            mm.0[v] = -m.exp(v) * e as i32;
        }
        Ok(Poly::term(5, inv, mm))
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let d = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.integer()?;
                    if d.is_zero() {
                        self.pos = at;
                        return self.err("zero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                Ok(Poly::constant(5, Rational::new(n, d)))
            }
            Some(c) => match ALL_VARS.iter().position(|&v| v as u8 == c) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Poly::var(5, i))
                }
                None => self.err(format!("unexpected character '{}'", c as char)),
            },
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses with the arity inferred from the variables present: `s,t` only
/// gives arity 2, otherwise `x,y,z` (arity 3) unless both sets appear.
pub(crate) fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    let used = out.used_vars();
    let has_xyz = used.iter().any(|&v| v < 3);
    let has_st = used.iter().any(|&v| v >= 3);
    Ok(match (has_xyz, has_st) {
        (true, true) => out,
        (false, true) => Poly::from_terms(
            2,
            out.terms().map(|(m, c)| {
                (c.clone(), Monomial::from_slice(&[m.exp(3), m.exp(4)]))
            }),
        ),
        _ => Poly::from_terms(3, out.terms().map(|(m, c)| (c.clone(), *m))),
    })
}

impl FromStr for Poly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: &[&str]) -> fmt::Result {
    let mut first = true;
    for (v, name) in names.iter().enumerate() {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = super::var_names(self.arity());
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == Monomial::one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m, names)?;
            }
        }
        Ok(())
    }
}
