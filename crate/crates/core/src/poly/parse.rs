use std::sync::Arc;

use num_bigint::BigInt;

use super::{Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((start + 1, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start + 1, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(Error::Parse { col: i + 1, msg: format!("unexpected character `{ch}`") });
            }
        };
        out.push((start + 1, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Arc<PolyRing>,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(c, _)| *c).unwrap_or(self.end_col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { col: self.col(), msg: msg.into() })
    }

    fn sum(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Ok(acc),
            };
            first = false;
            let t = self.product()?;
            acc = if neg { acc.sub(&t)? } else { acc.add(&t)? };
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen))
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?)?;
                }
                Some(Tok::Slash) => return self.err("division is not allowed in polynomial input"),
                _ if self.starts_factor() => acc = acc.mul(&self.power()?)?,
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                match u32::try_from(&n) {
                    Ok(e) if e <= u16::MAX as u32 => Ok(e),
                    _ => {
                        self.pos -= 1;
                        self.err(format!("exponent {n} out of range"))
                    }
                }
            }
            _ => self.err("malformed exponent: expected a non-negative integer after `^`"),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = self.exponent()?;
            if base.is_monomial() {
                // Raise monomials directly so large exponents stay cheap.
                let (m, c) = base.terms()[0].clone();
                let field = base.field();
                let mut mono = Monomial::one(self.ring.nvars());
                let mut coef = field.one();
                let mut sq = c;
                let mut k = e;
                while k > 0 {
                    if k & 1 == 1 {
                        coef = field.mul(&coef, &sq);
                    }
                    sq = field.mul(&sq, &sq);
                    k >>= 1;
                }
                let mut exps = Vec::with_capacity(m.nvars());
                for &x in m.exponents() {
                    exps.push(x as u32 * e);
                }
                if e > 0 {
                    mono = Monomial::from_exponents(&exps)?;
                }
                return Ok(Polynomial::monomial(self.ring, mono, coef));
            }
            if expansion_size(&base, e) > MAX_EXPANSION {
                self.pos -= 1;
                return self.err(format!("power ^{e} expands beyond {MAX_EXPANSION} terms"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let field = self.ring.field();
                let mut c = field.from_bigint(&n);
                if let Some(Tok::Slash) = self.peek() {
                    // INT/INT is a rational literal; any other division is rejected.
                    if let Some((_, Tok::Int(d))) = self.toks.get(self.pos + 1).cloned() {
                        self.pos += 2;
                        let dc = field.from_bigint(&d);
                        if dc.is_zero() {
                            self.pos -= 1;
                            return self.err("division by zero");
                        }
                        c = field.div(&c, &dc)?;
                    } else {
                        return self.err("division is not allowed in polynomial input");
                    }
                }
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => {
                let Some(i) = self.ring.var_index(&name) else {
                    return Err(Error::UnknownVariable(name));
                };
                self.pos += 1;
                let nv = self.ring.nvars();
                Ok(Polynomial::monomial(self.ring, Monomial::var(nv, i, 1), self.ring.field().one()))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.sum()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

const MAX_EXPANSION: u128 = 20_000;

/// Bound on the number of terms of `base^e`: monomials of degree at most
/// `e * deg(base)` in the variables occurring in `base`.
fn expansion_size(base: &Polynomial, e: u32) -> u128 {
    let mask = base.terms().iter().fold(0u16, |acc, (m, _)| acc | m.support_mask());
    let k = mask.count_ones() as u128;
    let deg = base.total_degree().unwrap_or(0) as u128 * e as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc.saturating_mul(deg + i) / i;
        if acc > MAX_EXPANSION {
            return acc;
        }
    }
    acc
}

/// Parses a polynomial such as `x^2+y^5`, `3x*y - 2`, or `(x+y)^2`.
///
/// Juxtaposition multiplies (`2x y` is `2*x*y`); `^1` may be omitted.
/// Coefficients are integers or `a/b` literals; every other division is an
/// error.
pub fn parse_poly(src: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse { col: 1, msg: "empty polynomial".into() });
    }
    let mut p = Parser { toks, pos: 0, ring, end_col: src.len() + 1 };
    let out = p.sum()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}
