//! Parsing of printed class formulas such as `1 + 2c1 + c1^2 + c2` or
//! `s0 - s1 + (s2 + s11)`.

use super::expansion::SchurExpansion;
use super::partition::Partition;
use crate::error::Error;
use crate::exact::{Monomial, Poly, Rational, RingRef};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Caret,
    Plus,
    Minus,
    Open,
    Close,
    Star,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, Error> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '(' => {
                out.push(Tok::Open);
                i += 1;
            }
            ')' => {
                out.push(Tok::Close);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Tok::Num(text.parse()?));
            }
            l if l.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

/// A product `coeff * Π ident^exp`.
type RawTerm = (Rational, Vec<(String, u16)>);

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Vec<RawTerm>, Error> {
        let mut out = Vec::new();
        let mut sign = Rational::ONE;
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            sign = Rational::from(-1);
        } else if let Some(Tok::Plus) = self.peek() {
            self.pos += 1;
        }
        loop {
            for (c, f) in self.term()? {
                out.push((&c * &sign, f));
            }
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    sign = Rational::ONE;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    sign = Rational::from(-1);
                }
                _ => return Ok(out),
            }
        }
    }

    fn term(&mut self) -> Result<Vec<RawTerm>, Error> {
        let mut coeff = Rational::ONE;
        if let Some(Tok::Num(_)) = self.peek() {
            if let Some(Tok::Num(c)) = self.next() {
                coeff = c;
            }
            if let Some(Tok::Star) = self.peek() {
                self.pos += 1;
            }
        }
        if let Some(Tok::Open) = self.peek() {
            self.pos += 1;
            let inner = self.expr()?;
            if self.next() != Some(Tok::Close) {
                return Err(Error::Parse("missing ')'".into()));
            }
            return Ok(inner.into_iter().map(|(c, f)| (&c * &coeff, f)).collect());
        }
        let mut factors = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            let Some(Tok::Ident(name)) = self.next() else {
                unreachable!()
            };
            let mut e = 1u16;
            if let Some(Tok::Caret) = self.peek() {
                self.pos += 1;
                match self.next() {
                    Some(Tok::Num(k)) if k.is_integer() && !k.is_negative() => {
                        e = k
                            .to_i64()
                            .and_then(|v| u16::try_from(v).ok())
                            .ok_or_else(|| Error::Parse("exponent too large".into()))?;
                    }
                    _ => return Err(Error::Parse("expected exponent after '^'".into())),
                }
            }
            factors.push((name, e));
            if let Some(Tok::Star) = self.peek() {
                self.pos += 1;
            }
        }
        if factors.is_empty() && self.pos > 0 && !matches!(self.toks.get(self.pos - 1), Some(Tok::Num(_))) {
            return Err(Error::Parse("empty term".into()));
        }
        Ok(vec![(coeff, factors)])
    }
}

fn parse_raw(s: &str) -> Result<Vec<RawTerm>, Error> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

/// Parses a polynomial over the named variables of `ring`.
pub fn parse_poly(s: &str, ring: &RingRef) -> Result<Poly, Error> {
    let mut out = Poly::zero(ring);
    for (c, factors) in parse_raw(s)? {
        let mut e = vec![0u16; ring.len()];
        for (name, k) in factors {
            e[ring.index(&name)?] += k;
        }
        out.add_term(Monomial::new(ring, &e), &c);
    }
    Ok(out)
}

/// Parses a Schur combination; `s21` is the partition (2,1) and `s0` is 1.
pub fn parse_schur(s: &str) -> Result<SchurExpansion, Error> {
    let mut out = SchurExpansion::new();
    for (c, factors) in parse_raw(s)? {
        let lambda = match factors.as_slice() {
            [] => Partition::empty(),
            [(name, 1)] if name.starts_with('s') => {
                let digits = &name[1..];
                if digits.is_empty() || !digits.chars().all(|d| d.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad Schur label {name:?}")));
                }
                Partition::new(digits.chars().map(|d| d as u32 - '0' as u32).collect())
            }
            _ => return Err(Error::Parse("expected a single Schur symbol per term".into())),
        };
        out.add_term(lambda, &c);
    }
    Ok(out)
}
