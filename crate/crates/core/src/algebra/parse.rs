//! Text grammar for polynomials in `x`, optionally with the parameter `t`
//! in coefficients:
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := factor ('*'? factor)*
//! factor := INT ('/' INT)? | ('x' | 't') ('^' INT)?
//! ```
//!
//! Whitespace is ignored. Any occurrence of `t` promotes the result to a
//! polynomial over Q(t).

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::field::{Field, Rational};
use super::poly::{Poly, PolyQ};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParsedPoly {
    Rational(PolyQ),
    OverQt(Poly<RatFunc>),
}

impl ParsedPoly {
    /// Lifts to Q(t)[x] regardless of how it was parsed.
    pub fn into_over_qt(self) -> Poly<RatFunc> {
        match self {
            ParsedPoly::Rational(p) => p.map(|c| RatFunc::from_rational(c.clone())),
            ParsedPoly::OverQt(p) => p,
        }
    }
}

pub fn parse_poly(input: &str) -> Result<ParsedPoly> {
    let tokens: Vec<(usize, char)> = input.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut parser = Parser { tokens, pos: 0, terms: BTreeMap::new() };
    parser.expr()?;
    let terms = parser.terms;
    let uses_t = terms.iter().any(|(&(_, te), c)| te > 0 && !c.is_zero());
    let max_x = terms.keys().map(|&(xe, _)| xe).max().unwrap_or(0);
    if !uses_t {
        let mut coeffs = vec![Rational::zero(); max_x + 1];
        for ((xe, _), c) in terms {
            coeffs[xe] = coeffs[xe].clone() + c;
        }
        return Ok(ParsedPoly::Rational(PolyQ::new(coeffs)));
    }
    let mut by_x: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); max_x + 1];
    for ((xe, te), c) in terms {
        let slot = by_x[xe].entry(te).or_insert_with(Rational::zero);
        *slot = slot.clone() + c;
    }
    let coeffs = by_x
        .into_iter()
        .map(|tmap| {
            let deg = tmap.keys().copied().max().unwrap_or(0);
            let mut tc = vec![Rational::zero(); deg + 1];
            for (te, c) in tmap {
                tc[te] = c;
            }
            RatFunc::from_poly(PolyQ::new(tc))
        })
        .collect();
    Ok(ParsedPoly::OverQt(Poly::new(coeffs)))
}

/// Parses a polynomial written in the variable `t`.
pub fn parse_poly_in_t(text: &str) -> Result<PolyQ> {
    let not_t = || Error::Parse { offset: 0, message: format!("{text:?} must be a polynomial in t") };
    match parse_poly(text)? {
        ParsedPoly::Rational(p) if p.is_constant() => Ok(p),
        ParsedPoly::OverQt(p) if p.is_constant() => p.coeff(0).as_poly().cloned().ok_or_else(not_t),
        _ => Err(not_t()),
    }
}

struct Parser {
    tokens: Vec<(usize, char)>,
    pos: usize,
    terms: BTreeMap<(usize, usize), Rational>,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or_else(|| self.tokens.last().map_or(0, |&(o, _)| o + 1), |&(o, _)| o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<()> {
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut sign = self.sign().unwrap_or(1);
        loop {
            let (c, key) = self.term()?;
            let c = if sign < 0 { -c } else { c };
            let slot = self.terms.entry(key).or_insert_with(Rational::zero);
            *slot = slot.clone() + c;
            match self.sign() {
                Some(s) => sign = s,
                None if self.peek().is_none() => return Ok(()),
                None => return self.err(format!("unexpected '{}'", self.peek().unwrap())),
            }
        }
    }

    fn sign(&mut self) -> Option<i32> {
        match self.peek()? {
            '+' => {
                self.pos += 1;
                Some(1)
            }
            '-' => {
                self.pos += 1;
                Some(-1)
            }
            _ => None,
        }
    }

    fn term(&mut self) -> Result<(Rational, (usize, usize))> {
        let mut coeff = Rational::one();
        let (mut xe, mut te) = (0usize, 0usize);
        let mut first = true;
        loop {
            match self.peek() {
                Some('*') if !first => {
                    self.pos += 1;
                }
                Some(c) if !first && (c.is_ascii_digit() || c == 'x' || c == 't') => {}
                _ if !first => return Ok((coeff, (xe, te))),
                _ => {}
            }
            first = false;
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.integer()?;
                    let value = if self.peek() == Some('/') {
                        self.pos += 1;
                        let den = self.integer()?;
                        if num_traits::Zero::is_zero(&den) {
                            return self.err("zero denominator");
                        }
                        Rational::new(num, den)
                    } else {
                        Rational::from_integer(num)
                    };
                    coeff *= value;
                }
                Some('x') => {
                    self.pos += 1;
                    xe += self.exponent()?;
                }
                Some('t') => {
                    self.pos += 1;
                    te += self.exponent()?;
                }
                Some(c) => return self.err(format!("unexpected '{c}'")),
                None => return self.err("unexpected end of input"),
            }
        }
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let e = self.integer()?;
        usize::try_from(e).or_else(|_| self.err("exponent too large"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits: String = self.tokens[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}
