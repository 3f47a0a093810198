//! Multivariate polynomials over a prime field.
//!
//! Terms are kept strictly descending in degrevlex with no zero coefficients,
//! so structural equality is semantic equality.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{cmp_degrevlex, Monomial};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: u32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Polynomial { terms: vec![(Monomial::one(nvars), c)] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Polynomial { terms: vec![(Monomial::var(nvars, i), 1)] }
    }

    pub fn term(mono: Monomial, c: u32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Polynomial { terms: vec![(mono, c)] }
    }

    /// Build from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(field: &PrimeField, mut terms: Vec<(Monomial, u32)>) -> Self {
        terms.sort_by(|a, b| cmp_degrevlex(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = field.add(last.1, c);
                    continue;
                }
            }
            out.push((m, c % field.characteristic()));
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, u32)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    /// Degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// All terms of equal degree. The zero polynomial is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn add(&self, field: &PrimeField, other: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_degrevlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, field: &PrimeField) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(*c)))
                .collect(),
        }
    }

    pub fn sub(&self, field: &PrimeField, other: &Polynomial) -> Polynomial {
        self.add(field, &other.neg(field))
    }

    pub fn scale(&self, field: &PrimeField, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    /// Multiply by the single term `c * mono`. Order is preserved.
    pub fn mul_term(&self, field: &PrimeField, mono: &Monomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), field.mul(*a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, field: &PrimeField, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &other.terms {
            acc = acc.add(field, &self.mul_term(field, m, *c));
        }
        acc
    }

    /// Nonzero constant term content, if this polynomial is a unit of the graded ring.
    pub fn constant_value(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (i, e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].clone()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse infix notation such as `3*x^2*y - y^3 + (x + y)*x`.
    pub fn parse(src: &str, vars: &[String], field: &PrimeField) -> Result<Polynomial> {
        let mut parser = Parser {
            src: src.as_bytes(),
            pos: 0,
            vars,
            field,
        };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(Error::Parse(format!(
                "unexpected character at byte {} of `{}`",
                parser.pos, src
            )));
        }
        Ok(p)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
    field: &'a PrimeField,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let nvars = self.vars.len();
        let mut acc;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                acc = self.product()?.neg(self.field);
            }
            Some(b'+') => {
                self.pos += 1;
                acc = self.product()?;
            }
            _ => acc = self.product()?,
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.product()?;
                    acc = acc.add(self.field, &t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.product()?;
                    acc = acc.sub(self.field, &t);
                }
                _ => break,
            }
        }
        let _ = nvars;
        Ok(acc)
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(self.field, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::Parse("expected `)`".to_string()));
                }
                self.pos += 1;
                Ok(self.maybe_power(inner)?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.vars.len(), self.field.from_i64(n as i64)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.identifier();
                let idx = self
                    .vars
                    .iter()
                    .position(|v| v == &name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                let base = Polynomial::var(self.vars.len(), idx);
                self.maybe_power(base)
            }
            other => Err(Error::Parse(format!(
                "expected a term, found {:?}",
                other.map(|c| c as char)
            ))),
        }
    }

    fn maybe_power(&mut self, base: Polynomial) -> Result<Polynomial> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let mut acc = Polynomial::constant(self.vars.len(), 1);
            for _ in 0..e {
                acc = acc.mul(self.field, &base);
            }
            Ok(acc)
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse("expected an integer".to_string()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|e| Error::Parse(format!("bad integer: {e}")))
    }

    fn identifier(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (PrimeField, Vec<String>) {
        (
            PrimeField::new(32003).unwrap(),
            vec!["x".to_string(), "y".to_string()],
        )
    }

    #[test]
    fn parse_and_render_round_trip() {
        let (f, vars) = setup();
        let p = Polynomial::parse("3*x^2*y - y^3 + x*y^2", &vars, &f).unwrap();
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p.render(&vars), "3*x^2*y + x*y^2 + 32002*y^3");
    }

    #[test]
    fn parse_parenthesized_product() {
        let (f, vars) = setup();
        let p = Polynomial::parse("(x + y)*(x - y)", &vars, &f).unwrap();
        let q = Polynomial::parse("x^2 - y^2", &vars, &f).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn arithmetic_cancels() {
        let (f, vars) = setup();
        let p = Polynomial::parse("x^2 + x*y", &vars, &f).unwrap();
        let q = p.sub(&f, &p);
        assert!(q.is_zero());
    }

    #[test]
    fn homogeneity() {
        let (f, vars) = setup();
        assert!(Polynomial::parse("x^2 + x*y", &vars, &f).unwrap().is_homogeneous());
        assert!(!Polynomial::parse("x^2 + y", &vars, &f).unwrap().is_homogeneous());
        assert!(Polynomial::zero().is_homogeneous());
    }

    #[test]
    fn unknown_variable_is_an_error() {
        let (f, vars) = setup();
        assert!(Polynomial::parse("x + z", &vars, &f).is_err());
    }
}
