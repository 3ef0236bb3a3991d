//! Sparse multivariate polynomials in canonical sorted-term form.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};
use crate::field::{fmt_signed, Coeff, CoeffField};
use crate::ring::{mono_is_one, mono_mul, Exponents, PolyRing, MAX_EXPONENT};

/// The common degree of all terms of a polynomial, or a marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multidegree {
    /// Zero polynomial: degree is the -infinity marker.
    MinusInfinity,
    Homogeneous(Vec<i64>),
    Inhomogeneous,
}

/// Terms are strictly decreasing in the ring's monomial order, with no
/// zero coefficients and no duplicate exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub ring: Arc<PolyRing>,
    pub terms: Vec<(Exponents, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(vec![0; ring.nvars()], c)],
        }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        Polynomial {
            ring: ring.clone(),
            terms: vec![(e, ring.field.one())],
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, exps: Exponents, c: Coeff) -> Self {
        Polynomial::from_terms(ring, vec![(exps, c)])
    }

    /// Canonicalize an arbitrary term list: sort, merge, drop zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Exponents, Coeff)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_exps(&b.0, &a.0));
        let mut out: Vec<(Exponents, Coeff)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => {
                    last.1 = ring.field.add(&last.1, &c);
                }
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Exponents, Coeff)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Exponents> {
        self.terms.first().map(|(e, _)| e)
    }

    pub fn lead_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let f = &self.ring.field;
        let mut out: Vec<(Exponents, Coeff)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ring.cmp_exps(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(&self.terms[i].1, &other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        let f = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), f.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), f.mul(k, c)))
                .collect(),
        }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, exps: &[u16], c: &Coeff) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let f = &self.ring.field;
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| Ok((mono_mul(e, exps)?, f.mul(k, c))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        // accumulate into a map keyed by exponent vector
        let f = &self.ring.field;
        let mut acc: std::collections::HashMap<Exponents, Coeff> =
            std::collections::HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = mono_mul(ea, eb)?;
                let c = f.mul(ca, cb);
                match acc.entry(e) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = f.add(o.get(), &c);
                        *o.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                }
            }
        }
        Ok(Polynomial::from_terms(
            &self.ring,
            acc.into_iter().collect(),
        ))
    }

    pub fn pow(&self, e: i64) -> Result<Polynomial> {
        if e < 0 {
            return Err(AlgebraError::NegativePower);
        }
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn multidegree(&self) -> Multidegree {
        if self.is_zero() {
            return Multidegree::MinusInfinity;
        }
        let d0 = self.ring.multidegree_of(&self.terms[0].0);
        for (e, _) in &self.terms[1..] {
            if self.ring.multidegree_of(e) != d0 {
                return Multidegree::Inhomogeneous;
            }
        }
        Multidegree::Homogeneous(d0)
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.multidegree(), Multidegree::Inhomogeneous)
    }

    /// Degree of a homogeneous polynomial under the total (coarsened) grading.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms
            .iter()
            .map(|(e, _)| self.ring.total_degree_of(e))
            .max()
    }

    /// Formal partial derivative with respect to the given variable.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let f = &self.ring.field;
        let terms: Vec<(Exponents, Coeff)> = self
            .terms
            .iter()
            .filter(|(e, _)| e[var] > 0)
            .map(|(e, c)| {
                let mut d = e.clone();
                d[var] -= 1;
                (d, f.mul(c, &f.from_i64(e[var] as i64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Canonical normalized form: monic over a prime field; content-free
    /// with positive leading coefficient over the rationals.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        match self.ring.field {
            CoeffField::Prime(_) => {
                let inv = self
                    .ring
                    .field
                    .inv(self.lead_coeff().unwrap())
                    .expect("nonzero lead");
                self.scale(&inv)
            }
            CoeffField::Rationals => {
                // clear denominators, divide by integer content, fix sign
                let mut denom_lcm = BigInt::one();
                for (_, c) in &self.terms {
                    if let Coeff::Rat(r) = c {
                        denom_lcm = denom_lcm.lcm(r.denom());
                    }
                }
                let mut nums: Vec<BigInt> = self
                    .terms
                    .iter()
                    .map(|(_, c)| match c {
                        Coeff::Rat(r) => r.numer() * (&denom_lcm / r.denom()),
                        _ => unreachable!(),
                    })
                    .collect();
                let mut content = BigInt::zero();
                for n in &nums {
                    content = content.gcd(n);
                }
                if nums[0].is_negative() {
                    content = -content;
                }
                for n in &mut nums {
                    *n = &*n / &content;
                }
                Polynomial {
                    ring: self.ring.clone(),
                    terms: self
                        .terms
                        .iter()
                        .zip(nums)
                        .map(|((e, _), n)| (e.clone(), Coeff::Rat(BigRational::from_integer(n))))
                        .collect(),
                }
            }
        }
    }

    /// Substitute each variable by the given image (all images in one
    /// target ring over the same field).
    pub fn substitute(&self, images: &[Polynomial], target: &Arc<PolyRing>) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::Shape(
                "substitution image count mismatch".into(),
            ));
        }
        let mut acc = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&images[i].pow(exp as i64)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Re-interpret in another ring by matching variable names. Fails if a
    /// variable with a nonzero exponent has no counterpart.
    pub fn map_to_ring(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        let map: Vec<Option<usize>> = self
            .ring
            .vars
            .iter()
            .map(|v| target.vars.iter().position(|w| w == v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut ne = vec![0u16; target.nvars()];
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    match map[i] {
                        Some(j) => ne[j] = exp,
                        None => {
                            return Err(AlgebraError::UnknownVariable(self.ring.vars[i].clone()))
                        }
                    }
                }
            }
            terms.push((ne, c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// True if no term involves any of the given variables.
    pub fn avoids_vars(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .all(|(e, _)| vars.iter().all(|&i| e[i] == 0))
    }

    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n)
            .filter(|&i| self.terms.iter().any(|(e, _)| e[i] > 0))
            .collect()
    }
}

// -- parsing ----------------------------------------------------------------

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    ring: Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn parse_uint(&mut self) -> Result<u64> {
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap());
        }
        // cap at i64::MAX: callers feed these through signed coefficient paths
        s.parse::<u64>()
            .ok()
            .filter(|&n| n <= i64::MAX as u64)
            .ok_or_else(|| AlgebraError::Parse(format!("bad integer `{s}`")))
    }

    fn parse_ident(&mut self) -> String {
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_') {
            s.push(self.chars.next().unwrap());
        }
        s
    }

    /// term := factor (*-separated factors); factor := number | a/b | var[^exp]
    fn parse_term(&mut self) -> Result<(Exponents, Coeff)> {
        let field = self.ring.field.clone();
        let mut coeff = field.one();
        let mut exps = vec![0u16; self.ring.nvars()];
        let mut first = true;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.parse_uint()?;
                    self.skip_ws();
                    let c = if matches!(self.chars.peek(), Some('/')) {
                        self.chars.next();
                        self.skip_ws();
                        let den = self.parse_uint()?;
                        field.from_ratio(num as i64, den as i64)?
                    } else {
                        field.from_i64(num as i64)
                    };
                    coeff = field.mul(&coeff, &c);
                }
                Some(c) if c.is_ascii_alphabetic() || *c == '_' => {
                    let name = self.parse_ident();
                    let idx = self.ring.var_index(&name)?;
                    self.skip_ws();
                    let e = if matches!(self.chars.peek(), Some('^')) {
                        self.chars.next();
                        self.skip_ws();
                        let e = self.parse_uint()?;
                        if e > MAX_EXPONENT as u64 {
                            return Err(AlgebraError::ExponentOverflow(e));
                        }
                        e as u16
                    } else {
                        1
                    };
                    let s = exps[idx] as u32 + e as u32;
                    if s > MAX_EXPONENT as u32 {
                        return Err(AlgebraError::ExponentOverflow(s as u64));
                    }
                    exps[idx] = s as u16;
                }
                other => {
                    if first {
                        return Err(AlgebraError::Parse(format!(
                            "expected term, found {:?}",
                            other
                        )));
                    }
                    break;
                }
            }
            first = false;
            self.skip_ws();
            if matches!(self.chars.peek(), Some('*')) {
                self.chars.next();
            } else {
                break;
            }
        }
        Ok((exps, coeff))
    }
}

/// Parse a polynomial from the textual grammar: terms joined by `+`/`-`,
/// factors `*`-separated, exponents via `^`, rational coefficients as `a/b`.
pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut p = Parser {
        chars: text.chars().peekable(),
        ring: ring.clone(),
    };
    let field = ring.field.clone();
    let mut terms: Vec<(Exponents, Coeff)> = Vec::new();
    p.skip_ws();
    let mut sign = match p.chars.peek() {
        Some('-') => {
            p.chars.next();
            true
        }
        Some('+') => {
            p.chars.next();
            false
        }
        _ => false,
    };
    loop {
        let (e, c) = p.parse_term()?;
        let c = if sign { field.neg(&c) } else { c };
        terms.push((e, c));
        p.skip_ws();
        match p.chars.peek() {
            Some('+') => {
                p.chars.next();
                sign = false;
            }
            Some('-') => {
                p.chars.next();
                sign = true;
            }
            None => break,
            Some(c) => return Err(AlgebraError::Parse(format!("unexpected `{c}`"))),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = fmt_signed(&self.ring.field, c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || mono_is_one(e) {
                factors.push(mag);
            }
            for (v, &exp) in self.ring.vars.iter().zip(e) {
                match exp {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{exp}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
