//! Exact coefficient arithmetic: prime fields GF(p) and the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoeffField {
    /// GF(p) for a word-sized prime p.
    Prime(u64),
    /// Exact rational numbers.
    Rationals,
}

/// A field element. Prime-field values are kept reduced to `0..p`;
/// rationals are in lowest terms with positive denominator (the
/// `BigRational` canonical form).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Fp(u64),
    Rat(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, b, m);
        }
        b = mod_mul(b, b, m);
        e >>= 1;
    }
    acc
}

impl CoeffField {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::CompositeModulus(p));
        }
        // The arithmetic below assumes p fits in 31 bits (sums stay in u64,
        // p casts losslessly to i64); larger moduli are rejected up front.
        if p > (1 << 31) {
            return Err(AlgebraError::Precondition(format!(
                "modulus {p} exceeds the supported width (2^31)"
            )));
        }
        Ok(CoeffField::Prime(p))
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoeffField::Prime(_) => Coeff::Fp(0),
            CoeffField::Rationals => Coeff::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoeffField::Prime(_) => Coeff::Fp(1),
            CoeffField::Rationals => Coeff::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            CoeffField::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Coeff::Fp(r)
            }
            CoeffField::Rationals => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Coeff> {
        if den == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        match self {
            CoeffField::Prime(_) => {
                let d = self.from_i64(den);
                self.div(&self.from_i64(num), &d)
            }
            CoeffField::Rationals => Ok(Coeff::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffField::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                let s = x + y;
                Coeff::Fp(if s >= *p { s - p } else { s })
            }
            (CoeffField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoeffField::Prime(p), Coeff::Fp(x)) => Coeff::Fp(if *x == 0 { 0 } else { p - x }),
            (CoeffField::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffField::Prime(p), Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(mod_mul(*x, *y, *p)),
            (CoeffField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match (self, a) {
            (CoeffField::Prime(p), Coeff::Fp(x)) => Coeff::Fp(mod_pow(*x, p - 2, *p)),
            (CoeffField::Rationals, Coeff::Rat(x)) => Coeff::Rat(x.recip()),
            _ => panic!("coefficient/field mismatch"),
        })
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Fp(x) => *x == 0,
            Coeff::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Fp(x) => *x == 1,
            Coeff::Rat(x) => x.is_one(),
        }
    }
}

impl std::fmt::Display for Coeff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coeff::Fp(x) => write!(f, "{x}"),
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

/// Signed rendering for prime-field elements: values above p/2 print as
/// negatives, matching the small-integer inputs of the golden examples.
pub fn fmt_signed(field: &CoeffField, c: &Coeff) -> (bool, String) {
    match (field, c) {
        (CoeffField::Prime(p), Coeff::Fp(x)) => {
            if *x > p / 2 {
                (true, format!("{}", p - x))
            } else {
                (false, format!("{x}"))
            }
        }
        (_, Coeff::Rat(x)) => {
            if x.is_negative() {
                let y = -x;
                if y.denom().is_one() {
                    (true, format!("{}", y.numer()))
                } else {
                    (true, format!("{}/{}", y.numer(), y.denom()))
                }
            } else if x.denom().is_one() {
                (false, format!("{}", x.numer()))
            } else {
                (false, format!("{}/{}", x.numer(), x.denom()))
            }
        }
        _ => (false, format!("{c}")),
    }
}
