//! Polynomial ring descriptors: variables, coefficient field, monomial
//! order and (multi)grading.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::CoeffField;

/// Hard cap on a single exponent. Desk-scale degrees never approach this;
/// anything larger is treated as a bug in the caller.
pub const MAX_EXPONENT: u16 = i16::MAX as u16;

pub type Exponents = Vec<u16>;

/// A total multiplicative monomial order with 1 minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Ordered variable partition; blocks are compared left to right and
    /// each block is internally grevlex. A block order with block B first
    /// is an elimination order for B.
    Block(Vec<Vec<usize>>),
}

fn grevlex_cmp_on(vars: &[usize], a: &[u16], b: &[u16]) -> Ordering {
    let da: u64 = vars.iter().map(|&i| a[i] as u64).sum();
    let db: u64 = vars.iter().map(|&i| b[i] as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for &i in vars.iter().rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            // smaller exponent in the last differing position wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp_exps(&self, nvars: usize, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::Grevlex => {
                let all: Vec<usize> = (0..nvars).collect();
                grevlex_cmp_on(&all, a, b)
            }
            MonomialOrder::Lex => {
                for i in 0..nvars {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(blocks) => {
                for block in blocks {
                    match grevlex_cmp_on(block, a, b) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    fn validate(&self, nvars: usize) -> Result<()> {
        if let MonomialOrder::Block(blocks) = self {
            let mut seen = vec![false; nvars];
            for block in blocks {
                for &i in block {
                    if i >= nvars {
                        return Err(AlgebraError::BadOrderVariable(i));
                    }
                    if seen[i] {
                        return Err(AlgebraError::BadOrderVariable(i));
                    }
                    seen[i] = true;
                }
            }
            if !seen.iter().all(|&s| s) {
                return Err(AlgebraError::Parse(
                    "block order must partition all variables".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Immutable ring descriptor. Polynomials hold an `Arc` to exactly one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRing {
    pub vars: Vec<String>,
    pub field: CoeffField,
    pub order: MonomialOrder,
    /// One or two nonnegative weight vectors (one entry per variable).
    pub weights: Vec<Vec<i64>>,
}

impl PolyRing {
    pub fn new(
        vars: Vec<String>,
        field: CoeffField,
        order: MonomialOrder,
        weights: Vec<Vec<i64>>,
    ) -> Result<Arc<Self>> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(AlgebraError::DuplicateVariable(v.clone()));
            }
        }
        order.validate(vars.len())?;
        if weights.is_empty() || weights.len() > 2 {
            return Err(AlgebraError::WeightLength {
                got: weights.len(),
                vars: vars.len(),
            });
        }
        for w in &weights {
            if w.len() != vars.len() {
                return Err(AlgebraError::WeightLength {
                    got: w.len(),
                    vars: vars.len(),
                });
            }
            if w.iter().any(|&x| x < 0) {
                return Err(AlgebraError::Parse("weights must be nonnegative".into()));
            }
        }
        Ok(Arc::new(PolyRing {
            vars,
            field,
            order,
            weights,
        }))
    }

    /// Standard graded ring: every variable has weight 1.
    pub fn standard(vars: &[&str], field: CoeffField, order: MonomialOrder) -> Result<Arc<Self>> {
        let n = vars.len();
        PolyRing::new(
            vars.iter().map(|s| s.to_string()).collect(),
            field,
            order,
            vec![vec![1; n]],
        )
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    pub fn cmp_exps(&self, a: &[u16], b: &[u16]) -> Ordering {
        self.order.cmp_exps(self.nvars(), a, b)
    }

    /// Weighted degree of a monomial under grading `g`.
    pub fn weighted_degree(&self, g: usize, exps: &[u16]) -> i64 {
        self.weights[g]
            .iter()
            .zip(exps)
            .map(|(&w, &e)| w * e as i64)
            .sum()
    }

    /// Full multidegree of a monomial (one entry per weight vector).
    pub fn multidegree_of(&self, exps: &[u16]) -> Vec<i64> {
        (0..self.weights.len())
            .map(|g| self.weighted_degree(g, exps))
            .collect()
    }

    /// Total degree: the sum of all weighted degrees. For a standard
    /// grading this is the usual degree.
    pub fn total_degree_of(&self, exps: &[u16]) -> i64 {
        self.multidegree_of(exps).iter().sum()
    }
}

// -- monomial helpers -------------------------------------------------------

pub fn mono_one(nvars: usize) -> Exponents {
    vec![0; nvars]
}

pub fn mono_mul(a: &[u16], b: &[u16]) -> Result<Exponents> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let s = x as u32 + y as u32;
            if s > MAX_EXPONENT as u32 {
                Err(AlgebraError::ExponentOverflow(s as u64))
            } else {
                Ok(s as u16)
            }
        })
        .collect()
}

pub fn mono_divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y)
}

/// b / a, assuming a divides b.
pub fn mono_div(b: &[u16], a: &[u16]) -> Exponents {
    b.iter().zip(a).map(|(&x, &y)| x - y).collect()
}

pub fn mono_lcm(a: &[u16], b: &[u16]) -> Exponents {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub fn mono_is_one(a: &[u16]) -> bool {
    a.iter().all(|&x| x == 0)
}
