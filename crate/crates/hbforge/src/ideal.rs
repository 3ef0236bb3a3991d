//! Ideal-level algebra: sums, products, powers, intersections, quotients,
//! saturations, dimension/height and Hilbert data.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::field::Coeff;
use crate::groebner::{divide_track, eliminate, groebner_basis_with, Budget, GroebnerBasis};
use crate::poly::Polynomial;
use crate::ring::{mono_div, mono_divides, mono_lcm, Exponents, MonomialOrder, PolyRing};

#[derive(Debug)]
pub struct Ideal {
    pub ring: Arc<PolyRing>,
    pub gens: Vec<Polynomial>,
    pub budget: Budget,
    gb_cache: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            budget: self.budget,
            gb_cache: OnceLock::new(),
        }
    }
}

/// Hilbert-type data of R/I for a homogeneous ideal I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Krull dimension of R/I; -1 for the unit ideal.
    pub dim: i64,
    /// Codimension of I (`#vars - dim`; 0 for the zero ideal).
    pub height: i64,
    /// Numerator B(t) of the Hilbert series B(t)/(1-t)^#vars, coefficient
    /// at index j is the t^j coefficient.
    pub numerator: Vec<i64>,
    /// Multiplicity: value at t=1 of B(t)/(1-t)^height.
    pub multiplicity: i64,
    /// Castelnuovo-Mumford regularity, filled in when a minimal free
    /// resolution has been computed.
    pub regularity: Option<i64>,
    nvars: usize,
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl HilbertData {
    /// Hilbert function H_{R/I}(t).
    pub fn hfun(&self, t: i64) -> i64 {
        let d = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(j, &c)| c * binomial(t - j as i64 + d - 1, d - 1))
            .sum()
    }
}

/// Divide an integer polynomial by (1-t); errors unless it divides exactly.
fn divide_by_one_minus_t(num: &[i64]) -> Result<Vec<i64>> {
    // B = (1-t) Q  =>  Q_k = sum_{j<=k} B_j, with total sum 0
    let mut q = Vec::with_capacity(num.len().saturating_sub(1));
    let mut acc = 0i64;
    for (k, &c) in num.iter().enumerate() {
        acc += c;
        if k + 1 < num.len() {
            q.push(acc);
        }
    }
    if acc != 0 {
        return Err(AlgebraError::ExactDivision);
    }
    while q.last() == Some(&0) {
        q.pop();
    }
    Ok(q)
}

const HILBERT_DEGREE_CAP: i64 = 64;

/// Hilbert series numerator of R/L for a monomial ideal given by minimal
/// generators, by the splitting recursion (inclusion-exclusion with
/// pruning), memoized on the generator set.
fn monomial_numerator(
    gens: &[Exponents],
    memo: &mut HashMap<Vec<Exponents>, Vec<i64>>,
    total_degree: &dyn Fn(&[u16]) -> i64,
) -> Result<Vec<i64>> {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Ok(vec![]); // unit ideal: R/L = 0
    }
    if gens.is_empty() {
        return Ok(vec![1]);
    }
    let mut key: Vec<Exponents> = gens.to_vec();
    key.sort();
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    // split off the last generator g: N(L) = N(L') - t^{deg g} N(L' : g)
    let (g, rest) = key.split_last().unwrap();
    let dg = total_degree(g);
    if dg > HILBERT_DEGREE_CAP {
        return Err(AlgebraError::Budget(format!(
            "Hilbert numerator degree exceeds cap {HILBERT_DEGREE_CAP}"
        )));
    }
    let n1 = monomial_numerator(rest, memo, total_degree)?;
    // L' : g is generated by lcm(m, g)/g, minimalized
    let mut colon: Vec<Exponents> = rest.iter().map(|m| mono_div(&mono_lcm(m, g), g)).collect();
    colon.sort();
    colon.dedup();
    let minimal: Vec<Exponents> = colon
        .iter()
        .filter(|m| !colon.iter().any(|o| *o != **m && mono_divides(o, m)))
        .cloned()
        .collect();
    let n2 = monomial_numerator(&minimal, memo, total_degree)?;
    let mut out = n1;
    let shift = dg as usize;
    if out.len() < n2.len() + shift {
        out.resize(n2.len() + shift, 0);
    }
    for (j, c) in n2.iter().enumerate() {
        out[j + shift] -= c;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    memo.insert(key, out.clone());
    Ok(out)
}

/// All exponent vectors of plain total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u16) -> Vec<Exponents> {
    fn rec(n: usize, d: u16, prefix: &mut Vec<u16>, out: &mut Vec<Exponents>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

impl Ideal {
    pub fn new(gens: Vec<Polynomial>, budget: Budget) -> Result<Self> {
        let ring = gens.first().map(|g| g.ring.clone()).ok_or_else(|| {
            AlgebraError::Precondition("ideal needs at least one generator".into())
        })?;
        for g in &gens {
            gens[0].same_ring(g)?;
        }
        // normalize, drop zeros and duplicates
        let mut norm: Vec<Polynomial> = Vec::new();
        for g in &gens {
            if g.is_zero() {
                continue;
            }
            let n = g.normalized();
            if !norm.contains(&n) {
                norm.push(n);
            }
        }
        if norm.is_empty() {
            norm.push(Polynomial::zero(&ring));
        }
        Ok(Ideal {
            ring,
            gens: norm,
            budget,
            gb_cache: OnceLock::new(),
        })
    }

    pub fn from_strs(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Self> {
        let ps = gens
            .iter()
            .map(|s| crate::poly::parse(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ps, Budget::default())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn gb(&self) -> Result<&GroebnerBasis> {
        if self.gb_cache.get().is_none() {
            if self.is_zero() {
                return Err(AlgebraError::Precondition(
                    "zero ideal has no Groebner basis".into(),
                ));
            }
            let g = groebner_basis_with(&self.gens, &self.budget, false)?;
            let _ = self.gb_cache.set(g);
        }
        Ok(self.gb_cache.get().unwrap())
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if self.is_zero() {
            return Ok(p.is_zero());
        }
        self.gb()?.contains(p)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality predicate: reduced Groebner bases coincide.
    pub fn eq_ideal(&self, other: &Ideal) -> Result<bool> {
        if *self.ring != *other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(self.is_zero() == other.is_zero());
        }
        Ok(self.gb()?.basis == other.gb()?.basis)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        Ok(self.gb()?.basis.iter().any(|p| {
            p.lead_monomial()
                .is_some_and(|m| crate::ring::mono_is_one(m))
        }))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if *self.ring != *other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(gens, self.budget)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if *self.ring != *other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(gens, self.budget)
    }

    pub fn power(&self, e: u32) -> Result<Ideal> {
        if e == 0 {
            return Ideal::new(vec![Polynomial::one(&self.ring)], self.budget);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// A ∩ B by tag-variable elimination: eliminate u from u·A + (1-u)·B.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if *self.ring != *other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ideal::new(vec![Polynomial::zero(&self.ring)], self.budget);
        }
        let ring = &self.ring;
        // fresh tag variable name
        let mut tag = "u".to_string();
        while ring.vars.contains(&tag) {
            tag.push('_');
        }
        let mut vars = vec![tag.clone()];
        vars.extend(ring.vars.iter().cloned());
        let order = MonomialOrder::Block(vec![vec![0], (1..=ring.nvars()).collect()]);
        let mut weights: Vec<Vec<i64>> = ring
            .weights
            .iter()
            .map(|w| {
                let mut v = vec![0];
                v.extend_from_slice(w);
                v
            })
            .collect();
        weights[0][0] = 1;
        let tring = PolyRing::new(vars, ring.field.clone(), order, weights)?;
        let u = crate::poly::parse(&tag, &tring)?;
        let one_minus_u = Polynomial::one(&tring).sub(&u)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            gens.push(u.mul(&a.map_to_ring(&tring)?)?);
        }
        for b in &other.gens {
            gens.push(one_minus_u.mul(&b.map_to_ring(&tring)?)?);
        }
        let (elim, _sub) = eliminate(&gens, &[&tag], &self.budget)?;
        let back = elim
            .iter()
            .map(|p| p.map_to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        if back.is_empty() {
            return Ideal::new(vec![Polynomial::zero(ring)], self.budget);
        }
        Ideal::new(back, self.budget)
    }

    /// A : b for a single nonzero polynomial: (A ∩ (b)) / b.
    pub fn quotient_by_poly(&self, b: &Polynomial) -> Result<Ideal> {
        if b.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let bi = Ideal::new(vec![b.clone()], self.budget)?;
        let cap = self.intersect(&bi)?;
        if cap.is_zero() {
            return Ideal::new(vec![Polynomial::zero(&self.ring)], self.budget);
        }
        let mut gens = Vec::new();
        for g in &cap.gens {
            if g.is_zero() {
                continue;
            }
            let (q, r) = divide_track(g, std::slice::from_ref(b))?;
            if !r.is_zero() {
                return Err(AlgebraError::NonzeroRemainder(
                    "ideal quotient generator not divisible".into(),
                ));
            }
            gens.push(q.into_iter().next().unwrap());
        }
        if gens.is_empty() {
            gens.push(Polynomial::zero(&self.ring));
        }
        Ideal::new(gens, self.budget)
    }

    /// A : B = ∩_b (A : b) over the generators of B.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        if *self.ring != *other.ring {
            return Err(AlgebraError::RingMismatch);
        }
        let nonzero: Vec<&Polynomial> = other.gens.iter().filter(|b| !b.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(AlgebraError::Precondition("quotient by zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for b in nonzero {
            let q = self.quotient_by_poly(b)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Iterated quotient until stable; returns the saturation and the step
    /// count at which it stabilized.
    pub fn saturate(&self, other: &Ideal) -> Result<(Ideal, usize)> {
        let mut current = self.clone();
        let mut steps = 0usize;
        loop {
            let next = current.quotient(other)?;
            if next.eq_ideal(&current)? {
                return Ok((current, steps));
            }
            current = next;
            steps += 1;
            if steps > 64 {
                return Err(AlgebraError::Budget(
                    "saturation did not stabilize within 64 steps".into(),
                ));
            }
        }
    }

    fn lead_exponents(&self) -> Result<Vec<Exponents>> {
        Ok(self
            .gb()?
            .basis
            .iter()
            .map(|p| p.lead_monomial().unwrap().clone())
            .collect())
    }

    /// (dim R/A, height A). Dim is read off the lead-term monomial ideal:
    /// the largest variable subset S such that no minimal generator is
    /// supported entirely inside S. Unit ideal: (-1, #vars); zero ideal:
    /// (#vars, 0).
    pub fn dimension_height(&self) -> Result<(i64, i64)> {
        let n = self.ring.nvars();
        if self.is_zero() {
            return Ok((n as i64, 0));
        }
        let leads = self.lead_exponents()?;
        if leads.iter().any(|m| m.iter().all(|&e| e == 0)) {
            return Ok((-1, n as i64));
        }
        let mut best = 0usize;
        for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let contained = leads.iter().any(|m| {
                m.iter()
                    .enumerate()
                    .all(|(i, &e)| e == 0 || mask & (1 << i) != 0)
            });
            if !contained {
                best = size;
            }
        }
        Ok((best as i64, (n - best) as i64))
    }

    /// Hilbert data of R/A for homogeneous A, from the lead-term ideal.
    pub fn hilbert(&self) -> Result<HilbertData> {
        let n = self.ring.nvars();
        for g in &self.gens {
            if !g.is_zero() && !g.is_homogeneous() {
                return Err(AlgebraError::Inhomogeneous);
            }
        }
        let (dim, height) = self.dimension_height()?;
        let numerator = if self.is_zero() {
            vec![1]
        } else {
            let leads = self.lead_exponents()?;
            let ring = self.ring.clone();
            let degf = move |m: &[u16]| ring.total_degree_of(m);
            let mut memo = HashMap::new();
            monomial_numerator(&leads, &mut memo, &degf)?
        };
        // sanity: (1-t)^{n-dim} must divide B(t)
        let mut reduced = numerator.clone();
        for _ in 0..height {
            reduced = divide_by_one_minus_t(&reduced)?;
        }
        let multiplicity: i64 = reduced.iter().sum();
        Ok(HilbertData {
            dim,
            height,
            numerator,
            multiplicity,
            regularity: None,
            nvars: n,
        })
    }

    /// Macaulay-matrix oracle: dimension of the degree-t graded piece of A
    /// and a reduced row-echelon basis of it, computed purely by linear
    /// algebra on monomial coefficients (no Groebner bases involved).
    pub fn graded_piece(&self, t: i64) -> Result<(usize, Vec<Polynomial>)> {
        let ring = &self.ring;
        let n = ring.nvars();
        // plain-degree enumeration needs each variable to have unit total
        // weight (true for standard and bigraded ambient rings here)
        for i in 0..n {
            let tw: i64 = ring.weights.iter().map(|w| w[i]).sum();
            if tw != 1 {
                return Err(AlgebraError::Precondition(
                    "graded_piece needs unit total weights".into(),
                ));
            }
        }
        if t < 0 {
            return Ok((0, vec![]));
        }
        let field = ring.field.clone();
        let mut spanning: Vec<Polynomial> = Vec::new();
        for g in &self.gens {
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::Inhomogeneous);
            }
            let dg = g.total_degree().unwrap();
            if dg > t {
                continue;
            }
            for m in monomials_of_degree(n, (t - dg) as u16) {
                spanning.push(g.mul_term(&m, &field.one())?);
            }
        }
        echelon_span(ring, &spanning, t)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ring": serde_json::to_value(&*self.ring).unwrap(),
            "generators": self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Rank and reduced row-echelon basis of the k-span of homogeneous
/// degree-t polynomials, by Gaussian elimination on monomial coefficients.
pub fn echelon_span(
    ring: &Arc<PolyRing>,
    polys: &[Polynomial],
    t: i64,
) -> Result<(usize, Vec<Polynomial>)> {
    let n = ring.nvars();
    let field = ring.field.clone();
    let cols = monomials_of_degree(n, t as u16);
    let col_index: HashMap<&Exponents, usize> =
        cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<Coeff>> = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let mut row = vec![field.zero(); cols.len()];
        for (e, c) in &p.terms {
            row[*col_index.get(e).ok_or(AlgebraError::Inhomogeneous)?] = c.clone();
        }
        rows.push(row);
    }
    // row echelon over the coefficient field
    let ncols = cols.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let piv = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(piv) = piv else { continue };
        rows.swap(rank, piv);
        let inv = field.inv(&rows[rank][col].clone())?;
        for c in col..ncols {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..ncols {
                    let s = field.mul(&rows[rank][c], &f);
                    rows[r][c] = field.sub(&rows[r][c], &s);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let basis: Vec<Polynomial> = (0..rank)
        .map(|r| {
            let terms: Vec<(Exponents, Coeff)> = (0..ncols)
                .filter(|&c| !rows[r][c].is_zero())
                .map(|c| (cols[c].clone(), rows[r][c].clone()))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    Ok((rank, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoeffField;

    fn ring3() -> Arc<PolyRing> {
        PolyRing::standard(
            &["x", "y", "z"],
            CoeffField::prime(32003).unwrap(),
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    #[test]
    fn combine_basics() {
        let r = ring3();
        let a = Ideal::from_strs(&r, &["x"]).unwrap();
        let b = Ideal::from_strs(&r, &["y"]).unwrap();
        let p = a.product(&b).unwrap();
        assert!(p
            .eq_ideal(&Ideal::from_strs(&r, &["x*y"]).unwrap())
            .unwrap());
        let m = Ideal::from_strs(&r, &["x", "y"]).unwrap();
        let sq = m.power(2).unwrap();
        assert!(sq
            .eq_ideal(&Ideal::from_strs(&r, &["x^2", "x*y", "y^2"]).unwrap())
            .unwrap());
        assert!(m.power(0).unwrap().is_unit().unwrap());
    }

    #[test]
    fn intersect_principal() {
        let r = ring3();
        let a = Ideal::from_strs(&r, &["x"]).unwrap();
        let b = Ideal::from_strs(&r, &["y"]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert!(c
            .eq_ideal(&Ideal::from_strs(&r, &["x*y"]).unwrap())
            .unwrap());
    }

    #[test]
    fn intersect_mixed() {
        // (x^2, y) ∩ (x) = (x^2, xy), frozen from degree-by-degree linear
        // algebra up to degree 4
        let r = ring3();
        let a = Ideal::from_strs(&r, &["x^2", "y"]).unwrap();
        let b = Ideal::from_strs(&r, &["x"]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert!(c
            .eq_ideal(&Ideal::from_strs(&r, &["x^2", "x*y"]).unwrap())
            .unwrap());
    }

    #[test]
    fn quotient_basics() {
        let r = ring3();
        let a = Ideal::from_strs(&r, &["x*y"]).unwrap();
        let b = Ideal::from_strs(&r, &["x"]).unwrap();
        assert!(a
            .quotient(&b)
            .unwrap()
            .eq_ideal(&Ideal::from_strs(&r, &["y"]).unwrap())
            .unwrap());
        // (x^2, xy) : (x, y) = (x)
        let a2 = Ideal::from_strs(&r, &["x^2", "x*y"]).unwrap();
        let m = Ideal::from_strs(&r, &["x", "y"]).unwrap();
        assert!(a2
            .quotient(&m)
            .unwrap()
            .eq_ideal(&Ideal::from_strs(&r, &["x"]).unwrap())
            .unwrap());
    }

    #[test]
    fn saturate_common_factor() {
        let r = ring3();
        let a = Ideal::from_strs(&r, &["x^2*y", "x*y^2"]).unwrap();
        let m = Ideal::from_strs(&r, &["x", "y"]).unwrap();
        let (s, steps) = a.saturate(&m).unwrap();
        assert!(s
            .eq_ideal(&Ideal::from_strs(&r, &["x*y"]).unwrap())
            .unwrap());
        assert!(steps >= 1);
        // fixed point: s : m = s
        assert!(s.quotient(&m).unwrap().eq_ideal(&s).unwrap());
    }

    #[test]
    fn dimension_and_height() {
        let r = ring3();
        let a = Ideal::from_strs(&r, &["x", "y"]).unwrap();
        assert_eq!(a.dimension_height().unwrap(), (1, 2));
        let u = Ideal::from_strs(&r, &["1"]).unwrap();
        assert_eq!(u.dimension_height().unwrap(), (-1, 3));
        let p = Ideal::from_strs(&r, &["x*y"]).unwrap();
        assert_eq!(p.dimension_height().unwrap(), (2, 1));
    }

    #[test]
    fn hilbert_of_line() {
        let r = ring3();
        let a = Ideal::from_strs(&r, &["x", "y"]).unwrap();
        let h = a.hilbert().unwrap();
        assert_eq!(h.numerator, vec![1, -2, 1]); // (1-t)^2
        assert_eq!(h.height, 2);
        assert_eq!(h.multiplicity, 1);
        for t in 0..6 {
            assert_eq!(h.hfun(t), 1);
        }
    }

    #[test]
    fn hilbert_vs_macaulay_oracle() {
        let r = ring3();
        let a = Ideal::from_strs(&r, &["x^2 + y*z", "x*y^2"]).unwrap();
        let h = a.hilbert().unwrap();
        for t in 0..=8i64 {
            let (rank, _) = a.graded_piece(t).unwrap();
            let full = binomial(t + 2, 2);
            assert_eq!(h.hfun(t), full - rank as i64, "degree {t}");
        }
    }

    #[test]
    fn graded_piece_linear() {
        let r = ring3();
        let a = Ideal::from_strs(&r, &["x", "y"]).unwrap();
        let (d, basis) = a.graded_piece(1).unwrap();
        assert_eq!(d, 2);
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn unit_ideal_numerator() {
        let r = ring3();
        let u = Ideal::from_strs(&r, &["3"]).unwrap();
        let h = u.hilbert().unwrap();
        assert!(h.numerator.is_empty());
        assert_eq!(h.hfun(0), 0);
        assert_eq!(h.dim, -1);
    }
}
