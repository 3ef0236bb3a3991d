//! Plane point configurations: generation, defining ideals, position
//! classification (generic / tight / uniform), Betti-number predictions,
//! map degrees and line-arrangement Jacobian experiments.

use std::sync::Arc;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{AlgebraError, Result};
use crate::field::{Coeff, CoeffField};
use crate::groebner::Budget;
use crate::ideal::{echelon_span, monomials_of_degree, Ideal};
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::rees::{cm_via_pd, g_condition, rees_presentation, GCondition};
use crate::resolution::{minimal_resolution, minors_ideal, BettiTable};
use crate::ring::{Exponents, MonomialOrder, PolyRing};

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rank of a matrix of field elements by Gaussian elimination.
fn coeff_rank(ring: &Arc<PolyRing>, mut rows: Vec<Vec<Coeff>>) -> Result<usize> {
    let field = &ring.field;
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = field.inv(&rows[rank][col].clone())?;
        for c in col..ncols {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in rank + 1..rows.len() {
            if !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..ncols {
                    let s = field.mul(&rows[rank][c], &f);
                    rows[r][c] = field.sub(&rows[r][c], &s);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

/// A set of distinct points in the projective plane, stored with the last
/// nonzero coordinate normalized to 1.
#[derive(Debug, Clone)]
pub struct PointSet {
    pub ring: Arc<PolyRing>,
    pub points: Vec<[Coeff; 3]>,
    pub seed: Option<u64>,
}

fn normalize_point(ring: &Arc<PolyRing>, pt: [Coeff; 3]) -> Result<[Coeff; 3]> {
    let field = &ring.field;
    let last = pt
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or_else(|| AlgebraError::Precondition("zero coordinate triple".into()))?;
    let inv = field.inv(&pt[last])?;
    let mut out = pt;
    for c in out.iter_mut() {
        *c = field.mul(c, &inv);
    }
    Ok(out)
}

impl PointSet {
    pub fn new(ring: &Arc<PolyRing>, points: Vec<[Coeff; 3]>, seed: Option<u64>) -> Result<Self> {
        if ring.nvars() != 3 {
            return Err(AlgebraError::Precondition(
                "point sets live in a three-variable ring".into(),
            ));
        }
        let mut norm = Vec::with_capacity(points.len());
        for pt in points {
            let p = normalize_point(ring, pt)?;
            if norm.contains(&p) {
                return Err(AlgebraError::Precondition("duplicate point".into()));
            }
            norm.push(p);
        }
        Ok(PointSet {
            ring: ring.clone(),
            points: norm,
            seed,
        })
    }

    pub fn from_coords(ring: &Arc<PolyRing>, coords: &[[i64; 3]]) -> Result<Self> {
        let field = &ring.field;
        let pts = coords
            .iter()
            .map(|&[a, b, c]| [field.from_i64(a), field.from_i64(b), field.from_i64(c)])
            .collect();
        PointSet::new(ring, pts, None)
    }

    /// `n` distinct random points in the affine chart z = 1, deterministic
    /// per seed.
    pub fn random(field: CoeffField, n: usize, seed: u64) -> Result<Self> {
        let ring = PolyRing::standard(&["x", "y", "z"], field.clone(), MonomialOrder::Grevlex)?;
        let range = match field {
            CoeffField::Prime(p) => {
                if (p as u128) * (p as u128) < n as u128 {
                    let mut need = 2u64;
                    while need * need < n as u64 {
                        need += 1;
                    }
                    return Err(AlgebraError::FieldTooSmall {
                        need: need as usize,
                    });
                }
                p
            }
            CoeffField::Rationals => 1_000_003,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points: Vec<[Coeff; 3]> = Vec::with_capacity(n);
        let mut tries = 0usize;
        while points.len() < n {
            tries += 1;
            if tries > 1000 * n + 1000 {
                return Err(AlgebraError::Budget(
                    "rejection sampling of distinct points exhausted".into(),
                ));
            }
            let a = ring.field.from_i64(rng.random_range(0..range) as i64);
            let b = ring.field.from_i64(rng.random_range(0..range) as i64);
            let pt = [a, b, ring.field.one()];
            if !points.contains(&pt) {
                points.push(pt);
            }
        }
        Ok(PointSet {
            ring,
            points,
            seed: Some(seed),
        })
    }

    fn eval_mono(&self, pt: &[Coeff; 3], e: &Exponents) -> Coeff {
        let field = &self.ring.field;
        let mut acc = field.one();
        for (c, &k) in pt.iter().zip(e.iter()) {
            for _ in 0..k {
                acc = field.mul(&acc, c);
            }
        }
        acc
    }

    /// Hilbert function of the subset at degree `t` (rank of the evaluation
    /// matrix), independent of any Groebner computation.
    pub fn subset_hilbert(&self, idx: &[usize], t: i64) -> Result<usize> {
        if t < 0 {
            return Ok(0);
        }
        let monos = monomials_of_degree(3, t as u16);
        let rows: Vec<Vec<Coeff>> = idx
            .iter()
            .map(|&i| {
                monos
                    .iter()
                    .map(|e| self.eval_mono(&self.points[i], e))
                    .collect()
            })
            .collect();
        coeff_rank(&self.ring, rows)
    }

    pub fn hilbert_fn(&self, t: i64) -> Result<usize> {
        let all: Vec<usize> = (0..self.points.len()).collect();
        self.subset_hilbert(&all, t)
    }

    /// The prime of one point: two independent linear forms from the 2x2
    /// minors of the coordinate matrix.
    pub fn point_prime(&self, i: usize) -> Result<Ideal> {
        let ring = &self.ring;
        let field = &ring.field;
        let [a, b, c] = self.points[i].clone();
        let lin = |v: usize, w: usize, coef: &Coeff| -> Polynomial {
            // variable v minus coef * variable w
            let mut ev = vec![0u16; 3];
            ev[v] = 1;
            let mut ew = vec![0u16; 3];
            ew[w] = 1;
            Polynomial::from_terms(ring, vec![(ev, field.one()), (ew, field.neg(coef))])
        };
        let gens = if !c.is_zero() {
            vec![lin(0, 2, &a), lin(1, 2, &b)]
        } else if !b.is_zero() {
            vec![lin(0, 1, &a), Polynomial::var(ring, 2)]
        } else {
            vec![Polynomial::var(ring, 1), Polynomial::var(ring, 2)]
        };
        Ideal::new(gens, Budget::default())
    }

    /// I(X) as the intersection of the point primes, computed by a balanced
    /// tree of pairwise intersections.
    pub fn ideal_of_points(&self) -> Result<Ideal> {
        if self.points.is_empty() {
            return Err(AlgebraError::Precondition("empty point set".into()));
        }
        let mut level: Vec<Ideal> = (0..self.points.len())
            .map(|i| self.point_prime(i))
            .collect::<Result<Vec<_>>>()?;
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len().div_ceil(2));
            let mut it = level.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(a.intersect(&b)?),
                    None => next.push(a),
                }
            }
            level = next;
        }
        let ideal = level.pop().unwrap();
        let (dim, height) = ideal.dimension_height()?;
        if (dim, height) != (1, 2) {
            return Err(AlgebraError::CrossCheck(format!(
                "points ideal has (dim, height) = ({dim}, {height}), expected (1, 2)"
            )));
        }
        Ok(ideal)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "field": format!("{:?}", self.ring.field),
            "seed": self.seed,
            "points": self.points.iter()
                .map(|p| p.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Classification of an ideal of n reduced plane points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionReport {
    pub n: i64,
    /// Initial degree: least t with n < C(t+2, 2).
    pub s: i64,
    /// Excess over the triangular number: n - C(s+1, 2).
    pub h: i64,
    pub dim_is: usize,
    pub dim_is1: usize,
    pub dim_r1is: usize,
    pub generic: bool,
    pub tight: bool,
    pub uniform: Option<bool>,
    pub reg: i64,
}

impl PositionReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n, "s": self.s, "h": self.h,
            "dims": {"I_s": self.dim_is, "I_s+1": self.dim_is1, "R_1I_s": self.dim_r1is},
            "flags": {"generic": self.generic, "tight": self.tight, "uniform": self.uniform},
            "reg": self.reg,
        })
    }
}

/// Position data of the ideal of `n` reduced points: initial degree s,
/// excess h, graded-piece dimensions, genericity and tightness flags and
/// the regularity.  Tightness uses the rank of the multiplication matrix
/// (x, y, z) * basis(I_s), computed by plain linear algebra.
pub fn position_report(ideal: &Ideal, n: i64) -> Result<PositionReport> {
    let hd = ideal.hilbert()?;
    if hd.dim != 1 || hd.multiplicity != n {
        return Err(AlgebraError::Precondition(format!(
            "expected the ideal of {n} points, found dim {} multiplicity {}",
            hd.dim, hd.multiplicity
        )));
    }
    let mut s = 1i64;
    while n >= binom(s + 2, 2) {
        s += 1;
    }
    let h = n - binom(s + 1, 2);
    let (dim_is, basis_s) = ideal.graded_piece(s)?;
    let (dim_is1, _) = ideal.graded_piece(s + 1)?;
    let field = ideal.ring.field.clone();
    let mut products = Vec::with_capacity(3 * basis_s.len());
    for g in &basis_s {
        for v in 0..3 {
            let mut e = vec![0u16; 3];
            e[v] = 1;
            products.push(g.mul_term(&e, &field.one())?);
        }
    }
    let (dim_r1is, _) = echelon_span(&ideal.ring, &products, s + 1)?;
    let mut generic = dim_is as i64 == binom(s + 2, 2) - n && dim_is1 as i64 == binom(s + 3, 2) - n;
    for t in 1..s {
        if generic && ideal.graded_piece(t)?.0 != 0 {
            generic = false;
        }
    }
    let tight = generic && dim_r1is == (3 * dim_is).min(dim_is1);
    let (_, betti) = minimal_resolution(ideal)?;
    Ok(PositionReport {
        n,
        s,
        h,
        dim_is,
        dim_is1,
        dim_r1is,
        generic,
        tight,
        uniform: None,
        reg: betti.regularity,
    })
}

const UNIFORM_POINT_CAP: usize = 14;

/// Exhaustive uniform-position check: every subset of size m <= m_max must
/// be in generic m-position (checked via evaluation-matrix ranks).  Returns
/// the first violating subset, scanning sizes upward.
pub fn uniform_check(
    pts: &PointSet,
    m_max: usize,
    allow_large: bool,
) -> Result<(bool, Option<Vec<usize>>)> {
    let n = pts.points.len();
    if m_max > n {
        return Err(AlgebraError::Precondition(
            "subset size exceeds point count".into(),
        ));
    }
    if n > UNIFORM_POINT_CAP && !allow_large {
        return Err(AlgebraError::Budget(format!(
            "uniform check over {n} > {UNIFORM_POINT_CAP} points requires explicit override"
        )));
    }
    // subsets of size <= 2 are always generic
    for m in 3..=m_max {
        let mut sm = 1i64;
        while m as i64 >= binom(sm + 2, 2) {
            sm += 1;
        }
        for subset in (0..n).combinations(m) {
            for t in 1..=sm {
                let want = binom(t + 2, 2).min(m as i64) as usize;
                if pts.subset_hilbert(&subset, t)? != want {
                    return Ok((false, Some(subset)));
                }
            }
        }
    }
    Ok((true, None))
}

/// Closed-form Betti table of the ideal of n points in tight position,
/// n = C(s+1, 2) + h: column 0 lists minimal generators, column 1 the
/// syzygies.
pub fn predicted_betti(s: i64, h: i64) -> Result<BettiTable> {
    if s < 2 || h < 0 || h > s {
        return Err(AlgebraError::Precondition(format!(
            "predicted Betti table needs s >= 2 and 0 <= h <= s, got s = {s}, h = {h}"
        )));
    }
    let mut entries = std::collections::BTreeMap::new();
    let mut put = |i: usize, j: i64, b: i64| {
        if b > 0 {
            entries.insert((i, j), b as u64);
        }
    };
    put(0, s, s - h + 1);
    put(0, s + 1, 2 * h - s);
    put(1, s + 1, s - 2 * h);
    put(1, s + 2, h);
    let regularity = if h == 0 { s } else { s + 1 };
    Ok(BettiTable {
        entries,
        regularity,
    })
}

/// Degree of the rational map defined by an ideal generated in a single
/// degree s in k[x,y,z]: (s^2 - e(R/J^sat)) / e(fiber).
pub fn map_degree(j: &Ideal) -> Result<i64> {
    let ring = &j.ring;
    if ring.nvars() != 3 {
        return Err(AlgebraError::Precondition(
            "map degree needs a three-variable base ring".into(),
        ));
    }
    let degs: Vec<i64> = j
        .gens
        .iter()
        .map(|g| {
            g.total_degree()
                .ok_or_else(|| AlgebraError::Precondition("zero generator".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let s = degs[0];
    if degs.iter().any(|&d| d != s) {
        return Err(AlgebraError::Precondition(
            "map degree needs an equigenerated ideal".into(),
        ));
    }
    let rp = rees_presentation(&j.gens, &j.budget)?;
    let (_, _, e_fiber) = rp.fiber_and_spread()?;
    if e_fiber <= 0 {
        return Err(AlgebraError::Precondition(
            "zero fiber multiplicity".into(),
        ));
    }
    let max_ideal = Ideal::new(
        (0..3).map(|v| Polynomial::var(ring, v)).collect(),
        j.budget,
    )?;
    let (jsat, _) = j.saturate(&max_ideal)?;
    let e_sat = if jsat.is_unit()? {
        0
    } else {
        jsat.hilbert()?.multiplicity
    };
    let num = s * s - e_sat;
    if num % e_fiber != 0 {
        return Err(AlgebraError::CrossCheck(format!(
            "map degree {num}/{e_fiber} is not an integer"
        )));
    }
    Ok(num / e_fiber)
}

#[derive(Debug, Clone)]
pub struct ArrangementCertificate {
    pub linear_type: bool,
    /// G_d condition of the ideal of (n-1)-fold products of the forms.
    pub gcond: GCondition,
}

/// Jacobian ideal of a product of n random linear forms in d variables:
/// returns (F, J_F, certificate).  Forms are re-sampled until every d of
/// them are linearly independent.
pub fn arrangement_gradient(
    d: usize,
    n: usize,
    seed: u64,
    field: CoeffField,
    budget: &Budget,
) -> Result<(Polynomial, Ideal, ArrangementCertificate)> {
    if n < d + 1 {
        return Err(AlgebraError::Precondition(format!(
            "arrangement needs n >= d + 1, got d = {d}, n = {n}"
        )));
    }
    if let CoeffField::Prime(p) = field {
        if (n as u64).is_multiple_of(p) {
            return Err(AlgebraError::Precondition(format!(
                "field characteristic {p} divides the number of forms {n}"
            )));
        }
    }
    let names: Vec<String> = if d <= 3 {
        ["x", "y", "z"][..d].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=d).map(|i| format!("x{i}")).collect()
    };
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = PolyRing::standard(&name_refs, field, MonomialOrder::Grevlex)?;
    let f = &ring.field;
    let range = match ring.field {
        CoeffField::Prime(p) => p,
        CoeffField::Rationals => 1_000_003,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<Vec<Coeff>> = Vec::new();
    'resample: for attempt in 0.. {
        if attempt >= 100 {
            return Err(AlgebraError::Budget(
                "degenerate arrangement sample after retry budget".into(),
            ));
        }
        coeffs = (0..n)
            .map(|_| {
                (0..d)
                    .map(|_| f.from_i64(rng.random_range(0..range) as i64))
                    .collect()
            })
            .collect();
        for rows in (0..n).combinations(d) {
            let sub: Vec<Vec<Coeff>> = rows.iter().map(|&r| coeffs[r].clone()).collect();
            if coeff_rank(&ring, sub)? != d {
                continue 'resample;
            }
        }
        break;
    }
    let forms: Vec<Polynomial> = coeffs
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                &ring,
                row.iter()
                    .enumerate()
                    .map(|(v, c)| {
                        let mut e = vec![0u16; d];
                        e[v] = 1;
                        (e, c.clone())
                    })
                    .collect(),
            )
        })
        .collect();
    let mut big_f = Polynomial::constant(&ring, f.one());
    for form in &forms {
        big_f = big_f.mul(form)?;
    }
    let partials: Vec<Polynomial> = (0..d).map(|v| big_f.derivative(v)).collect();
    let jacobian = Ideal::new(partials.clone(), *budget)?;
    let linear_type = rees_presentation(&partials, budget)?.is_linear_type()?;
    // ideal of (n-1)-fold products, whose syzygy matrix carries the G_d data
    let products: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut acc = Polynomial::constant(&ring, f.one());
            for (k, form) in forms.iter().enumerate() {
                if k != i {
                    acc = acc.mul(form)?;
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    let row = PolyMatrix::new(&ring, vec![products])?;
    let phi = crate::modgb::syzygies(&row, budget)?;
    let gcond = g_condition(&phi, d, budget)?;
    Ok((
        big_f,
        jacobian,
        ArrangementCertificate { linear_type, gcond },
    ))
}

/// Audit of the sector-2 boundary case h = s - 2 for a tight point set:
/// builds J = (I_s) and reports which of the expected structural facts
/// hold.  Precondition failures are reported as a skip, not an error.
#[derive(Debug, Clone)]
pub struct Sector2Audit {
    pub skipped: bool,
    pub reason: Option<String>,
    pub s: i64,
    pub h: i64,
    /// J^sat = I (the unmixed part recovers the points ideal).
    pub sat_equals_ideal: Option<bool>,
    /// J^sat = J (J is already saturated).
    pub sat_equals_self: Option<bool>,
    /// Height of I_{s-4} of the linear block of the Hilbert-Burch matrix.
    pub l_block_height: Option<i64>,
    pub linear_type: Option<bool>,
    pub rees_cm: Option<bool>,
    /// Hilbert numerator of R/J vs 1 - 3t^s + (s-2)t^{2s-2} - (s-4)t^{2s-1}.
    pub numerator_ok: Option<bool>,
    /// e(R/J) vs (s^2 + 3s - 4)/2.
    pub multiplicity_ok: Option<bool>,
    /// Map degree vs (s^2 - 3s + 4)/2.
    pub map_degree_ok: Option<bool>,
}

impl Sector2Audit {
    fn skip(s: i64, h: i64, reason: &str) -> Self {
        Sector2Audit {
            skipped: true,
            reason: Some(reason.into()),
            s,
            h,
            sat_equals_ideal: None,
            sat_equals_self: None,
            l_block_height: None,
            linear_type: None,
            rees_cm: None,
            numerator_ok: None,
            multiplicity_ok: None,
            map_degree_ok: None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "skipped": self.skipped, "reason": self.reason,
            "s": self.s, "h": self.h,
            "sat_equals_ideal": self.sat_equals_ideal,
            "sat_equals_self": self.sat_equals_self,
            "l_block_height": self.l_block_height,
            "linear_type": self.linear_type,
            "rees_cm": self.rees_cm,
            "numerator_ok": self.numerator_ok,
            "multiplicity_ok": self.multiplicity_ok,
            "map_degree_ok": self.map_degree_ok,
        })
    }
}

/// Audit an ideal of n reduced points expected to sit on the sector-2
/// boundary (h = s - 2, s >= 5, tight).
pub fn sector2_audit(ideal: &Ideal, n: i64, full: bool) -> Result<Sector2Audit> {
    let rep = position_report(ideal, n)?;
    let (s, h) = (rep.s, rep.h);
    if s < 5 {
        return Ok(Sector2Audit::skip(s, h, "needs initial degree s >= 5"));
    }
    if h != s - 2 {
        return Ok(Sector2Audit::skip(s, h, "needs h = s - 2"));
    }
    if !rep.tight {
        return Ok(Sector2Audit::skip(s, h, "configuration is not tight"));
    }
    let ring = &ideal.ring;
    let (_, basis_s) = ideal.graded_piece(s)?;
    let j = Ideal::new(basis_s, ideal.budget)?;
    let max_ideal = Ideal::new(
        (0..3).map(|v| Polynomial::var(ring, v)).collect(),
        ideal.budget,
    )?;
    let (jsat, _) = j.saturate(&max_ideal)?;
    let sat_equals_ideal = jsat.eq_ideal(ideal)?;
    let sat_equals_self = jsat.eq_ideal(&j)?;
    // linear block of the Hilbert-Burch matrix: rows of the degree-(s+1)
    // generators, whose entries are 1-forms
    let (res, _) = minimal_resolution(ideal)?;
    let pres = &res.maps[0];
    let gen_shifts = res.shifts[0].clone();
    let lin_rows: Vec<usize> = (0..pres.rows).filter(|&r| gen_shifts[r] == s + 1).collect();
    let l_block_height = if lin_rows.is_empty() {
        None
    } else {
        let entries: Vec<Vec<Polynomial>> = lin_rows
            .iter()
            .map(|&r| pres.entries[r].clone())
            .collect();
        let l = PolyMatrix::new(ring, entries)?;
        let t = lin_rows.len(); // s - 4 when the predicted shape holds
        let m = minors_ideal(&l, t, &ideal.budget)?;
        Some(if m.is_zero() {
            0
        } else {
            m.dimension_height()?.1
        })
    };
    let mut audit = Sector2Audit {
        skipped: false,
        reason: None,
        s,
        h,
        sat_equals_ideal: Some(sat_equals_ideal),
        sat_equals_self: Some(sat_equals_self),
        l_block_height,
        linear_type: None,
        rees_cm: None,
        numerator_ok: None,
        multiplicity_ok: None,
        map_degree_ok: None,
    };
    if !full {
        return Ok(audit);
    }
    let rp = rees_presentation(&j.gens, &j.budget)?;
    audit.linear_type = Some(rp.is_linear_type()?);
    audit.rees_cm = Some(cm_via_pd(&rp.rees)?.cm);
    let hd = j.hilbert()?;
    let mut expected_num = vec![0i64; (2 * s) as usize];
    expected_num[0] = 1;
    expected_num[s as usize] = -3;
    expected_num[(2 * s - 2) as usize] += s - 2;
    expected_num[(2 * s - 1) as usize] -= s - 4;
    while expected_num.last() == Some(&0) {
        expected_num.pop();
    }
    audit.numerator_ok = Some(hd.numerator == expected_num);
    audit.multiplicity_ok = Some(hd.multiplicity == (s * s + 3 * s - 4) / 2);
    audit.map_degree_ok = Some(map_degree(&j)? == (s * s - 3 * s + 4) / 2);
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn ring3() -> Arc<PolyRing> {
        PolyRing::standard(
            &["x", "y", "z"],
            CoeffField::Prime(32003),
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    #[test]
    fn one_point_origin_chart() {
        let r = ring3();
        let pts = PointSet::from_coords(&r, &[[0, 0, 1]]).unwrap();
        let i = pts.ideal_of_points().unwrap();
        let expected = Ideal::from_strs(&r, &["x", "y"]).unwrap();
        assert!(i.eq_ideal(&expected).unwrap());
    }

    #[test]
    fn three_noncollinear_points() {
        let r = ring3();
        let pts = PointSet::from_coords(&r, &[[0, 0, 1], [1, 0, 1], [0, 1, 1]]).unwrap();
        let i = pts.ideal_of_points().unwrap();
        let hd = i.hilbert().unwrap();
        assert_eq!((hd.dim, hd.height), (1, 2));
        assert_eq!(hd.multiplicity, 3);
        assert_eq!(hd.hfun(0), 1);
        for t in 1..5 {
            assert_eq!(hd.hfun(t), 3);
        }
        // evaluation-matrix oracle agrees
        assert_eq!(pts.hilbert_fn(1).unwrap(), 3);
        assert_eq!(pts.hilbert_fn(2).unwrap(), 3);
    }

    #[test]
    fn six_random_points_are_generic() {
        let pts = PointSet::random(CoeffField::Prime(32003), 6, 1).unwrap();
        let i = pts.ideal_of_points().unwrap();
        let rep = position_report(&i, 6).unwrap();
        assert_eq!((rep.s, rep.h), (3, 0));
        assert_eq!(rep.dim_is, 4);
        assert!(rep.generic);
        assert_eq!(rep.reg, 3);
    }

    #[test]
    fn tight_betti_matches_prediction() {
        // n = 11: s = 4, h = 1
        let pts = PointSet::random(CoeffField::Prime(32003), 11, 3).unwrap();
        let i = pts.ideal_of_points().unwrap();
        let rep = position_report(&i, 11).unwrap();
        assert_eq!((rep.s, rep.h), (4, 1));
        assert!(rep.tight, "seed 3 expected to give a tight configuration");
        let (_, betti) = minimal_resolution(&i).unwrap();
        assert_eq!(betti, predicted_betti(4, 1).unwrap());
        assert_eq!(rep.reg, 5);
    }

    #[test]
    fn predicted_betti_closed_forms() {
        let b30 = predicted_betti(3, 0).unwrap();
        assert_eq!(b30.beta(0, 3), 4);
        assert_eq!(b30.beta(1, 4), 3);
        assert_eq!(b30.regularity, 3);
        let b53 = predicted_betti(5, 3).unwrap();
        assert_eq!(b53.beta(0, 5), 3);
        assert_eq!(b53.beta(0, 6), 1);
        assert_eq!(b53.beta(1, 7), 3);
        assert_eq!(b53.beta(1, 6), 0);
        let b21 = predicted_betti(2, 1).unwrap();
        assert_eq!(b21.beta(0, 2), 2);
        assert_eq!(b21.beta(1, 3), 0);
        assert_eq!(b21.beta(1, 4), 1);
        assert!(predicted_betti(1, 0).is_err());
        assert!(predicted_betti(3, 4).is_err());
    }

    #[test]
    fn uniform_check_small_cases() {
        let r = ring3();
        // 4 points, no 3 collinear
        let good =
            PointSet::from_coords(&r, &[[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]).unwrap();
        let (ok, w) = uniform_check(&good, 4, false).unwrap();
        assert!(ok && w.is_none());
        // 3 of these sit on the line y = 0
        let bad =
            PointSet::from_coords(&r, &[[0, 0, 1], [1, 0, 1], [2, 0, 1], [0, 1, 1]]).unwrap();
        let (ok, w) = uniform_check(&bad, 4, false).unwrap();
        assert!(!ok);
        assert_eq!(w.unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn map_degree_of_maximal_ideal() {
        let r = ring3();
        let m = Ideal::from_strs(&r, &["x", "y", "z"]).unwrap();
        assert_eq!(map_degree(&m).unwrap(), 1);
        let bad = Ideal::from_strs(&r, &["x", "y^2"]).unwrap();
        assert!(map_degree(&bad).is_err());
    }

    #[test]
    fn derivative_basics() {
        let r = ring3();
        let f = parse("x^3*y + 2*z^2", &r).unwrap();
        assert_eq!(f.derivative(0), parse("3*x^2*y", &r).unwrap());
        assert_eq!(f.derivative(1), parse("x^3", &r).unwrap());
        assert_eq!(f.derivative(2), parse("4*z", &r).unwrap());
    }

    #[test]
    fn arrangement_three_vars_four_forms() {
        let (f, j, cert) = arrangement_gradient(
            3,
            4,
            1,
            CoeffField::Prime(32003),
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(f.total_degree(), Some(4));
        assert_eq!(j.gens.len(), 3);
        assert!(cert.linear_type);
        assert!(
            arrangement_gradient(3, 3, 1, CoeffField::Prime(32003), &Budget::default()).is_err()
        );
        assert!(
            arrangement_gradient(3, 5, 1, CoeffField::Prime(5), &Budget::default()).is_err()
        );
    }

    #[test]
    fn random_points_guards() {
        assert!(matches!(
            PointSet::random(CoeffField::Prime(2), 5, 1),
            Err(AlgebraError::FieldTooSmall { .. })
        ));
        let pts = PointSet::random(CoeffField::Prime(32003), 6, 1).unwrap();
        let again = PointSet::random(CoeffField::Prime(32003), 6, 1).unwrap();
        assert_eq!(pts.points, again.points);
    }

    #[test]
    fn generic_ideal_generated_in_two_degrees() {
        // generic position forces I = (I_s, I_{s+1})
        for (n, seed) in [(6usize, 1u64), (8, 2), (11, 3)] {
            let pts = PointSet::random(CoeffField::Prime(32003), n, seed).unwrap();
            let ideal = pts.ideal_of_points().unwrap();
            let rep = position_report(&ideal, n as i64).unwrap();
            assert!(rep.generic, "seed {seed} not generic");
            let mut gens = ideal.graded_piece(rep.s).unwrap().1;
            gens.extend(ideal.graded_piece(rep.s + 1).unwrap().1);
            let from_pieces = Ideal::new(gens, Budget::default()).unwrap();
            assert!(from_pieces.eq_ideal(&ideal).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn uniform_high_excess_initial_piece_has_height_two() {
        // uniform position with s/2 < h <= s forces height (I_s) = 2
        let pts = PointSet::random(CoeffField::Prime(32003), 8, 2).unwrap();
        let ideal = pts.ideal_of_points().unwrap();
        let rep = position_report(&ideal, 8).unwrap();
        assert_eq!((rep.s, rep.h), (3, 2));
        assert!(2 * rep.h > rep.s);
        let (uniform, _) = uniform_check(&pts, 8, false).unwrap();
        assert!(uniform);
        let piece = Ideal::new(ideal.graded_piece(rep.s).unwrap().1, Budget::default()).unwrap();
        assert_eq!(piece.dimension_height().unwrap().1, 2);
    }

    #[test]
    fn rees_cm_dichotomy_by_excess() {
        // h = 0 with at least four generators: the Rees algebra is CM;
        // 1 <= h <= s/2 - 1: it is not
        let budget = Budget::default();
        let zero_excess = PointSet::random(CoeffField::Prime(32003), 6, 1).unwrap();
        let i0 = zero_excess.ideal_of_points().unwrap();
        let rep0 = position_report(&i0, 6).unwrap();
        assert_eq!((rep0.s, rep0.h), (3, 0));
        let min0 = i0.graded_piece(rep0.s).unwrap().1;
        assert!(min0.len() >= 4);
        let rp0 = crate::rees::rees_presentation(&min0, &budget).unwrap();
        assert!(crate::rees::cm_via_pd(&rp0.rees).unwrap().cm);

        let small_excess = crate::verify::find_tight(4, 1, 1).unwrap();
        let rep1 = position_report(&small_excess.1, 11).unwrap();
        assert_eq!((rep1.s, rep1.h), (4, 1));
        assert!(rep1.h >= 1 && rep1.h < rep1.s / 2);
        let min1 = small_excess.1.graded_piece(rep1.s).unwrap().1;
        let rp1 = crate::rees::rees_presentation(&min1, &budget).unwrap();
        assert!(!crate::rees::cm_via_pd(&rp1.rees).unwrap().cm);
    }
}
