//! Blowup algebra machinery: symmetric-algebra and Rees ideals, special
//! fiber and analytic spread, Sylvester forms, bigraded minimal generators,
//! and the linear-type / reduction / G_s / Cohen-Macaulay certificates.

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::groebner::{divide_track, eliminate, Budget};
use crate::ideal::Ideal;
use crate::matrix::PolyMatrix;
use crate::modgb::syzygies;
use crate::poly::{Multidegree, Polynomial};
use crate::resolution::{minors_ideal, resolve_quotient};
use crate::ring::{MonomialOrder, PolyRing};

/// Presentation data of the Rees algebra of an ideal I = (f_1..f_n) in R:
/// ambient S = R[t_1..t_n] with the bigrading deg x_i = (1,0), deg t_j =
/// (0,1), symmetric ideal L = I_1([t]·phi) and Rees ideal.
#[derive(Debug, Clone)]
pub struct ReesPresentation {
    pub base: Arc<PolyRing>,
    pub ambient: Arc<PolyRing>,
    pub gens: Vec<Polynomial>,
    pub presentation: PolyMatrix,
    pub sym: Ideal,
    pub rees: Ideal,
}

/// S = R[t_1..t_n], block order with the base variables first (so
/// eliminating them is cheap), bigraded.
pub fn ambient_ring(base: &Arc<PolyRing>, n: usize) -> Result<Arc<PolyRing>> {
    if base.weights.len() != 1 {
        return Err(AlgebraError::Precondition(
            "base ring must carry a single grading".into(),
        ));
    }
    let d = base.nvars();
    let mut vars = base.vars.clone();
    for i in 1..=n {
        let t = format!("t{i}");
        if vars.contains(&t) {
            return Err(AlgebraError::DuplicateVariable(t));
        }
        vars.push(t);
    }
    let order = MonomialOrder::Block(vec![(0..d).collect(), (d..d + n).collect()]);
    let mut w1 = base.weights[0].clone();
    w1.extend(std::iter::repeat_n(0, n));
    let mut w2 = vec![0i64; d];
    w2.extend(std::iter::repeat_n(1, n));
    PolyRing::new(vars, base.field.clone(), order, vec![w1, w2])
}

pub fn bidegree(p: &Polynomial) -> Result<(i64, i64)> {
    match p.multidegree() {
        Multidegree::Homogeneous(v) if v.len() == 2 => Ok((v[0], v[1])),
        _ => Err(AlgebraError::Inhomogeneous),
    }
}

/// L = I_1([t_1..t_n] · phi) in the ambient ring; phi must present the
/// generators (its columns are checked to be syzygies).
pub fn symmetric_ideal(
    gens: &[Polynomial],
    phi: &PolyMatrix,
    ambient: &Arc<PolyRing>,
    budget: &Budget,
) -> Result<Ideal> {
    let n = gens.len();
    if phi.rows != n {
        return Err(AlgebraError::Shape(format!(
            "presentation has {} rows for {} generators",
            phi.rows, n
        )));
    }
    let row = PolyMatrix::new(&gens[0].ring, vec![gens.to_vec()])?;
    if !row.mul(phi)?.is_zero() {
        return Err(AlgebraError::Precondition(
            "matrix columns are not syzygies of the generators".into(),
        ));
    }
    let d = ambient.nvars() - n;
    let mut lgens = Vec::with_capacity(phi.cols);
    for j in 0..phi.cols {
        let mut acc = Polynomial::zero(ambient);
        for (i, _) in gens.iter().enumerate() {
            let t = Polynomial::var(ambient, d + i);
            acc = acc.add(&t.mul(&phi.entries[i][j].map_to_ring(ambient)?)?)?;
        }
        lgens.push(acc);
    }
    Ideal::new(lgens, *budget)
}

fn rees_by_elimination(
    gens: &[Polynomial],
    ambient: &Arc<PolyRing>,
    budget: &Budget,
) -> Result<Ideal> {
    let base = gens[0].ring.clone();
    let n = gens.len();
    // R[u, t_1..t_n] with u first for elimination
    let mut vars = vec!["u".to_string()];
    if base.vars.contains(&vars[0]) {
        vars[0] = "u_".into();
    }
    vars.extend(base.vars.iter().cloned());
    for i in 1..=n {
        vars.push(format!("t{i}"));
    }
    let m = vars.len();
    let order = MonomialOrder::Block(vec![vec![0], (1..m).collect()]);
    let tring = PolyRing::new(vars.clone(), base.field.clone(), order, vec![vec![1; m]])?;
    let u = Polynomial::var(&tring, 0);
    let mut tgens = Vec::with_capacity(n);
    for (i, f) in gens.iter().enumerate() {
        let t = Polynomial::var(&tring, 1 + base.nvars() + i);
        tgens.push(t.sub(&u.mul(&f.map_to_ring(&tring)?)?)?);
    }
    let (out, _) = eliminate(&tgens, &[&vars[0]], budget)?;
    let mapped = out
        .iter()
        .map(|p| p.map_to_ring(ambient))
        .collect::<Result<Vec<_>>>()?;
    if mapped.is_empty() {
        return Ideal::new(vec![Polynomial::zero(ambient)], *budget);
    }
    Ideal::new(mapped, *budget)
}

fn rees_by_saturation(sym: &Ideal, f: &Polynomial, ambient: &Arc<PolyRing>) -> Result<Ideal> {
    let fs = f.map_to_ring(ambient)?;
    let (sat, _) = sym.saturate(&Ideal::new(vec![fs], sym.budget)?)?;
    Ok(sat)
}

/// Full Rees presentation: the syzygy presentation of the generators, the
/// symmetric ideal, and the Rees ideal computed by two independent
/// algorithms (tag elimination and torsion saturation) and cross-checked.
pub fn rees_presentation(gens: &[Polynomial], budget: &Budget) -> Result<ReesPresentation> {
    let base = gens
        .first()
        .map(|g| g.ring.clone())
        .ok_or_else(|| AlgebraError::Precondition("empty generator list".into()))?;
    if gens.iter().all(|g| g.is_zero()) {
        return Err(AlgebraError::Precondition("zero ideal".into()));
    }
    for g in gens {
        if !g.is_homogeneous() {
            return Err(AlgebraError::Inhomogeneous);
        }
    }
    let n = gens.len();
    let ambient = ambient_ring(&base, n)?;
    let row = PolyMatrix::new(&base, vec![gens.to_vec()])?.infer_shifts_zero_rows()?;
    let phi = syzygies(&row, budget)?;
    let sym = symmetric_ideal(gens, &phi, &ambient, budget)?;

    let by_elim = rees_by_elimination(gens, &ambient, budget)?;
    let f = gens.iter().find(|g| !g.is_zero()).unwrap();
    let by_sat = rees_by_saturation(&sym, f, &ambient)?;
    if !by_elim.eq_ideal(&by_sat)? {
        return Err(AlgebraError::CrossCheck(
            "tag-elimination and torsion-saturation Rees ideals differ".into(),
        ));
    }
    let rees = by_elim;

    // invariants: L ⊆ Rees; each Rees generator vanishes under t_i ↦ f_i·u
    if !rees.contains_ideal(&sym)? {
        return Err(AlgebraError::CrossCheck(
            "symmetric ideal not contained in Rees ideal".into(),
        ));
    }
    check_substitution_vanishing(&rees, gens)?;

    Ok(ReesPresentation {
        base,
        ambient,
        gens: gens.to_vec(),
        presentation: phi,
        sym,
        rees,
    })
}

/// Verify every generator of the Rees ideal maps to zero under the ring
/// map x ↦ x, t_i ↦ f_i·u into R[u].
fn check_substitution_vanishing(rees: &Ideal, gens: &[Polynomial]) -> Result<()> {
    let base = gens[0].ring.clone();
    let mut vars = base.vars.clone();
    let mut uname = "u".to_string();
    while vars.contains(&uname) {
        uname.push('_');
    }
    vars.push(uname);
    let m = vars.len();
    let uring = PolyRing::new(
        vars,
        base.field.clone(),
        MonomialOrder::Grevlex,
        vec![vec![1; m]],
    )?;
    let u = Polynomial::var(&uring, m - 1);
    let mut images = Vec::new();
    for i in 0..base.nvars() {
        images.push(Polynomial::var(&uring, i));
    }
    for f in gens {
        images.push(f.map_to_ring(&uring)?.mul(&u)?);
    }
    for g in &rees.gens {
        if !g.substitute(&images, &uring)?.is_zero() {
            return Err(AlgebraError::CrossCheck(
                "Rees generator does not vanish under the blowup substitution".into(),
            ));
        }
    }
    Ok(())
}

impl ReesPresentation {
    /// Linear type: the symmetric and Rees ideals coincide.
    pub fn is_linear_type(&self) -> Result<bool> {
        self.sym.eq_ideal(&self.rees)
    }

    /// Special fiber Q = Rees ideal ∩ k[t] (by eliminating the base block),
    /// the analytic spread ℓ = dim k[t]/Q and the fiber multiplicity.
    /// Requires the generators equigenerated.
    pub fn fiber_and_spread(&self) -> Result<(Ideal, i64, i64)> {
        let degs: Vec<i64> = self
            .gens
            .iter()
            .map(|g| g.total_degree().unwrap_or(0))
            .collect();
        if degs.windows(2).any(|w| w[0] != w[1]) {
            return Err(AlgebraError::Precondition(
                "fiber requires an equigenerated ideal".into(),
            ));
        }
        let base_names: Vec<&str> = self.base.vars.iter().map(|s| s.as_str()).collect();
        let n = self.gens.len();
        let budget = self.rees.budget;
        let (qgens, tring) = eliminate(&self.rees.gens, &base_names, &budget)?;
        if qgens.is_empty() {
            // fiber is the full polynomial ring k[t]
            let q = Ideal::new(vec![Polynomial::zero(&tring)], budget)?;
            return Ok((q, n as i64, 1));
        }
        let q = Ideal::new(qgens, budget)?;
        let (dim, _) = q.dimension_height()?;
        let e = q.hilbert()?.multiplicity;
        Ok((q, dim, e))
    }
}

/// Sylvester form of f and g with respect to the ordered pair [a, b]:
/// the determinant of the 2x2 content matrix with rows the quotients of
/// (f, g) on division by (a, b).
pub fn sylvester_form(
    f: &Polynomial,
    g: &Polynomial,
    pair: (&Polynomial, &Polynomial),
) -> Result<Polynomial> {
    let divisors = [pair.0.clone(), pair.1.clone()];
    let (qf, rf) = divide_track(f, &divisors)?;
    if !rf.is_zero() {
        return Err(AlgebraError::NonzeroRemainder(
            "first argument not in the content pair".into(),
        ));
    }
    let (qg, rg) = divide_track(g, &divisors)?;
    if !rg.is_zero() {
        return Err(AlgebraError::NonzeroRemainder(
            "second argument not in the content pair".into(),
        ));
    }
    qf[0].mul(&qg[1])?.sub(&qf[1].mul(&qg[0])?)
}

/// Multiset of bidegrees of a minimal generating set of a bihomogeneous
/// ideal: generators processed in increasing total degree (ties by
/// bidegree, then input order), dropping any lying in the ideal of the
/// ones already kept.
pub fn bigraded_min_gens(a: &Ideal) -> Result<Vec<((i64, i64), usize)>> {
    let mut items: Vec<(usize, (i64, i64), Polynomial)> = Vec::new();
    for (idx, g) in a.gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        items.push((idx, bidegree(g)?, g.clone()));
    }
    items.sort_by_key(|(idx, (p, q), _)| (p + q, *p, *q, *idx));
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut degs: Vec<(i64, i64)> = Vec::new();
    for (_, bd, g) in items {
        let redundant = if kept.is_empty() {
            false
        } else {
            Ideal::new(kept.clone(), a.budget)?.contains(&g)?
        };
        if !redundant {
            kept.push(g);
            degs.push(bd);
        }
    }
    degs.sort();
    let mut out: Vec<((i64, i64), usize)> = Vec::new();
    for d in degs {
        match out.last_mut() {
            Some((dd, c)) if *dd == d => *c += 1,
            _ => out.push((d, 1)),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmCertificate {
    pub pd: usize,
    pub height: i64,
    pub cm: bool,
}

/// Cohen-Macaulayness of S/A via Auslander-Buchsbaum: projective dimension
/// (length of the minimal total-degree resolution) equals the height.
/// Multigradings are coarsened to the total degree.
pub fn cm_via_pd(a: &Ideal) -> Result<CmCertificate> {
    let ring = &a.ring;
    let work = if ring.weights.len() == 1 {
        a.clone()
    } else {
        let total: Vec<i64> = (0..ring.nvars())
            .map(|i| ring.weights.iter().map(|w| w[i]).sum())
            .collect();
        let coarse = PolyRing::new(
            ring.vars.clone(),
            ring.field.clone(),
            ring.order.clone(),
            vec![total],
        )?;
        let gens = a
            .gens
            .iter()
            .map(|g| g.map_to_ring(&coarse))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(gens, a.budget)?
    };
    let (res, _) = resolve_quotient(&work)?;
    let pd = res.length();
    let (_, height) = work.dimension_height()?;
    Ok(CmCertificate {
        pd,
        height,
        cm: pd as i64 == height,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub holds: bool,
    /// smallest verified reduction number, or the exhausted bound
    pub r: usize,
}

/// Search for the smallest r <= r_max with I^{r+1} = J·I^r, certified by
/// two-sided membership. A negative result only means "not verified within
/// the bound".
pub fn is_reduction(j: &Ideal, i: &Ideal, r_max: usize) -> Result<ReductionCertificate> {
    if !i.contains_ideal(j)? {
        return Err(AlgebraError::Precondition(
            "candidate reduction is not contained in the ideal".into(),
        ));
    }
    for r in 0..=r_max {
        let lhs = i.power(r as u32 + 1)?;
        let rhs = j.product(&i.power(r as u32)?)?;
        if lhs.eq_ideal(&rhs)? {
            return Ok(ReductionCertificate { holds: true, r });
        }
    }
    Ok(ReductionCertificate {
        holds: false,
        r: r_max,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCondition {
    pub holds: bool,
    /// first j with height I_j(phi) < n - j + 1, if any
    pub witness: Option<usize>,
    /// (j, height) for each checked j
    pub heights: Vec<(usize, i64)>,
}

/// G_s for an n-generated ideal with presentation phi:
/// height I_j(phi) >= n - j + 1 for n-s+1 <= j <= n-1.
pub fn g_condition(phi: &PolyMatrix, s: usize, budget: &Budget) -> Result<GCondition> {
    let n = phi.rows;
    if s < 1 || s > n {
        return Err(AlgebraError::Precondition("need 1 <= s <= #rows".into()));
    }
    let lo = n + 1 - s;
    let mut heights = Vec::new();
    let mut witness = None;
    for j in lo..n {
        let ht = if j > phi.cols {
            // no j-minors: the minor ideal is zero
            0
        } else {
            let mi = minors_ideal(phi, j, budget)?;
            if mi.is_zero() {
                0
            } else {
                mi.dimension_height()?.1
            }
        };
        heights.push((j, ht));
        if witness.is_none() && ht < (n - j + 1) as i64 {
            witness = Some(j);
        }
    }
    Ok(GCondition {
        holds: witness.is_none(),
        witness,
        heights,
    })
}
