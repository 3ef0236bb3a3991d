//! Deterministic Buchberger engine with cofactor tracking, normal forms
//! and block-order elimination.
//!
//! Strategy is fully pinned so outputs are reproducible: pairs are
//! processed by lowest lcm total degree first (ties by lexicographic pair
//! index), and division always uses the first divisor whose lead monomial
//! divides the current lead term.

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Coeff;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::{mono_div, mono_divides, mono_lcm, mono_mul, Exponents, MonomialOrder, PolyRing};

/// Resource caps for a single basis computation. Exceeding them is an
/// explicit error, never a silent wrong answer.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_spair_degree: i64,
    pub max_basis_size: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_spair_degree: 40,
            max_basis_size: 20000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ring: Arc<PolyRing>,
    pub generators: Vec<Polynomial>,
    pub basis: Vec<Polynomial>,
    /// When present: `basis = cofactors * generators` exactly.
    pub cofactors: Option<PolyMatrix>,
}

/// Division with quotient tracking: `p = sum q_i d_i + r`, no term of `r`
/// divisible by any divisor lead monomial. At each step the FIRST divisor
/// (in the given order) whose lead monomial divides the current lead term
/// is used.
pub fn divide_track(
    p: &Polynomial,
    divisors: &[Polynomial],
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = p.ring.clone();
    for d in divisors {
        p.same_ring(d)?;
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
    }
    let field = ring.field.clone();
    let mut quotients = vec![Polynomial::zero(&ring); divisors.len()];
    let mut remainder: Vec<(Exponents, Coeff)> = Vec::new();
    let mut work = p.clone();
    'outer: while let Some((lm, lc)) = work.lead().map(|(e, c)| (e.clone(), c.clone())) {
        for (k, d) in divisors.iter().enumerate() {
            let (dm, dc) = d.lead().unwrap();
            if mono_divides(dm, &lm) {
                let q_mono = mono_div(&lm, dm);
                let q_coeff = field.div(&lc, dc)?;
                quotients[k] = quotients[k].add(&Polynomial::monomial(
                    &ring,
                    q_mono.clone(),
                    q_coeff.clone(),
                ))?;
                work = work.sub(&d.mul_term(&q_mono, &q_coeff)?)?;
                continue 'outer;
            }
        }
        // lead term irreducible: move it to the remainder
        remainder.push((lm, lc));
        work.terms.remove(0);
    }
    remainder.reverse();
    remainder.sort_by(|a, b| ring.cmp_exps(&b.0, &a.0));
    Ok((
        quotients,
        Polynomial {
            ring,
            terms: remainder,
        },
    ))
}

/// Fully reduced normal form of `p` against a (not necessarily reduced)
/// polynomial list.
pub fn normal_form_list(p: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    Ok(divide_track(p, basis)?.1)
}

struct Tracked {
    poly: Polynomial,
    rep: Option<Vec<Polynomial>>, // combination over the original generators
}

fn reduce_tracked(
    mut work: Polynomial,
    mut rep: Option<Vec<Polynomial>>,
    basis: &[Tracked],
) -> Result<(Polynomial, Option<Vec<Polynomial>>)> {
    let ring = work.ring.clone();
    let field = ring.field.clone();
    let mut tail: Vec<(Exponents, Coeff)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.lead().map(|(e, c)| (e.clone(), c.clone())) {
        for g in basis {
            let (dm, dc) = g.poly.lead().unwrap();
            if mono_divides(dm, &lm) {
                let q_mono = mono_div(&lm, dm);
                let q_coeff = field.div(&lc, dc)?;
                work = work.sub(&g.poly.mul_term(&q_mono, &q_coeff)?)?;
                if let (Some(rep), Some(grep)) = (rep.as_mut(), g.rep.as_ref()) {
                    for (ri, gi) in rep.iter_mut().zip(grep) {
                        *ri = ri.sub(&gi.mul_term(&q_mono, &q_coeff)?)?;
                    }
                }
                continue 'outer;
            }
        }
        tail.push((lm, lc));
        work.terms.remove(0);
    }
    tail.sort_by(|a, b| ring.cmp_exps(&b.0, &a.0));
    Ok((Polynomial { ring, terms: tail }, rep))
}

/// Reduced Groebner basis, optionally with a cofactor matrix expressing
/// each basis element over the input generators.
pub fn groebner_basis_with(
    gens: &[Polynomial],
    budget: &Budget,
    track: bool,
) -> Result<GroebnerBasis> {
    let ring = gens
        .first()
        .map(|g| g.ring.clone())
        .ok_or_else(|| AlgebraError::Precondition("empty generator list".into()))?;
    for g in gens {
        gens[0].same_ring(g)?;
    }
    let field = ring.field.clone();
    let n_gens = gens.len();

    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let inv = field.inv(g.lead_coeff().unwrap())?;
        let rep = track.then(|| {
            let mut r = vec![Polynomial::zero(&ring); n_gens];
            r[i] = Polynomial::constant(&ring, inv.clone());
            r
        });
        basis.push(Tracked {
            poly: g.scale(&inv),
            rep,
        });
    }
    if basis.is_empty() {
        return Err(AlgebraError::Precondition("all generators are zero".into()));
    }

    // pending pairs (i, j) with i < j, keyed by lcm total degree
    let mut pairs: Vec<(i64, usize, usize)> = Vec::new();
    let lcm_deg = |a: &Polynomial, b: &Polynomial, ring: &PolyRing| -> i64 {
        ring.total_degree_of(&mono_lcm(
            a.lead_monomial().unwrap(),
            b.lead_monomial().unwrap(),
        ))
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((lcm_deg(&basis[i].poly, &basis[j].poly, &ring), i, j));
        }
    }

    while !pairs.is_empty() {
        // normal selection: lowest lcm degree, then lexicographic pair index
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(d, i, j))| (d, i, j))
            .map(|(idx, _)| idx)
            .unwrap();
        let (deg, i, j) = pairs.swap_remove(best);
        if deg > budget.max_spair_degree {
            return Err(AlgebraError::Budget(format!(
                "S-pair degree {deg} exceeds cap {}",
                budget.max_spair_degree
            )));
        }

        let (lm_i, lm_j) = (
            basis[i].poly.lead_monomial().unwrap().clone(),
            basis[j].poly.lead_monomial().unwrap().clone(),
        );
        let lcm = mono_lcm(&lm_i, &lm_j);
        // first criterion: coprime lead monomials
        if mono_mul(&lm_i, &lm_j)? == lcm {
            continue;
        }
        // second (chain) criterion: some k with lm_k | lcm and both chained
        // pairs already treated
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            if !mono_divides(basis[k].poly.lead_monomial().unwrap(), &lcm) {
                return false;
            }
            let p1 = (i.min(k), i.max(k));
            let p2 = (j.min(k), j.max(k));
            !pairs.iter().any(|&(_, a, b)| (a, b) == p1)
                && !pairs.iter().any(|&(_, a, b)| (a, b) == p2)
        });
        if chained {
            continue;
        }

        // S-polynomial (both elements are monic)
        let ui = mono_div(&lcm, &lm_i);
        let uj = mono_div(&lcm, &lm_j);
        let one = field.one();
        let spoly = basis[i]
            .poly
            .mul_term(&ui, &one)?
            .sub(&basis[j].poly.mul_term(&uj, &one)?)?;
        let srep = if track {
            let mut r = vec![Polynomial::zero(&ring); n_gens];
            let ri = basis[i].rep.as_ref().unwrap();
            let rj = basis[j].rep.as_ref().unwrap();
            for k in 0..n_gens {
                r[k] = ri[k]
                    .mul_term(&ui, &one)?
                    .sub(&rj[k].mul_term(&uj, &one)?)?;
            }
            Some(r)
        } else {
            None
        };

        let (rem, rrep) = reduce_tracked(spoly, srep, &basis)?;
        if rem.is_zero() {
            continue;
        }
        let inv = field.inv(rem.lead_coeff().unwrap())?;
        let new = Tracked {
            poly: rem.scale(&inv),
            rep: rrep.map(|r| r.iter().map(|p| p.scale(&inv)).collect()),
        };
        let new_idx = basis.len();
        for k in 0..new_idx {
            pairs.push((lcm_deg(&basis[k].poly, &new.poly, &ring), k, new_idx));
        }
        basis.push(new);
        if basis.len() > budget.max_basis_size {
            return Err(AlgebraError::Budget(format!(
                "basis size exceeds cap {}",
                budget.max_basis_size
            )));
        }
    }

    // minimalize: drop elements whose lead monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mi, mj) = (
                basis[i].poly.lead_monomial().unwrap(),
                basis[j].poly.lead_monomial().unwrap(),
            );
            if mono_divides(mj, mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let kept: Vec<usize> = (0..basis.len()).filter(|&i| keep[i]).collect();

    // tail-reduce each survivor against the other survivors
    let minimal: Vec<Tracked> = kept
        .iter()
        .map(|&i| Tracked {
            poly: basis[i].poly.clone(),
            rep: basis[i].rep.clone(),
        })
        .collect();
    let mut reduced: Vec<Tracked> = Vec::with_capacity(minimal.len());
    for (idx, t) in minimal.iter().enumerate() {
        let others: Vec<Tracked> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, u)| Tracked {
                poly: u.poly.clone(),
                rep: u.rep.clone(),
            })
            .collect();
        let (r, rep) = reduce_tracked(t.poly.clone(), t.rep.clone(), &others)?;
        debug_assert!(!r.is_zero());
        let inv = field.inv(r.lead_coeff().unwrap())?;
        reduced.push(Tracked {
            poly: r.scale(&inv),
            rep: rep.map(|v| v.iter().map(|p| p.scale(&inv)).collect()),
        });
    }

    // deterministic output order: decreasing lead monomial
    reduced.sort_by(|a, b| {
        ring.cmp_exps(
            b.poly.lead_monomial().unwrap(),
            a.poly.lead_monomial().unwrap(),
        )
    });

    let cofactors = if track {
        let rows = reduced
            .iter()
            .map(|t| t.rep.clone().unwrap())
            .collect::<Vec<_>>();
        Some(PolyMatrix::new(&ring, rows)?)
    } else {
        None
    };

    Ok(GroebnerBasis {
        ring,
        generators: gens.to_vec(),
        basis: reduced.into_iter().map(|t| t.poly).collect(),
        cofactors,
    })
}

pub fn groebner_basis(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    groebner_basis_with(gens, &Budget::default(), false)
}

impl GroebnerBasis {
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        p.same_ring(
            self.basis
                .first()
                .ok_or_else(|| AlgebraError::Precondition("empty basis".into()))?,
        )?;
        normal_form_list(p, &self.basis)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Post-hoc Buchberger criterion: every S-polynomial of basis pairs
    /// reduces to zero.
    pub fn check_spairs(&self) -> Result<bool> {
        let field = self.ring.field.clone();
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let (gi, gj) = (&self.basis[i], &self.basis[j]);
                let lcm = mono_lcm(gi.lead_monomial().unwrap(), gj.lead_monomial().unwrap());
                let ui = mono_div(&lcm, gi.lead_monomial().unwrap());
                let uj = mono_div(&lcm, gj.lead_monomial().unwrap());
                let ci = field.inv(gi.lead_coeff().unwrap())?;
                let cj = field.inv(gj.lead_coeff().unwrap())?;
                let s = gi.mul_term(&ui, &ci)?.sub(&gj.mul_term(&uj, &cj)?)?;
                if !normal_form_list(&s, &self.basis)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Generators of the elimination ideal: compute a Groebner basis for a
/// block order with the dropped variables first, keep the basis elements
/// free of them, and re-express those in the subring on the remaining
/// variables. Returns the polynomials together with the subring.
pub fn eliminate(
    gens: &[Polynomial],
    drop: &[&str],
    budget: &Budget,
) -> Result<(Vec<Polynomial>, Arc<PolyRing>)> {
    let ring = gens
        .first()
        .map(|g| g.ring.clone())
        .ok_or_else(|| AlgebraError::Precondition("empty generator list".into()))?;
    let drop_idx: Vec<usize> = drop
        .iter()
        .map(|d| ring.var_index(d))
        .collect::<Result<Vec<_>>>()?;
    let keep_idx: Vec<usize> = (0..ring.nvars())
        .filter(|i| !drop_idx.contains(i))
        .collect();

    // re-sort into an elimination order when needed
    let already_elim = match &ring.order {
        MonomialOrder::Block(blocks) => {
            // dropped variables must fill a prefix of blocks exactly
            let mut prefix: Vec<usize> = Vec::new();
            let mut ok = false;
            for b in blocks {
                prefix.extend_from_slice(b);
                let mut p = prefix.clone();
                let mut d = drop_idx.clone();
                p.sort_unstable();
                d.sort_unstable();
                if p == d {
                    ok = true;
                    break;
                }
                if p.len() >= d.len() {
                    break;
                }
            }
            ok
        }
        _ => false,
    };
    let (_work_ring, work_gens): (Arc<PolyRing>, Vec<Polynomial>) = if already_elim {
        (ring.clone(), gens.to_vec())
    } else {
        let order = MonomialOrder::Block(vec![drop_idx.clone(), keep_idx.clone()]);
        let elim_ring = PolyRing::new(
            ring.vars.clone(),
            ring.field.clone(),
            order,
            ring.weights.clone(),
        )?;
        let gs = gens
            .iter()
            .map(|g| g.map_to_ring(&elim_ring))
            .collect::<Result<Vec<_>>>()?;
        (elim_ring, gs)
    };

    let gb = groebner_basis_with(&work_gens, budget, false)?;
    let surviving: Vec<&Polynomial> = gb
        .basis
        .iter()
        .filter(|p| p.avoids_vars(&drop_idx))
        .collect();

    // subring on the kept variables; all-zero sliced weight vectors vanish
    let sub_vars: Vec<String> = keep_idx.iter().map(|&i| ring.vars[i].clone()).collect();
    let mut sub_weights: Vec<Vec<i64>> = ring
        .weights
        .iter()
        .map(|w| keep_idx.iter().map(|&i| w[i]).collect::<Vec<i64>>())
        .filter(|w: &Vec<i64>| w.iter().any(|&x| x != 0))
        .collect();
    if sub_weights.is_empty() {
        sub_weights.push(vec![1; sub_vars.len()]);
    }
    let subring = PolyRing::new(
        sub_vars,
        ring.field.clone(),
        MonomialOrder::Grevlex,
        sub_weights,
    )?;
    let out = surviving
        .into_iter()
        .map(|p| p.map_to_ring(&subring))
        .collect::<Result<Vec<_>>>()?;
    Ok((out, subring))
}
