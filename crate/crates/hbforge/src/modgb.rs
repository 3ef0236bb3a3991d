//! Groebner bases for submodules of free modules and syzygy computation.
//!
//! Elements of R^m are coefficient vectors; terms are compared
//! position-over-term: a term in a lower component index always beats one
//! in a higher component, ties broken by the ring's monomial order. With
//! that order, tagging generators with unit vectors turns syzygy
//! computation into an elimination problem.

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Coeff;
use crate::groebner::Budget;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::{mono_div, mono_divides, mono_lcm, Exponents, PolyRing};

/// An element of a free module R^m, stored componentwise.
#[derive(Debug, Clone, PartialEq)]
pub struct ModElem {
    pub comps: Vec<Polynomial>,
}

impl ModElem {
    pub fn zero(ring: &Arc<PolyRing>, m: usize) -> Self {
        ModElem {
            comps: vec![Polynomial::zero(ring); m],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    /// Position-over-term lead: the first nonzero component, with its
    /// polynomial lead term.
    pub fn lead(&self) -> Option<(usize, &Exponents, &Coeff)> {
        self.comps
            .iter()
            .enumerate()
            .find(|(_, p)| !p.is_zero())
            .map(|(i, p)| {
                let (e, c) = p.lead().unwrap();
                (i, e, c)
            })
    }

    pub fn sub_multiple(&self, other: &ModElem, mono: &[u16], c: &Coeff) -> Result<ModElem> {
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.sub(&b.mul_term(mono, c)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModElem { comps })
    }

    pub fn scale(&self, c: &Coeff) -> ModElem {
        ModElem {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }
}

/// Full normal form against a list of module elements; the first applicable
/// reducer (same lead component, dividing lead monomial) is always chosen.
pub fn mod_reduce(elem: &ModElem, basis: &[ModElem]) -> Result<ModElem> {
    let ring = elem.comps[0].ring.clone();
    let field = ring.field.clone();
    let m = elem.comps.len();
    let mut work = elem.clone();
    let mut rem = ModElem::zero(&ring, m);
    'outer: while let Some((comp, lm, lc)) = work.lead().map(|(i, e, c)| (i, e.clone(), c.clone()))
    {
        for g in basis {
            if let Some((gc, gm, gcoef)) = g.lead() {
                if gc == comp && mono_divides(gm, &lm) {
                    let q_mono = mono_div(&lm, gm);
                    let q_coeff = field.div(&lc, gcoef)?;
                    work = work.sub_multiple(g, &q_mono, &q_coeff)?;
                    continue 'outer;
                }
            }
        }
        // irreducible lead term: move it across
        rem.comps[comp] = rem.comps[comp].add(&Polynomial::monomial(&ring, lm.clone(), lc))?;
        work.comps[comp].terms.remove(0);
    }
    Ok(rem)
}

/// Reduced Groebner basis of the submodule generated by `gens` in R^m,
/// position-over-term order.
pub fn module_groebner(gens: &[ModElem], budget: &Budget) -> Result<Vec<ModElem>> {
    let ring = gens
        .iter()
        .flat_map(|g| g.comps.first())
        .next()
        .map(|p| p.ring.clone())
        .ok_or_else(|| AlgebraError::Precondition("empty module generator list".into()))?;
    let field = ring.field.clone();

    let mut basis: Vec<ModElem> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let (_, _, lc) = g.lead().unwrap();
        let inv = field.inv(lc)?;
        basis.push(g.scale(&inv));
    }
    if basis.is_empty() {
        return Err(AlgebraError::Precondition(
            "all module generators are zero".into(),
        ));
    }

    let lcm_deg = |a: &ModElem, b: &ModElem| -> Option<i64> {
        let (ca, ma, _) = a.lead()?;
        let (cb, mb, _) = b.lead()?;
        (ca == cb).then(|| ring.total_degree_of(&mono_lcm(ma, mb)))
    };
    let mut pairs: Vec<(i64, usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(d) = lcm_deg(&basis[i], &basis[j]) {
                pairs.push((d, i, j));
            }
        }
    }

    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(d, i, j))| (d, i, j))
            .map(|(idx, _)| idx)
            .unwrap();
        let (deg, i, j) = pairs.swap_remove(best);
        if deg > budget.max_spair_degree {
            return Err(AlgebraError::Budget(format!(
                "module S-pair degree {deg} exceeds cap {}",
                budget.max_spair_degree
            )));
        }
        let (ci, mi, _) = basis[i].lead().unwrap();
        let (_, mj, _) = basis[j].lead().unwrap();
        let _ = ci;
        let lcm = mono_lcm(mi, mj);
        let ui = mono_div(&lcm, mi);
        let uj = mono_div(&lcm, mj);
        let one = field.one();
        let mut s = ModElem::zero(&ring, basis[i].comps.len());
        for k in 0..s.comps.len() {
            s.comps[k] = basis[i].comps[k]
                .mul_term(&ui, &one)?
                .sub(&basis[j].comps[k].mul_term(&uj, &one)?)?;
        }
        let rem = mod_reduce(&s, &basis)?;
        if rem.is_zero() {
            continue;
        }
        let (_, _, lc) = rem.lead().unwrap();
        let inv = field.inv(lc)?;
        let new = rem.scale(&inv);
        let new_idx = basis.len();
        for k in 0..new_idx {
            if let Some(d) = lcm_deg(&basis[k], &new) {
                pairs.push((d, k, new_idx));
            }
        }
        basis.push(new);
        if basis.len() > budget.max_basis_size {
            return Err(AlgebraError::Budget(format!(
                "module basis size exceeds cap {}",
                budget.max_basis_size
            )));
        }
    }

    // minimalize and tail-reduce
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (ci, mi, _) = basis[i].lead().unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (cj, mj, _) = basis[j].lead().unwrap();
            if ci == cj && mono_divides(mj, mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<ModElem> = basis
        .iter()
        .enumerate()
        .filter(|(i, _)| keep[*i])
        .map(|(_, g)| g.clone())
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (idx, g) in minimal.iter().enumerate() {
        let others: Vec<ModElem> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, u)| u.clone())
            .collect();
        let r = mod_reduce(g, &others)?;
        let (_, _, lc) = r.lead().unwrap();
        let inv = field.inv(lc)?;
        reduced.push(r.scale(&inv));
    }
    reduced.sort_by(|a, b| {
        let (ca, ma, _) = a.lead().unwrap();
        let (cb, mb, _) = b.lead().unwrap();
        ca.cmp(&cb).then_with(|| ring.cmp_exps(mb, ma))
    });
    Ok(reduced)
}

/// Columns generating the kernel of the map defined by `m` (columns of `m`
/// are images of free generators). Tags each column with a unit vector,
/// computes a module Groebner basis in R^{rows+cols}, and keeps the
/// elements supported entirely on the tag part.
pub fn syzygies(m: &PolyMatrix, budget: &Budget) -> Result<PolyMatrix> {
    let ring = m.ring.clone();
    let (r, n) = (m.rows, m.cols);
    let mut gens = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = ModElem::zero(&ring, r + n);
        for i in 0..r {
            e.comps[i] = m.entries[i][j].clone();
        }
        e.comps[r + j] = Polynomial::one(&ring);
        gens.push(e);
    }
    let gb = module_groebner(&gens, budget)?;
    let mut cols: Vec<Vec<Polynomial>> = Vec::new();
    for g in &gb {
        let (c, _, _) = g.lead().unwrap();
        if c >= r {
            // position-over-term: lead component >= r means the whole
            // element lives in the tag part
            debug_assert!(g.comps[..r].iter().all(|p| p.is_zero()));
            cols.push(g.comps[r..].to_vec());
        }
    }
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let syz = PolyMatrix::new(&ring, entries)?;
    if m.col_shifts.is_some() {
        return syz.regrade(m.col_shifts.clone().unwrap());
    }
    Ok(syz)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoeffField;
    use crate::ring::MonomialOrder;

    fn ring3() -> Arc<PolyRing> {
        PolyRing::standard(
            &["x", "y", "z"],
            CoeffField::prime(32003).unwrap(),
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    #[test]
    fn koszul_syzygies_of_variables() {
        let r = ring3();
        let m = PolyMatrix::parse_grid(&r, &[&["x", "y", "z"]]).unwrap();
        let s = syzygies(&m, &Budget::default()).unwrap();
        assert_eq!(s.rows, 3);
        assert_eq!(s.cols, 3);
        assert!(m.mul(&s).unwrap().is_zero());
        // each column is homogeneous of degree 2 in the ambient grading
        for j in 0..3 {
            for i in 0..3 {
                let e = &s.entries[i][j];
                assert!(e.is_zero() || e.total_degree() == Some(1));
            }
        }
    }

    #[test]
    fn syzygy_of_regular_sequence_is_koszul_only() {
        let r = ring3();
        let m = PolyMatrix::parse_grid(&r, &[&["x^2", "y^3"]]).unwrap();
        let s = syzygies(&m, &Budget::default()).unwrap();
        assert_eq!(s.cols, 1);
        assert!(m.mul(&s).unwrap().is_zero());
        // up to sign and scaling: (y^3, -x^2)
        let a = &s.entries[0][0];
        let b = &s.entries[1][0];
        assert_eq!(a.lead_monomial().unwrap(), &vec![0u16, 3, 0]);
        assert_eq!(b.lead_monomial().unwrap(), &vec![2u16, 0, 0]);
    }

    #[test]
    fn minors_syzygies_recover_presentation() {
        // 3x2 structure matrix with columns (x,y),(y,z),(z,x) pattern
        let r = ring3();
        let phi = PolyMatrix::parse_grid(&r, &[&["x", "0"], &["-y", "y"], &["0", "-z"]]).unwrap();
        let minors = crate::matrix::signed_maximal_minors(&phi).unwrap();
        let row: Vec<Vec<Polynomial>> = vec![minors.clone()];
        let m = PolyMatrix::new(&r, row).unwrap();
        let s = syzygies(&m, &Budget::default()).unwrap();
        assert!(m.mul(&s).unwrap().is_zero());
        assert_eq!(s.cols, 2);
        // the syzygy module of the maximal minors is spanned by the columns
        // of the structure matrix itself
        let gens: Vec<ModElem> = (0..2)
            .map(|j| ModElem {
                comps: (0..3).map(|i| phi.entries[i][j].clone()).collect(),
            })
            .collect();
        let gb = module_groebner(&gens, &Budget::default()).unwrap();
        let sy_gens: Vec<ModElem> = (0..s.cols)
            .map(|j| ModElem {
                comps: (0..3).map(|i| s.entries[i][j].clone()).collect(),
            })
            .collect();
        for g in &sy_gens {
            assert!(mod_reduce(g, &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn graded_syzygy_shifts() {
        let r = ring3();
        let mut m = PolyMatrix::parse_grid(&r, &[&["x^2", "x*y", "y^2"]]).unwrap();
        m = m.regrade(vec![0]).unwrap();
        let s = syzygies(&m, &Budget::default()).unwrap();
        assert_eq!(s.row_shifts.as_deref(), Some(&[2, 2, 2][..]));
        assert_eq!(s.cols, 2);
        assert_eq!(s.col_shifts.as_deref(), Some(&[3, 3][..]));
    }
}
