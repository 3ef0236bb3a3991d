//! Graded matrices over a polynomial ring, with optional row/column
//! degree shifts making them graded maps of free modules.

use std::collections::HashMap;
use std::sync::Arc;

use serde_json::json;

use crate::error::{AlgebraError, Result};
use crate::poly::{parse, Multidegree, Polynomial};
use crate::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub ring: Arc<PolyRing>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Polynomial>>,
    pub row_shifts: Option<Vec<i64>>,
    pub col_shifts: Option<Vec<i64>>,
}

impl PolyMatrix {
    pub fn new(ring: &Arc<PolyRing>, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        for r in &entries {
            if r.len() != cols {
                return Err(AlgebraError::Shape("ragged rows".into()));
            }
            for p in r {
                if !Arc::ptr_eq(&p.ring, ring) && *p.ring != **ring {
                    return Err(AlgebraError::RingMismatch);
                }
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
            row_shifts: None,
            col_shifts: None,
        })
    }

    pub fn zero(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![vec![Polynomial::zero(ring); cols]; rows],
            row_shifts: None,
            col_shifts: None,
        }
    }

    /// Parse a grid of polynomial strings.
    pub fn parse_grid(ring: &Arc<PolyRing>, grid: &[&[&str]]) -> Result<Self> {
        let entries = grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse(s, ring))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(ring, entries)
    }

    /// Attach shifts and verify every nonzero entry (i,j) is homogeneous of
    /// total degree `col_shifts[j] - row_shifts[i]`.
    pub fn with_shifts(mut self, row_shifts: Vec<i64>, col_shifts: Vec<i64>) -> Result<Self> {
        if row_shifts.len() != self.rows || col_shifts.len() != self.cols {
            return Err(AlgebraError::Shape("shift length mismatch".into()));
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = &self.entries[i][j];
                if p.is_zero() {
                    continue;
                }
                let expected = col_shifts[j] - row_shifts[i];
                let ok = match p.multidegree() {
                    Multidegree::Homogeneous(_) => p.total_degree() == Some(expected),
                    _ => false,
                };
                if !ok {
                    return Err(AlgebraError::GradedEntry {
                        row: i,
                        col: j,
                        expected,
                    });
                }
            }
        }
        self.row_shifts = Some(row_shifts);
        self.col_shifts = Some(col_shifts);
        Ok(self)
    }

    /// Infer shifts from homogeneous entries, anchoring every row shift at 0.
    /// Suits one-degree-per-row matrices like the Hilbert-Burch blocks.
    pub fn infer_shifts_zero_rows(self) -> Result<Self> {
        let mut col_shifts = vec![None; self.cols];
        for j in 0..self.cols {
            for i in 0..self.rows {
                if let Some(d) = self.entries[i][j].total_degree() {
                    match col_shifts[j] {
                        None => col_shifts[j] = Some(d),
                        Some(prev) if prev == d => {}
                        _ => {
                            return Err(AlgebraError::Shape(format!(
                                "column {j} has mixed entry degrees"
                            )))
                        }
                    }
                }
            }
        }
        let cs: Vec<i64> = col_shifts.into_iter().map(|d| d.unwrap_or(0)).collect();
        let rs = vec![0; self.rows];
        self.with_shifts(rs, cs)
    }

    /// Attach the given row shifts and infer column shifts from the entry
    /// degrees (columns with no nonzero entry get shift 0).
    pub fn regrade(self, row_shifts: Vec<i64>) -> Result<Self> {
        if row_shifts.len() != self.rows {
            return Err(AlgebraError::Shape("shift length mismatch".into()));
        }
        let mut col_shifts = vec![0i64; self.cols];
        for j in 0..self.cols {
            for i in 0..self.rows {
                if let Some(d) = self.entries[i][j].total_degree() {
                    col_shifts[j] = d + row_shifts[i];
                    break;
                }
            }
        }
        self.with_shifts(row_shifts, col_shifts)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let entries = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
            row_shifts: None,
            col_shifts: None,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(AlgebraError::Shape("matrix product shape mismatch".into()));
        }
        let mut entries = vec![vec![Polynomial::zero(&self.ring); other.cols]; self.rows];
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j])?)?;
                }
                entries[i][j] = acc;
            }
        }
        PolyMatrix::new(&self.ring, entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|p| p.is_zero())
    }

    pub fn delete_row(&self, row: usize) -> PolyMatrix {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != row)
            .map(|(_, r)| r.clone())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows - 1,
            cols: self.cols,
            entries,
            row_shifts: None,
            col_shifts: None,
        }
    }

    pub fn delete_col(&self, col: usize) -> PolyMatrix {
        let entries = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols - 1,
            entries,
            row_shifts: None,
            col_shifts: None,
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
            row_shifts: None,
            col_shifts: None,
        }
    }

    /// Determinant by cofactor expansion with memoized subdeterminants
    /// (keyed by the surviving column set).
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(AlgebraError::Shape(
                "determinant of non-square matrix".into(),
            ));
        }
        if self.rows == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if self.rows > 32 {
            return Err(AlgebraError::Shape("determinant size cap exceeded".into()));
        }
        let mut memo: HashMap<u32, Polynomial> = HashMap::new();
        let full: u32 = if self.rows == 32 {
            u32::MAX
        } else {
            (1u32 << self.rows) - 1
        };
        self.det_masked(full, &mut memo)
    }

    fn det_masked(&self, mask: u32, memo: &mut HashMap<u32, Polynomial>) -> Result<Polynomial> {
        if mask == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if let Some(p) = memo.get(&mask) {
            return Ok(p.clone());
        }
        let size = mask.count_ones() as usize;
        let row = size - 1; // expand along the last active row
        let mut acc = Polynomial::zero(&self.ring);
        let mut pos = 0usize;
        for j in 0..self.cols {
            if mask & (1 << j) == 0 {
                continue;
            }
            let e = &self.entries[row][j];
            if !e.is_zero() {
                let sub = self.det_masked(mask & !(1 << j), memo)?;
                let term = e.mul(&sub)?;
                if (row + pos).is_multiple_of(2) {
                    acc = acc.add(&term)?;
                } else {
                    acc = acc.sub(&term)?;
                }
            }
            pos += 1;
        }
        memo.insert(mask, acc.clone());
        Ok(acc)
    }

    /// Serialize to the interchange JSON schema.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "ring": serde_json::to_value(&*self.ring).unwrap(),
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entries.iter()
                .map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "rowShifts": self.row_shifts,
            "colShifts": self.col_shifts,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<PolyMatrix> {
        let ring: PolyRing = serde_json::from_value(
            v.get("ring")
                .ok_or_else(|| AlgebraError::Parse("missing ring".into()))?
                .clone(),
        )?;
        let ring = Arc::new(ring);
        let entries_v = v
            .get("entries")
            .and_then(|e| e.as_array())
            .ok_or_else(|| AlgebraError::Parse("missing entries".into()))?;
        let entries = entries_v
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| AlgebraError::Parse("bad entries row".into()))?
                    .iter()
                    .map(|s| {
                        parse(
                            s.as_str()
                                .ok_or_else(|| AlgebraError::Parse("entry not a string".into()))?,
                            &ring,
                        )
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = PolyMatrix::new(&ring, entries)?;
        match (
            v.get("rowShifts").and_then(|x| x.as_array()),
            v.get("colShifts").and_then(|x| x.as_array()),
        ) {
            (Some(rs), Some(cs)) => {
                let rs: Vec<i64> = rs.iter().filter_map(|x| x.as_i64()).collect();
                let cs: Vec<i64> = cs.iter().filter_map(|x| x.as_i64()).collect();
                m.with_shifts(rs, cs)
            }
            _ => Ok(m),
        }
    }
}

/// Ordered signed maximal minors of an n x (n-1) matrix:
/// `delta_i = (-1)^(i+1) det(phi with row i deleted)`.
pub fn signed_maximal_minors(phi: &PolyMatrix) -> Result<Vec<Polynomial>> {
    if phi.rows != phi.cols + 1 {
        return Err(AlgebraError::Shape(format!(
            "expected n x (n-1) matrix, got {} x {}",
            phi.rows, phi.cols
        )));
    }
    let mut out = Vec::with_capacity(phi.rows);
    for i in 0..phi.rows {
        let d = phi.delete_row(i).det()?;
        out.push(if i % 2 == 0 { d } else { d.neg() });
    }
    Ok(out)
}
