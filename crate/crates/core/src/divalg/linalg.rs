//! Left linear algebra over a division ring.
//!
//! Vectors are rows and scalars act on the left, so a dependence among
//! rows r₁,…,rₘ is a vector v with Σ vᵢ·rᵢ = 0.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::elem::{AlgebraTag, DElem};
use crate::error::{Error, Result};

/// Sparse row: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, DElem>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DMatrix {
    pub algebra: AlgebraTag,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<DElem>>,
}

impl DMatrix {
    pub fn new(algebra: AlgebraTag, entries: Vec<Vec<DElem>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let m = DMatrix { algebra, rows, cols, entries };
        m.validate()?;
        Ok(m)
    }

    pub fn identity(algebra: AlgebraTag, n: usize) -> Self {
        let entries = (0..n)
            .map(|r| (0..n).map(|c| if r == c { DElem::one(algebra) } else { DElem::zero(algebra) }).collect())
            .collect();
        DMatrix { algebra, rows: n, cols: n, entries }
    }

    /// Checks shape and tags; deserialized matrices must pass this.
    pub fn validate(&self) -> Result<()> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::DimensionMismatch(format!(
                "declared {}x{} but entries do not match",
                self.rows, self.cols
            )));
        }
        for e in self.entries.iter().flatten() {
            e.check_tag(self.algebra)?;
        }
        Ok(())
    }

    pub fn sparse_row(&self, r: usize) -> SparseRow {
        to_sparse(&self.entries[r])
    }
}

pub fn to_sparse(row: &[DElem]) -> SparseRow {
    row.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(|(i, e)| (i, e.clone())).collect()
}

pub fn to_dense(row: &SparseRow, len: usize, tag: AlgebraTag) -> Vec<DElem> {
    (0..len).map(|i| row.get(&i).cloned().unwrap_or_else(|| DElem::zero(tag))).collect()
}

/// acc ← acc + c·row, dropping entries that cancel.
pub fn axpy(acc: &mut SparseRow, c: &DElem, row: &SparseRow) {
    for (k, v) in row {
        let prod = c * v;
        match acc.get_mut(k) {
            Some(slot) => {
                let sum = &*slot + &prod;
                if sum.is_zero() {
                    acc.remove(k);
                } else {
                    *slot = sum;
                }
            }
            None if !prod.is_zero() => {
                acc.insert(*k, prod);
            }
            None => {}
        }
    }
}

#[derive(Clone, Debug)]
struct Pivot {
    col: usize,
    row: SparseRow,
    /// Expresses `row` as a left combination of inserted rows.
    combo: SparseRow,
}

/// Incremental row echelon form with combination tracking.
///
/// Each inserted row is reduced against the existing pivots; if nothing is
/// left it yields a dependence, otherwise it becomes a new pivot scaled on
/// the left so its first nonzero entry is 1.
#[derive(Clone, Debug)]
pub struct LeftEchelon {
    tag: AlgebraTag,
    pivots: Vec<Pivot>,
    by_col: BTreeMap<usize, usize>,
    inserted: usize,
}

/// Outcome of [`LeftEchelon::insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    Independent,
    /// Σ combo[i]·row_i = 0 over inserted rows, with the new row's coefficient 1.
    Dependent(SparseRow),
}

impl LeftEchelon {
    pub fn new(tag: AlgebraTag) -> Self {
        LeftEchelon { tag, pivots: Vec::new(), by_col: BTreeMap::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Returns (remainder, combo) with row = remainder + Σ combo[i]·row_i.
    pub fn reduce(&self, row: &SparseRow) -> (SparseRow, SparseRow) {
        let mut rem = row.clone();
        let mut combo = SparseRow::new();
        let mut from = 0usize;
        loop {
            let hit = rem.range(from..).find(|(c, _)| self.by_col.contains_key(c)).map(|(c, v)| (*c, v.clone()));
            let Some((col, coef)) = hit else { break };
            let p = &self.pivots[self.by_col[&col]];
            let neg = -&coef;
            axpy(&mut rem, &neg, &p.row);
            axpy(&mut combo, &coef, &p.combo);
            from = col + 1;
        }
        (rem, combo)
    }

    pub fn insert(&mut self, row: SparseRow) -> Result<Insert> {
        for v in row.values() {
            v.check_tag(self.tag)?;
        }
        let idx = self.inserted;
        self.inserted += 1;
        let (rem, combo) = self.reduce(&row);
        // rem = row − combo·rows, so the row's own coefficient is 1.
        let mut own = SparseRow::new();
        own.insert(idx, DElem::one(self.tag));
        let neg = -&DElem::one(self.tag);
        axpy(&mut own, &neg, &combo);
        match rem.iter().next() {
            None => Ok(Insert::Dependent(own)),
            Some((&col, lead)) => {
                let inv = lead.inv()?;
                let scaled: SparseRow = rem.iter().map(|(k, v)| (*k, &inv * v)).collect();
                let scaled_combo: SparseRow = own.iter().map(|(k, v)| (*k, &inv * v)).collect();
                self.by_col.insert(col, self.pivots.len());
                self.pivots.push(Pivot { col, row: scaled, combo: scaled_combo });
                Ok(Insert::Independent)
            }
        }
    }

    /// A left combination x of inserted rows with Σ x[i]·row_i = target.
    pub fn solve(&self, target: &SparseRow) -> Option<SparseRow> {
        let (rem, combo) = self.reduce(target);
        rem.is_empty().then_some(combo)
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.iter().map(|p| p.col).collect()
    }
}

/// Basis of {v : v·A = 0}, one vector per dependent row.
pub fn left_nullspace(a: &DMatrix) -> Result<Vec<Vec<DElem>>> {
    a.validate()?;
    let mut ech = LeftEchelon::new(a.algebra);
    let mut basis = Vec::new();
    for r in 0..a.rows {
        if let Insert::Dependent(v) = ech.insert(a.sparse_row(r))? {
            basis.push(to_dense(&v, a.rows, a.algebra));
        }
    }
    Ok(basis)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Solve {
    Solution(Vec<DElem>),
    NoSolution,
}

/// Solves x·A = b for a row vector x.
pub fn left_solve(a: &DMatrix, b: &[DElem]) -> Result<Solve> {
    a.validate()?;
    if b.len() != a.cols {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {} but the matrix has {} columns",
            b.len(),
            a.cols
        )));
    }
    for e in b {
        e.check_tag(a.algebra)?;
    }
    let mut ech = LeftEchelon::new(a.algebra);
    for r in 0..a.rows {
        ech.insert(a.sparse_row(r))?;
    }
    Ok(match ech.solve(&to_sparse(b)) {
        Some(x) => Solve::Solution(to_dense(&x, a.rows, a.algebra)),
        None => Solve::NoSolution,
    })
}

/// v·A as a dense row.
pub fn row_times(v: &[DElem], a: &DMatrix) -> Vec<DElem> {
    let mut acc = SparseRow::new();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            axpy(&mut acc, c, &a.sparse_row(i));
        }
    }
    to_dense(&acc, a.cols, a.algebra)
}
