use num_traits::{One, Zero};

use super::vectors::BlockVector;
use crate::designs::SteinerTripleSystem;
use crate::rational::Q;

/// Point-by-block 0/1 incidence matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u8>>,
}

pub fn incidence_matrix(sts: &SteinerTripleSystem) -> IncidenceMatrix {
    let (n, b) = (sts.order() as usize, sts.block_count());
    let mut entries = vec![vec![0u8; b]; n];
    for (j, t) in sts.blocks().iter().enumerate() {
        for p in t.0 {
            entries[p as usize - 1][j] = 1;
        }
    }
    IncidenceMatrix { rows: n, cols: b, entries }
}

impl IncidenceMatrix {
    pub fn row_sums(&self) -> Vec<usize> {
        self.entries.iter().map(|r| r.iter().map(|&x| x as usize).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols).map(|j| self.entries.iter().map(|r| r[j] as usize).sum()).collect()
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.entries.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect(),
            cols: self.cols,
        }
    }

    /// `W · v` over the integers.
    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        self.entries.iter().map(|r| r.iter().zip(v).map(|(&w, &x)| w as i64 * x).sum()).collect()
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.entries
            .iter()
            .map(|r| r.iter().zip(v).filter(|(&w, _)| w == 1).fold(Q::zero(), |acc, (_, x)| acc + x))
            .collect()
    }
}

/// Dense exact rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: Vec<Vec<Q>>,
    pub cols: usize,
}

impl RatMatrix {
    pub fn from_int(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        RatMatrix { rows: rows.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect(), cols }
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows.len() {
                break;
            }
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i][c].is_zero()) else { continue };
            self.rows.swap(r, p);
            let inv = Q::one() / &self.rows[r][c];
            for x in self.rows[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *x -= &f * pv;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.rows[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Exact basis of `{v : W v = 0}`.
pub fn null_space_basis(w: &IncidenceMatrix) -> Vec<BlockVector> {
    w.to_rational().null_space().into_iter().map(BlockVector).collect()
}
