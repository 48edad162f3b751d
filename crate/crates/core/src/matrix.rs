//! Sparse 0/1 matrices (incidence matrices).

use alloc::vec;
use alloc::vec::Vec;

/// A 0/1 matrix stored as sorted column supports of each row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    ncols: usize,
    rows: Vec<Vec<usize>>,
}

impl BinaryMatrix {
    /// Builds a matrix from row supports; each support is sorted and deduplicated.
    pub fn from_supports(ncols: usize, rows: Vec<Vec<usize>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.sort_unstable();
                r.dedup();
                debug_assert!(r.last().is_none_or(|&c| c < ncols));
                r
            })
            .collect();
        BinaryMatrix { ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search(&j).is_ok()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.ncols];
        for r in &self.rows {
            for &c in r {
                w[c] += 1;
            }
        }
        w
    }

    /// Column supports (row indices of each column).
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut cols = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for &c in r {
                cols[c].push(i);
            }
        }
        cols
    }

    /// Dense rows with entries 0/1.
    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![0u8; self.ncols];
                for &c in r {
                    d[c] = 1;
                }
                d
            })
            .collect()
    }

    pub fn transpose(&self) -> BinaryMatrix {
        BinaryMatrix {
            ncols: self.rows.len(),
            rows: self.columns(),
        }
    }
}
