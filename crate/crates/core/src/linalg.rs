//! Row reduction over `F_q`.

use alloc::vec::Vec;

use crate::gf::{Elem, Field};

/// Brings `rows` into reduced row echelon form in place, drops zero rows and
/// returns the pivot columns.
pub fn rref(field: &Field, rows: &mut Vec<Vec<Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        if inv != Elem::ONE {
            for x in rows[r][c..].iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = field.neg(row[c]);
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x = field.add(*x, field.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of the row space spanned by `rows`.
pub fn rank(field: &Field, rows: &[Vec<Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of the right kernel `{x : M x = 0}` of a matrix already in RREF with
/// the given pivots.
pub fn kernel_from_rref(
    field: &Field,
    rref_rows: &[Vec<Elem>],
    pivots: &[usize],
    ncols: usize,
) -> Vec<Vec<Elem>> {
    let mut is_pivot = alloc::vec![false; ncols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = alloc::vec![Elem::ZERO; ncols];
            v[f] = Elem::ONE;
            for (row, &pc) in rref_rows.iter().zip(pivots) {
                v[pc] = field.neg(row[f]);
            }
            v
        })
        .collect()
}
