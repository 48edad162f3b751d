//! Brouwer–Zimmermann minimum distance with disjoint information sets.

use alloc::vec;
use alloc::vec::Vec;

use super::fp::rref_with_order;
use super::{LinearCode, Packing};
use crate::error::{Error, Result};

/// Exact minimum distance.
///
/// Generator matrices `Γ_j` are made systematic on successive disjoint
/// column sets of sizes `r_j`. After every combination of at most `w` rows
/// of each `Γ_j` has been tried, any remaining codeword has weight at least
/// `Σ_j max(0, w + 1 - (k - r_j))`; the search stops once this bound meets
/// the best weight found.
pub fn min_distance_bz(code: &LinearCode) -> Result<usize> {
    let k = code.k();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let n = code.length();
    let fp = code.fp();
    let pk = Packing::new(code.p(), n);
    let mut used = vec![false; n];
    let mut mats: Vec<(Vec<Vec<u64>>, usize)> = Vec::new();
    loop {
        let order: Vec<usize> = (0..n)
            .filter(|&c| !used[c])
            .chain((0..n).filter(|&c| used[c]))
            .collect();
        let mut rows = code.rref_basis().to_vec();
        let pivots = rref_with_order(fp, &mut rows, &order);
        let fresh: Vec<usize> = pivots.iter().copied().filter(|&c| !used[c]).collect();
        if fresh.is_empty() {
            break;
        }
        for &c in &fresh {
            used[c] = true;
        }
        mats.push((rows.iter().map(|r| pk.pack(r)).collect(), fresh.len()));
    }

    let mut upper = mats
        .iter()
        .flat_map(|(rows, _)| rows.iter().map(|r| pk.weight(r)))
        .min()
        .expect("k > 0");
    let mut scratch = vec![0u64; (k + 1) * pk.words()];
    for w in 1..=k {
        for (rows, _) in &mats {
            combos(&pk, code.p(), rows, w, 0, 0, &mut scratch, &mut upper);
        }
        let lower: usize = mats
            .iter()
            .map(|&(_, r)| (w + 1).saturating_sub(k - r))
            .sum();
        if lower >= upper {
            break;
        }
    }
    Ok(upper)
}

/// Tries every combination of `w` rows (first coefficient 1) and lowers
/// `best` to the least weight seen.
#[allow(clippy::too_many_arguments)]
fn combos(
    pk: &Packing,
    p: u32,
    rows: &[Vec<u64>],
    w: usize,
    lvl: usize,
    start: usize,
    scratch: &mut [u64],
    best: &mut usize,
) {
    let words = pk.words();
    let k = rows.len();
    if lvl == w {
        let wt = pk.weight(&scratch[lvl * words..(lvl + 1) * words]);
        if wt > 0 && wt < *best {
            *best = wt;
        }
        return;
    }
    let top = if lvl == 0 { 2 } else { p };
    let (lo, hi) = ((lvl + 1) * words, (lvl + 2) * words);
    for i in start..=k - (w - lvl) {
        scratch.copy_within(lvl * words..lo, lo);
        // deeper levels only write slots above lvl + 1, so slot lvl + 1
        // accumulates c · row i across iterations
        for _ in 1..top {
            pk.add_assign(&mut scratch[lo..hi], &rows[i]);
            combos(pk, p, rows, w, lvl + 1, i + 1, scratch, best);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::tests::fano;

    #[test]
    fn small_codes() {
        assert_eq!(min_distance_bz(&fano()).unwrap(), 3);
        let id =
            LinearCode::from_rows(2, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(min_distance_bz(&id).unwrap(), 1);
        let rep = LinearCode::from_rows(3, vec![vec![1; 5]]).unwrap();
        assert_eq!(min_distance_bz(&rep).unwrap(), 5);
        let zero = LinearCode::from_rows(2, vec![vec![0, 0]]).unwrap();
        assert_eq!(min_distance_bz(&zero).unwrap_err(), Error::ZeroCode);
    }
}
