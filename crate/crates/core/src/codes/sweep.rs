//! Weight sweep: depth-first search over supports with running syndromes.
//! The last position of each support is read off a sorted syndrome table.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::{Codeword, LinearCode, Method, MinWeightReport, Packing};
use crate::error::{Error, Result};

/// Default cap on normalized candidate vectors.
pub const DEFAULT_SWEEP_BUDGET: u128 = 1_000_000_000;

/// Number of normalized candidates (first nonzero entry 1) of weight
/// `1..=w_max` in `F_p^n`.
pub fn sweep_candidates(n: usize, p: u32, w_max: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut scalars: u128 = 1;
    for w in 1..=w_max.min(n) {
        binom = binom * (n + 1 - w) as u128 / w as u128;
        if w > 1 {
            scalars = scalars.saturating_mul(p as u128 - 1);
        }
        total = total.saturating_add(binom.saturating_mul(scalars));
    }
    total
}

/// Column syndromes `c · h_j` of a code, packed, with a sorted index for
/// the last-position lookup.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    p: u32,
    n: usize,
    packing: Packing,
    /// `(j, c)` at offset `(j (p-1) + c - 1) W`
    multiples: Vec<u64>,
    /// `(j, c)` sorted by the syndrome of `-c e_j`, then `j`
    lookup: Vec<(u32, u8)>,
}

impl SyndromeTable {
    pub fn new(code: &LinearCode) -> Self {
        let p = code.p();
        let n = code.length();
        let fp = code.fp();
        let h = code.dual_basis();
        let packing = Packing::new(p, h.len());
        let w = packing.words();
        let mut multiples = vec![0u64; n * (p as usize - 1) * w];
        let mut col = vec![0u8; h.len()];
        for j in 0..n {
            for c in 1..p as u8 {
                for (x, row) in col.iter_mut().zip(h) {
                    *x = fp.mul(c, row[j]);
                }
                let off = (j * (p as usize - 1) + c as usize - 1) * w;
                packing.pack_into(&col, &mut multiples[off..off + w]);
            }
        }
        let mut table = SyndromeTable {
            p,
            n,
            packing,
            multiples,
            lookup: Vec::new(),
        };
        let mut lookup: Vec<(u32, u8)> = (0..n)
            .flat_map(|j| (1..p as u8).map(move |c| (j as u32, c)))
            .collect();
        lookup.sort_by(|a, b| {
            table
                .key(a.0 as usize, a.1)
                .cmp(table.key(b.0 as usize, b.1))
                .then(a.0.cmp(&b.0))
        });
        table.lookup = lookup;
        table
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    fn multiple(&self, j: usize, c: u8) -> &[u64] {
        let w = self.packing.words();
        let off = (j * (self.p as usize - 1) + c as usize - 1) * w;
        &self.multiples[off..off + w]
    }

    /// Syndrome of `-c e_j`.
    #[inline]
    fn key(&self, j: usize, c: u8) -> &[u64] {
        self.multiple(j, (self.p - c as u32) as u8)
    }

    /// Entries `(j, c)` with `c h_j + s = 0`.
    fn completions(&self, s: &[u64]) -> &[(u32, u8)] {
        let lo = self
            .lookup
            .partition_point(|&(j, c)| self.key(j as usize, c) < s);
        let hi = lo + self.lookup[lo..].partition_point(|&(j, c)| self.key(j as usize, c) == s);
        &self.lookup[lo..hi]
    }
}

/// All codewords of weight exactly `w` whose first support position lies in
/// `first`, every scalar multiple included.
pub fn words_of_weight(table: &SyndromeTable, w: usize, first: Range<usize>) -> Vec<Codeword> {
    let mut out = Vec::new();
    if w == 0 || w > table.n {
        return out;
    }
    let words = table.packing.words();
    let mut search = Search {
        table,
        w,
        syndromes: vec![0u64; w * words],
        positions: vec![0usize; w],
        values: vec![0u8; w],
        out: &mut out,
    };
    search.level(0, first);
    expand_multiples(table.p, table.n, &mut out);
    out
}

struct Search<'a> {
    table: &'a SyndromeTable,
    w: usize,
    /// running syndrome before each level
    syndromes: Vec<u64>,
    positions: Vec<usize>,
    values: Vec<u8>,
    out: &'a mut Vec<Codeword>,
}

impl Search<'_> {
    fn level(&mut self, lvl: usize, range: Range<usize>) {
        let t = self.table;
        let words = t.packing.words();
        if lvl + 1 == self.w {
            let (before, _) = self.syndromes.split_at(lvl * words + words);
            let s = &before[lvl * words..];
            for &(j, c) in t.completions(s) {
                let j = j as usize;
                if !range.contains(&j) || (lvl == 0 && c != 1) {
                    continue;
                }
                self.positions[lvl] = j;
                self.values[lvl] = c;
                let mut e = vec![0u8; t.n];
                for (&pos, &v) in self.positions[..self.w].iter().zip(&self.values) {
                    e[pos] = v;
                }
                self.out.push(Codeword::new(e));
            }
            return;
        }
        let remaining = self.w - lvl;
        let end = range.end.min(t.n + 1 - remaining);
        let top = if lvl == 0 { 2 } else { t.p as u8 };
        for j in range.start..end {
            self.positions[lvl] = j;
            for c in 1..top {
                self.values[lvl] = c;
                let (cur, next) = self.syndromes.split_at_mut((lvl + 1) * words);
                t.packing
                    .add(&mut next[..words], &cur[lvl * words..], t.multiple(j, c));
                self.level(lvl + 1, j + 1..t.n);
            }
        }
    }
}

/// Replaces normalized words by all their nonzero multiples.
fn expand_multiples(p: u32, n: usize, words: &mut Vec<Codeword>) {
    if p == 2 {
        return;
    }
    let fp = super::Fp::new(p).expect("alphabet checked at code construction");
    let base = core::mem::take(words);
    for w in base {
        for c in 1..p as u8 {
            debug_assert_eq!(w.len(), n);
            words.push(w.scaled(&fp, c));
        }
    }
}

/// Finds the least weight `d ≤ w_max` of a nonzero codeword and lists all
/// words of weight `d`.
pub fn min_weight_sweep(code: &LinearCode, w_max: usize, budget: u128) -> Result<MinWeightReport> {
    min_weight_sweep_by(code, w_max, budget, &mut |t, w| {
        words_of_weight(t, w, 0..t.length())
    })
}

/// [`min_weight_sweep`] with a caller-supplied enumerator for one weight,
/// e.g. one that splits the first position across threads.
pub fn min_weight_sweep_by(
    code: &LinearCode,
    w_max: usize,
    budget: u128,
    enumerate: &mut dyn FnMut(&SyndromeTable, usize) -> Vec<Codeword>,
) -> Result<MinWeightReport> {
    let needed = sweep_candidates(code.length(), code.p(), w_max);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let table = SyndromeTable::new(code);
    for w in 1..=w_max.min(code.length()) {
        let words = enumerate(&table, w);
        if !words.is_empty() {
            return Ok(MinWeightReport::new(Method::Sweep, Some(w), w, words, true));
        }
    }
    Ok(MinWeightReport::new(
        Method::Sweep,
        None,
        w_max,
        Vec::new(),
        true,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::tests::fano;

    #[test]
    fn candidate_count() {
        assert_eq!(sweep_candidates(7, 2, 3), 7 + 21 + 35);
        assert_eq!(sweep_candidates(4, 3, 2), 4 + 6 * 2);
        assert_eq!(sweep_candidates(5, 2, 0), 0);
    }

    #[test]
    fn fano_sweep() {
        let r = min_weight_sweep(&fano(), 3, DEFAULT_SWEEP_BUDGET).unwrap();
        assert_eq!(r.d, Some(3));
        assert_eq!(r.words.len(), 7);
        let t = SyndromeTable::new(&fano());
        assert_eq!(words_of_weight(&t, 4, 0..7).len(), 7);
        assert_eq!(words_of_weight(&t, 7, 0..7).len(), 1);
        assert_eq!(words_of_weight(&t, 5, 0..7).len(), 0);
    }

    #[test]
    fn nothing_below_zero() {
        let r = min_weight_sweep(&fano(), 0, DEFAULT_SWEEP_BUDGET).unwrap();
        assert_eq!(r.d, None);
        assert!(r.complete);
    }

    #[test]
    fn budget_is_reported() {
        let e = min_weight_sweep(&fano(), 3, 10).unwrap_err();
        assert_eq!(
            e,
            Error::BudgetExceeded {
                needed: 63,
                budget: 10
            }
        );
    }

    #[test]
    fn ternary_multiples_and_zero_columns() {
        // column 2 is never used: e_2 is a dual word, not a code word; e_3 is
        let code = LinearCode::from_rows(3, vec![vec![1, 2, 0, 0], vec![0, 0, 0, 1]]).unwrap();
        let r = min_weight_sweep(&code, 2, DEFAULT_SWEEP_BUDGET).unwrap();
        assert_eq!(r.d, Some(1));
        assert_eq!(
            r.words,
            vec![
                Codeword::new(vec![0, 0, 0, 1]),
                Codeword::new(vec![0, 0, 0, 2])
            ]
        );
        let t = SyndromeTable::new(&code);
        assert_eq!(words_of_weight(&t, 2, 0..4).len(), 2);
        assert_eq!(words_of_weight(&t, 3, 0..4).len(), 4);
    }
}
