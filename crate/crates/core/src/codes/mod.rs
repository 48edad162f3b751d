//! p-ary linear codes of incidence matrices: rank, dual, membership, minimum
//! distance and low-weight codewords.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gq::IncidenceStructure;
use crate::matrix::BinaryMatrix;

mod bz;
mod exhaustive;
pub mod fp;
mod geometry;
mod sweep;

pub use bz::min_distance_bz;
pub use exhaustive::{
    exhaustive_range, merge_minima, min_distance_exhaustive, DEFAULT_EXHAUSTIVE_BUDGET,
};
pub use fp::{Fp, Packing};
pub use geometry::{
    ag_code, dual_lemma_vector, pg_code, subspace_difference, verify_pg_ag_minima, FlatMinimum,
    MinimaReport,
};
pub use sweep::{
    min_weight_sweep, min_weight_sweep_by, sweep_candidates, words_of_weight, SyndromeTable,
    DEFAULT_SWEEP_BUDGET,
};

/// A vector over `F_p` with entries in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword {
    entries: Vec<u8>,
}

impl Codeword {
    pub fn new(entries: Vec<u8>) -> Self {
        Codeword { entries }
    }

    pub fn zero(length: usize) -> Self {
        Codeword {
            entries: vec![0; length],
        }
    }

    /// Builds a word from its support and the values there.
    pub fn from_sparse(length: usize, support: &[usize], values: &[u8]) -> Result<Self> {
        if support.len() != values.len() {
            return Err(Error::LengthMismatch {
                expected: support.len(),
                found: values.len(),
            });
        }
        let mut entries = vec![0; length];
        for (&i, &v) in support.iter().zip(values) {
            *entries.get_mut(i).ok_or(Error::PositionOutOfRange(i))? = v;
        }
        Ok(Codeword { entries })
    }

    /// Incidence vector of a point set.
    pub fn indicator(length: usize, support: &[usize]) -> Self {
        let mut entries = vec![0; length];
        for &i in support {
            entries[i] = 1;
        }
        Codeword { entries }
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&x| x != 0).count()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| self.entries[i] != 0)
            .collect()
    }

    /// Nonzero values in support order.
    pub fn values(&self) -> Vec<u8> {
        self.entries.iter().copied().filter(|&x| x != 0).collect()
    }

    pub fn scaled(&self, fp: &Fp, c: u8) -> Codeword {
        let mut entries = self.entries.clone();
        fp.scale(&mut entries, c);
        Codeword { entries }
    }

    /// True when every nonzero entry holds the same value.
    pub fn is_constant_on_support(&self) -> bool {
        let mut vals = self.entries.iter().filter(|&&x| x != 0);
        match vals.next() {
            None => true,
            Some(&first) => vals.all(|&x| x == first),
        }
    }
}

/// Row space of a matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    fp: Fp,
    length: usize,
    gen_rows: Vec<Vec<u8>>,
    rref_basis: Vec<Vec<u8>>,
    pivots: Vec<usize>,
    dual_basis: Vec<Vec<u8>>,
}

impl LinearCode {
    /// Code spanned by `rows`; entries are reduced mod `p`.
    pub fn from_rows(p: u32, rows: Vec<Vec<u8>>) -> Result<Self> {
        let fp = Fp::new(p)?;
        let length = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || length == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != length) {
            return Err(Error::LengthMismatch {
                expected: length,
                found: bad.len(),
            });
        }
        let gen_rows: Vec<Vec<u8>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| (x as u32 % p) as u8).collect())
            .collect();
        let mut rref_basis = gen_rows.clone();
        let pivots = fp::rref(&fp, &mut rref_basis);
        let dual_basis = kernel(&fp, &rref_basis, &pivots, length);
        Ok(LinearCode {
            fp,
            length,
            gen_rows,
            rref_basis,
            pivots,
            dual_basis,
        })
    }

    /// Code spanned by the rows of a 0/1 matrix.
    pub fn from_binary_matrix(m: &BinaryMatrix, p: u32) -> Result<Self> {
        if m.nrows() == 0 || m.ncols() == 0 {
            return Err(Error::EmptyMatrix);
        }
        LinearCode::from_rows(p, m.to_dense())
    }

    /// The code of an incidence structure: lines as rows, points as columns.
    pub fn of_structure(gq: &IncidenceStructure) -> Result<Self> {
        LinearCode::from_binary_matrix(&gq.incidence_matrix(), gq.characteristic())
    }

    pub fn p(&self) -> u32 {
        self.fp.p()
    }

    pub fn fp(&self) -> &Fp {
        &self.fp
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Dimension.
    pub fn k(&self) -> usize {
        self.rref_basis.len()
    }

    pub fn generator_rows(&self) -> &[Vec<u8>] {
        &self.gen_rows
    }

    pub fn rref_basis(&self) -> &[Vec<u8>] {
        &self.rref_basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis of the orthogonal complement, one row per non-pivot column.
    pub fn dual_basis(&self) -> &[Vec<u8>] {
        &self.dual_basis
    }

    /// The dual code; a full-length zero row stands in for an empty basis.
    pub fn dual(&self) -> LinearCode {
        let rows = if self.dual_basis.is_empty() {
            vec![vec![0; self.length]]
        } else {
            self.dual_basis.clone()
        };
        LinearCode::from_rows(self.p(), rows).expect("dual rows are well formed")
    }

    /// Membership via the parity checks.
    pub fn contains(&self, v: &Codeword) -> Result<bool> {
        if v.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                found: v.len(),
            });
        }
        let p = self.p() as u8;
        if let Some(&bad) = v.entries().iter().find(|&&x| x >= p) {
            return Err(Error::InvalidParameter(alloc::format!(
                "entry {bad} is not a residue mod {p}"
            )));
        }
        Ok(self
            .dual_basis
            .iter()
            .all(|h| self.fp.dot(h, v.entries()) == 0))
    }

    /// The codeword `Σ coeffs[i] · rref_basis[i]`.
    pub fn encode(&self, coeffs: &[u8]) -> Codeword {
        let mut v = vec![0; self.length];
        for (c, row) in coeffs.iter().zip(&self.rref_basis) {
            self.fp.axpy(&mut v, *c, row);
        }
        Codeword::new(v)
    }
}

fn kernel(fp: &Fp, rref: &[Vec<u8>], pivots: &[usize], n: usize) -> Vec<Vec<u8>> {
    let mut is_pivot = vec![false; n];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0; n];
            v[f] = 1;
            for (row, &pc) in rref.iter().zip(pivots) {
                v[pc] = fp.neg(row[f]);
            }
            v
        })
        .collect()
}

/// Minimum-distance algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Sweep,
    Exhaustive,
    Bz,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Sweep => "sweep",
            Method::Exhaustive => "exhaustive",
            Method::Bz => "bz",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of a minimum-weight search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinWeightReport {
    /// `None` when no nonzero word of weight at most `searched_up_to` exists
    pub d: Option<usize>,
    pub method: Method,
    /// the search finished: `d` is exact, or provably absent up to `searched_up_to`
    pub complete: bool,
    /// `words` holds every word of weight `d`, all scalar multiples included
    pub words_listed: bool,
    pub searched_up_to: usize,
    pub words: Vec<Codeword>,
    pub all_line_multiples: Option<bool>,
}

impl MinWeightReport {
    /// A completed search; words are put in canonical order.
    pub fn new(
        method: Method,
        d: Option<usize>,
        searched_up_to: usize,
        mut words: Vec<Codeword>,
        listed: bool,
    ) -> Self {
        words.sort_by(|a, b| a.support().cmp(&b.support()).then_with(|| a.cmp(b)));
        MinWeightReport {
            d,
            method,
            complete: true,
            words_listed: listed,
            searched_up_to,
            words,
            all_line_multiples: None,
        }
    }
}

/// Outcome of matching minimum words against the lines of a structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub all_line_multiples: bool,
    /// words that are not a multiple of any line
    pub exceptions: Vec<Codeword>,
    /// number of distinct lines hit
    pub lines_hit: usize,
}

/// Checks that every listed word is a nonzero multiple of the incidence
/// vector of one of `supports`.
pub fn classify_against(words: &[Codeword], supports: &[Vec<usize>]) -> Classification {
    let known: BTreeSet<&[usize]> = supports.iter().map(Vec::as_slice).collect();
    let mut hit = BTreeSet::new();
    let mut exceptions = Vec::new();
    for w in words {
        let s = w.support();
        if w.is_constant_on_support() && known.contains(s.as_slice()) {
            hit.insert(s);
        } else {
            exceptions.push(w.clone());
        }
    }
    Classification {
        all_line_multiples: exceptions.is_empty(),
        exceptions,
        lines_hit: hit.len(),
    }
}

/// Classifies the minimum words of `report` against the lines of `gq` and
/// records the verdict in the report.
pub fn classify_min_words(report: &mut MinWeightReport, gq: &IncidenceStructure) -> Classification {
    let c = classify_against(&report.words, gq.lines());
    report.all_line_multiples = Some(c.all_line_multiples);
    c
}

/// Budgets for the strategy ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub sweep: u128,
    pub exhaustive: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            sweep: DEFAULT_SWEEP_BUDGET,
            exhaustive: DEFAULT_EXHAUSTIVE_BUDGET,
        }
    }
}

/// Sweep when it fits, else exhaustive, else Brouwer–Zimmermann followed by
/// a sweep at the found weight if that fits.
pub fn min_distance_auto(
    code: &LinearCode,
    w_max: usize,
    budgets: Budgets,
) -> Result<MinWeightReport> {
    if sweep_candidates(code.length(), code.p(), w_max) <= budgets.sweep {
        return min_weight_sweep(code, w_max, budgets.sweep);
    }
    if let Ok(r) = min_distance_exhaustive(code, budgets.exhaustive) {
        return Ok(r);
    }
    let d = min_distance_bz(code)?;
    let mut report = MinWeightReport::new(Method::Bz, Some(d), d, Vec::new(), false);
    if sweep_candidates(code.length(), code.p(), d) <= budgets.sweep {
        report.words = words_of_weight(&SyndromeTable::new(code), d, 0..code.length());
        report.words_listed = true;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fano() -> LinearCode {
        let lines = vec![
            vec![0, 1, 3],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![3, 4, 6],
            vec![4, 5, 0],
            vec![5, 6, 1],
            vec![6, 0, 2],
        ];
        LinearCode::from_binary_matrix(&BinaryMatrix::from_supports(7, lines), 2).unwrap()
    }

    #[test]
    fn identity_and_all_ones() {
        let id =
            LinearCode::from_rows(2, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(id.k(), 3);
        assert!(id.dual_basis().is_empty());
        let ones = LinearCode::from_rows(2, vec![vec![1; 4]]).unwrap();
        assert_eq!((ones.k(), ones.dual_basis().len()), (1, 3));
        assert_eq!(
            LinearCode::from_rows(2, vec![]).unwrap_err(),
            Error::EmptyMatrix
        );
    }

    #[test]
    fn fano_membership() {
        let c = fano();
        assert_eq!(c.k(), 4);
        for r in c.generator_rows() {
            assert!(c.contains(&Codeword::new(r.clone())).unwrap());
        }
        assert!(c.contains(&Codeword::zero(7)).unwrap());
        assert!(!c.contains(&Codeword::indicator(7, &[2])).unwrap());
        assert!(c.contains(&Codeword::zero(6)).is_err());
    }

    #[test]
    fn dual_is_orthogonal() {
        let c = LinearCode::from_rows(3, vec![vec![1, 2, 0, 1], vec![2, 1, 1, 0]]).unwrap();
        for a in c.rref_basis() {
            for b in c.dual_basis() {
                assert_eq!(c.fp().dot(a, b), 0);
            }
        }
        assert_eq!(c.k() + c.dual_basis().len(), 4);
        assert_eq!(c.dual().k(), 2);
    }

    #[test]
    fn classification_flags_non_lines() {
        // the second word misses the only line
        let words = vec![
            Codeword::indicator(4, &[0, 1]),
            Codeword::indicator(4, &[2, 3]),
        ];
        let c = classify_against(&words, &[vec![0, 1]]);
        assert!(!c.all_line_multiples);
        assert_eq!(c.exceptions, vec![Codeword::indicator(4, &[2, 3])]);
        assert_eq!(c.lines_hit, 1);
    }
}
