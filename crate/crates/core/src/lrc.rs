//! Repair degree and availability of the dual of a code, read as a locally
//! repairable code whose parity checks are the words of the code itself.
//!
//! For a position `i`, `Ω(i)` is the set of codewords nonzero at `i`;
//! `r(i)` is the least weight in `Ω(i)` minus one, `r = max r(i)`, and
//! `a(i)` counts the words of `Ω(i)` of weight at most `r + 1`.

use alloc::vec;
use alloc::vec::Vec;

use crate::codes::{sweep_candidates, words_of_weight, Codeword, LinearCode, SyndromeTable};
use crate::error::{Error, Result};

/// Repair data of one position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolRepair {
    pub r: usize,
    pub a: usize,
}

/// Repair degree and availability of every position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairProfile {
    pub p: u32,
    pub per_symbol: Vec<SymbolRepair>,
    /// maximum of the per-position repair degrees
    pub r: usize,
    /// minimum of the per-position availabilities
    pub a: usize,
}

impl RepairProfile {
    /// True when some position has `r(i) < r`; availability still counts
    /// words up to weight `r + 1` there.
    pub fn is_nonuniform(&self) -> bool {
        self.per_symbol.iter().any(|s| s.r != self.r)
    }
}

/// Codewords of the least weight that are nonzero at `i`.
pub fn omega_min(code: &LinearCode, i: usize, budget: u128) -> Result<Vec<Codeword>> {
    let n = code.length();
    if i >= n {
        return Err(Error::PositionOutOfRange(i));
    }
    let table = SyndromeTable::new(code);
    for w in 1..=n {
        check_budget(code, w, budget)?;
        let through: Vec<Codeword> = words_of_weight(&table, w, 0..n)
            .into_iter()
            .filter(|c| c.entries()[i] != 0)
            .collect();
        if !through.is_empty() {
            return Ok(through);
        }
    }
    Err(Error::Unrepairable(i, n))
}

fn check_budget(code: &LinearCode, w: usize, budget: u128) -> Result<()> {
    let needed = sweep_candidates(code.length(), code.p(), w);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Profile computed with the serial sweep.
pub fn repair_profile(code: &LinearCode, budget: u128) -> Result<RepairProfile> {
    repair_profile_by(code, budget, &mut |t, w| {
        words_of_weight(t, w, 0..t.length())
    })
}

/// Profile computed with a caller-supplied enumerator of the codewords of
/// one exact weight.
pub fn repair_profile_by(
    code: &LinearCode,
    budget: u128,
    enumerate: &mut dyn FnMut(&SyndromeTable, usize) -> Vec<Codeword>,
) -> Result<RepairProfile> {
    let n = code.length();
    let table = SyndromeTable::new(code);
    let mut degree: Vec<Option<usize>> = vec![None; n];
    let mut uncovered = n;
    let mut words = Vec::new();
    let mut w = 0;
    while uncovered > 0 {
        w += 1;
        if w > n {
            let i = degree.iter().position(Option::is_none).unwrap_or(0);
            return Err(Error::Unrepairable(i, n));
        }
        check_budget(code, w, budget)?;
        let found = enumerate(&table, w);
        for c in &found {
            for i in c.support() {
                if degree[i].is_none() {
                    degree[i] = Some(w - 1);
                    uncovered -= 1;
                }
            }
        }
        words.extend(found);
    }
    // every stored word has weight at most w = r + 1
    let r = w - 1;
    let mut avail = vec![0usize; n];
    for c in &words {
        for i in c.support() {
            avail[i] += 1;
        }
    }
    let per_symbol: Vec<SymbolRepair> = degree
        .iter()
        .zip(&avail)
        .map(|(d, &a)| SymbolRepair {
            r: d.expect("all positions covered"),
            a,
        })
        .collect();
    let a = avail.iter().copied().min().unwrap_or(0);
    Ok(RepairProfile {
        p: code.p(),
        per_symbol,
        r,
        a,
    })
}

/// Comparison of a profile with `r ≤ s`, `a ≥ t + 1` and with the exact
/// values `r = s`, `a = (p - 1)(t + 1)` of a partial geometry of order `(s, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheck {
    pub s: usize,
    pub t: usize,
    pub p: u32,
    pub r: usize,
    pub a: usize,
    pub r_within: bool,
    pub a_within: bool,
    /// `r = s`
    pub tight_r: bool,
    /// `a = t + 1`
    pub tight_a: bool,
    /// `r = s` and `a = (p - 1)(t + 1)`
    pub matches_exact: bool,
}

impl BoundCheck {
    /// The bound is stated for binary codes; for `p > 2` it is reported only.
    pub fn binding(&self) -> bool {
        self.p == 2
    }

    /// `r > s` or, for `p = 2`, `a < t + 1`.
    pub fn contradiction(&self) -> bool {
        !self.r_within || (self.binding() && !self.a_within)
    }

    pub fn expected_a(&self) -> usize {
        (self.p as usize - 1) * (self.t + 1)
    }
}

pub fn check_bounds(profile: &RepairProfile, s: usize, t: usize) -> BoundCheck {
    let (r, a, p) = (profile.r, profile.a, profile.p);
    BoundCheck {
        s,
        t,
        p,
        r,
        a,
        r_within: r <= s,
        a_within: a > t,
        tight_r: r == s,
        tight_a: a == t + 1,
        matches_exact: r == s && a == (p as usize - 1) * (t + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DEFAULT_SWEEP_BUDGET;

    #[test]
    fn single_line() {
        let code = LinearCode::from_rows(2, vec![vec![1, 1, 1]]).unwrap();
        let prof = repair_profile(&code, DEFAULT_SWEEP_BUDGET).unwrap();
        assert_eq!((prof.r, prof.a), (2, 1));
        for i in 0..3 {
            assert_eq!(omega_min(&code, i, DEFAULT_SWEEP_BUDGET).unwrap().len(), 1);
        }
        assert_eq!(
            omega_min(&code, 3, DEFAULT_SWEEP_BUDGET).unwrap_err(),
            Error::PositionOutOfRange(3)
        );
        let chk = check_bounds(&prof, 2, 0);
        assert!(chk.tight_r && chk.tight_a && chk.matches_exact && !chk.contradiction());
    }

    #[test]
    fn uncovered_position() {
        let code = LinearCode::from_rows(2, vec![vec![1, 1, 0]]).unwrap();
        assert_eq!(
            repair_profile(&code, DEFAULT_SWEEP_BUDGET).unwrap_err(),
            Error::Unrepairable(2, 3)
        );
    }

    #[test]
    fn nonuniform_degrees() {
        let code =
            LinearCode::from_rows(2, vec![vec![1, 1, 0, 0, 0], vec![0, 0, 1, 1, 1]]).unwrap();
        let prof = repair_profile(&code, DEFAULT_SWEEP_BUDGET).unwrap();
        assert_eq!(prof.r, 2);
        assert!(prof.is_nonuniform());
        assert_eq!(prof.per_symbol[0], SymbolRepair { r: 1, a: 1 });
        let chk = check_bounds(&prof, 1, 0);
        assert!(chk.contradiction());
    }
}
