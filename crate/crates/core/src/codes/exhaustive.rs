//! Enumeration of the whole row space.

use alloc::vec;
use alloc::vec::Vec;

use super::{Codeword, LinearCode, Method, MinWeightReport, Packing};
use crate::error::{Error, Result};

/// Default cap on `p^k`.
pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 1 << 26;

/// `p^k`, saturating.
pub(crate) fn space_size(code: &LinearCode) -> u128 {
    (0..code.k()).fold(1u128, |acc, _| acc.saturating_mul(code.p() as u128))
}

/// Minimum weight and minimum words among the codewords whose coefficient
/// vectors (base `p`, least significant first) have index in
/// `start..end`. The zero word is skipped.
pub fn exhaustive_range(
    code: &LinearCode,
    start: u128,
    end: u128,
) -> (Option<usize>, Vec<Codeword>) {
    let p = code.p();
    let k = code.k();
    let pk = Packing::new(p, code.length());
    let rows: Vec<Vec<u64>> = code.rref_basis().iter().map(|r| pk.pack(r)).collect();
    let mut digits = vec![0u32; k];
    let mut rest = start;
    for d in digits.iter_mut() {
        *d = (rest % p as u128) as u32;
        rest /= p as u128;
    }
    let coeffs: Vec<u8> = digits.iter().map(|&d| d as u8).collect();
    let mut cur = pk.pack(code.encode(&coeffs).entries());

    let mut best: Option<usize> = None;
    let mut words: Vec<Vec<u64>> = Vec::new();
    let mut idx = start;
    while idx < end {
        if idx != 0 {
            let w = pk.weight(&cur);
            match best {
                Some(b) if w > b => {}
                Some(b) if w == b => words.push(cur.clone()),
                _ => {
                    best = Some(w);
                    words.clear();
                    words.push(cur.clone());
                }
            }
        }
        idx += 1;
        for (j, d) in digits.iter_mut().enumerate() {
            pk.add_assign(&mut cur, &rows[j]);
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
    (
        best,
        words.iter().map(|w| Codeword::new(pk.unpack(w))).collect(),
    )
}

/// Exact minimum distance and all minimum words by enumerating `p^k`
/// codewords.
pub fn min_distance_exhaustive(code: &LinearCode, budget: u128) -> Result<MinWeightReport> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let needed = space_size(code);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let (d, words) = exhaustive_range(code, 0, needed);
    let d = d.expect("a nonzero code has a nonzero word");
    Ok(MinWeightReport::new(
        Method::Exhaustive,
        Some(d),
        d,
        words,
        true,
    ))
}

/// Merges partial results of [`exhaustive_range`] over disjoint ranges.
pub fn merge_minima(
    parts: impl IntoIterator<Item = (Option<usize>, Vec<Codeword>)>,
) -> (Option<usize>, Vec<Codeword>) {
    let mut best: Option<usize> = None;
    let mut words = Vec::new();
    for (d, ws) in parts {
        match (best, d) {
            (_, None) => {}
            (Some(b), Some(x)) if x > b => {}
            (Some(b), Some(x)) if x == b => words.extend(ws),
            (_, Some(x)) => {
                best = Some(x);
                words = ws;
            }
        }
    }
    (best, words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::tests::fano;

    #[test]
    fn fano_exhaustive() {
        let r = min_distance_exhaustive(&fano(), DEFAULT_EXHAUSTIVE_BUDGET).unwrap();
        assert_eq!(r.d, Some(3));
        assert_eq!(r.words.len(), 7);
    }

    #[test]
    fn repetition_and_zero() {
        let rep = LinearCode::from_rows(2, vec![vec![1; 5]]).unwrap();
        assert_eq!(min_distance_exhaustive(&rep, 4).unwrap().d, Some(5));
        let zero = LinearCode::from_rows(3, vec![vec![0; 3]]).unwrap();
        assert_eq!(
            min_distance_exhaustive(&zero, 4).unwrap_err(),
            Error::ZeroCode
        );
    }

    #[test]
    fn split_ranges_merge() {
        let code = LinearCode::from_rows(
            3,
            vec![
                vec![1, 2, 0, 1, 1],
                vec![0, 1, 1, 2, 0],
                vec![1, 0, 0, 0, 2],
            ],
        )
        .unwrap();
        let whole = exhaustive_range(&code, 0, 27);
        let parts = merge_minima([
            exhaustive_range(&code, 0, 5),
            exhaustive_range(&code, 5, 20),
            exhaustive_range(&code, 20, 27),
        ]);
        assert_eq!(whole.0, parts.0);
        let mut a = whole.1;
        let mut b = parts.1;
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(a.len() % 2, 0);
    }
}
