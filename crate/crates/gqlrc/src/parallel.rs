//! Multi-threaded enumeration. Work is split by the first support position
//! (sweep) or by coefficient ranges (exhaustive); results are merged in
//! index order, so output does not depend on the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use gqlrc_core::codes::{
    exhaustive_range, merge_minima, min_distance_bz, min_weight_sweep_by, sweep_candidates,
    words_of_weight, Budgets, Codeword, LinearCode, Method, MinWeightReport, SyndromeTable,
};
use gqlrc_core::lrc::{repair_profile_by, RepairProfile};
use gqlrc_core::{Error, Result};

/// `requested`, or the available parallelism.
pub fn thread_count(requested: Option<usize>) -> usize {
    requested
        .filter(|&t| t > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get()))
}

/// All words of weight `w`, one task per first position.
pub fn words_of_weight_par(table: &SyndromeTable, w: usize, threads: usize) -> Vec<Codeword> {
    let n = table.length();
    if threads <= 1 || n < 2 {
        return words_of_weight(table, w, 0..n);
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Vec<Codeword>>>> = Mutex::new(vec![None; n]);
    thread::scope(|s| {
        for _ in 0..threads.min(n) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let words = words_of_weight(table, w, i..i + 1);
                slots.lock().expect("no worker panics")[i] = Some(words);
            });
        }
    });
    slots
        .into_inner()
        .expect("no worker panics")
        .into_iter()
        .flat_map(|s| s.unwrap_or_default())
        .collect()
}

pub fn min_weight_sweep_par(
    code: &LinearCode,
    w_max: usize,
    budget: u128,
    threads: usize,
) -> Result<MinWeightReport> {
    min_weight_sweep_by(code, w_max, budget, &mut |t, w| {
        words_of_weight_par(t, w, threads)
    })
}

pub fn repair_profile_par(
    code: &LinearCode,
    budget: u128,
    threads: usize,
) -> Result<RepairProfile> {
    repair_profile_by(code, budget, &mut |t, w| words_of_weight_par(t, w, threads))
}

/// Exhaustive enumeration over `threads` contiguous coefficient ranges.
pub fn exhaustive_par(code: &LinearCode, budget: u128, threads: usize) -> Result<MinWeightReport> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let total = (0..code.k()).fold(1u128, |acc, _| acc.saturating_mul(code.p() as u128));
    if total > budget {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget,
        });
    }
    let parts = threads.max(1) as u128;
    let bounds: Vec<u128> = (0..=parts).map(|i| total * i / parts).collect();
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = bounds
            .windows(2)
            .map(|b| {
                let (lo, hi) = (b[0], b[1]);
                s.spawn(move || exhaustive_range(code, lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("no worker panics"))
            .collect()
    });
    let (d, words) = merge_minima(results);
    let d = d.expect("a nonzero code has a nonzero word");
    Ok(MinWeightReport::new(
        Method::Exhaustive,
        Some(d),
        d,
        words,
        true,
    ))
}

/// Method requested on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Only(Method),
}

/// Runs one method, or the ladder sweep → exhaustive → bz for `Auto`.
pub fn min_distance(
    code: &LinearCode,
    choice: MethodChoice,
    w_max: usize,
    budgets: Budgets,
    threads: usize,
) -> Result<MinWeightReport> {
    match choice {
        MethodChoice::Only(Method::Sweep) => {
            min_weight_sweep_par(code, w_max, budgets.sweep, threads)
        }
        MethodChoice::Only(Method::Exhaustive) => exhaustive_par(code, budgets.exhaustive, threads),
        MethodChoice::Only(Method::Bz) => bz_report(code, budgets, threads),
        MethodChoice::Auto => {
            if sweep_candidates(code.length(), code.p(), w_max) <= budgets.sweep {
                return min_weight_sweep_par(code, w_max, budgets.sweep, threads);
            }
            match exhaustive_par(code, budgets.exhaustive, threads) {
                Err(Error::BudgetExceeded { .. }) => bz_report(code, budgets, threads),
                other => other,
            }
        }
    }
}

fn bz_report(code: &LinearCode, budgets: Budgets, threads: usize) -> Result<MinWeightReport> {
    let d = min_distance_bz(code)?;
    if sweep_candidates(code.length(), code.p(), d) <= budgets.sweep {
        let words = words_of_weight_par(&SyndromeTable::new(code), d, threads);
        return Ok(MinWeightReport::new(Method::Bz, Some(d), d, words, true));
    }
    Ok(MinWeightReport::new(
        Method::Bz,
        Some(d),
        d,
        Vec::new(),
        false,
    ))
}
