//! One line per acceptance criterion; exits nonzero if any fails.
//!
//! A criterion whose claimed value is false is printed as a documented
//! deviation. It does not fail the run only when the measured value equals
//! the independently derived count.
//!
//! Pinned values and time limits live in `gqlrc::selftest::INSTANCES`.

use std::process::ExitCode;
use std::time::Instant;

use gqlrc::selftest::{run, Options, Status};

const TITLES: [&str; 10] = [
    "Q(4,2) as T(conic): 15/15, d=3, 15 line words, r=2, a=3",
    "Q(4,3) as T(conic): 40/40, d=4, 80 line multiples, r=3, a=8",
    "Q(5,2) as T(ovoid): 27/45, d=3, 45 line words, r=2, a=5",
    "T2*(O), q=4: 64/96, d=4, 96 line words, r=3, a=6",
    "T(E) of a field-reduced conic: 85/85, d=5, 85 line words",
    "H(3,4) and W(3,2): d=5 / d=3, minimum words are lines",
    "PG and AG flat codes: minimum weights and words",
    "Dual vectors inc<U,r> - inc<T,r> are orthogonal to all n-spaces",
    "Binary r = s, a = t+1; Q(4,3) reports a = 8 > t+1",
    "Sweep, Brouwer-Zimmermann and exhaustive agree; alist round trip",
];

fn main() -> ExitCode {
    let start = Instant::now();
    let outcomes = match run(&[], &Options::default()) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("acceptance: {e:#}");
            return ExitCode::FAILURE;
        }
    };
    let (mut passed, mut deviations) = (0, 0);
    for (i, title) in TITLES.iter().enumerate() {
        let criterion = i as u8 + 1;
        let parts: Vec<_> = outcomes
            .iter()
            .filter(|o| o.criterion == criterion)
            .collect();
        let all = |ok: &[Status]| !parts.is_empty() && parts.iter().all(|o| ok.contains(&o.status));
        let tag = if all(&[Status::Pass]) {
            passed += 1;
            "PASS"
        } else if all(&[Status::Pass, Status::Deviation]) {
            deviations += 1;
            "FAIL: documented deviation"
        } else {
            "FAIL"
        };
        println!("[{tag}] {criterion:>2} {title}");
        for o in parts {
            println!("       {}", o.line());
        }
    }
    let failed = 10 - passed - deviations;
    println!(
        "acceptance: {passed} of 10 passed, {deviations} documented deviation(s), {failed} failed, in {:.1?}",
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
