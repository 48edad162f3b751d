//! Reference checks: the shipped quadrangles against their known orders,
//! minimum distances, minimum words and repair parameters.

use std::time::{Duration, Instant};

use anyhow::{anyhow, Result};
use gqlrc_core::codes::{
    classify_min_words, dual_lemma_vector, min_distance_bz, verify_pg_ag_minima, Budgets, Codeword,
    LinearCode, MinWeightReport,
};
use gqlrc_core::gq::GeometryParams;
use gqlrc_core::lrc::{check_bounds, BoundCheck, RepairProfile};
use gqlrc_core::pgeom::{ProjectiveSpace, Subspace};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formats::{parse_alist, write_alist};
use crate::instance::{build_instance, elementary, GqKind, InstanceSpec};
use crate::parallel::{exhaustive_par, min_weight_sweep_par, repair_profile_par};

/// Seed of the randomized subspace checks.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Number of random triples per family in the subspace checks.
pub const LEMMA_TRIALS: usize = 100;

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub budgets: Budgets,
    pub threads: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            budgets: Budgets::default(),
            threads: crate::parallel::thread_count(None),
            seed: DEFAULT_SEED,
        }
    }
}

/// Everything computed for one quadrangle.
#[derive(Debug, Clone)]
pub struct Measurement {
    pub label: String,
    pub p: u32,
    pub points: usize,
    pub lines: usize,
    pub params: GeometryParams,
    pub k: usize,
    pub sweep: MinWeightReport,
    pub bz_d: usize,
    /// `None` when `p^k` exceeds the exhaustive budget
    pub exhaustive_d: Option<usize>,
    pub profile: RepairProfile,
    pub bounds: BoundCheck,
    /// minimum words through each point lie on lines through it
    pub repair_words_on_lines: bool,
    pub alist_round_trip: bool,
    pub elapsed: Duration,
}

impl Measurement {
    pub fn summary(&self) -> String {
        let GeometryParams { s, t, alpha } = self.params;
        format!(
            "{}/{} ({s},{t},{alpha}) k={} d={} words={} lines={} r={} a={} in {:.2?}",
            self.points,
            self.lines,
            self.k,
            self.sweep.d.map_or("none".into(), |d| d.to_string()),
            self.sweep.words.len(),
            if self.sweep.all_line_multiples == Some(true) {
                "yes"
            } else {
                "no"
            },
            self.profile.r,
            self.profile.a,
            self.elapsed
        )
    }
}

/// Builds, verifies, sweeps to `w_max`, runs Brouwer–Zimmermann and (when
/// within budget) exhaustive search, and computes the repair profile.
pub fn measure(spec: &InstanceSpec, w_max: usize, opts: &Options) -> Result<Measurement> {
    let start = Instant::now();
    let inst = build_instance(spec)?;
    let g = &inst.structure;
    let code = LinearCode::of_structure(g)?;
    let mut sweep = min_weight_sweep_par(&code, w_max, opts.budgets.sweep, opts.threads)?;
    classify_min_words(&mut sweep, g);
    let bz_d = min_distance_bz(&code)?;
    let exhaustive_d = match exhaustive_par(&code, opts.budgets.exhaustive, opts.threads) {
        Ok(r) => r.d,
        Err(gqlrc_core::Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let profile = repair_profile_par(&code, opts.budgets.sweep, opts.threads)?;
    let bounds = check_bounds(&profile, inst.params.s, inst.params.t);

    let through = g.lines_through();
    let repair_words_on_lines = sweep.d == Some(profile.r + 1)
        && sweep.words.iter().all(|w| {
            let sup = w.support();
            sup.iter()
                .all(|&i| through[i].iter().any(|&l| g.line(l) == sup.as_slice()))
        });

    let m = g.incidence_matrix();
    let text = write_alist(&m);
    let alist_round_trip =
        parse_alist(&text).is_ok_and(|back| back == m && write_alist(&back) == text);

    Ok(Measurement {
        label: inst.label,
        p: code.p(),
        points: g.num_points(),
        lines: g.num_lines(),
        params: inst.params,
        k: code.k(),
        sweep,
        bz_d,
        exhaustive_d,
        profile,
        bounds,
        repair_words_on_lines,
        alist_round_trip,
        elapsed: start.elapsed(),
    })
}

/// Pinned values for one quadrangle.
#[derive(Debug, Clone, Copy)]
pub struct Expected {
    pub id: &'static str,
    pub criterion: u8,
    pub kind: GqKind,
    pub q: u32,
    pub n: Option<usize>,
    pub points: usize,
    pub lines: usize,
    pub s: usize,
    pub t: usize,
    pub w_max: usize,
    pub d: usize,
    pub words: usize,
    pub r: usize,
    pub a: usize,
    pub limit: Duration,
}

impl Expected {
    pub fn spec(&self) -> InstanceSpec {
        let mut spec = InstanceSpec::new(self.kind, self.q);
        spec.n = self.n;
        spec
    }

    /// Mismatches between a measurement and the pinned values.
    pub fn compare(&self, m: &Measurement) -> Vec<String> {
        let mut bad = Vec::new();
        let mut check = |what: &str, expected: String, found: String| {
            if expected != found {
                bad.push(format!("{what}: expected {expected}, found {found}"));
            }
        };
        check(
            "points/lines",
            format!("{}/{}", self.points, self.lines),
            format!("{}/{}", m.points, m.lines),
        );
        check(
            "(s,t,alpha)",
            format!("({},{},1)", self.s, self.t),
            format!("({},{},{})", m.params.s, m.params.t, m.params.alpha),
        );
        check(
            "d",
            format!("{:?}", Some(self.d)),
            format!("{:?}", m.sweep.d),
        );
        check(
            "minimum words",
            self.words.to_string(),
            m.sweep.words.len().to_string(),
        );
        check(
            "all line multiples",
            "Some(true)".into(),
            format!("{:?}", m.sweep.all_line_multiples),
        );
        check("r", self.r.to_string(), m.profile.r.to_string());
        check("a", self.a.to_string(), m.profile.a.to_string());
        check(
            "uniform repair",
            "false".into(),
            m.profile.is_nonuniform().to_string(),
        );
        check(
            "repair words on lines",
            "true".into(),
            m.repair_words_on_lines.to_string(),
        );
        if m.elapsed > self.limit {
            bad.push(format!("took {:.2?}, limit {:.0?}", m.elapsed, self.limit));
        }
        bad
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[rustfmt::skip]
pub const INSTANCES: [Expected; 7] = [
    Expected { id: "q4-2", criterion: 1, kind: GqKind::TeConic, q: 2, n: None, points: 15, lines: 15, s: 2, t: 2, w_max: 3, d: 3, words: 15, r: 2, a: 3, limit: secs(1) },
    Expected { id: "q4-3", criterion: 2, kind: GqKind::TeConic, q: 3, n: None, points: 40, lines: 40, s: 3, t: 3, w_max: 4, d: 4, words: 80, r: 3, a: 8, limit: secs(30) },
    Expected { id: "q5-2", criterion: 3, kind: GqKind::TeOvoid, q: 2, n: None, points: 27, lines: 45, s: 2, t: 4, w_max: 3, d: 3, words: 45, r: 2, a: 5, limit: secs(5) },
    Expected { id: "t2star-4", criterion: 4, kind: GqKind::T2star, q: 4, n: None, points: 64, lines: 96, s: 3, t: 5, w_max: 4, d: 4, words: 96, r: 3, a: 6, limit: secs(120) },
    Expected { id: "egg-85", criterion: 5, kind: GqKind::TeConic, q: 2, n: Some(2), points: 85, lines: 85, s: 4, t: 4, w_max: 5, d: 5, words: 85, r: 4, a: 5, limit: secs(300) },
    Expected { id: "h3-4", criterion: 6, kind: GqKind::H3, q: 2, n: None, points: 45, lines: 27, s: 4, t: 2, w_max: 5, d: 5, words: 27, r: 4, a: 3, limit: secs(60) },
    Expected { id: "w3-2", criterion: 6, kind: GqKind::W3, q: 2, n: None, points: 15, lines: 15, s: 2, t: 2, w_max: 3, d: 3, words: 15, r: 2, a: 3, limit: secs(1) },
];

/// Ids accepted by [`run`].
pub const CHECK_IDS: [&str; 11] = [
    "q4-2",
    "q4-3",
    "q5-2",
    "t2star-4",
    "egg-85",
    "h3-4",
    "w3-2",
    "flats",
    "lemma4",
    "bounds",
    "agreement",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// a search exceeded its budget; reported, not failed
    Budget,
    /// the claimed value is false and the measured value equals the
    /// independently derived one
    Deviation,
}

fn pass_fail(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub criterion: u8,
    pub status: Status,
    pub detail: String,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Budget => "BUDGET",
            Status::Deviation => "DEVIATION",
        };
        format!("[{tag}] {:<10} {}", self.id, self.detail)
    }
}

fn is_budget(e: &anyhow::Error) -> bool {
    matches!(
        e.downcast_ref::<gqlrc_core::Error>(),
        Some(gqlrc_core::Error::BudgetExceeded { .. })
    )
}

fn outcome_of(id: &'static str, criterion: u8, r: Result<(Status, String)>) -> CheckOutcome {
    let (status, detail) = match r {
        Ok(v) => v,
        Err(e) if is_budget(&e) => (Status::Budget, format!("{e:#}")),
        Err(e) => (Status::Fail, format!("error: {e:#}")),
    };
    CheckOutcome {
        id,
        criterion,
        status,
        detail,
    }
}

/// Runs the checks named in `only` (all when empty).
pub fn run(only: &[String], opts: &Options) -> Result<Vec<CheckOutcome>> {
    for id in only {
        if !CHECK_IDS.contains(&id.as_str()) {
            return Err(anyhow!(
                "unknown check `{id}`; known: {}",
                CHECK_IDS.join(", ")
            ));
        }
    }
    let wanted = |id: &str| only.is_empty() || only.iter().any(|o| o == id);
    let needs_all = wanted("bounds") || wanted("agreement");
    let mut out = Vec::new();
    let mut ok = Vec::new();
    let mut over_budget = 0;
    for e in INSTANCES {
        if !(needs_all || wanted(e.id)) {
            continue;
        }
        let m = measure(&e.spec(), e.w_max, opts);
        if wanted(e.id) {
            let r = m.as_ref().map(|m| {
                let bad = e.compare(m);
                let detail = if bad.is_empty() {
                    m.summary()
                } else {
                    format!("{}: {}", m.summary(), bad.join("; "))
                };
                (pass_fail(bad.is_empty()), detail)
            });
            let r = match r {
                Ok(v) => Ok(v),
                Err(err) if is_budget(err) => Err(anyhow!(err
                    .downcast_ref::<gqlrc_core::Error>()
                    .cloned()
                    .expect("budget error"))),
                Err(err) => Err(anyhow!("{err:#}")),
            };
            out.push(outcome_of(e.id, e.criterion, r));
        }
        match m {
            Ok(m) => ok.push(m),
            Err(err) if is_budget(&err) => over_budget += 1,
            Err(_) => {}
        }
    }
    if wanted("flats") {
        out.push(outcome_of("flats", 7, check_flats(opts)));
    }
    if wanted("lemma4") {
        out.push(outcome_of(
            "lemma4",
            8,
            check_lemma_vectors(opts.seed).map(|(ok, d)| (pass_fail(ok), d)),
        ));
    }
    let ok: Vec<&Measurement> = ok.iter().collect();
    let aggregate = |id: &'static str, criterion: u8, (passed, detail): (bool, String)| {
        let mut c = outcome_of(id, criterion, Ok((pass_fail(passed), detail)));
        if over_budget > 0 {
            c.detail = format!("{} [{over_budget} instance(s) over budget]", c.detail);
            if ok.is_empty() {
                c.status = Status::Budget;
            }
        }
        c
    };
    if wanted("bounds") {
        out.push(aggregate("bounds", 9, check_tightness(&ok)));
    }
    if wanted("agreement") {
        out.push(aggregate("agreement", 10, check_agreement(&ok)));
    }
    Ok(out)
}

/// Words of weight 4 in the code of lines of `AG(2,3)`: `L - M` for each
/// of the `9 * C(4,2)` intersecting pairs, times the 2 nonzero scalars.
pub const AG23_WEIGHT4_WORDS: usize = 2 * 9 * 6;

/// Minimum weights of the codes of `PG(2,2)`, `AG(3,2)` and `AG(2,3)`, and
/// the absence of words of weight `q + 1` in the affine codes.
///
/// `AG(2,3)` does have words of weight 4; when their number is exactly
/// [`AG23_WEIGHT4_WORDS`] the outcome is [`Status::Deviation`].
pub fn check_flats(opts: &Options) -> Result<(Status, String)> {
    let pg = verify_pg_ag_minima(2, 2, 1, opts.budgets.sweep)?;
    let ag32 = verify_pg_ag_minima(3, 2, 1, opts.budgets.sweep)?;
    let ag23 = verify_pg_ag_minima(2, 3, 1, opts.budgets.sweep)?;
    let minima = pg.pg.passed()
        && ag32.ag.passed()
        && ag23.ag.d == Some(ag23.ag.expected)
        && ag23.ag.words_are_flats;
    let gap = ag23.ag.next_weight_words.unwrap_or(0);
    let status = match (minima, gap) {
        (false, _) => Status::Fail,
        (true, 0) => Status::Pass,
        (true, AG23_WEIGHT4_WORDS) => Status::Deviation,
        _ => Status::Fail,
    };
    let show = |d: Option<usize>| d.map_or("none".into(), |d| d.to_string());
    let mut detail = format!(
        "PG(2,2) d={} (expect {}); AG(3,2) d={} (expect {}), weight-3 words {}; AG(2,3) d={} (expect {}), weight-4 words {}",
        show(pg.pg.d),
        pg.pg.expected,
        show(ag32.ag.d),
        ag32.ag.expected,
        ag32.ag.next_weight_words.unwrap_or(0),
        show(ag23.ag.d),
        ag23.ag.expected,
        gap,
    );
    if status == Status::Deviation {
        detail.push_str(" = 2*9*C(4,2) differences of intersecting lines");
    }
    Ok((status, detail))
}

/// Counts of `(passed, total)` per family of random subspace vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaTally {
    pub family: String,
    pub passed: usize,
    pub total: usize,
}

/// True when `v` has zero dot product with every row.
fn orthogonal_to_rows(rows: &[Vec<usize>], v: &Codeword, p: u32) -> bool {
    rows.iter()
        .all(|r| r.iter().map(|&i| v.entries()[i] as u32).sum::<u32>() % p == 0)
}

fn lift(inner: &ProjectiveSpace, s: &Subspace) -> Subspace {
    inner.embed_subspace(s)
}

/// `inc⟨U,r⟩ - inc⟨T,r⟩` for random `(n+m-1)`-spaces `U`, `T` at infinity
/// of `PG(2n+m, 2)`, tested against every `n`-space.
pub fn lemma_family(n: usize, m: usize, trials: usize, rng: &mut ChaCha8Rng) -> Result<LemmaTally> {
    let field = std::sync::Arc::new(gqlrc_core::gf::Field::new(2, 1)?);
    let inner = ProjectiveSpace::new(field, 2 * n + m - 1);
    let (outer, _) = inner.embed_in_hyperplane();
    let candidates = inner.subspaces_of_dim(n + m - 1);
    let affine = outer.affine_point_indices();
    let rows: Vec<Vec<usize>> = outer.incidence_matrix_spaces(n)?.rows().to_vec();
    let mut passed = 0;
    for _ in 0..trials {
        let u = lift(&inner, candidates.choose(rng).expect("nonempty"));
        let t = lift(&inner, candidates.choose(rng).expect("nonempty"));
        let r = outer.point_at(*affine.choose(rng).expect("nonempty"));
        let v = dual_lemma_vector(&outer, &u, &t, &r)?;
        passed += orthogonal_to_rows(&rows, &v, 2) as usize;
    }
    Ok(LemmaTally {
        family: format!("PG({},2) n={n} m={m}", 2 * n + m),
        passed,
        total: trials,
    })
}

/// `inc⟨T_E,r⟩ - inc⟨E,F,r⟩` for random distinct egg elements `E`, `F` of
/// the elementary egg from a conic of `PG(2, 2^n)`.
pub fn lemma_egg_family(n: usize, trials: usize, rng: &mut ChaCha8Rng) -> Result<LemmaTally> {
    let field = std::sync::Arc::new(gqlrc_core::gf::Field::new(2, 1)?);
    let egg = elementary(&field, n, false)?;
    let inner = egg.space();
    let (outer, _) = inner.embed_in_hyperplane();
    let affine = outer.affine_point_indices();
    let rows: Vec<Vec<usize>> = outer.incidence_matrix_spaces(n)?.rows().to_vec();
    let mut passed = 0;
    for _ in 0..trials {
        let e = rng.gen_range(0..egg.len());
        let f = (e + rng.gen_range(1..egg.len())) % egg.len();
        let tangent = lift(&inner, &egg.tangents()[e]);
        let ef = lift(
            &inner,
            &inner.span(&[&egg.elements()[e], &egg.elements()[f]])?,
        );
        let r = outer.point_at(*affine.choose(rng).expect("nonempty"));
        let v = dual_lemma_vector(&outer, &tangent, &ef, &r)?;
        passed += orthogonal_to_rows(&rows, &v, 2) as usize;
    }
    Ok(LemmaTally {
        family: format!("PG({},2) <E,F,r> n=m={n}", 3 * n),
        passed,
        total: trials,
    })
}

pub fn lemma_tallies(seed: u64) -> Result<Vec<LemmaTally>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(vec![
        lemma_family(1, 1, LEMMA_TRIALS, &mut rng)?,
        lemma_family(1, 2, LEMMA_TRIALS, &mut rng)?,
        lemma_egg_family(1, LEMMA_TRIALS, &mut rng)?,
        lemma_egg_family(2, LEMMA_TRIALS, &mut rng)?,
    ])
}

fn check_lemma_vectors(seed: u64) -> Result<(bool, String)> {
    let tallies = lemma_tallies(seed)?;
    let passed = tallies.iter().all(|t| t.passed == t.total);
    let detail = tallies
        .iter()
        .map(|t| format!("{}: {}/{}", t.family, t.passed, t.total))
        .collect::<Vec<_>>()
        .join("; ");
    Ok((passed, format!("seed {seed:#x}; {detail}")))
}

/// Binary instances meet `r ≤ s`, `a ≥ t+1` with equality; odd `p`
/// exceeds `t+1` and is reported as not tight.
pub fn check_tightness(ms: &[&Measurement]) -> (bool, String) {
    let mut ok = !ms.is_empty();
    let mut parts = Vec::new();
    for m in ms {
        let b = &m.bounds;
        let good = if b.binding() {
            b.r_within && b.a_within && b.tight_r && b.tight_a
        } else {
            b.r_within && b.tight_r && !b.tight_a && b.a == b.expected_a()
        };
        ok &= good && b.matches_exact;
        parts.push(format!(
            "{} r={}{}s a={}{}t+1={}",
            short(&m.label),
            b.r,
            if b.tight_r { "=" } else { "<" },
            b.a,
            if b.tight_a { "=" } else { ">" },
            b.t + 1
        ));
    }
    (ok, parts.join("; "))
}

/// Sweep, Brouwer–Zimmermann and (where run) exhaustive search agree, and
/// every incidence matrix survives an alist round trip byte for byte.
pub fn check_agreement(ms: &[&Measurement]) -> (bool, String) {
    let mut ok = !ms.is_empty();
    let mut parts = Vec::new();
    for m in ms {
        let sweep = m.sweep.d;
        let agree = sweep == Some(m.bz_d) && m.exhaustive_d.is_none_or(|d| Some(d) == sweep);
        ok &= agree && m.alist_round_trip;
        parts.push(format!(
            "{} sweep={} bz={} exhaustive={} alist={}",
            short(&m.label),
            sweep.map_or("none".into(), |d| d.to_string()),
            m.bz_d,
            m.exhaustive_d.map_or("skipped".into(), |d| d.to_string()),
            if m.alist_round_trip { "ok" } else { "MISMATCH" }
        ));
    }
    (ok, parts.join("; "))
}

fn short(label: &str) -> &str {
    label.split(" (").next().unwrap_or(label)
}
