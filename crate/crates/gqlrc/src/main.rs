use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gqlrc::formats::{self, MatrixFormat};
use gqlrc::instance::{build_structure, Construction, GqKind, InstanceSpec};
use gqlrc::parallel::{min_distance, repair_profile_par, thread_count, MethodChoice};
use gqlrc::selftest::{self, Status};
use gqlrc_core::codes::{classify_min_words, Budgets, LinearCode, Method};
use gqlrc_core::gq::{GeometryParams, IncidenceStructure};
use gqlrc_core::lrc::check_bounds;

/// Generalised quadrangles, their p-ary codes and repair metrics.
#[derive(Parser, Debug)]
#[command(name = "gqlrc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct and verify a quadrangle; `--out` writes its JSON.
    Build {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum distance and minimum-weight words of the line code.
    Mindist {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// largest weight swept [default: s + 1, or the length for --code]
        #[arg(long)]
        wmax: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Repair degree and availability, compared with s and t + 1.
    LrcReport {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the incidence, reduced generator or parity-check matrix.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = MatrixArg::Incidence)]
        matrix: MatrixArg,
        #[arg(long, default_value = "json")]
        format: MatrixFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the reference checks.
    Selftest {
        #[command(flatten)]
        run: RunArgs,
        /// run only these checks (repeatable)
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(selftest::CHECK_IDS))]
        only: Vec<String>,
        /// seed of the random subspace checks
        #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct Source {
    #[arg(long, value_parser = parse_kind, conflicts_with_all = ["structure", "code"])]
    gq: Option<GqKind>,
    /// base field order
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    h: Option<u32>,
    /// field reduction degree of te-conic and te-ovoid
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// egg JSON for `--gq egg-file`
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// build q4 and q5 from an elementary egg or from a quadratic form
    #[arg(long, value_enum, default_value_t = ViaArg::Egg)]
    via: ViaArg,
    /// incidence structure JSON written by `build`
    #[arg(long, conflicts_with = "code")]
    structure: Option<PathBuf>,
    /// alist matrix whose rows span the code (over F_p, default p = 2)
    #[arg(long)]
    code: Option<PathBuf>,
    /// fail on egg or quadrangle axiom violations instead of warning
    #[arg(long)]
    strict: bool,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// candidate budget of sweeps and exhaustive search
    #[arg(long, env = "GQLRC_BUDGET")]
    budget: Option<u128>,
    /// worker threads [default: available parallelism]
    #[arg(long)]
    threads: Option<usize>,
}

impl RunArgs {
    fn budgets(&self) -> Budgets {
        match self.budget {
            Some(b) => Budgets {
                sweep: b,
                exhaustive: b,
            },
            None => Budgets::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Sweep,
    Exhaustive,
    Bz,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixArg {
    Incidence,
    Rref,
    Dual,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ViaArg {
    Egg,
    Form,
}

fn parse_kind(s: &str) -> Result<GqKind> {
    s.parse()
}

/// What a command operates on.
struct Loaded {
    label: String,
    kind: String,
    structure: Option<IncidenceStructure>,
    params: Option<GeometryParams>,
    code: LinearCode,
}

impl Loaded {
    fn params(&self) -> Result<GeometryParams> {
        self.params
            .ok_or_else(|| anyhow!("{} is not a verified partial geometry", self.label))
    }
}

fn load(src: &Source) -> Result<Loaded> {
    if let Some(path) = &src.code {
        let m = formats::parse_alist(&read(path)?)?;
        let p = src.p.unwrap_or(2);
        return Ok(Loaded {
            label: path.display().to_string(),
            kind: "code".into(),
            structure: None,
            params: None,
            code: LinearCode::from_binary_matrix(&m, p)?,
        });
    }
    let (kind, mut structure, warnings) = match &src.structure {
        Some(path) => (
            "structure".to_string(),
            formats::parse_structure(&read(path)?)?,
            Vec::new(),
        ),
        None => {
            let spec = InstanceSpec {
                kind: Some(
                    src.gq
                        .ok_or_else(|| anyhow!("pass one of --gq, --structure or --code"))?,
                ),
                q: src.q,
                p: src.p,
                h: src.h,
                n: src.n,
                m: src.m,
                input: src.input.clone(),
                construction: match src.via {
                    ViaArg::Egg => Construction::Egg,
                    ViaArg::Form => Construction::Form,
                },
                strict: src.strict,
            };
            let b = build_structure(&spec)?;
            (b.kind.to_string(), b.structure, b.warnings)
        }
    };
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let params = match structure.verify_partial_geometry() {
        Ok(p) => Some(p),
        Err(v) if src.strict || warnings.is_empty() && src.structure.is_none() => {
            bail!("{}: {v}", structure.name())
        }
        Err(v) => {
            eprintln!("warning: {}: {v}", structure.name());
            None
        }
    };
    Ok(Loaded {
        label: structure.name().to_string(),
        kind,
        code: LinearCode::of_structure(&structure)?,
        structure: Some(structure),
        params,
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Process exit status of a finished command.
enum Outcome {
    Ok,
    Failed,
    Budget,
}

fn cmd_build(src: &Source, out: Option<&Path>) -> Result<Outcome> {
    let l = load(src)?;
    let g = l
        .structure
        .as_ref()
        .ok_or_else(|| anyhow!("build needs --gq or --structure"))?;
    println!(
        "{}: {} points, {} lines",
        l.label,
        g.num_points(),
        g.num_lines()
    );
    let outcome = match l.params {
        Some(p) => {
            let what = if p.is_gq() {
                "generalised quadrangle"
            } else {
                "partial geometry"
            };
            println!("{what} of order (s, t, α) = {p}");
            Outcome::Ok
        }
        None => {
            println!("axioms fail; see warnings");
            Outcome::Ok
        }
    };
    if let Some(path) = out {
        write(path, &formats::structure_to_json(g))?;
        println!("wrote {}", path.display());
    }
    Ok(outcome)
}

fn cmd_mindist(
    src: &Source,
    run: &RunArgs,
    method: MethodArg,
    wmax: Option<usize>,
    out: Option<&Path>,
) -> Result<Outcome> {
    let l = load(src)?;
    let w_max = match (wmax, l.params) {
        (Some(w), _) => w,
        (None, Some(p)) => p.s + 1,
        (None, None) => l.code.length(),
    };
    let choice = match method {
        MethodArg::Auto => MethodChoice::Auto,
        MethodArg::Sweep => MethodChoice::Only(Method::Sweep),
        MethodArg::Exhaustive => MethodChoice::Only(Method::Exhaustive),
        MethodArg::Bz => MethodChoice::Only(Method::Bz),
    };
    let code = &l.code;
    let mut report = min_distance(
        code,
        choice,
        w_max,
        run.budgets(),
        thread_count(run.threads),
    )?;
    if let Some(g) = &l.structure {
        classify_min_words(&mut report, g);
    }
    println!(
        "{}: length {}, dimension {} over F_{}",
        l.label,
        code.length(),
        code.k(),
        code.p()
    );
    match report.d {
        Some(d) => println!("d = {d} ({})", report.method),
        None => println!(
            "no nonzero word of weight at most {}",
            report.searched_up_to
        ),
    }
    if report.d.is_some() && !report.words_listed {
        println!("minimum-weight words not listed: their sweep exceeds the budget");
    }
    if report.d.is_some() && report.words_listed {
        let lines = match report.all_line_multiples {
            Some(true) => ", all multiples of lines",
            Some(false) => ", not all multiples of lines",
            None => "",
        };
        println!("{} minimum-weight words{lines}", report.words.len());
    }
    if let Some(path) = out {
        write(path, &formats::report_to_json(code, &report))?;
        println!("wrote {}", path.display());
    }
    Ok(if report.complete {
        Outcome::Ok
    } else {
        Outcome::Budget
    })
}

fn cmd_lrc(src: &Source, run: &RunArgs, out: Option<&Path>) -> Result<Outcome> {
    let l = load(src)?;
    let params = l.params()?;
    let prof = repair_profile_par(&l.code, run.budgets().sweep, thread_count(run.threads))?;
    let chk = check_bounds(&prof, params.s, params.t);
    println!(
        "{}: order (s, t) = ({}, {}) over F_{}",
        l.label, params.s, params.t, prof.p
    );
    println!("repair degree r = {}, availability a = {}", prof.r, prof.a);
    if prof.is_nonuniform() {
        println!("note: repair degrees differ between positions");
    }
    println!(
        "r {} s = {}; a {} t + 1 = {}; (p - 1)(t + 1) = {} {}",
        if chk.tight_r {
            "="
        } else if chk.r_within {
            "<"
        } else {
            ">"
        },
        chk.s,
        if chk.tight_a {
            "="
        } else if chk.a_within {
            ">"
        } else {
            "<"
        },
        chk.t + 1,
        chk.expected_a(),
        if chk.matches_exact {
            "matches"
        } else {
            "differs"
        }
    );
    if let Some(path) = out {
        write(path, &formats::profile_to_json(&l.kind, &prof, &chk))?;
        println!("wrote {}", path.display());
    }
    Ok(if chk.contradiction() {
        Outcome::Failed
    } else {
        Outcome::Ok
    })
}

fn cmd_export(
    src: &Source,
    matrix: MatrixArg,
    format: MatrixFormat,
    out: &Path,
) -> Result<Outcome> {
    let l = load(src)?;
    let code = &l.code;
    let rows: Vec<Vec<u8>> = match matrix {
        MatrixArg::Incidence => code.generator_rows().to_vec(),
        MatrixArg::Rref => code.rref_basis().to_vec(),
        MatrixArg::Dual => code.dual_basis().to_vec(),
    };
    let k = match matrix {
        MatrixArg::Dual => code.length() - code.k(),
        _ => code.k(),
    };
    write(out, &formats::write_matrix(format, code.p(), k, &rows)?)?;
    println!(
        "wrote {} rows x {} columns to {}",
        rows.len(),
        code.length(),
        out.display()
    );
    Ok(Outcome::Ok)
}

fn cmd_selftest(run: &RunArgs, only: &[String], seed: u64) -> Result<Outcome> {
    let opts = selftest::Options {
        budgets: run.budgets(),
        threads: thread_count(run.threads),
        seed,
    };
    let outcomes = selftest::run(only, &opts)?;
    let mut failed = 0;
    for o in &outcomes {
        println!("{}", o.line());
        failed += (o.status == Status::Fail) as usize;
    }
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    println!(
        "{} passed, {failed} failed, {} over budget, {} documented deviation(s)",
        count(Status::Pass),
        count(Status::Budget),
        count(Status::Deviation)
    );
    Ok(if failed == 0 {
        Outcome::Ok
    } else {
        Outcome::Failed
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Build { source, out } => cmd_build(source, out.as_deref()),
        Command::Mindist {
            source,
            run,
            method,
            wmax,
            out,
        } => cmd_mindist(source, run, *method, *wmax, out.as_deref()),
        Command::LrcReport { source, run, out } => cmd_lrc(source, run, out.as_deref()),
        Command::Export {
            source,
            matrix,
            format,
            out,
        } => cmd_export(source, *matrix, *format, out),
        Command::Selftest { run, only, seed } => cmd_selftest(run, only, *seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Ok(Outcome::Budget) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e.chain().any(|c| {
                matches!(
                    c.downcast_ref(),
                    Some(gqlrc_core::Error::BudgetExceeded { .. })
                )
            });
            ExitCode::from(if budget { 2 } else { 1 })
        }
    }
}
