//! `linsys`: generate linear systems, solve for τ and ν₂, run the bound
//! checks, and compare systems up to reduction.
//!
//! Exit codes: 0 success or pass, 1 a check failed, 2 bad usage or input,
//! 3 undecided or unproven.

mod gen;
mod report;

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use linsys_core::io::from_instance_str;
use linsys_core::verify::{run_suite, Family};
use linsys_core::{canon, Error, LinearSystem, SearchBudget};

const UNDECIDED: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "linsys", version, about = "Transversals and 2-packings of linear systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated instance and its label sidecar.
    Gen(gen::GenArgs),
    /// Compute τ and/or ν₂ exactly.
    Solve(SolveArgs),
    /// Solve instances and run every bound check on them.
    Verify(VerifyArgs),
    /// Decide isomorphism after deleting points of degree at most 1.
    Iso(IsoArgs),
    /// Print the canonical encoding of the reduced system.
    Canon(CanonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Tau,
    Nu2,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct SolveArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = What::Both)]
    what: What,
    /// Node cap per search.
    #[arg(long, default_value_t = SearchBudget::DEFAULT_MAX_NODES)]
    budget: u64,
    /// Report the lexicographically least optimal witness.
    #[arg(long)]
    deterministic: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Cnn,
    Planes,
    C44,
    Random,
    Corpus,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Instance files; used when no family is given.
    inputs: Vec<PathBuf>,
    #[arg(long, value_enum)]
    family: Option<FamilyName>,
    /// Range of n for `cnn`, e.g. `3..9`; even values are skipped.
    #[arg(long, value_parser = parse_range, default_value = "3..7")]
    range: RangeInclusive<usize>,
    /// Plane orders for `planes`.
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    q: Vec<usize>,
    /// Point-count range for `random`.
    #[arg(long, value_parser = parse_range, default_value = "6..12")]
    points: RangeInclusive<usize>,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = SearchBudget::DEFAULT_MAX_NODES)]
    budget: u64,
    /// Worker threads for solving instances; defaults to all cores.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Args)]
struct IsoArgs {
    a: PathBuf,
    b: PathBuf,
    #[arg(long, default_value_t = canon::DEFAULT_ISO_BUDGET)]
    budget: u64,
}

#[derive(Debug, Args)]
struct CanonArgs {
    input: PathBuf,
    #[arg(long, default_value_t = canon::DEFAULT_ISO_BUDGET)]
    budget: u64,
}

/// `a..b` or `a..=b`, both inclusive.
fn parse_range(text: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let (lo, hi) = text
        .split_once("..=")
        .or_else(|| text.split_once(".."))
        .ok_or_else(|| format!("expected a range like 3..9, got {text:?}"))?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("{hi:?}: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {text}"));
    }
    Ok(lo..=hi)
}

pub(crate) fn read_instance(path: &Path) -> Result<LinearSystem> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_instance_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn solve(args: &SolveArgs) -> Result<u8> {
    let s = read_instance(&args.input)?;
    let budget = SearchBudget {
        deterministic: args.deterministic,
        ..SearchBudget::new(args.budget)
    };
    let out = report::solve(&s, args.what, &budget, args.format);
    print!("{}", out.text);
    Ok(if out.proven { 0 } else { UNDECIDED })
}

fn verify(args: &VerifyArgs) -> Result<u8> {
    let family = match (args.family, args.inputs.is_empty()) {
        (Some(_), false) => bail!("give either instance files or --family, not both"),
        (None, true) => bail!("nothing to verify: give instance files or --family"),
        (None, false) => {
            for p in &args.inputs {
                read_instance(p)?;
            }
            Family::Files(args.inputs.clone())
        }
        (Some(FamilyName::Cnn), _) => {
            let ns: Vec<usize> = args.range.clone().filter(|n| n % 2 == 1 && *n >= 3).collect();
            if ns.is_empty() {
                bail!("range {:?} contains no odd n >= 3", args.range);
            }
            Family::Cnn(ns)
        }
        (Some(FamilyName::Planes), _) => Family::Planes(args.q.clone()),
        (Some(FamilyName::C44), _) => Family::C44,
        (Some(FamilyName::Random), _) => Family::Random {
            points: args.points.clone(),
            count: args.count,
            seed: args.seed,
        },
        (Some(FamilyName::Corpus), _) => Family::Corpus,
    };
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| anyhow!("thread pool: {e}"))?;
    }
    let suite = run_suite(&family, &SearchBudget::new(args.budget))?;
    print!("{}", report::suite(&suite, args.format));
    Ok(suite.verdict().exit_code() as u8)
}

fn iso(args: &IsoArgs) -> Result<u8> {
    let a = read_instance(&args.a)?;
    let b = read_instance(&args.b)?;
    Ok(match canon::is_isomorphic_with_budget(&a, &b, args.budget) {
        Ok(true) => {
            println!("isomorphic");
            0
        }
        Ok(false) => {
            println!("not-isomorphic");
            1
        }
        Err(Error::SearchBudgetExceeded(_)) => {
            println!("undecided");
            UNDECIDED
        }
        Err(e) => return Err(e.into()),
    })
}

fn canon_cmd(args: &CanonArgs) -> Result<u8> {
    let s = read_instance(&args.input)?;
    match canon::canonical_form_with_budget(&s, args.budget) {
        Ok(form) => {
            print!("{form}");
            Ok(0)
        }
        Err(Error::SearchBudgetExceeded(n)) => {
            eprintln!("canonical labeling exceeded {n} nodes");
            Ok(UNDECIDED)
        }
        Err(e) => Err(e.into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(args) => gen::run(args).map(|()| 0),
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Iso(args) => iso(args),
        Command::Canon(args) => canon_cmd(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
