use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};

use linsys_core::constructions::{
    build_c, build_cnn, enumerate_c44, matching, pad_labels, pad_uniform, projective_plane,
    random_linear_system, star, ConstructionLabeling,
};
use linsys_core::io::{from_label_str, to_instance_string, to_label_string};
use linsys_core::LinearSystem;

use crate::read_instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// `C_{n,n+1}` for odd `n` (`--n`).
    Cnn,
    /// Projective plane of prime order `--q`.
    Plane,
    /// The order-3 plane with a triangle deleted.
    #[value(name = "C")]
    C,
    /// One file per isomorphism class, written into the `--out` directory.
    C44,
    /// `--m` disjoint lines of size `--r`.
    Matching,
    /// `--k` lines of size `--r` through one point.
    Star,
    /// Rejection-sampled system on `--points` points with `--lines` lines.
    Random,
    /// Pads every line of `--input` to `--r` points.
    Pad,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    construction: Construction,
    /// Instance file to write; for `c44`, a directory.
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    lines: Option<usize>,
    #[arg(long, default_value_t = 3)]
    min_size: usize,
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Base instance for `pad`.
    #[arg(long)]
    input: Option<PathBuf>,
}

fn need(value: Option<usize>, flag: &str, what: &str) -> Result<usize> {
    match value {
        Some(v) => Ok(v),
        None => bail!("{what} needs --{flag}"),
    }
}

/// `dir/name.json` -> `dir/name.labels.json`.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("instance");
    out.with_file_name(format!("{stem}.labels.json"))
}

fn write_pair(out: &Path, s: &LinearSystem, labels: &ConstructionLabeling) -> Result<()> {
    if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(out, to_instance_string(s)).with_context(|| format!("writing {}", out.display()))?;
    let side = sidecar_path(out);
    fs::write(&side, to_label_string(s, labels)).with_context(|| format!("writing {}", side.display()))?;
    Ok(())
}

fn pad(args: &GenArgs) -> Result<(LinearSystem, ConstructionLabeling)> {
    let Some(input) = &args.input else {
        bail!("pad needs --input");
    };
    let base = read_instance(input)?;
    let r = need(args.r, "r", "pad")?;
    let (padded, _) = pad_uniform(&base, r)?;
    let side = sidecar_path(input);
    let base_labels = match fs::read_to_string(&side) {
        Ok(text) => from_label_str(&text).with_context(|| format!("parsing {}", side.display()))?,
        Err(_) => ConstructionLabeling::plain("input", &base),
    };
    let labels = pad_labels(&base_labels, &padded);
    Ok((padded, labels))
}

pub fn run(args: &GenArgs) -> Result<()> {
    let (s, labels) = match args.construction {
        Construction::Cnn => build_cnn(need(args.n, "n", "cnn")?)?,
        Construction::Plane => projective_plane(need(args.q, "q", "plane")?)?,
        Construction::C => build_c(),
        Construction::C44 => {
            fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
            for (i, member) in enumerate_c44()?.iter().enumerate() {
                write_pair(&args.out.join(format!("c44_{i}.json")), &member.system, &member.labeling)?;
            }
            return Ok(());
        }
        Construction::Matching => {
            let m = need(args.m, "m", "matching")?;
            let s = matching(m, need(args.r, "r", "matching")?)?;
            let labels = ConstructionLabeling::plain(format!("matching({m})"), &s);
            (s, labels)
        }
        Construction::Star => {
            let k = need(args.k, "k", "star")?;
            let s = star(k, need(args.r, "r", "star")?)?;
            let labels = ConstructionLabeling::plain(format!("star({k})"), &s);
            (s, labels)
        }
        Construction::Random => {
            let s = random_linear_system(
                need(args.points, "points", "random")?,
                need(args.lines, "lines", "random")?,
                (args.min_size, args.max_size),
                args.seed,
            )?;
            let labels = ConstructionLabeling::plain(format!("random[{}]", args.seed), &s);
            (s, labels)
        }
        Construction::Pad => pad(args)?,
    };
    write_pair(&args.out, &s, &labels)
}
