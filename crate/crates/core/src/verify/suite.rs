use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    build_c, build_cnn, enumerate_c44, matching, pad_uniform, projective_plane,
    random_linear_system, star,
};
use crate::error::{Error, Result};
use crate::io::from_instance_str;
use crate::solvers::{transversal_number, two_packing_number, SearchBudget};
use crate::system::{LinearSystem, PointId};

use super::{all_checks, CheckReport, InstanceSummary, Solved};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedInstance {
    pub name: String,
    pub system: LinearSystem,
}

impl NamedInstance {
    pub fn new(name: impl Into<String>, system: LinearSystem) -> Self {
        NamedInstance {
            name: name.into(),
            system,
        }
    }
}

/// Instance families the suite knows how to produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `C_{n,n+1}` for each listed odd `n`.
    Cnn(Vec<usize>),
    /// Projective planes of the listed prime orders.
    Planes(Vec<usize>),
    C44,
    Random {
        points: RangeInclusive<usize>,
        count: usize,
        seed: u64,
    },
    Files(Vec<PathBuf>),
    /// Constructions plus 200 random instances with seeds 1 to 200.
    Corpus,
}

impl Family {
    pub fn instances(&self) -> Result<Vec<NamedInstance>> {
        match self {
            Family::Cnn(ns) => ns
                .iter()
                .map(|&n| Ok(NamedInstance::new(format!("C_{{{n},{}}}", n + 1), build_cnn(n)?.0)))
                .collect(),
            Family::Planes(qs) => qs
                .iter()
                .map(|&q| Ok(NamedInstance::new(format!("PG(2,{q})"), projective_plane(q)?.0)))
                .collect(),
            Family::C44 => Ok(enumerate_c44()?
                .into_iter()
                .enumerate()
                .map(|(i, m)| NamedInstance::new(format!("C44[{i}]"), m.system))
                .collect()),
            Family::Random {
                points,
                count,
                seed,
            } => (0..*count as u64)
                .map(|i| {
                    let s = seed.wrapping_add(i);
                    Ok(NamedInstance::new(format!("random[{s}]"), random_instance(s, points.clone())?))
                })
                .collect(),
            Family::Files(paths) => paths
                .iter()
                .map(|p| {
                    let text = std::fs::read_to_string(p)
                        .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
                    let system = from_instance_str(&text)
                        .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
                    Ok(NamedInstance::new(p.display().to_string(), system))
                })
                .collect(),
            Family::Corpus => corpus(),
        }
    }
}

/// A random linear system drawn from `seed`: between `points` points, up to
/// 12 lines of size 2 to 4.
pub fn random_instance(seed: u64, points: RangeInclusive<usize>) -> Result<LinearSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(points);
    let lo = rng.gen_range(2..=3).min(n.max(1));
    let hi = (lo + rng.gen_range(0..=1)).min(n.max(1));
    let mut m = rng.gen_range(1..=12);
    let inner = rng.gen();
    loop {
        match random_linear_system(n, m, (lo, hi), inner) {
            Err(Error::GenerationExhausted(_)) if m > 1 => m -= 1,
            other => return other,
        }
    }
}

fn named(name: &str, s: Result<LinearSystem>) -> Result<NamedInstance> {
    Ok(NamedInstance::new(name, s?))
}

/// Fixed constructions followed by `random[1]` to `random[200]` on 4 to 12
/// points.
pub fn corpus() -> Result<Vec<NamedInstance>> {
    let mut out = Family::Cnn(vec![3, 5, 7]).instances()?;
    for n in [3, 5] {
        let (base, _) = build_cnn(n)?;
        for k in 1..=2 {
            let (padded, _) = pad_uniform(&base, n + k)?;
            out.push(NamedInstance::new(format!("C_{{{n},{}}}+pad{k}", n + 1), padded));
        }
    }
    out.extend(Family::Planes(vec![2, 3]).instances()?);
    let (c, _) = build_c();
    let c_deleted = c.delete_point(PointId(0))?.system;
    out.push(NamedInstance::new("C", c));
    out.push(NamedInstance::new("C-point0", c_deleted));
    out.extend(Family::C44.instances()?);
    let (pg3, _) = projective_plane(3)?;
    out.push(NamedInstance::new("PG(2,3)-line0", pg3.delete_line(0)?));
    let (c34, _) = build_cnn(3)?;
    out.push(NamedInstance::new("C_{3,4}-line0", c34.delete_line(0)?));
    out.push(named("matching(4,3)", matching(4, 3))?);
    out.push(named("matching(2,4)", matching(2, 4))?);
    out.push(named("matching(2,3)", matching(2, 3))?);
    out.push(named("star(5,3)", star(5, 3))?);
    out.push(named("star(3,3)", star(3, 3))?);
    // Five lines through one point plus two disjoint lines: nu2 = 4, Delta = 5.
    let mut lines = star(5, 3)?.lines().to_vec();
    lines.extend([vec![11, 12, 13], vec![14, 15, 16]]);
    out.push(named("star(5,3)+matching(2,3)", LinearSystem::new(17, lines))?);
    out.push(named("line(3)", LinearSystem::new(3, vec![vec![0, 1, 2]]))?);
    out.push(named("path(3,3)", LinearSystem::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]))?);
    out.push(named(
        "triangle",
        LinearSystem::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]),
    )?);
    out.push(named(
        "cycle(6)",
        LinearSystem::new(6, (0..6).map(|i| vec![i, (i + 1) % 6]).collect()),
    )?);
    // Four 3-lines pairwise meeting in six distinct points.
    out.push(named(
        "K4-lines",
        LinearSystem::new(
            6,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 4, 5]],
        ),
    )?);
    out.push(named(
        "tree(3)",
        LinearSystem::new(
            9,
            vec![vec![0, 1, 3], vec![0, 2, 4], vec![1, 5, 6], vec![2, 7, 8]],
        ),
    )?);
    for seed in 1..=200 {
        out.push(NamedInstance::new(
            format!("random[{seed}]"),
            random_instance(seed, 4..=12)?,
        ));
    }
    Ok(out)
}

/// Solves and checks one instance.
pub fn check_instance(inst: &NamedInstance, budget: &SearchBudget) -> CheckReport {
    let s = &inst.system;
    let tau = transversal_number(s, budget);
    let nu2 = two_packing_number(s, budget);
    let t = Solved {
        value: tau.optimum,
        proven: tau.proven_optimal,
    };
    let v = Solved {
        value: nu2.optimum,
        proven: nu2.proven_optimal,
    };
    CheckReport {
        name: inst.name.clone(),
        summary: InstanceSummary {
            points: s.num_points(),
            lines: s.num_lines(),
            r: s.uniformity(),
            max_degree: s.max_degree(),
            tau: t,
            nu2: v,
            tau_nodes: tau.nodes_explored,
            nu2_nodes: nu2.nodes_explored,
        },
        checks: all_checks(s, t, v),
    }
}

/// Runs every check on each instance, solving instances in parallel; the
/// report keeps input order.
pub fn run_instances(instances: &[NamedInstance], budget: &SearchBudget) -> SuiteReport {
    SuiteReport {
        instances: instances
            .par_iter()
            .map(|inst| check_instance(inst, budget))
            .collect(),
    }
}

pub fn run_suite(family: &Family, budget: &SearchBudget) -> Result<SuiteReport> {
    Ok(run_instances(&family.instances()?, budget))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// No failure, but some value was not proven optimal or some check could
    /// not be decided.
    Unproven,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Unproven => 3,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Unproven => "unproven",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub instances: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn verdict(&self) -> Verdict {
        let checks = || self.instances.iter().flat_map(|r| &r.checks);
        if checks().any(|c| c.is_failure()) {
            Verdict::Fail
        } else if self.instances.iter().any(|r| !r.is_proven())
            || checks().any(|c| c.status == super::Status::Undecided && !c.experimental)
        {
            Verdict::Unproven
        } else {
            Verdict::Pass
        }
    }
}
