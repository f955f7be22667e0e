use std::sync::OnceLock;

use num_rational::Rational64;

use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::{build_cnn, enumerate_c44};
use crate::error::{Error, Result};
use crate::solvers::{
    delta2_transversal, is_transversal, maximum_independent_double_points, residual_lines,
};
use crate::system::LinearSystem;

use super::{Check, Relation, Solved};

fn int(x: usize) -> Rational64 {
    Rational64::from_integer(x as i64)
}

fn ceil_half(x: usize) -> usize {
    x.div_ceil(2)
}

/// `(|P| + |L|) / (r + 1)` for an r-uniform system.
pub fn hy_ratio(s: &LinearSystem) -> Result<Rational64> {
    let r = s.uniformity().ok_or(Error::NotUniform)?;
    Ok(Rational64::new(
        (s.num_points() + s.num_lines()) as i64,
        (r + 1) as i64,
    ))
}

/// `⌈ν₂/2⌉ <= τ <= ν₂(ν₂-1)/2`.
///
/// The upper half is false for a single line and for two disjoint lines, so
/// it is only asserted when the system has at least three lines.
pub fn check_eq1(s: &LinearSystem, tau: Solved, nu2: Solved) -> Vec<Check> {
    let unproven = !(tau.proven && nu2.proven);
    let lower = Check::compare("eq1.lower", int(ceil_half(nu2.value)), Relation::Le, int(tau.value), unproven);
    let upper = if s.num_lines() >= 3 {
        Check::compare(
            "eq1.upper",
            int(tau.value),
            Relation::Le,
            int(nu2.value * nu2.value.saturating_sub(1) / 2),
            unproven,
        )
    } else {
        Check::skipped("eq1.upper", Relation::Le, "fewer than 3 lines")
    };
    vec![lower, upper]
}

/// `τ <= (|P|+|L|)/(r+1)`, strict when ν₂ is 2 or 3 and `|L| > ν₂`.
pub fn check_hy(s: &LinearSystem, tau: Solved, nu2: Solved) -> Vec<Check> {
    let Ok(ratio) = hy_ratio(s) else {
        return vec![
            Check::skipped("hy.bound", Relation::Le, "not uniform"),
            Check::skipped("hy.strict", Relation::Lt, "not uniform"),
        ];
    };
    let unproven = !(tau.proven && nu2.proven);
    let bound = Check::compare("hy.bound", int(tau.value), Relation::Le, ratio, !tau.proven);
    let strict = if matches!(nu2.value, 2 | 3) && s.num_lines() > nu2.value {
        Check::compare("hy.strict", int(tau.value), Relation::Lt, ratio, unproven)
    } else {
        Check::skipped("hy.strict", Relation::Lt, "needs nu2 in {2,3} and |L| > nu2")
    };
    vec![bound, strict]
}

const DELTA2_CHECKS: [(&str, Relation); 10] = [
    ("delta2.nu2_eq_lines", Relation::Eq),
    ("delta2.prop_lower", Relation::Le),
    ("delta2.prop_upper", Relation::Le),
    ("delta2.construction_misses", Relation::Eq),
    ("delta2.construction_size", Relation::Le),
    ("delta2.floor_lower", Relation::Le),
    ("delta2.floor_upper", Relation::Le),
    ("delta2.ratio", Relation::Le),
    ("delta2.residual_small", Relation::Eq),
    ("delta2.residual_large", Relation::Eq),
];

/// Everything asserted for systems of maximum degree 2.
///
/// The two residual-line statements are evaluated with a maximum set of
/// pairwise non-adjacent degree-2 points; with a merely maximal set the second
/// one has counterexamples.
pub fn check_delta2(s: &LinearSystem, tau: Solved, nu2: Solved) -> Vec<Check> {
    let profile = s.degree_profile();
    if profile.max_degree != 2 {
        return DELTA2_CHECKS
            .iter()
            .map(|&(name, rel)| Check::skipped(name, rel, "max degree is not 2"))
            .collect();
    }
    let unproven = !(tau.proven && nu2.proven);
    let mut out = Vec::with_capacity(DELTA2_CHECKS.len());
    out.push(Check::compare(
        "delta2.nu2_eq_lines",
        int(nu2.value),
        Relation::Eq,
        int(s.num_lines()),
        !nu2.proven,
    ));
    out.push(Check::compare(
        "delta2.prop_lower",
        int(ceil_half(nu2.value)),
        Relation::Le,
        int(tau.value),
        unproven,
    ));
    out.push(Check::compare(
        "delta2.prop_upper",
        int(tau.value),
        Relation::Le,
        int(nu2.value.saturating_sub(1)),
        unproven,
    ));

    let built = delta2_transversal(s).expect("max degree checked above");
    let missed = residual_lines(s, &built.transversal).len();
    debug_assert_eq!(missed == 0, is_transversal(s, &built.transversal));
    out.push(Check::compare("delta2.construction_misses", int(missed), Relation::Eq, int(0), false));
    out.push(Check::compare(
        "delta2.construction_size",
        int(built.transversal.len()),
        Relation::Le,
        int(nu2.value.saturating_sub(1)),
        !nu2.proven,
    ));

    match hy_ratio(s) {
        Ok(ratio) if profile.degrees.iter().all(|&d| d > 0) => {
            let floor = int(ratio.floor().to_integer() as usize);
            out.push(Check::compare(
                "delta2.floor_lower",
                int(ceil_half(nu2.value)),
                Relation::Le,
                floor,
                !nu2.proven,
            ));
            out.push(Check::compare(
                "delta2.floor_upper",
                floor,
                Relation::Le,
                int(nu2.value.saturating_sub(1)),
                !nu2.proven,
            ));
        }
        Ok(_) => {
            for name in ["delta2.floor_lower", "delta2.floor_upper"] {
                out.push(Check::skipped(name, Relation::Le, "has points on no line"));
            }
        }
        Err(_) => {
            for name in ["delta2.floor_lower", "delta2.floor_upper"] {
                out.push(Check::skipped(name, Relation::Le, "not uniform"));
            }
        }
    }
    out.push(match hy_ratio(s) {
        Ok(ratio) => Check::compare("delta2.ratio", int(tau.value), Relation::Le, ratio, !tau.proven),
        Err(_) => Check::skipped("delta2.ratio", Relation::Le, "not uniform"),
    });

    let independent = maximum_independent_double_points(s);
    let residual = residual_lines(s, &independent).len();
    out.push(if residual <= 1 {
        Check::compare(
            "delta2.residual_small",
            int(tau.value),
            Relation::Eq,
            int(ceil_half(nu2.value)),
            unproven,
        )
        .with_note(format!("{residual} residual lines"))
    } else {
        Check::skipped("delta2.residual_small", Relation::Eq, format!("{residual} residual lines"))
    });
    out.push(if nu2.value >= 2 && residual == nu2.value - 2 {
        Check::compare(
            "delta2.residual_large",
            int(tau.value),
            Relation::Eq,
            int(nu2.value - 1),
            unproven,
        )
        .with_note(format!("{residual} residual lines"))
    } else {
        Check::skipped(
            "delta2.residual_large",
            Relation::Eq,
            format!("{residual} residual lines, nu2 - 2 = {}", nu2.value.saturating_sub(2)),
        )
    });
    out
}

/// `r(r²-3)τ <= (r-2)(r+1)|P| + (r-1)²|L| + r - 1` for odd `r >= 3` and
/// maximum degree at most 2.
///
/// Two disjoint 3-lines violate it (36 > 34), so it is only asserted on
/// connected systems, and reported as experimental.
pub fn check_dorfling_refined(s: &LinearSystem, tau: Solved) -> Vec<Check> {
    const NAME: &str = "dorfling.refined";
    let Some(r) = s.uniformity() else {
        return vec![Check::skipped(NAME, Relation::Le, "not uniform").experimental()];
    };
    if r < 3 || r % 2 == 0 {
        return vec![Check::skipped(NAME, Relation::Le, format!("r = {r} is not odd and >= 3")).experimental()];
    }
    if s.max_degree() > 2 {
        return vec![Check::skipped(NAME, Relation::Le, "max degree exceeds 2").experimental()];
    }
    if !s.is_connected() {
        return vec![Check::skipped(NAME, Relation::Le, "not connected").experimental()];
    }
    let (r, n, m, t) = (r as i64, s.num_points() as i64, s.num_lines() as i64, tau.value as i64);
    let lhs = r * (r * r - 3) * t;
    let rhs = (r - 2) * (r + 1) * n + (r - 1) * (r - 1) * m + r - 1;
    vec![Check::compare(NAME, lhs, Relation::Le, rhs, !tau.proven).experimental()]
}

/// For uniform systems with `ν₂ - 1 <= r`: `⌈ν₂/2⌉ <= ratio`, and `τ <= ratio`
/// whenever `τ = ⌈ν₂/2⌉`.
pub fn check_nu2_le_r(s: &LinearSystem, tau: Solved, nu2: Solved) -> Vec<Check> {
    let (Some(r), Ok(ratio)) = (s.uniformity(), hy_ratio(s)) else {
        return vec![
            Check::skipped("nu2_le_r.bound", Relation::Le, "not uniform"),
            Check::skipped("nu2_le_r.tau", Relation::Le, "not uniform"),
        ];
    };
    if nu2.value > r + 1 {
        let why = format!("nu2 - 1 = {} exceeds r = {r}", nu2.value - 1);
        return vec![
            Check::skipped("nu2_le_r.bound", Relation::Le, why.clone()),
            Check::skipped("nu2_le_r.tau", Relation::Le, why),
        ];
    }
    let unproven = !(tau.proven && nu2.proven);
    let half = ceil_half(nu2.value);
    let bound = Check::compare("nu2_le_r.bound", int(half), Relation::Le, ratio, !nu2.proven);
    let tau_check = if tau.value == half {
        Check::compare("nu2_le_r.tau", int(tau.value), Relation::Le, ratio, unproven)
    } else {
        Check::skipped("nu2_le_r.tau", Relation::Le, "tau differs from ceil(nu2/2)")
    };
    vec![bound, tau_check]
}

/// For uniform systems with `Δ >= ν₂ - 1`: `ν₂ - 1 <= ratio`, and
/// `τ <= ratio` whenever `τ <= ν₂ - 1`.
pub fn check_delta_ge(s: &LinearSystem, tau: Solved, nu2: Solved) -> Vec<Check> {
    let Ok(ratio) = hy_ratio(s) else {
        return vec![
            Check::skipped("delta_ge.bound", Relation::Le, "not uniform"),
            Check::skipped("delta_ge.tau", Relation::Le, "not uniform"),
        ];
    };
    let delta = s.max_degree();
    if delta + 1 < nu2.value {
        let why = format!("max degree {delta} below nu2 - 1 = {}", nu2.value - 1);
        return vec![
            Check::skipped("delta_ge.bound", Relation::Le, why.clone()),
            Check::skipped("delta_ge.tau", Relation::Le, why),
        ];
    }
    let unproven = !(tau.proven && nu2.proven);
    let bound = Check::compare(
        "delta_ge.bound",
        int(nu2.value.saturating_sub(1)),
        Relation::Le,
        ratio,
        !nu2.proven,
    );
    let tau_check = if nu2.value >= 1 && tau.value < nu2.value {
        Check::compare("delta_ge.tau", int(tau.value), Relation::Le, ratio, unproven)
    } else {
        Check::skipped("delta_ge.tau", Relation::Le, "tau exceeds nu2 - 1")
    };
    vec![bound, tau_check]
}

struct Reference {
    c34: CanonicalForm,
    c44: Vec<CanonicalForm>,
}

fn reference() -> &'static std::result::Result<Reference, Error> {
    static REF: OnceLock<std::result::Result<Reference, Error>> = OnceLock::new();
    REF.get_or_init(|| {
        let (c34, _) = build_cnn(3)?;
        Ok(Reference {
            c34: canonical_form(&c34)?,
            c44: enumerate_c44()?.into_iter().map(|m| m.canonical).collect(),
        })
    })
}

/// Statements about systems with `ν₂ = 4`: the bound `τ <= ratio` for
/// uniform systems with more than four lines, and the split by maximum
/// degree into the exceptional classes with `τ = 4` and everything else with
/// `τ <= 3`.
pub fn check_nu2_four(s: &LinearSystem, tau: Solved, nu2: Solved) -> Vec<Check> {
    const NAMES: [(&str, Relation); 4] = [
        ("nu2_4.ratio", Relation::Le),
        ("nu2_4.delta_ge5", Relation::Le),
        ("nu2_4.delta3", Relation::Le),
        ("nu2_4.delta4", Relation::Le),
    ];
    if nu2.value != 4 {
        let why = if nu2.proven { "nu2 is not 4" } else { "nu2 not proven" };
        return NAMES.iter().map(|&(n, r)| Check::skipped(n, r, why)).collect();
    }
    let unproven = !(tau.proven && nu2.proven);
    let mut out = Vec::with_capacity(4);
    out.push(match hy_ratio(s) {
        Ok(ratio) if s.num_lines() > 4 => {
            Check::compare("nu2_4.ratio", int(tau.value), Relation::Le, ratio, unproven)
        }
        Ok(_) => Check::skipped("nu2_4.ratio", Relation::Le, "at most 4 lines"),
        Err(_) => Check::skipped("nu2_4.ratio", Relation::Le, "not uniform"),
    });

    let delta = s.max_degree();
    out.push(if delta >= 5 {
        Check::compare("nu2_4.delta_ge5", int(tau.value), Relation::Le, int(3), unproven)
    } else {
        Check::skipped("nu2_4.delta_ge5", Relation::Le, format!("max degree {delta}"))
    });

    let class_check = |name: &'static str, in_class: Result<bool>| -> Check {
        match in_class {
            Ok(true) => Check::compare(name, int(tau.value), Relation::Eq, int(4), unproven)
                .with_note("exceptional class"),
            Ok(false) => Check::compare(name, int(tau.value), Relation::Le, int(3), unproven),
            Err(e) => Check {
                status: super::Status::Undecided,
                ..Check::skipped(name, Relation::Le, e.to_string())
            },
        }
    };
    let lookup = |pick: fn(&Reference, &CanonicalForm) -> bool| -> Result<bool> {
        let reference = reference().as_ref().map_err(Clone::clone)?;
        Ok(pick(reference, &canonical_form(s)?))
    };
    out.push(if delta == 3 {
        class_check("nu2_4.delta3", lookup(|r, f| r.c34 == *f))
    } else {
        Check::skipped("nu2_4.delta3", Relation::Le, format!("max degree {delta}"))
    });
    out.push(if delta == 4 {
        class_check("nu2_4.delta4", lookup(|r, f| r.c44.contains(f)))
    } else {
        Check::skipped("nu2_4.delta4", Relation::Le, format!("max degree {delta}"))
    });
    out
}

/// Intersecting, maximum degree 2, `ν₂` even and equal to `r + 1` is claimed
/// to force `τ = ratio`. Here the ratio is `(ν₂+1)/2`, never an integer, so
/// the check is carried as experimental.
pub fn check_intersecting_delta2_equality(s: &LinearSystem, tau: Solved, nu2: Solved) -> Vec<Check> {
    const NAME: &str = "intersecting_delta2.equality";
    let applies = s.uniformity().is_some_and(|r| nu2.value == r + 1)
        && nu2.value.is_multiple_of(2)
        && s.max_degree() == 2
        && s.is_intersecting();
    if !applies {
        return vec![Check::skipped(
            NAME,
            Relation::Eq,
            "needs intersecting, max degree 2, nu2 even and nu2 = r + 1",
        )
        .experimental()];
    }
    let ratio = hy_ratio(s).expect("uniform");
    vec![Check::compare(NAME, int(tau.value), Relation::Eq, ratio, !(tau.proven && nu2.proven)).experimental()]
}

/// Every check, in report order.
pub fn all_checks(s: &LinearSystem, tau: Solved, nu2: Solved) -> Vec<Check> {
    let mut out = check_eq1(s, tau, nu2);
    out.extend(check_hy(s, tau, nu2));
    out.extend(check_delta2(s, tau, nu2));
    out.extend(check_dorfling_refined(s, tau));
    out.extend(check_nu2_le_r(s, tau, nu2));
    out.extend(check_delta_ge(s, tau, nu2));
    out.extend(check_nu2_four(s, tau, nu2));
    out.extend(check_intersecting_delta2_equality(s, tau, nu2));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matching, pad_uniform, projective_plane, star};
    use crate::verify::Status;

    fn sys(n: usize, lines: &[&[usize]]) -> LinearSystem {
        LinearSystem::new(n, lines.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    fn p(v: usize) -> Solved {
        Solved::proven(v)
    }

    fn status(checks: &[Check], name: &str) -> Status {
        checks.iter().find(|c| c.name == name).unwrap().status
    }

    fn ratio(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn ratios() {
        assert_eq!(hy_ratio(&build_cnn(3).unwrap().0), Ok(ratio(4, 1)));
        assert_eq!(hy_ratio(&build_cnn(5).unwrap().0), Ok(ratio(6, 1)));
        let (padded, _) = pad_uniform(&build_cnn(3).unwrap().0, 4).unwrap();
        assert_eq!(hy_ratio(&padded), Ok(ratio(24, 5)));
        // 11 points and 5 lines.
        assert_eq!(hy_ratio(&star(5, 3).unwrap()), Ok(ratio(4, 1)));
        let mixed = sys(4, &[&[0, 1, 2], &[2, 3]]);
        assert_eq!(hy_ratio(&mixed), Err(Error::NotUniform));
    }

    #[test]
    fn eq1_examples() {
        let c34 = build_cnn(3).unwrap().0;
        let out = check_eq1(&c34, p(4), p(4));
        assert_eq!(status(&out, "eq1.lower"), Status::Pass);
        assert_eq!(out[0].lhs, Some(ratio(2, 1)));
        assert_eq!(out[1].rhs, Some(ratio(6, 1)));
        assert_eq!(status(&out, "eq1.upper"), Status::Pass);

        let out = check_eq1(&star(5, 3).unwrap(), p(1), p(2));
        assert_eq!(status(&out, "eq1.lower"), Status::Equality);
        assert_eq!(status(&out, "eq1.upper"), Status::Equality);

        let out = check_eq1(&matching(4, 3).unwrap(), p(4), p(4));
        assert!(out.iter().all(|c| c.status == Status::Pass));
    }

    #[test]
    fn eq1_upper_needs_three_lines() {
        // tau = 2 > nu2(nu2-1)/2 = 1 for two disjoint lines.
        let two = matching(2, 3).unwrap();
        assert_eq!(status(&check_eq1(&two, p(2), p(2)), "eq1.upper"), Status::SkippedPrecondition);
        let single = sys(3, &[&[0, 1, 2]]);
        assert_eq!(status(&check_eq1(&single, p(1), p(1)), "eq1.upper"), Status::SkippedPrecondition);
    }

    #[test]
    fn unproven_never_fails() {
        let c34 = build_cnn(3).unwrap().0;
        let tau = Solved {
            value: 9,
            proven: false,
        };
        let out = check_hy(&c34, tau, p(4));
        assert_eq!(out[0].status, Status::Undecided);
        assert!(out[0].unproven);
        assert!(!out[0].is_failure());
        assert_eq!(check_hy(&c34, p(9), p(4))[0].status, Status::Fail);
    }

    #[test]
    fn hy_examples() {
        let c34 = build_cnn(3).unwrap().0;
        assert_eq!(status(&check_hy(&c34, p(4), p(4)), "hy.bound"), Status::Equality);
        let (padded, _) = pad_uniform(&c34, 4).unwrap();
        let out = check_hy(&padded, p(4), p(4));
        assert_eq!(status(&out, "hy.bound"), Status::Pass);
        let out = check_hy(&star(5, 3).unwrap(), p(1), p(2));
        assert_eq!(status(&out, "hy.strict"), Status::Pass);
        assert_eq!(out[1].relation, Relation::Lt);
        // Strictness is demanded: a tie with nu2 = 2 and more lines fails.
        let out = check_hy(&star(5, 3).unwrap(), p(4), p(2));
        assert_eq!(status(&out, "hy.bound"), Status::Equality);
        assert_eq!(status(&out, "hy.strict"), Status::Fail);
    }

    #[test]
    fn delta2_examples() {
        let cycle = LinearSystem::new(6, (0..6).map(|i| vec![i, (i + 1) % 6]).collect()).unwrap();
        let out = check_delta2(&cycle, p(3), p(6));
        assert!(out.iter().all(|c| !c.is_failure()), "{out:?}");
        assert_eq!(status(&out, "delta2.construction_size"), Status::Pass);
        assert_eq!(status(&out, "delta2.prop_lower"), Status::Equality);

        let triangle = sys(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let out = check_delta2(&triangle, p(2), p(3));
        assert_eq!(status(&out, "delta2.prop_upper"), Status::Equality);

        let path = sys(5, &[&[0, 1, 2], &[2, 3, 4]]);
        let out = check_delta2(&path, p(1), p(2));
        assert_eq!(status(&out, "delta2.residual_small"), Status::Equality);

        let skipped = check_delta2(&star(3, 3).unwrap(), p(1), p(2));
        assert!(skipped.iter().all(|c| c.status == Status::SkippedPrecondition));
    }

    #[test]
    fn residual_large_uses_a_maximum_independent_set() {
        // Greedy picks point 0 and leaves two residual lines = nu2 - 2, which
        // would demand tau = 3; tau is 2 and the maximum set leaves none.
        let tree = sys(9, &[&[0, 1, 3], &[0, 2, 4], &[1, 5, 6], &[2, 7, 8]]);
        let out = check_delta2(&tree, p(2), p(4));
        assert_eq!(status(&out, "delta2.residual_large"), Status::SkippedPrecondition);
        assert!(out.iter().all(|c| !c.is_failure()));
    }

    #[test]
    fn dorfling_refined_probe() {
        let single = sys(3, &[&[0, 1, 2]]);
        let out = check_dorfling_refined(&single, p(1));
        assert_eq!(out[0].lhs, Some(ratio(18, 1)));
        assert_eq!(out[0].rhs, Some(ratio(18, 1)));
        assert_eq!(out[0].status, Status::Equality);
        assert!(out[0].experimental);

        // 36 > 34: only excluded by the connectivity hypothesis.
        let two = matching(2, 3).unwrap();
        assert_eq!(
            check_dorfling_refined(&two, p(2))[0].status,
            Status::SkippedPrecondition
        );

        let even = matching(1, 4).unwrap();
        assert_eq!(
            check_dorfling_refined(&even, p(1))[0].status,
            Status::SkippedPrecondition
        );
    }

    #[test]
    fn nu2_le_r_examples() {
        let c56 = build_cnn(5).unwrap().0;
        let out = check_nu2_le_r(&c56, p(6), p(6));
        assert_eq!(status(&out, "nu2_le_r.bound"), Status::Pass);
        assert_eq!(out[0].lhs, Some(ratio(3, 1)));
        let line = sys(4, &[&[0, 1, 2, 3]]);
        let out = check_nu2_le_r(&line, p(1), p(1));
        assert_eq!(status(&out, "nu2_le_r.bound"), Status::Equality);
        let out = check_nu2_le_r(&matching(2, 4).unwrap(), p(2), p(2));
        assert_eq!(out[0].rhs, Some(ratio(2, 1)));
        assert_eq!(status(&out, "nu2_le_r.bound"), Status::Pass);
    }

    #[test]
    fn delta_ge_examples() {
        let out = check_delta_ge(&star(5, 3).unwrap(), p(1), p(2));
        assert_eq!(status(&out, "delta_ge.bound"), Status::Pass);
        let pg3 = projective_plane(3).unwrap().0;
        let out = check_delta_ge(&pg3, p(4), p(4));
        assert_eq!(out[0].rhs, Some(ratio(26, 5)));
        assert_eq!(status(&out, "delta_ge.bound"), Status::Pass);
        let c34 = build_cnn(3).unwrap().0;
        let out = check_delta_ge(&c34, p(4), p(4));
        assert_eq!((out[0].lhs, out[0].rhs), (Some(ratio(3, 1)), Some(ratio(4, 1))));
        assert_eq!(status(&out, "delta_ge.tau"), Status::SkippedPrecondition);
    }

    #[test]
    fn nu2_four_classes() {
        let c34 = build_cnn(3).unwrap().0;
        let out = check_nu2_four(&c34, p(4), p(4));
        assert_eq!(status(&out, "nu2_4.delta3"), Status::Equality);
        assert_eq!(status(&out, "nu2_4.ratio"), Status::Equality);
        let pg3 = projective_plane(3).unwrap().0;
        assert_eq!(status(&check_nu2_four(&pg3, p(4), p(4)), "nu2_4.delta4"), Status::Equality);
        // A wrong tau on a Delta=3 system outside the class is caught.
        let c34_minus = c34.delete_line(0).unwrap();
        assert_eq!(status(&check_nu2_four(&c34_minus, p(4), p(4)), "nu2_4.delta3"), Status::Fail);
    }

    #[test]
    fn intersecting_equality_never_integral() {
        let k4 = sys(6, &[&[0, 1, 2], &[0, 3, 4], &[1, 3, 5], &[2, 4, 5]]);
        let out = check_intersecting_delta2_equality(&k4, p(2), p(4));
        assert_eq!(out[0].rhs, Some(ratio(5, 2)));
        assert_eq!(out[0].status, Status::Fail);
        assert!(!out[0].is_failure());
    }
}
