use std::fmt::Write;

use super::{Check, CheckReport, Solved, Status, SuiteReport};

fn solved(s: Solved) -> String {
    if s.proven {
        s.value.to_string()
    } else {
        format!("{} (unproven)", s.value)
    }
}

fn check_line(out: &mut String, c: &Check) {
    let _ = write!(out, "  {:<30} ", c.name);
    match (c.lhs, c.rhs) {
        (Some(l), Some(r)) => {
            let _ = write!(out, "{l} {} {r}", c.relation);
        }
        _ => out.push('-'),
    }
    let _ = write!(out, "  {}", c.status);
    if c.unproven && c.status != Status::SkippedPrecondition {
        out.push_str(" [unproven]");
    }
    if c.experimental {
        out.push_str(" [experimental]");
    }
    if let Some(note) = &c.note {
        let _ = write!(out, "  ({note})");
    }
    out.push('\n');
}

fn instance(out: &mut String, report: &CheckReport) {
    let s = &report.summary;
    let r = s.r.map_or_else(|| "mixed".to_string(), |r| r.to_string());
    let _ = writeln!(
        out,
        "{}: points={} lines={} r={r} Delta={} tau={} nu2={} nodes={}/{}",
        report.name,
        s.points,
        s.lines,
        s.max_degree,
        solved(s.tau),
        solved(s.nu2),
        s.tau_nodes,
        s.nu2_nodes,
    );
    for c in &report.checks {
        check_line(out, c);
    }
}

/// Line-oriented rendering of a suite report, ending in a verdict line.
pub fn render_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    for r in &report.instances {
        instance(&mut out, r);
    }
    let failures: usize = report.instances.iter().map(|r| r.failures().count()).sum();
    let _ = writeln!(
        out,
        "verdict: {} ({} instances, {failures} failures)",
        report.verdict(),
        report.instances.len()
    );
    out
}
