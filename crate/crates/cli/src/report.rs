use std::fmt::Write;

use serde::Serialize;

use linsys_core::solvers::{transversal_number, two_packing_number};
use linsys_core::verify::{render_text, SuiteReport, Verdict};
use linsys_core::{LinearSystem, PointId, SearchBudget, SolveResult};

use crate::{Format, What};

pub struct SolveOutput {
    pub text: String,
    pub proven: bool,
}

#[derive(Serialize)]
struct SolveDocument {
    points: usize,
    lines: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<SolveResult<PointId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu2: Option<SolveResult<usize>>,
}

fn section<W: ToString>(out: &mut String, name: &str, witness_name: &str, r: &SolveResult<W>) {
    let proven = if r.proven_optimal { "proven" } else { "budget exceeded" };
    let witness: Vec<String> = r.witness.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "{name}={} ({proven})", r.optimum);
    let _ = writeln!(out, "  {witness_name}: [{}]", witness.join(", "));
    let _ = writeln!(out, "  nodes: {}", r.nodes_explored);
    let trace: Vec<String> = r.incumbent_trace.iter().map(|(n, v)| format!("{v}@{n}")).collect();
    let _ = writeln!(out, "  incumbents: {}", trace.join(" "));
}

pub fn solve(s: &LinearSystem, what: What, budget: &SearchBudget, format: Format) -> SolveOutput {
    let tau = matches!(what, What::Tau | What::Both).then(|| transversal_number(s, budget));
    let nu2 = matches!(what, What::Nu2 | What::Both).then(|| two_packing_number(s, budget));
    let proven = tau.as_ref().is_none_or(|r| r.proven_optimal)
        && nu2.as_ref().is_none_or(|r| r.proven_optimal);
    let text = match format {
        Format::Json => {
            let doc = SolveDocument {
                points: s.num_points(),
                lines: s.num_lines(),
                tau,
                nu2,
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("report serialization is infallible");
            text.push('\n');
            text
        }
        Format::Text => {
            let mut text = format!("points={} lines={}\n", s.num_points(), s.num_lines());
            if let Some(r) = &tau {
                section(&mut text, "tau", "transversal", r);
            }
            if let Some(r) = &nu2 {
                section(&mut text, "nu2", "packing lines", r);
            }
            text
        }
    };
    SolveOutput { text, proven }
}

#[derive(Serialize)]
struct SuiteDocument<'a> {
    verdict: Verdict,
    #[serde(flatten)]
    report: &'a SuiteReport,
}

pub fn suite(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Text => render_text(report),
        Format::Json => {
            let doc = SuiteDocument {
                verdict: report.verdict(),
                report,
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("report serialization is infallible");
            text.push('\n');
            text
        }
    }
}
