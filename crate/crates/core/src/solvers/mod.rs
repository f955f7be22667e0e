//! Exact transversal and 2-packing numbers.
//!
//! Both optimizations are budgeted branch-and-bound searches. When the node
//! budget runs out the best solution found so far is returned with
//! `proven_optimal == false`. The exhaustive [`oracle`] functions share no
//! code with the searches and exist to cross-check them.

mod delta2;
pub mod oracle;
mod packing;
mod transversal;

use serde::Serialize;

pub use delta2::{
    delta2_transversal, maximum_independent_double_points, residual_lines, Delta2Transversal,
};
pub use packing::two_packing_number;
pub use transversal::{greedy_transversal, transversal_number};

use crate::system::{LinearSystem, PointId};

/// Node cap and witness policy for the exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    /// Return the lexicographically least optimal witness.
    pub deterministic: bool,
}

impl SearchBudget {
    pub const DEFAULT_MAX_NODES: u64 = 200_000_000;

    pub fn new(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: max_nodes.max(1),
            deterministic: true,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_MAX_NODES)
    }
}

/// Outcome of an exact search. `W` is [`PointId`] for transversals and a
/// line index for 2-packings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult<W> {
    pub optimum: usize,
    /// Sorted ascending.
    pub witness: Vec<W>,
    pub nodes_explored: u64,
    pub proven_optimal: bool,
    /// `(nodes, value)` each time the incumbent improved.
    pub incumbent_trace: Vec<(u64, usize)>,
}

/// Every line meets `points`.
pub fn is_transversal(s: &LinearSystem, points: &[PointId]) -> bool {
    let mut chosen = vec![false; s.num_points()];
    for p in points {
        match chosen.get_mut(p.0) {
            Some(c) => *c = true,
            None => return false,
        }
    }
    s.lines().iter().all(|l| l.iter().any(|&p| chosen[p]))
}

/// No point lies on three or more of the given lines.
pub fn is_two_packing(s: &LinearSystem, lines: &[usize]) -> bool {
    let mut usage = vec![0u8; s.num_points()];
    for &l in lines {
        let Some(line) = s.line(l) else { return false };
        for &p in line {
            usage[p] += 1;
            if usage[p] > 2 {
                return false;
            }
        }
    }
    let mut sorted = lines.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}
