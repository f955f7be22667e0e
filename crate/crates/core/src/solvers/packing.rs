use crate::system::LinearSystem;

use super::{SearchBudget, SolveResult};

struct PackingSearch<'a> {
    lines: &'a [Vec<usize>],
    usage: Vec<u8>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    aborted: bool,
    trace: Vec<(u64, usize)>,
}

impl PackingSearch<'_> {
    fn fits(&self, l: usize) -> bool {
        self.lines[l].iter().all(|&p| self.usage[p] < 2)
    }

    fn set(&mut self, l: usize, add: bool) {
        for &p in &self.lines[l] {
            if add {
                self.usage[p] += 1;
            } else {
                self.usage[p] -= 1;
            }
        }
    }

    /// Include/exclude on lines in index order, include first. With pruning on
    /// `<=`, the first packing of maximum size reached is the
    /// lexicographically least one.
    fn search(&mut self, next: usize) {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.aborted = true;
            return;
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            self.trace.push((self.nodes, self.best.len()));
        }
        if next == self.lines.len() {
            return;
        }
        let open = (next..self.lines.len()).filter(|&l| self.fits(l)).count();
        if self.chosen.len() + open <= self.best.len() {
            return;
        }
        if self.fits(next) {
            self.set(next, true);
            self.chosen.push(next);
            self.search(next + 1);
            self.chosen.pop();
            self.set(next, false);
            if self.aborted {
                return;
            }
        }
        self.search(next + 1);
    }
}

/// Maximum set of lines with no point on three of them.
pub fn two_packing_number(s: &LinearSystem, budget: &SearchBudget) -> SolveResult<usize> {
    let mut search = PackingSearch {
        lines: s.lines(),
        usage: vec![0; s.num_points()],
        chosen: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        max_nodes: budget.max_nodes,
        aborted: false,
        trace: Vec::new(),
    };
    search.search(0);
    SolveResult {
        optimum: search.best.len(),
        witness: search.best,
        nodes_explored: search.nodes.min(budget.max_nodes),
        proven_optimal: !search.aborted,
        incumbent_trace: search.trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matching, star};
    use crate::solvers::is_two_packing;

    #[test]
    fn star_and_matching() {
        let b = SearchBudget::default();
        let r = two_packing_number(&star(5, 3).unwrap(), &b);
        assert_eq!(r.optimum, 2);
        assert_eq!(r.witness, vec![0, 1]);
        assert_eq!(two_packing_number(&matching(4, 3).unwrap(), &b).optimum, 4);
        assert_eq!(two_packing_number(&LinearSystem::empty(2), &b).optimum, 0);
    }

    #[test]
    fn unproven_on_tiny_budget() {
        let s = star(6, 2).unwrap();
        let r = two_packing_number(&s, &SearchBudget::new(2));
        assert!(!r.proven_optimal);
        assert!(is_two_packing(&s, &r.witness));
    }
}
