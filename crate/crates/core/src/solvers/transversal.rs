use crate::system::{LinearSystem, PointId};

use super::{SearchBudget, SolveResult};

/// Repeatedly takes a point on the most still-uncovered lines (least index on
/// ties). Feasible, not necessarily minimum.
pub fn greedy_transversal(s: &LinearSystem) -> Vec<PointId> {
    let through = s.point_lines();
    let mut covered = vec![false; s.num_lines()];
    let mut remaining = s.num_lines();
    let mut out = Vec::new();
    while remaining > 0 {
        let (best, _) = through
            .iter()
            .enumerate()
            .map(|(p, ls)| (p, ls.iter().filter(|&&l| !covered[l]).count()))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        for &l in &through[best] {
            if !covered[l] {
                covered[l] = true;
                remaining -= 1;
            }
        }
        out.push(PointId(best));
    }
    out.sort();
    out
}

struct TauSearch<'a> {
    lines: &'a [Vec<usize>],
    through: Vec<Vec<usize>>,
    hits: Vec<u32>,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    aborted: bool,
    trace: Vec<(u64, usize)>,
    mark: Vec<u32>,
    stamp: u32,
    scratch: Vec<(usize, usize)>,
}

impl<'a> TauSearch<'a> {
    fn new(s: &'a LinearSystem, max_nodes: u64) -> Self {
        TauSearch {
            lines: s.lines(),
            through: s.point_lines(),
            hits: vec![0; s.num_lines()],
            forbidden: vec![false; s.num_points()],
            chosen: Vec::new(),
            best: Vec::new(),
            nodes: 0,
            max_nodes,
            aborted: false,
            trace: Vec::new(),
            mark: vec![0; s.num_points()],
            stamp: 0,
            scratch: Vec::new(),
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.aborted = true;
        }
        !self.aborted
    }

    fn choose(&mut self, p: usize) {
        self.chosen.push(p);
        for &l in &self.through[p] {
            self.hits[l] += 1;
        }
    }

    fn unchoose(&mut self) {
        let p = self.chosen.pop().expect("unchoose without choose");
        for &l in &self.through[p] {
            self.hits[l] -= 1;
        }
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        self.stamp
    }

    /// Greedy packing of uncovered lines whose usable points are pairwise
    /// disjoint; each needs its own cover point. Points below `floor` or
    /// forbidden are not usable.
    fn packing_bound(&mut self, floor: usize) -> usize {
        let mut cands = std::mem::take(&mut self.scratch);
        cands.clear();
        for (l, line) in self.lines.iter().enumerate() {
            if self.hits[l] == 0 {
                let opts = line
                    .iter()
                    .filter(|&&p| p >= floor && !self.forbidden[p])
                    .count();
                cands.push((opts, l));
            }
        }
        cands.sort_unstable();
        let stamp = self.next_stamp();
        let mut count = 0;
        for &(_, l) in &cands {
            let usable = |p: &usize| *p >= floor && !self.forbidden[*p];
            if self.lines[l]
                .iter()
                .filter(|p| usable(p))
                .all(|&p| self.mark[p] != stamp)
            {
                for &p in self.lines[l].iter().filter(|p| usable(p)) {
                    self.mark[p] = stamp;
                }
                count += 1;
            }
        }
        self.scratch = cands;
        count
    }

    /// Branch on the uncovered line with the fewest usable points; in branch
    /// `i` its first `i` points are forbidden.
    fn branch_and_bound(&mut self) {
        if !self.tick() {
            return;
        }
        let mut target = None;
        let mut fewest = usize::MAX;
        for (l, line) in self.lines.iter().enumerate() {
            if self.hits[l] > 0 {
                continue;
            }
            let opts = line.iter().filter(|&&p| !self.forbidden[p]).count();
            if opts == 0 {
                return;
            }
            if opts < fewest {
                fewest = opts;
                target = Some(l);
            }
        }
        let Some(target) = target else {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
                self.trace.push((self.nodes, self.best.len()));
            }
            return;
        };
        if self.chosen.len() + 1 >= self.best.len() {
            return;
        }
        if self.chosen.len() + self.packing_bound(0) >= self.best.len() {
            return;
        }
        let opts: Vec<usize> = self.lines[target]
            .iter()
            .copied()
            .filter(|&p| !self.forbidden[p])
            .collect();
        for (i, &p) in opts.iter().enumerate() {
            self.choose(p);
            self.branch_and_bound();
            self.unchoose();
            if self.aborted {
                for &f in &opts[..i] {
                    self.forbidden[f] = false;
                }
                return;
            }
            self.forbidden[p] = true;
        }
        for &p in &opts {
            self.forbidden[p] = false;
        }
    }

    /// Depth-first over increasing point sequences, so the first transversal
    /// of size `size` found is the lexicographically least one.
    fn least_of_size(&mut self, start: usize, size: usize) -> bool {
        if !self.tick() {
            return false;
        }
        let mut limit = usize::MAX;
        let mut any_uncovered = false;
        for (l, line) in self.lines.iter().enumerate() {
            if self.hits[l] == 0 {
                any_uncovered = true;
                limit = limit.min(*line.last().expect("lines are nonempty"));
            }
        }
        if !any_uncovered {
            return self.chosen.len() == size;
        }
        let left = size - self.chosen.len();
        if left == 0 || limit < start {
            return false;
        }
        if self.packing_bound(start) > left {
            return false;
        }
        for p in start..=limit {
            if self.through[p].iter().all(|&l| self.hits[l] > 0) {
                continue;
            }
            self.choose(p);
            if self.least_of_size(p + 1, size) {
                return true;
            }
            self.unchoose();
            if self.aborted {
                return false;
            }
        }
        false
    }
}

/// Minimum transversal by branch-and-bound, warm-started from
/// [`greedy_transversal`].
pub fn transversal_number(s: &LinearSystem, budget: &SearchBudget) -> SolveResult<PointId> {
    let mut search = TauSearch::new(s, budget.max_nodes);
    search.best = greedy_transversal(s).into_iter().map(PointId::index).collect();
    search.trace.push((0, search.best.len()));
    search.branch_and_bound();

    let mut proven = !search.aborted;
    let optimum = search.best.len();
    let mut witness = search.best.clone();
    if proven && budget.deterministic {
        search.chosen.clear();
        search.hits.iter_mut().for_each(|h| *h = 0);
        search.forbidden.iter_mut().for_each(|f| *f = false);
        if search.least_of_size(0, optimum) {
            witness = search.chosen.clone();
        } else {
            debug_assert!(search.aborted, "an optimal transversal exists");
            proven = false;
        }
    }
    witness.sort_unstable();
    SolveResult {
        optimum,
        witness: witness.into_iter().map(PointId).collect(),
        nodes_explored: search.nodes.min(budget.max_nodes),
        proven_optimal: proven,
        incumbent_trace: search.trace,
    }
}
