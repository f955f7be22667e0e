//! Hypergraph isomorphism up to reduction, via canonical labeling.
//!
//! The incidence graph (points and lines as two vertex classes) is refined to
//! an equitable ordered partition; non-discrete partitions are split by
//! individualizing each vertex of the first non-singleton cell in turn. Every
//! leaf gives a point labeling, and the lexicographically least relabeled line
//! list over all leaves is the canonical form. The set of leaves is
//! isomorphism-invariant, so equal forms mean isomorphic systems.
//!
//! Automorphisms are picked up whenever two leaves give the same relabeled
//! system; children of a node that lie in one orbit of the automorphisms
//! fixing that node's individualized vertices are explored only once.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::io::encode_lines;
use crate::system::{LinearSystem, ReducedSystem};

/// Default node cap for the labeling search.
pub const DEFAULT_ISO_BUDGET: u64 = 2_000_000;

/// Canonical encoding of the reduced system, in the instance file format.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Incidence {
    num_points: usize,
    adj: Vec<Vec<usize>>,
    lines: Vec<Vec<usize>>,
    multiplicity: Vec<usize>,
}

impl Incidence {
    fn new(r: &ReducedSystem) -> Self {
        let s = &r.system;
        let n = s.num_points();
        let mut adj = vec![Vec::new(); n + s.num_lines()];
        for (l, line) in s.lines().iter().enumerate() {
            for &p in line {
                adj[p].push(n + l);
                adj[n + l].push(p);
            }
        }
        Incidence {
            num_points: n,
            adj,
            lines: s.lines().to_vec(),
            multiplicity: r.multiplicity.clone(),
        }
    }

    fn initial_partition(&self) -> Vec<Vec<usize>> {
        // Points before lines; points by degree, lines by multiplicity and size.
        let mut groups: BTreeMap<(bool, usize, usize), Vec<usize>> = BTreeMap::new();
        for (v, nbrs) in self.adj.iter().enumerate() {
            let key = match v.checked_sub(self.num_points) {
                None => (false, 0, nbrs.len()),
                Some(l) => (true, self.multiplicity[l], nbrs.len()),
            };
            groups.entry(key).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Splits cells by the multiset of neighbouring cells until stable.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let mut cell_of = vec![0; self.adj.len()];
        loop {
            for (c, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = c;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut by_sig: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let mut sig: Vec<usize> = self.adj[v].iter().map(|&u| cell_of[u]).collect();
                    sig.sort_unstable();
                    by_sig.entry(sig).or_default().push(v);
                }
                changed |= by_sig.len() > 1;
                next.extend(by_sig.into_values());
            }
            *cells = next;
            if !changed {
                return;
            }
        }
    }

    fn certificate(&self, cells: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut label = vec![0; self.num_points];
        let mut next = 0;
        for cell in cells {
            let v = cell[0];
            if v < self.num_points {
                label[v] = next;
                next += 1;
            }
        }
        let mut lines: Vec<Vec<usize>> = self
            .lines
            .iter()
            .zip(&self.multiplicity)
            .flat_map(|(l, &k)| {
                let mut m: Vec<usize> = l.iter().map(|&p| label[p]).collect();
                m.sort_unstable();
                std::iter::repeat_n(m, k)
            })
            .collect();
        lines.sort();
        lines
    }
}

struct Search<'a> {
    graph: &'a Incidence,
    nodes: u64,
    budget: u64,
    /// Certificate and point labeling of the first and of the best leaf.
    first: Option<(Vec<Vec<usize>>, Vec<usize>)>,
    best: Option<(Vec<Vec<usize>>, Vec<usize>)>,
    /// Automorphisms found so far, as permutations of all vertices.
    generators: Vec<Vec<usize>>,
    line_index: HashMap<Vec<usize>, usize>,
}

impl Search<'_> {
    fn point_labels(&self, cells: &[Vec<usize>]) -> Vec<usize> {
        let mut label = vec![0; self.graph.num_points];
        let mut next = 0;
        for cell in cells {
            if cell[0] < self.graph.num_points {
                label[cell[0]] = next;
                next += 1;
            }
        }
        label
    }

    /// `a` and `b` label the system identically, so `b⁻¹ ∘ a` is an automorphism.
    fn record_automorphism(&mut self, a: &[usize], b: &[usize]) {
        let n = self.graph.num_points;
        let mut inv_b = vec![0; n];
        for (v, &l) in b.iter().enumerate() {
            inv_b[l] = v;
        }
        let mut perm: Vec<usize> = (0..self.graph.adj.len()).collect();
        for v in 0..n {
            perm[v] = inv_b[a[v]];
        }
        if perm[..n].iter().enumerate().all(|(v, &w)| v == w) {
            return;
        }
        for (l, line) in self.graph.lines.iter().enumerate() {
            let mut image: Vec<usize> = line.iter().map(|&p| perm[p]).collect();
            image.sort_unstable();
            perm[n + l] = n + self.line_index[&image];
        }
        self.generators.push(perm);
    }

    /// Orbits of the group generated by the known automorphisms that fix
    /// every vertex of `prefix`, as a representative per vertex.
    fn orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.graph.adj.len()).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for g in &self.generators {
            if prefix.iter().any(|&v| g[v] != v) {
                continue;
            }
            for (v, &w) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..parent.len()).map(|v| find(&mut parent, v)).collect()
    }

    fn run(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        self.graph.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let cert = self.graph.certificate(&cells);
            let labels = self.point_labels(&cells);
            let same_as_first = self.first.as_ref().filter(|(c, _)| *c == cert).map(|(_, l)| l.clone());
            let same_as_best = self.best.as_ref().filter(|(c, _)| *c == cert).map(|(_, l)| l.clone());
            if let Some(other) = same_as_first.or(same_as_best) {
                self.record_automorphism(&labels, &other);
            }
            if self.first.is_none() {
                self.first = Some((cert.clone(), labels.clone()));
            }
            if self.best.as_ref().is_none_or(|(b, _)| cert < *b) {
                self.best = Some((cert, labels));
            }
            return Ok(());
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() {
                let orbit = self.orbits(prefix);
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.run(child, prefix)?;
            prefix.pop();
            explored.push(v);
        }
        Ok(())
    }
}

fn canonical_lines(r: &ReducedSystem, budget: u64) -> Result<Vec<Vec<usize>>> {
    let graph = Incidence::new(r);
    let line_index = r
        .system
        .lines()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    let mut search = Search {
        graph: &graph,
        nodes: 0,
        budget,
        first: None,
        best: None,
        generators: Vec::new(),
        line_index,
    };
    search.run(graph.initial_partition(), &mut Vec::new())?;
    Ok(search.best.map(|(cert, _)| cert).unwrap_or_default())
}

/// Canonical form of the reduction of `s`.
pub fn canonical_form(s: &LinearSystem) -> Result<CanonicalForm> {
    canonical_form_with_budget(s, DEFAULT_ISO_BUDGET)
}

/// Lines of the reduction that collapsed onto one point appear repeated.
pub fn canonical_form_with_budget(s: &LinearSystem, budget: u64) -> Result<CanonicalForm> {
    let reduced = s.reduce();
    let lines = canonical_lines(&reduced, budget)?;
    Ok(CanonicalForm(encode_lines(reduced.system.num_points(), lines)))
}

fn sorted_profile(r: &ReducedSystem) -> (usize, Vec<usize>, Vec<(usize, usize)>) {
    let mut degrees = r.degrees();
    degrees.sort_unstable();
    let mut lines: Vec<(usize, usize)> = r
        .system
        .lines()
        .iter()
        .zip(&r.multiplicity)
        .map(|(l, &m)| (l.len(), m))
        .collect();
    lines.sort_unstable();
    (r.system.num_points(), degrees, lines)
}

/// Isomorphism after deleting all points of degree 0 or 1 from both sides.
pub fn is_isomorphic(a: &LinearSystem, b: &LinearSystem) -> Result<bool> {
    is_isomorphic_with_budget(a, b, DEFAULT_ISO_BUDGET)
}

pub fn is_isomorphic_with_budget(a: &LinearSystem, b: &LinearSystem, budget: u64) -> Result<bool> {
    let ra = a.reduce();
    let rb = b.reduce();
    if sorted_profile(&ra) != sorted_profile(&rb) {
        return Ok(false);
    }
    Ok(canonical_lines(&ra, budget)? == canonical_lines(&rb, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> LinearSystem {
        LinearSystem::new(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn relabelings_share_a_form() {
        let a = fano();
        let b = a.relabel(&[3, 6, 0, 1, 5, 2, 4]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert!(is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn six_cycle_vs_two_triangles() {
        // Same degree profile, not isomorphic.
        let c6 = LinearSystem::new(
            6,
            (0..6).map(|i| vec![i, (i + 1) % 6]).collect(),
        )
        .unwrap();
        let tt = LinearSystem::new(
            6,
            vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3, 4], vec![4, 5], vec![3, 5]],
        )
        .unwrap();
        assert!(!is_isomorphic(&c6, &tt).unwrap());
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&tt).unwrap());
    }

    #[test]
    fn budget_is_reported() {
        assert_eq!(
            canonical_form_with_budget(&fano(), 3),
            Err(Error::SearchBudgetExceeded(3))
        );
    }

    #[test]
    fn empty_reduction() {
        let line = LinearSystem::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(
            canonical_form(&line).unwrap().as_str(),
            "{\"points\":0,\"lines\":[]}\n"
        );
        assert!(is_isomorphic(&line, &LinearSystem::empty(5)).unwrap());
    }
}
