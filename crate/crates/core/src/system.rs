//! The incidence structure: a ground set `0..num_points` and a family of
//! lines, any two of which share at most one point.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a point in its owning [`LinearSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointId(pub usize);

impl PointId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A validated linear system.
///
/// Lines keep the order they were given in; each line is stored as a strictly
/// increasing list of point indices. Values are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearSystem {
    num_points: usize,
    lines: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
}

impl DegreeProfile {
    /// Number of points having each degree, indexed by degree.
    pub fn histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.max_degree + 1];
        for &d in &self.degrees {
            hist[d] += 1;
        }
        hist
    }
}

/// Result of deleting a single point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointDeletion {
    pub system: LinearSystem,
    /// Original index -> new index; `None` for the deleted point.
    pub point_map: Vec<Option<usize>>,
    /// Original indices of lines that became empty and were dropped.
    pub dropped_lines: Vec<usize>,
}

/// A system with every point of degree at most one removed, plus the record
/// of what was removed. Two systems are considered isomorphic when their
/// reductions are isomorphic, multiplicities included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSystem {
    /// Distinct traces of the surviving lines.
    pub system: LinearSystem,
    /// How many original lines share each trace in `system`. Above 1 only for
    /// 1-point traces.
    pub multiplicity: Vec<usize>,
    pub removed_points: Vec<PointId>,
    /// Original indices of lines emptied by the deletion.
    pub dropped_lines: Vec<usize>,
    /// `(merged, kept)` original indices of lines whose traces coincide.
    pub merged_lines: Vec<(usize, usize)>,
    /// Original point index -> reduced index.
    pub point_map: Vec<Option<usize>>,
    /// Original line index -> reduced index; merged lines map to the kept one.
    pub line_map: Vec<Option<usize>>,
}

impl ReducedSystem {
    /// The surviving lines as a family, each trace repeated by its
    /// multiplicity.
    pub fn family(&self) -> Vec<Vec<usize>> {
        self.system
            .lines()
            .iter()
            .zip(&self.multiplicity)
            .flat_map(|(l, &m)| std::iter::repeat_n(l.clone(), m))
            .collect()
    }

    /// Point degrees counted with multiplicity; all at least 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.system.num_points()];
        for (l, &m) in self.system.lines().iter().zip(&self.multiplicity) {
            for &p in l {
                deg[p] += m;
            }
        }
        deg
    }

    /// True when every multiplicity is 1, so `system` alone is the reduction.
    pub fn is_simple(&self) -> bool {
        self.multiplicity.iter().all(|&m| m == 1)
    }
}

/// Output of [`LinearSystem::induced`].
#[derive(Debug, Clone)]
pub(crate) struct Restriction {
    pub system: LinearSystem,
    pub point_map: Vec<Option<usize>>,
    pub line_map: Vec<Option<usize>>,
    pub emptied: Vec<usize>,
}

fn shared_points(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

impl LinearSystem {
    /// Validates and builds a system. Each line is sorted; lines are not
    /// reordered and never deduplicated.
    pub fn new(num_points: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        let mut lines = lines;
        for (idx, line) in lines.iter_mut().enumerate() {
            if line.is_empty() {
                return Err(Error::EmptyLine { line: idx });
            }
            line.sort_unstable();
            for w in line.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedPoint {
                        line: idx,
                        point: w[0],
                    });
                }
            }
            if let Some(&p) = line.last().filter(|&&p| p >= num_points) {
                return Err(Error::PointOutOfRange {
                    line: idx,
                    point: p,
                    num_points,
                });
            }
        }

        let mut seen: HashMap<&[usize], usize> = HashMap::with_capacity(lines.len());
        for (idx, line) in lines.iter().enumerate() {
            if let Some(&first) = seen.get(line.as_slice()) {
                return Err(Error::DuplicateLine { first, second: idx });
            }
            seen.insert(line, idx);
        }

        // Only lines meeting at some point can violate linearity, so walk the
        // incidence lists instead of all pairs.
        let mut through: Vec<Vec<usize>> = vec![Vec::new(); num_points];
        for (idx, line) in lines.iter().enumerate() {
            for &p in line {
                through[p].push(idx);
            }
        }
        let mut worst: Option<(usize, usize, usize)> = None;
        for incident in &through {
            for (a, &i) in incident.iter().enumerate() {
                for &j in &incident[a + 1..] {
                    let shared = shared_points(&lines[i], &lines[j]);
                    if shared >= 2 && worst.is_none_or(|(wi, wj, _)| (i, j) < (wi, wj)) {
                        worst = Some((i, j, shared));
                    }
                }
            }
        }
        if let Some((first, second, shared)) = worst {
            return Err(Error::LinearityViolation {
                first,
                second,
                shared,
            });
        }

        Ok(LinearSystem { num_points, lines })
    }

    pub fn empty(num_points: usize) -> Self {
        LinearSystem {
            num_points,
            lines: Vec::new(),
        }
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, index: usize) -> Option<&[usize]> {
        self.lines.get(index).map(Vec::as_slice)
    }

    /// For every point, the indices of the lines through it (ascending).
    pub fn point_lines(&self) -> Vec<Vec<usize>> {
        let mut through = vec![Vec::new(); self.num_points];
        for (idx, line) in self.lines.iter().enumerate() {
            for &p in line {
                through[p].push(idx);
            }
        }
        through
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0; self.num_points];
        for line in &self.lines {
            for &p in line {
                degrees[p] += 1;
            }
        }
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            degrees,
            max_degree,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.degree_profile().max_degree
    }

    /// `Some(r)` when every line has exactly `r` points; `None` for mixed
    /// line sizes and for a system without lines.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.lines.first()?.len();
        self.lines.iter().all(|l| l.len() == r).then_some(r)
    }

    /// Every pair of distinct lines meets in exactly one point.
    pub fn is_intersecting(&self) -> bool {
        self.lines.iter().enumerate().all(|(i, a)| {
            self.lines[i + 1..]
                .iter()
                .all(|b| shared_points(a, b) == 1)
        })
    }

    /// The unique line containing both points, if any.
    pub fn line_through(&self, a: usize, b: usize) -> Option<usize> {
        self.lines
            .iter()
            .position(|l| l.binary_search(&a).is_ok() && l.binary_search(&b).is_ok())
    }

    /// Connected as a hypergraph, counting isolated points as components.
    pub fn is_connected(&self) -> bool {
        if self.num_points == 0 {
            return true;
        }
        let through = self.point_lines();
        let mut seen = vec![false; self.num_points];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(p) = stack.pop() {
            for &l in &through[p] {
                for &q in &self.lines[l] {
                    if !seen[q] {
                        seen[q] = true;
                        reached += 1;
                        stack.push(q);
                    }
                }
            }
        }
        reached == self.num_points
    }

    /// Keep the marked points and lines; kept lines are replaced by their
    /// trace on the kept points and dropped when the trace is empty.
    pub(crate) fn induced(&self, keep_point: &[bool], keep_line: &[bool]) -> Result<Restriction> {
        debug_assert_eq!(keep_point.len(), self.num_points);
        debug_assert_eq!(keep_line.len(), self.lines.len());
        let mut point_map = vec![None; self.num_points];
        let mut next = 0;
        for (p, slot) in point_map.iter_mut().enumerate() {
            if keep_point[p] {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut line_map = vec![None; self.lines.len()];
        let mut emptied = Vec::new();
        let mut lines = Vec::new();
        for (idx, line) in self.lines.iter().enumerate() {
            if !keep_line[idx] {
                continue;
            }
            let trace: Vec<usize> = line.iter().filter_map(|&p| point_map[p]).collect();
            if trace.is_empty() {
                emptied.push(idx);
            } else {
                line_map[idx] = Some(lines.len());
                lines.push(trace);
            }
        }
        let system = LinearSystem::new(next, lines)?;
        Ok(Restriction {
            system,
            point_map,
            line_map,
            emptied,
        })
    }

    /// Removes `p` from every line and re-indexes the remaining points.
    /// Lines left empty are dropped. A line collapsing onto an existing 1-line
    /// is reported as [`Error::DuplicateLine`].
    pub fn delete_point(&self, p: PointId) -> Result<PointDeletion> {
        if p.0 >= self.num_points {
            return Err(Error::IndexOutOfRange {
                index: p.0,
                len: self.num_points,
            });
        }
        let mut keep = vec![true; self.num_points];
        keep[p.0] = false;
        let r = self.induced(&keep, &vec![true; self.lines.len()])?;
        Ok(PointDeletion {
            system: r.system,
            point_map: r.point_map,
            dropped_lines: r.emptied,
        })
    }

    pub fn delete_line(&self, index: usize) -> Result<LinearSystem> {
        if index >= self.lines.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.lines.len(),
            });
        }
        let mut lines = self.lines.clone();
        lines.remove(index);
        Ok(LinearSystem {
            num_points: self.num_points,
            lines,
        })
    }

    /// Deletes every point of degree 0 or 1 in one pass.
    ///
    /// Lines emptied by the deletion are dropped. Lines whose traces coincide
    /// (only possible for 1-point traces) are kept once with a multiplicity,
    /// so the degree of every surviving point is unchanged and at least 2.
    pub fn reduce(&self) -> ReducedSystem {
        let degrees = self.degree_profile().degrees;
        let mut point_map = vec![None; self.num_points];
        let mut removed_points = Vec::new();
        let mut next = 0;
        for (p, &d) in degrees.iter().enumerate() {
            if d >= 2 {
                point_map[p] = Some(next);
                next += 1;
            } else {
                removed_points.push(PointId(p));
            }
        }

        let mut lines: Vec<Vec<usize>> = Vec::new();
        let mut multiplicity: Vec<usize> = Vec::new();
        let mut first_with: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut line_map = vec![None; self.lines.len()];
        let mut dropped_lines = Vec::new();
        let mut merged_lines = Vec::new();
        for (l, line) in self.lines.iter().enumerate() {
            let trace: Vec<usize> = line.iter().filter_map(|&p| point_map[p]).collect();
            if trace.is_empty() {
                dropped_lines.push(l);
                continue;
            }
            match first_with.get(&trace) {
                Some(&kept) => {
                    let idx = line_map[kept].expect("kept line is mapped");
                    multiplicity[idx] += 1;
                    line_map[l] = Some(idx);
                    merged_lines.push((l, kept));
                }
                None => {
                    first_with.insert(trace.clone(), l);
                    line_map[l] = Some(lines.len());
                    lines.push(trace);
                    multiplicity.push(1);
                }
            }
        }
        let system = LinearSystem::new(next, lines)
            .expect("distinct traces of a linear system on a point subset stay linear");
        ReducedSystem {
            system,
            multiplicity,
            removed_points,
            dropped_lines,
            merged_lines,
            point_map,
            line_map,
        }
    }

    /// Applies the point permutation `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Result<LinearSystem> {
        if perm.len() != self.num_points {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.num_points
            )));
        }
        let mut hit = vec![false; self.num_points];
        for &p in perm {
            if p >= self.num_points || std::mem::replace(&mut hit[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let lines = self
            .lines
            .iter()
            .map(|l| l.iter().map(|&p| perm[p]).collect())
            .collect();
        LinearSystem::new(self.num_points, lines)
    }

    /// Lines sorted lexicographically, with `order[i]` the old index of new
    /// line `i`.
    pub fn sorted_lines(&self) -> (LinearSystem, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.lines.len()).collect();
        order.sort_by(|&a, &b| self.lines[a].cmp(&self.lines[b]));
        let lines = order.iter().map(|&i| self.lines[i].clone()).collect();
        (
            LinearSystem {
                num_points: self.num_points,
                lines,
            },
            order,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> LinearSystem {
        LinearSystem::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

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
    fn validation_errors() {
        assert_eq!(
            LinearSystem::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]),
            Err(Error::LinearityViolation {
                first: 0,
                second: 1,
                shared: 2
            })
        );
        assert_eq!(
            LinearSystem::new(3, vec![vec![0], vec![0]]),
            Err(Error::DuplicateLine {
                first: 0,
                second: 1
            })
        );
        assert_eq!(
            LinearSystem::new(3, vec![vec![0, 3]]),
            Err(Error::PointOutOfRange {
                line: 0,
                point: 3,
                num_points: 3
            })
        );
        assert_eq!(
            LinearSystem::new(3, vec![vec![0, 1], vec![]]),
            Err(Error::EmptyLine { line: 1 })
        );
        assert_eq!(
            LinearSystem::new(3, vec![vec![1, 1]]),
            Err(Error::RepeatedPoint { line: 0, point: 1 })
        );
    }

    #[test]
    fn lines_are_sorted_on_construction() {
        let s = LinearSystem::new(3, vec![vec![2, 0], vec![1]]).unwrap();
        assert_eq!(s.lines(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn fano_pairs_meet_once() {
        let s = fano();
        let mut pairs = 0;
        for i in 0..7 {
            for j in i + 1..7 {
                assert_eq!(shared_points(&s.lines()[i], &s.lines()[j]), 1);
                pairs += 1;
            }
        }
        assert_eq!(pairs, 21);
        assert!(s.is_intersecting());
        assert_eq!(s.uniformity(), Some(3));
    }

    #[test]
    fn degrees() {
        let p = triangle().degree_profile();
        assert_eq!(p.degrees, vec![2, 2, 2]);
        assert_eq!(p.max_degree, 2);
        assert_eq!(LinearSystem::empty(0).degree_profile().max_degree, 0);
    }

    #[test]
    fn intersecting_edge_cases() {
        let single = LinearSystem::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(single.is_intersecting());
        let matching = LinearSystem::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert!(!matching.is_intersecting());
    }

    #[test]
    fn delete_point_of_fano() {
        let d = fano().delete_point(PointId(0)).unwrap();
        assert_eq!(d.system.num_points(), 6);
        assert_eq!(d.system.num_lines(), 7);
        let mut sizes: Vec<usize> = d.system.lines().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3, 3, 3]);
        assert!(d.dropped_lines.is_empty());
        assert_eq!(d.point_map[0], None);
        assert_eq!(d.point_map[6], Some(5));
    }

    #[test]
    fn delete_isolated_point() {
        let s = LinearSystem::new(4, vec![vec![1, 2], vec![2, 3]]).unwrap();
        let d = s.delete_point(PointId(0)).unwrap();
        assert_eq!(d.system.num_points(), 3);
        assert_eq!(d.system.lines(), &[vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn delete_point_drops_emptied_line_and_detects_collapse() {
        let s = LinearSystem::new(3, vec![vec![0], vec![1, 2]]).unwrap();
        let d = s.delete_point(PointId(0)).unwrap();
        assert_eq!(d.dropped_lines, vec![0]);
        assert_eq!(d.system.lines(), &[vec![0, 1]]);

        let s = LinearSystem::new(2, vec![vec![0], vec![0, 1]]).unwrap();
        assert!(matches!(
            s.delete_point(PointId(1)),
            Err(Error::DuplicateLine { .. })
        ));
        assert!(matches!(
            s.delete_point(PointId(2)),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn delete_line_keeps_points() {
        let s = triangle().delete_line(2).unwrap();
        assert_eq!(s.num_points(), 3);
        assert_eq!(s.lines(), &[vec![0, 1], vec![1, 2]]);
        assert!(triangle().delete_line(3).is_err());
    }

    #[test]
    fn reduce_single_line_to_nothing() {
        let s = LinearSystem::new(3, vec![vec![0, 1, 2]]).unwrap();
        let r = s.reduce();
        assert_eq!(r.system.num_points(), 0);
        assert_eq!(r.system.num_lines(), 0);
        assert_eq!(r.dropped_lines, vec![0]);
        assert_eq!(r.removed_points.len(), 3);
    }

    #[test]
    fn reduce_keeps_collapsed_lines_with_multiplicity() {
        // {0} and {0,1}: removing point 1 collapses line 1 onto line 0.
        let s = LinearSystem::new(2, vec![vec![0], vec![0, 1]]).unwrap();
        let r = s.reduce();
        assert_eq!(r.merged_lines, vec![(1, 0)]);
        assert_eq!(r.system.lines(), &[vec![0]]);
        assert_eq!(r.multiplicity, vec![2]);
        assert_eq!(r.degrees(), vec![2]);
        assert_eq!(r.family(), vec![vec![0], vec![0]]);
        assert_eq!(r.line_map, vec![Some(0), Some(0)]);
    }

    #[test]
    fn reduce_star_keeps_centre() {
        let star = LinearSystem::new(7, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap();
        let r = star.reduce();
        assert_eq!(r.system.num_points(), 1);
        assert_eq!(r.multiplicity, vec![3]);
        assert!(!r.is_simple());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        assert!(triangle().relabel(&[0, 0, 1]).is_err());
        assert!(triangle().relabel(&[0, 1]).is_err());
        let t = triangle().relabel(&[2, 0, 1]).unwrap();
        assert_eq!(t.lines(), &[vec![0, 2], vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn connectivity() {
        assert!(triangle().is_connected());
        let two = LinearSystem::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(!two.is_connected());
        let isolated = LinearSystem::new(4, vec![vec![0, 1, 2]]).unwrap();
        assert!(!isolated.is_connected());
    }
}
