use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::{LinearSystem, PointId};

/// The transversal `A ∪ B` built for systems of maximum degree two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Delta2Transversal {
    /// Pairwise non-adjacent degree-2 points, chosen greedily by index.
    pub independent: Vec<PointId>,
    /// Lines missing every point of `independent`; pairwise disjoint.
    pub residual_lines: Vec<usize>,
    /// Least point of each residual line.
    pub residual_points: Vec<PointId>,
    /// `independent ∪ residual_points`, sorted.
    pub transversal: Vec<PointId>,
}

/// Requires maximum degree exactly 2. The result has
/// `|lines| - |independent|` points.
pub fn delta2_transversal(s: &LinearSystem) -> Result<Delta2Transversal> {
    let profile = s.degree_profile();
    if profile.max_degree != 2 {
        return Err(Error::PreconditionViolated(format!(
            "maximum degree is {}, expected 2",
            profile.max_degree
        )));
    }
    let through = s.point_lines();
    let mut blocked = vec![false; s.num_points()];
    let mut line_hit = vec![false; s.num_lines()];
    let mut independent = Vec::new();
    for p in 0..s.num_points() {
        if profile.degrees[p] != 2 || blocked[p] {
            continue;
        }
        independent.push(PointId(p));
        for &l in &through[p] {
            line_hit[l] = true;
            for &q in &s.lines()[l] {
                blocked[q] = true;
            }
        }
    }
    let residual_lines: Vec<usize> = (0..s.num_lines()).filter(|&l| !line_hit[l]).collect();
    let residual_points: Vec<PointId> = residual_lines
        .iter()
        .map(|&l| PointId(s.lines()[l][0]))
        .collect();
    let mut transversal: Vec<PointId> = independent
        .iter()
        .chain(&residual_points)
        .copied()
        .collect();
    transversal.sort();
    Ok(Delta2Transversal {
        independent,
        residual_lines,
        residual_points,
        transversal,
    })
}

/// Lines containing none of `points`.
pub fn residual_lines(s: &LinearSystem, points: &[PointId]) -> Vec<usize> {
    let mut hit = vec![false; s.num_points()];
    for p in points {
        hit[p.0] = true;
    }
    (0..s.num_lines())
        .filter(|&l| !s.lines()[l].iter().any(|&p| hit[p]))
        .collect()
}

/// A largest set of degree-2 points no two of which lie on a common line,
/// found by exhaustive search; ties go to the lexicographically least set.
pub fn maximum_independent_double_points(s: &LinearSystem) -> Vec<PointId> {
    let degrees = s.degree_profile().degrees;
    let doubles: Vec<usize> = (0..s.num_points()).filter(|&p| degrees[p] == 2).collect();
    let k = doubles.len();
    let mut conflict = vec![vec![false; k]; k];
    for line in s.lines() {
        let on: Vec<usize> = (0..k).filter(|&i| line.binary_search(&doubles[i]).is_ok()).collect();
        for &i in &on {
            for &j in &on {
                conflict[i][j] = i != j;
            }
        }
    }

    fn grow(
        i: usize,
        conflict: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if i == conflict.len() || chosen.len() + (conflict.len() - i) <= best.len() {
            return;
        }
        if chosen.iter().all(|&c| !conflict[c][i]) {
            chosen.push(i);
            grow(i + 1, conflict, chosen, best);
            chosen.pop();
        }
        grow(i + 1, conflict, chosen, best);
    }

    let mut best = Vec::new();
    grow(0, &conflict, &mut Vec::new(), &mut best);
    best.into_iter().map(|i| PointId(doubles[i])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::is_transversal;

    #[test]
    fn triangle_graph() {
        let s = LinearSystem::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let t = delta2_transversal(&s).unwrap();
        assert_eq!(t.independent, vec![PointId(0)]);
        assert_eq!(t.residual_lines, vec![1]);
        assert_eq!(t.transversal, vec![PointId(0), PointId(1)]);
    }

    #[test]
    fn six_cycle() {
        let s = LinearSystem::new(6, (0..6).map(|i| vec![i, (i + 1) % 6]).collect()).unwrap();
        let t = delta2_transversal(&s).unwrap();
        assert_eq!(t.independent.len(), 3);
        assert!(t.residual_lines.is_empty());
        assert_eq!(t.transversal.len(), 3);
        assert!(is_transversal(&s, &t.transversal));
    }

    #[test]
    fn two_lines_through_a_point() {
        let s = LinearSystem::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let t = delta2_transversal(&s).unwrap();
        assert_eq!(t.transversal, vec![PointId(2)]);
    }

    #[test]
    fn maximum_versus_greedy_independent_set() {
        // Lines 0,1 meet at 0; line 2 meets line 0 at 1; line 3 meets line 1 at 2.
        let s = LinearSystem::new(
            9,
            vec![vec![0, 1, 3], vec![0, 2, 4], vec![1, 5, 6], vec![2, 7, 8]],
        )
        .unwrap();
        let greedy = delta2_transversal(&s).unwrap();
        assert_eq!(greedy.independent, vec![PointId(0)]);
        assert_eq!(greedy.residual_lines, vec![2, 3]);
        let best = maximum_independent_double_points(&s);
        assert_eq!(best, vec![PointId(1), PointId(2)]);
        assert!(residual_lines(&s, &best).is_empty());
        assert!(is_transversal(&s, &best));
    }

    #[test]
    fn wrong_max_degree() {
        let s = LinearSystem::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(
            delta2_transversal(&s),
            Err(Error::PreconditionViolated(_))
        ));
        let star = crate::constructions::star(3, 2).unwrap();
        assert!(delta2_transversal(&star).is_err());
    }
}
