//! Generators for the families of linear systems studied here.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::solvers::{two_packing_number, SearchBudget};
use crate::system::{LinearSystem, PointId};

/// Printable names for the points and lines of a generated system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionLabeling {
    pub name: String,
    pub point_labels: Vec<String>,
    pub line_labels: Vec<String>,
}

impl ConstructionLabeling {
    /// `p<i>` and `l<i>` for every point and line of `s`.
    pub fn plain(name: impl Into<String>, s: &LinearSystem) -> Self {
        ConstructionLabeling {
            name: name.into(),
            point_labels: (0..s.num_points()).map(|i| format!("p{i}")).collect(),
            line_labels: (0..s.num_lines()).map(|i| format!("l{i}")).collect(),
        }
    }

    fn restrict(&self, name: String, point_map: &[Option<usize>], line_map: &[Option<usize>]) -> Self {
        let pick = |labels: &[String], map: &[Option<usize>]| {
            let mut out = vec![String::new(); map.iter().flatten().count()];
            for (old, new) in map.iter().enumerate() {
                if let Some(new) = new {
                    out[*new] = labels[old].clone();
                }
            }
            out
        };
        ConstructionLabeling {
            name,
            point_labels: pick(&self.point_labels, point_map),
            line_labels: pick(&self.line_labels, line_map),
        }
    }
}

/// Sorts lines lexicographically and permutes the line labels to match.
fn normalized(
    num_points: usize,
    lines: Vec<Vec<usize>>,
    name: String,
    point_labels: Vec<String>,
    line_labels: Vec<String>,
) -> (LinearSystem, ConstructionLabeling) {
    let raw = LinearSystem::new(num_points, lines).expect("construction produced an invalid system");
    let (system, order) = raw.sorted_lines();
    let line_labels = order.iter().map(|&i| line_labels[i].clone()).collect();
    (
        system,
        ConstructionLabeling {
            name,
            point_labels,
            line_labels,
        },
    )
}

/// The n-uniform system over the cyclic group of odd order `n` with
/// `n(n-1) + 2` points and `3n - 1` lines.
///
/// Points are the pairs `(h, g)` with `g != 0`, plus two special points `p`
/// and `q`. Lines are the columns `L_g`, the rows `l_p_g` through `p`, and the
/// shifted diagonals `l_q_g = {(h, h + g)} + q` through `q`.
pub fn build_cnn(n: usize) -> Result<(LinearSystem, ConstructionLabeling)> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "n must be odd and at least 3, got {n}"
        )));
    }
    let pair = |h: usize, g: usize| h * (n - 1) + (g - 1);
    let p = n * (n - 1);
    let q = p + 1;

    let mut point_labels = Vec::with_capacity(q + 1);
    for h in 0..n {
        for g in 1..n {
            point_labels.push(format!("({h},{g})"));
        }
    }
    point_labels.push("p".into());
    point_labels.push("q".into());

    let mut lines = Vec::with_capacity(3 * n - 1);
    let mut line_labels = Vec::with_capacity(3 * n - 1);
    for g in 1..n {
        lines.push((0..n).map(|h| pair(h, g)).collect());
        line_labels.push(format!("L_{g}"));
    }
    for g in 0..n {
        let mut l: Vec<usize> = (1..n).map(|h| pair(g, h)).collect();
        l.push(p);
        lines.push(l);
        line_labels.push(format!("l_p_{g}"));
    }
    for g in 0..n {
        let mut l: Vec<usize> = (0..n)
            .filter_map(|h| {
                let f = (h + g) % n;
                (f != 0).then(|| pair(h, f))
            })
            .collect();
        l.push(q);
        lines.push(l);
        line_labels.push(format!("l_q_{g}"));
    }
    Ok(normalized(
        q + 1,
        lines,
        format!("C_{{{},{}}}", n, n + 1),
        point_labels,
        line_labels,
    ))
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn is_prime_power(n: usize) -> bool {
    (2..=n).find(|d| n.is_multiple_of(*d)).is_some_and(|p| {
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        m == 1
    })
}

/// Normalized homogeneous triples over the integers mod `q`: the first
/// nonzero coordinate is 1.
fn projective_triples(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            out.push([1, a, b]);
        }
    }
    for b in 0..q {
        out.push([0, 1, b]);
    }
    out.push([0, 0, 1]);
    out
}

/// The Desarguesian projective plane of prime order `q`.
pub fn projective_plane(q: usize) -> Result<(LinearSystem, ConstructionLabeling)> {
    if !is_prime(q) {
        return Err(if q >= 2 && is_prime_power(q) {
            Error::NotImplemented(format!("projective plane of prime-power order {q}"))
        } else {
            Error::InvalidParameter(format!("order must be prime, got {q}"))
        });
    }
    let triples = projective_triples(q);
    let point_labels = triples
        .iter()
        .map(|t| format!("({}:{}:{})", t[0], t[1], t[2]))
        .collect();
    let mut lines = Vec::with_capacity(triples.len());
    let mut line_labels = Vec::with_capacity(triples.len());
    for dual in &triples {
        let line: Vec<usize> = triples
            .iter()
            .enumerate()
            .filter(|(_, t)| (0..3).map(|i| dual[i] * t[i]).sum::<usize>() % q == 0)
            .map(|(i, _)| i)
            .collect();
        lines.push(line);
        line_labels.push(format!("[{}:{}:{}]", dual[0], dual[1], dual[2]));
    }
    Ok(normalized(
        triples.len(),
        lines,
        format!("PG(2,{q})"),
        point_labels,
        line_labels,
    ))
}

/// Three non-collinear, pairwise adjacent points and the lines joining them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    pub points: [PointId; 3],
    /// Lines through points (0,1), (0,2) and (1,2), in that order.
    pub lines: [usize; 3],
}

/// All triangles, ordered lexicographically by their point triple.
pub fn find_triangles(s: &LinearSystem) -> Vec<Triangle> {
    let n = s.num_points();
    let mut joining = vec![vec![None; n]; n];
    for (l, line) in s.lines().iter().enumerate() {
        for (i, &a) in line.iter().enumerate() {
            for &b in &line[i + 1..] {
                joining[a][b] = Some(l);
                joining[b][a] = Some(l);
            }
        }
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let Some(ab) = joining[a][b] else { continue };
            for c in b + 1..n {
                let (Some(ac), Some(bc)) = (joining[a][c], joining[b][c]) else {
                    continue;
                };
                if ab != ac {
                    out.push(Triangle {
                        points: [PointId(a), PointId(b), PointId(c)],
                        lines: [ab, ac, bc],
                    });
                }
            }
        }
    }
    out
}

fn check_triangle(s: &LinearSystem, t: &Triangle) -> Result<()> {
    let [a, b, c] = t.points.map(PointId::index);
    let n = s.num_points();
    if a >= n || b >= n || c >= n || a == b || a == c || b == c {
        return Err(Error::NotATriangle);
    }
    let pairs = [(a, b), (a, c), (b, c)];
    for (&(x, y), &l) in pairs.iter().zip(&t.lines) {
        let line = s.line(l).ok_or(Error::NotATriangle)?;
        if line.binary_search(&x).is_err() || line.binary_search(&y).is_err() {
            return Err(Error::NotATriangle);
        }
    }
    if t.lines[0] == t.lines[1] || t.lines[0] == t.lines[2] || t.lines[1] == t.lines[2] {
        return Err(Error::NotATriangle);
    }
    Ok(())
}

/// Triangle removal together with the index maps, for label bookkeeping.
fn delete_triangle_mapped(
    s: &LinearSystem,
    t: &Triangle,
) -> Result<(LinearSystem, Vec<Option<usize>>, Vec<Option<usize>>)> {
    check_triangle(s, t)?;
    let mut keep_point = vec![true; s.num_points()];
    for p in t.points {
        keep_point[p.0] = false;
    }
    let mut keep_line = vec![true; s.num_lines()];
    for l in t.lines {
        keep_line[l] = false;
    }
    let r = s.induced(&keep_point, &keep_line)?;
    Ok((r.system, r.point_map, r.line_map))
}

/// Removes the three points and three lines of `t`.
pub fn delete_triangle(s: &LinearSystem, t: &Triangle) -> Result<LinearSystem> {
    delete_triangle_mapped(s, t).map(|(sys, _, _)| sys)
}

/// The plane of order 3 with its lexicographically first triangle removed:
/// 10 points, four 4-lines and six 3-lines.
pub fn build_c() -> (LinearSystem, ConstructionLabeling) {
    let (plane, labels) = projective_plane(3).expect("3 is prime");
    let t = find_triangles(&plane)[0];
    let (sys, pmap, lmap) = delete_triangle_mapped(&plane, &t).expect("first triangle is valid");
    let labels = labels.restrict("C".into(), &pmap, &lmap);
    let (sys, order) = sys.sorted_lines();
    let line_labels = order.iter().map(|&i| labels.line_labels[i].clone()).collect();
    (
        sys,
        ConstructionLabeling {
            line_labels,
            ..labels
        },
    )
}

/// A member of the family between the triangle-deleted plane and the plane
/// of order 3.
#[derive(Debug, Clone)]
pub struct C44Member {
    pub system: LinearSystem,
    pub labeling: ConstructionLabeling,
    /// Triangle points of the order-3 plane put back (plane indices).
    pub restored_points: Vec<PointId>,
    /// Triangle lines of the order-3 plane put back (plane indices).
    pub restored_lines: Vec<usize>,
    pub canonical: CanonicalForm,
}

/// Every subsystem of the order-3 plane that contains the triangle-deleted
/// system as a subsystem and has 2-packing number 4, one per isomorphism
/// class.
///
/// Candidates keep all points and lines outside the triangle and restore any
/// subset of the three triangle points and any subset of the three triangle
/// lines; each kept line is the trace of its plane line on the kept points.
pub fn enumerate_c44() -> Result<Vec<C44Member>> {
    let (plane, labels) = projective_plane(3)?;
    let t = find_triangles(&plane)[0];
    let mut out: Vec<C44Member> = Vec::new();
    for point_mask in 0u8..8 {
        for line_mask in 0u8..8 {
            let mut keep_point = vec![true; plane.num_points()];
            let mut keep_line = vec![true; plane.num_lines()];
            for i in 0..3 {
                keep_point[t.points[i].0] = point_mask & (1 << i) != 0;
                keep_line[t.lines[i]] = line_mask & (1 << i) != 0;
            }
            let r = plane.induced(&keep_point, &keep_line)?;
            let nu2 = two_packing_number(&r.system, &SearchBudget::default());
            if !nu2.proven_optimal || nu2.optimum != 4 {
                continue;
            }
            let canonical = canonical_form(&r.system)?;
            if out.iter().any(|m| m.canonical == canonical) {
                continue;
            }
            let restored_points = (0..3)
                .filter(|i| point_mask & (1 << i) != 0)
                .map(|i| t.points[i])
                .collect();
            let restored_lines = (0..3)
                .filter(|i| line_mask & (1 << i) != 0)
                .map(|i| t.lines[i])
                .collect();
            let labeling = labels.restrict(
                format!("C44[p{point_mask:03b},l{line_mask:03b}]"),
                &r.point_map,
                &r.line_map,
            );
            out.push(C44Member {
                system: r.system,
                labeling,
                restored_points,
                restored_lines,
                canonical,
            });
        }
    }
    Ok(out)
}

/// Record of a padding: `k` fresh degree-1 points appended to every line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddingRecord {
    pub base: LinearSystem,
    pub k: usize,
    pub added_points: Vec<Vec<PointId>>,
}

/// Extends every line of an r0-uniform system to `r` points using fresh
/// points, numbered from `num_points` upward in line order.
pub fn pad_uniform(s: &LinearSystem, r: usize) -> Result<(LinearSystem, PaddingRecord)> {
    let r0 = s.uniformity().ok_or(Error::NotUniform)?;
    if r < r0 {
        return Err(Error::InvalidParameter(format!(
            "target size {r} is below the line size {r0}"
        )));
    }
    let k = r - r0;
    let mut next = s.num_points();
    let mut added_points = Vec::with_capacity(s.num_lines());
    let mut lines = Vec::with_capacity(s.num_lines());
    for line in s.lines() {
        let fresh: Vec<usize> = (next..next + k).collect();
        next += k;
        let mut l = line.clone();
        l.extend_from_slice(&fresh);
        lines.push(l);
        added_points.push(fresh.into_iter().map(PointId).collect());
    }
    let padded = LinearSystem::new(next, lines)?;
    Ok((
        padded,
        PaddingRecord {
            base: s.clone(),
            k,
            added_points,
        },
    ))
}

/// Labels for a padded system: base labels followed by `x<i>` for fresh points.
pub fn pad_labels(labels: &ConstructionLabeling, padded: &LinearSystem) -> ConstructionLabeling {
    let mut point_labels = labels.point_labels.clone();
    for i in labels.point_labels.len()..padded.num_points() {
        point_labels.push(format!("x{i}"));
    }
    ConstructionLabeling {
        name: format!("{}+pad", labels.name),
        point_labels,
        line_labels: labels.line_labels.clone(),
    }
}

/// `m` pairwise disjoint lines of size `r`.
pub fn matching(m: usize, r: usize) -> Result<LinearSystem> {
    if m == 0 || r < 2 {
        return Err(Error::InvalidParameter(format!(
            "matching needs m >= 1 and r >= 2, got m={m} r={r}"
        )));
    }
    let lines = (0..m).map(|i| (i * r..(i + 1) * r).collect()).collect();
    LinearSystem::new(m * r, lines)
}

/// `k` lines of size `r` through point 0, otherwise disjoint.
pub fn star(k: usize, r: usize) -> Result<LinearSystem> {
    if k == 0 || r < 2 {
        return Err(Error::InvalidParameter(format!(
            "star needs k >= 1 and r >= 2, got k={k} r={r}"
        )));
    }
    let lines = (0..k)
        .map(|i| {
            let mut l = vec![0];
            l.extend(1 + i * (r - 1)..1 + (i + 1) * (r - 1));
            l
        })
        .collect();
    LinearSystem::new(1 + k * (r - 1), lines)
}

/// Cap on rejected candidate lines before [`random_linear_system`] gives up.
pub const MAX_REJECTIONS: usize = 10_000;

/// Rejection sampler: draws lines with a size uniform in `sizes` and keeps a
/// candidate only if it meets every kept line in at most one point.
pub fn random_linear_system(
    num_points: usize,
    num_lines: usize,
    sizes: (usize, usize),
    seed: u64,
) -> Result<LinearSystem> {
    let (lo, hi) = sizes;
    if lo == 0 || lo > hi || hi > num_points {
        return Err(Error::InvalidParameter(format!(
            "line sizes {lo}..={hi} infeasible on {num_points} points"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines: Vec<Vec<usize>> = Vec::with_capacity(num_lines);
    let mut rejected = 0;
    while lines.len() < num_lines {
        let size = rng.gen_range(lo..=hi);
        let mut cand = sample(&mut rng, num_points, size).into_vec();
        cand.sort_unstable();
        let ok = lines.iter().all(|l| {
            let shared = l.iter().filter(|p| cand.binary_search(p).is_ok()).count();
            shared <= 1 && *l != cand
        });
        if ok {
            lines.push(cand);
        } else {
            rejected += 1;
            if rejected >= MAX_REJECTIONS {
                return Err(Error::GenerationExhausted(rejected));
            }
        }
    }
    LinearSystem::new(num_points, lines)
}
