//! Realization of dense degree sequences on `n >= 45` unpartitioned vertices.
//!
//! With `m = ⌊n/3⌋` and `q = ⌈n/5⌉`, any sequence whose degrees lie in
//! `[2m²/7 + 4q + 1, 5m²/7]` and whose sum is divisible by 3 is graphic.
//! The realization is assembled from four edge types:
//!
//! 1. edges through the `n mod 3` extra vertices, which clear those vertices;
//! 2. at most one edge across two of the three classes `A, B, C` (of `m`
//!    vertices each), fixing the class sums modulo 3;
//! 3. edges inside one class, equalizing the class sums;
//! 4. a tripartite realization of what is left.
//!
//! Each type is recognizable from the classes of its vertices, so the four
//! edge sets can never collide.

use std::fmt;

use crate::bipartite::havel_hakimi_simple;
use crate::error::{Error, Result};
use crate::regular::regular_tripartite;
use crate::tripartite::realize_tripartite;
use crate::types::{
    canonical_edge, verify_realization, Class, DegreeSequence, Edge, Hypergraph,
    TripartiteDegreeSequence,
};

pub const MIN_VERTICES: usize = 45;

/// Inclusive integer degree bounds `(lo, hi)` for `n` vertices.
pub fn degree_bounds(n: usize) -> (u32, u32) {
    let m2 = ((n / 3) * (n / 3)) as u64;
    let q = n.div_ceil(5) as u64;
    // 7·deg >= 2m² + 7(4q + 1) and 7·deg <= 5m².
    let lo = (2 * m2 + 7 * (4 * q + 1)).div_ceil(7);
    let hi = 5 * m2 / 7;
    (lo as u32, hi as u32)
}

/// Record of one realization: which vertices went where and which edges each
/// phase contributed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PhasePlan {
    pub extra_vertices: Vec<usize>,
    /// Class of every vertex; extra vertices are `Class::None`.
    pub class_assignment: Vec<Class>,
    pub phase1_edges: Vec<Edge>,
    pub phase2_edge: Option<Edge>,
    pub phase3_edges: Vec<Edge>,
    pub phase4_edges: Vec<Edge>,
    pub swap_count: usize,
}

/// The phase an edge must belong to, judged only by where its vertices lie.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    TouchesExtra,
    SpansTwoClasses,
    InsideOneClass,
    SpansThreeClasses,
}

impl PhasePlan {
    pub fn kind_of(&self, e: &Edge) -> EdgeKind {
        let cls = e.map(|v| self.class_assignment[v]);
        if cls.contains(&Class::None) {
            return EdgeKind::TouchesExtra;
        }
        let mut distinct = cls.to_vec();
        distinct.sort();
        distinct.dedup();
        match distinct.len() {
            1 => EdgeKind::InsideOneClass,
            2 => EdgeKind::SpansTwoClasses,
            _ => EdgeKind::SpansThreeClasses,
        }
    }

    /// Checks that every edge carries the signature of its phase, which makes
    /// the four edge sets pairwise disjoint.
    pub fn check_disjointness(&self) -> Result<()> {
        let groups: [(&[Edge], EdgeKind); 4] = [
            (&self.phase1_edges, EdgeKind::TouchesExtra),
            (self.phase2_edge.as_slice(), EdgeKind::SpansTwoClasses),
            (&self.phase3_edges, EdgeKind::InsideOneClass),
            (&self.phase4_edges, EdgeKind::SpansThreeClasses),
        ];
        for (phase, (edges, want)) in groups.iter().enumerate() {
            if let Some(e) = edges.iter().find(|e| self.kind_of(e) != *want) {
                return Err(Error::Internal(format!(
                    "phase {} edge {e:?} is {:?}",
                    phase + 1,
                    self.kind_of(e)
                )));
            }
        }
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.phase1_edges.len()
            + usize::from(self.phase2_edge.is_some())
            + self.phase3_edges.len()
            + self.phase4_edges.len()
    }
}

impl fmt::Display for PhasePlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "extra vertices: {:?}", self.extra_vertices)?;
        for class in Class::TRIPARTITE {
            let members: Vec<usize> = (0..self.class_assignment.len())
                .filter(|&v| self.class_assignment[v] == class)
                .collect();
            writeln!(f, "class {class}: {members:?}")?;
        }
        writeln!(f, "swaps: {}", self.swap_count)?;
        writeln!(f, "phase 1 edges: {}", self.phase1_edges.len())?;
        writeln!(
            f,
            "phase 2 edges: {}",
            usize::from(self.phase2_edge.is_some())
        )?;
        writeln!(f, "phase 3 edges: {}", self.phase3_edges.len())?;
        write!(f, "phase 4 edges: {}", self.phase4_edges.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase1 {
    pub extras: Vec<usize>,
    pub edges: Vec<Edge>,
    pub residual: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase2 {
    /// Members of A, B and C, each in increasing vertex order.
    pub classes: [Vec<usize>; 3],
    pub swaps: usize,
    pub parity_edge: Option<Edge>,
    pub residual: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase3 {
    pub edges: Vec<Edge>,
    pub residual: Vec<u32>,
}

/// Checks the input domain and returns `n`.
pub fn check_domain(d: &DegreeSequence) -> Result<usize> {
    let n = d.len();
    if n < MIN_VERTICES {
        return Err(Error::TooFewVertices {
            n,
            min: MIN_VERTICES,
        });
    }
    let (lo, hi) = degree_bounds(n);
    for (index, &degree) in d.iter().enumerate() {
        if degree < lo {
            return Err(Error::BelowLowerBound {
                class: Class::None,
                index,
                degree,
                bound: format!("2⌊n/3⌋²/7 + 4⌈n/5⌉ + 1, i.e. {lo}"),
            });
        }
        if degree > hi {
            return Err(Error::AboveUpperBound {
                class: Class::None,
                index,
                degree,
                bound: format!("5⌊n/3⌋²/7, i.e. {hi}"),
            });
        }
    }
    if d.sum() % 3 != 0 {
        return Err(Error::SumNotDivisibleByThree { sum: d.sum() });
    }
    Ok(n)
}

/// Clears the `n mod 3` vertices of smallest degree (lowest index on ties).
///
/// An almost `⌈n/5⌉`-regular simple graph `G` on the other vertices is
/// lifted: every edge `uv` of `G` can become `{u, v, extra}`. Each extra
/// vertex keeps as many lifted edges as its degree, greedily those whose ends
/// have the largest residual degrees.
pub fn phase1_satisfy_extras(d: &DegreeSequence) -> Result<Phase1> {
    let n = d.len();
    let mut residual = d.as_slice().to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&u, &v| residual[u].cmp(&residual[v]).then(u.cmp(&v)));
    let mut extras: Vec<usize> = order[..n % 3].to_vec();
    extras.sort_unstable();
    if extras.is_empty() {
        return Ok(Phase1 {
            extras,
            edges: Vec::new(),
            residual,
        });
    }

    let others: Vec<usize> = (0..n).filter(|v| !extras.contains(v)).collect();
    let q = n.div_ceil(5) as u32;
    let mut degrees = vec![q; others.len()];
    if (others.len() as u32 * q) % 2 == 1 {
        degrees[0] -= 1;
    }
    let g: Vec<(usize, usize)> = havel_hakimi_simple(&DegreeSequence::new(degrees)?)?
        .into_iter()
        .map(|(u, v)| (others[u], others[v]))
        .collect();

    let mut edges = Vec::new();
    for &x in &extras {
        let need = residual[x] as usize;
        if need > g.len() {
            return Err(Error::Internal(format!(
                "extra vertex {x} needs {need} lifted edges, only {} exist",
                g.len()
            )));
        }
        let mut used = vec![false; g.len()];
        for _ in 0..need {
            let pick = (0..g.len())
                .filter(|&k| !used[k] && residual[g[k].0] > 0 && residual[g[k].1] > 0)
                .max_by(|&k1, &k2| {
                    let s = |k: usize| residual[g[k].0] + residual[g[k].1];
                    s(k1).cmp(&s(k2)).then(k2.cmp(&k1))
                })
                .ok_or_else(|| Error::Internal(format!("no lifted edge left for {x}")))?;
            used[pick] = true;
            let (u, v) = g[pick];
            residual[u] -= 1;
            residual[v] -= 1;
            edges.push(canonical_edge(u, v, x)?);
        }
        residual[x] = 0;
    }
    Ok(Phase1 {
        extras,
        edges,
        residual,
    })
}

fn class_sums(classes: &[Vec<usize>; 3], residual: &[u32]) -> [u64; 3] {
    [0, 1, 2].map(|k| classes[k].iter().map(|&v| residual[v] as u64).sum())
}

/// `7 · 3 · Σ|x_i - x|` for class sums `x_i` with mean `x`, kept integral.
fn spread21(sums: [u64; 3]) -> u64 {
    let total: u64 = sums.iter().sum();
    sums.iter().map(|&s| (3 * s).abs_diff(total)).sum::<u64>() * 7
}

/// Splits the non-extra vertices into three classes of `m` with close sums
/// and, if needed, adds one edge making the sums congruent modulo 3.
///
/// Start from a snake-order deal by decreasing residual; while the total
/// deviation of the class sums from their mean exceeds `6m²/7`, swap the
/// largest degree of the heaviest class with the smallest degree of the
/// lightest class. The deviation drops strictly at every swap.
pub fn phase2_split_and_parity(residual: &[u32], extras: &[usize]) -> Result<Phase2> {
    let mut residual = residual.to_vec();
    let mut members: Vec<usize> = (0..residual.len())
        .filter(|v| !extras.contains(v))
        .collect();
    members.sort_by(|&u, &v| residual[v].cmp(&residual[u]).then(u.cmp(&v)));
    let m = members.len() / 3;
    if members.len() != 3 * m {
        return Err(Error::Internal(format!(
            "{} vertices do not split into thirds",
            members.len()
        )));
    }
    let mut classes: [Vec<usize>; 3] = Default::default();
    for (pos, &v) in members.iter().enumerate() {
        let lap = pos % 6;
        classes[if lap < 3 { lap } else { 5 - lap }].push(v);
    }

    let limit = 18 * (m * m) as u64;
    let mut swaps = 0;
    let mut spread = spread21(class_sums(&classes, &residual));
    while spread > limit {
        let sums = class_sums(&classes, &residual);
        let heavy = (0..3)
            .max_by_key(|&k| (sums[k], std::cmp::Reverse(k)))
            .unwrap();
        let light = (0..3).min_by_key(|&k| (sums[k], k)).unwrap();
        let pick = |k: usize, largest: bool| -> usize {
            let it = (0..classes[k].len()).map(|p| (residual[classes[k][p]], p));
            if largest {
                it.max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
                    .unwrap()
                    .1
            } else {
                it.min().unwrap().1
            }
        };
        let (ph, pl) = (pick(heavy, true), pick(light, false));
        let (vh, vl) = (classes[heavy][ph], classes[light][pl]);
        classes[heavy][ph] = vl;
        classes[light][pl] = vh;
        swaps += 1;
        let next = spread21(class_sums(&classes, &residual));
        if next >= spread {
            return Err(Error::Internal(format!(
                "class swap {swaps} did not reduce the spread ({spread} -> {next})"
            )));
        }
        spread = next;
    }
    for class in classes.iter_mut() {
        class.sort_unstable();
    }

    let sums = class_sums(&classes, &residual);
    let rem = sums.map(|s| s % 3);
    let parity_edge = if rem[0] == rem[1] && rem[1] == rem[2] {
        None
    } else {
        let low = (0..3).min_by_key(|&k| (sums[k], k)).unwrap();
        let plus = (0..3).find(|&k| k != low && rem[k] == (rem[low] + 1) % 3);
        let minus = (0..3).find(|&k| k != low && rem[k] == (rem[low] + 2) % 3);
        let (Some(plus), Some(minus)) = (plus, minus) else {
            return Err(Error::Internal(format!(
                "class sums {sums:?} have residues {rem:?}"
            )));
        };
        let (u, v, w) = (classes[plus][0], classes[minus][0], classes[minus][1]);
        for x in [u, v, w] {
            residual[x] = residual[x].checked_sub(1).ok_or_else(|| {
                Error::Internal(format!("parity edge hits vertex {x} of residual 0"))
            })?;
        }
        Some(canonical_edge(u, v, w)?)
    };
    Ok(Phase2 {
        classes,
        swaps,
        parity_edge,
        residual,
    })
}

/// Brings every class sum down to the smallest one with edges inside the
/// class.
///
/// The top `3⌊m/3⌋` vertices of a class are dealt into three groups carrying
/// a `2⌈n/5⌉`-regular tripartite hypergraph; its edges are taken slot by slot
/// (each slot is a perfect matching of the groups) until the excess is used.
pub fn phase3_equalize(n: usize, classes: &[Vec<usize>; 3], residual: &[u32]) -> Result<Phase3> {
    let mut residual = residual.to_vec();
    let sums = class_sums(classes, &residual);
    let target = *sums.iter().min().unwrap();
    let degree = 2 * n.div_ceil(5) as u32;
    let mut edges = Vec::new();
    for k in 0..3 {
        let excess = sums[k] - target;
        if excess == 0 {
            continue;
        }
        if excess % 3 != 0 {
            return Err(Error::Internal(format!(
                "class excess {excess} not divisible by 3"
            )));
        }
        let mut by_residual = classes[k].clone();
        by_residual.sort_by(|&u, &v| residual[v].cmp(&residual[u]).then(u.cmp(&v)));
        let q = by_residual.len() / 3;
        let mut groups: [Vec<usize>; 3] = Default::default();
        for (pos, &v) in by_residual[..3 * q].iter().enumerate() {
            let lap = pos % 6;
            groups[if lap < 3 { lap } else { 5 - lap }].push(v);
        }
        let h = regular_tripartite(q, degree)?;
        let mut local: Vec<(usize, usize, usize)> = h.edges().collect();
        // Slot (r, s) of a_i is the edge (a_i, b_{i+r}, c_{i+r+s}).
        local.sort_by_key(|&(a, b, c)| (((b + q - a) % q) * q + (c + q - b) % q, a));
        let keep = (excess / 3) as usize;
        if keep > local.len() {
            return Err(Error::Internal(format!(
                "class excess {excess} exceeds the capacity {} of the equalizer",
                3 * local.len()
            )));
        }
        for &(a, b, c) in &local[..keep] {
            let (u, v, w) = (groups[0][a], groups[1][b], groups[2][c]);
            for x in [u, v, w] {
                residual[x] = residual[x].checked_sub(1).ok_or_else(|| {
                    Error::Internal(format!("equalizer drives vertex {x} below 0"))
                })?;
            }
            edges.push(canonical_edge(u, v, w)?);
        }
    }
    Ok(Phase3 { edges, residual })
}

/// Realizes the remaining degrees as a tripartite hypergraph on the classes
/// and returns its edges in global vertex labels.
pub fn phase4_tripartite(classes: &[Vec<usize>; 3], residual: &[u32]) -> Result<Vec<Edge>> {
    let seq = |k: usize| DegreeSequence::new(classes[k].iter().map(|&v| residual[v]).collect());
    let d = TripartiteDegreeSequence::new(seq(0)?, seq(1)?, seq(2)?);
    let (h, _) = realize_tripartite(&d).map_err(|e| match e {
        Error::Internal(_) => e,
        other => Error::Internal(format!("residual tripartite sequence rejected: {other}")),
    })?;
    h.edges()
        .map(|(a, b, c)| canonical_edge(classes[0][a], classes[1][b], classes[2][c]))
        .collect()
}

/// Realizes `d` and reports how the edges were produced.
pub fn realize_hypergraph(d: &DegreeSequence) -> Result<(Hypergraph, PhasePlan)> {
    let n = check_domain(d)?;
    let p1 = phase1_satisfy_extras(d)?;
    let p2 = phase2_split_and_parity(&p1.residual, &p1.extras)?;
    let p3 = phase3_equalize(n, &p2.classes, &p2.residual)?;
    let p4 = phase4_tripartite(&p2.classes, &p3.residual)?;

    let mut class_assignment = vec![Class::None; n];
    for (k, class) in Class::TRIPARTITE.into_iter().enumerate() {
        for &v in &p2.classes[k] {
            class_assignment[v] = class;
        }
    }
    let plan = PhasePlan {
        extra_vertices: p1.extras,
        class_assignment,
        phase1_edges: p1.edges,
        phase2_edge: p2.parity_edge,
        phase3_edges: p3.edges,
        phase4_edges: p4,
        swap_count: p2.swaps,
    };
    plan.check_disjointness()?;
    let all = plan
        .phase1_edges
        .iter()
        .chain(plan.phase2_edge.iter())
        .chain(&plan.phase3_edges)
        .chain(&plan.phase4_edges)
        .copied();
    let h = Hypergraph::from_edges(n, all)
        .map_err(|e| Error::Internal(format!("phases produced a bad edge set: {e}")))?;
    match verify_realization(&h, d)? {
        v if v.is_realization() => Ok((h, plan)),
        v => Err(Error::Internal(format!("assembled hypergraph fails: {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: Vec<u32>) -> DegreeSequence {
        DegreeSequence::new(v).unwrap()
    }

    #[test]
    fn bounds_arithmetic() {
        // m = 15, q = 9: 7·deg >= 450 + 259 and 7·deg <= 1125.
        assert_eq!(degree_bounds(45), (102, 160));
        // m = 15, q = 10.
        assert_eq!(degree_bounds(46), (106, 160));
        assert_eq!(degree_bounds(60), (164, 285));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            realize_hypergraph(&seq(vec![120; 44])),
            Err(Error::TooFewVertices { n: 44, min: 45 })
        ));
        let mut d = vec![120; 45];
        d[0] = 121;
        assert!(matches!(
            realize_hypergraph(&seq(d)),
            Err(Error::SumNotDivisibleByThree { sum: 5401 })
        ));
        let mut d = vec![120; 45];
        d[3] = 101;
        d[4] = 139;
        assert!(matches!(
            realize_hypergraph(&seq(d)),
            Err(Error::BelowLowerBound { index: 3, .. })
        ));
        let mut d = vec![120; 45];
        d[3] = 161;
        d[4] = 119;
        d[5] = 119;
        d[6] = 121;
        assert!(matches!(
            realize_hypergraph(&seq(d)),
            Err(Error::AboveUpperBound { index: 3, .. })
        ));
    }

    #[test]
    fn uniform_45() {
        let d = seq(vec![120; 45]);
        let (h, plan) = realize_hypergraph(&d).unwrap();
        assert!(verify_realization(&h, &d).unwrap().is_realization());
        assert!(plan.extra_vertices.is_empty() && plan.phase1_edges.is_empty());
        assert_eq!(plan.swap_count, 0);
        assert!(plan.phase2_edge.is_none() && plan.phase3_edges.is_empty());
        assert_eq!(plan.phase4_edges.len(), 45 * 120 / 3);
    }

    #[test]
    fn phase1_extras() {
        // n = 46: one extra, the lowest-degree vertex.
        let mut v = vec![130u32; 46];
        v[5] = 110;
        v[6] = 149;
        let d = seq(v);
        let p1 = phase1_satisfy_extras(&d).unwrap();
        assert_eq!(p1.extras, vec![5]);
        assert_eq!(p1.edges.len(), 110);
        assert_eq!(p1.residual[5], 0);
        for (u, (&before, &after)) in d.iter().zip(&p1.residual).enumerate() {
            if u != 5 {
                assert!(before - after <= 10);
            }
        }

        // n = 47: two extras, each non-extra loses at most 2·10.
        let d = seq(vec![150; 47]
            .into_iter()
            .enumerate()
            .map(|(i, x)| x - (i < 2) as u32 * 3)
            .collect());
        let p1 = phase1_satisfy_extras(&d).unwrap();
        assert_eq!(p1.extras, vec![0, 1]);
        assert_eq!(p1.edges.len(), 2 * 147);
        for v in 2..47 {
            assert!(d[v] - p1.residual[v] <= 20);
        }
        assert_eq!(
            phase1_satisfy_extras(&seq(vec![120; 45]))
                .unwrap()
                .edges
                .len(),
            0
        );
    }

    #[test]
    fn phase2_parity_edge() {
        // 45 vertices, no extras: craft residues (0, 1, 2) after the deal.
        let mut r = vec![120u32; 45];
        let p = phase2_split_and_parity(&r, &[]).unwrap();
        assert!(p.parity_edge.is_none());
        // Bump two vertices so the class sums have distinct residues.
        let a0 = p.classes[0][0];
        let b0 = p.classes[1][0];
        r[a0] += 1;
        r[b0] += 2;
        let p = phase2_split_and_parity(&r, &[]).unwrap();
        let sums = class_sums(&p.classes, &p.residual);
        assert!(p.parity_edge.is_some());
        assert!(sums.iter().all(|s| s % 3 == sums[0] % 3));
    }

    #[test]
    fn phase3_small_excess() {
        let classes: [Vec<usize>; 3] = [(0..15).collect(), (15..30).collect(), (30..45).collect()];
        let mut r = vec![120u32; 45];
        r[0] += 3;
        let p = phase3_equalize(45, &classes, &r).unwrap();
        assert_eq!(p.edges.len(), 1);
        assert!(p.edges[0].iter().all(|&v| v < 15));
        assert_eq!(class_sums(&classes, &p.residual), [1800; 3]);
        let p = phase3_equalize(45, &classes, &vec![120; 45]).unwrap();
        assert!(p.edges.is_empty());
    }
}
