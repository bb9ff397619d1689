//! Bipartite and simple-graph realizations of degree sequences.
//!
//! These are the subroutines the hypergraph constructions lean on: the
//! Havel–Hakimi reduction for bipartite and simple graphs, the circulant
//! almost-regular bipartite graph, and the "one special vertex plus an
//! almost-regular rest" configuration.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::types::{BipartiteGraph, DegreeSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteDegreeSequence {
    pub left: DegreeSequence,
    pub right: DegreeSequence,
}

impl BipartiteDegreeSequence {
    pub fn new(left: DegreeSequence, right: DegreeSequence) -> Self {
        BipartiteDegreeSequence { left, right }
    }
}

/// Index of the largest value among `candidates`, lowest index on ties.
fn argmax_by_value(values: &[u32], candidates: impl Iterator<Item = usize>) -> Option<usize> {
    let mut best: Option<usize> = None;
    for i in candidates {
        match best {
            Some(b) if values[b] >= values[i] => {}
            _ => best = Some(i),
        }
    }
    best
}

/// Indices sorted by descending value, ascending index among equals.
fn by_descending(values: &[u32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[b].cmp(&values[a]).then(a.cmp(&b)));
    idx
}

/// Havel–Hakimi for bipartite sequences.
///
/// Repeatedly takes the largest unsatisfied left degree and joins it to the
/// currently largest right residuals. Returns [`Error::NotGraphic`] exactly
/// when no simple bipartite realization exists.
pub fn havel_hakimi_bipartite(d: &BipartiteDegreeSequence) -> Result<BipartiteGraph> {
    let (nl, nr) = (d.left.len(), d.right.len());
    if d.left.sum() != d.right.sum() {
        return Err(Error::NotGraphic(format!(
            "left sum {} differs from right sum {}",
            d.left.sum(),
            d.right.sum()
        )));
    }
    let mut left: Vec<u32> = d.left.as_slice().to_vec();
    let mut right: Vec<u32> = d.right.as_slice().to_vec();
    let mut done = vec![false; nl];
    let mut g = BipartiteGraph::new(nl, nr);
    while let Some(l) = argmax_by_value(&left, (0..nl).filter(|&i| !done[i])) {
        done[l] = true;
        let need = left[l] as usize;
        if need == 0 {
            continue;
        }
        let order = by_descending(&right);
        if need > nr || right[order[need - 1]] == 0 {
            return Err(Error::NotGraphic(format!(
                "left vertex {l} needs {need} neighbours but fewer right residuals remain"
            )));
        }
        for &r in &order[..need] {
            right[r] -= 1;
            g.insert(l, r);
        }
        left[l] = 0;
    }
    Ok(g)
}

/// Left degrees of an almost-regular split of `sum` over `n` vertices: the
/// first `sum mod n` get the ceiling, the rest the floor.
pub fn almost_regular_split(n: usize, sum: u64) -> Vec<u32> {
    if n == 0 {
        return Vec::new();
    }
    let base = (sum / n as u64) as u32;
    let extra = (sum % n as u64) as usize;
    (0..n).map(|i| base + u32::from(i < extra)).collect()
}

/// Almost-regular bipartite graph with `sum` edges.
///
/// Left vertex `i` takes the next `deg(i)` right vertices cyclically, starting
/// where left vertex `i - 1` stopped, so both sides end up almost regular.
pub fn almost_regular_bipartite(n_left: usize, n_right: usize, sum: u64) -> Result<BipartiteGraph> {
    if sum > (n_left * n_right) as u64 {
        return Err(Error::Precondition(format!(
            "{sum} edges do not fit in a {n_left}x{n_right} bipartite graph"
        )));
    }
    let mut g = BipartiteGraph::new(n_left, n_right);
    if sum == 0 {
        return Ok(g);
    }
    let degrees = almost_regular_split(n_left, sum);
    let mut cursor = 0usize;
    for (l, &deg) in degrees.iter().enumerate() {
        for _ in 0..deg {
            g.insert(l, cursor % n_right);
            cursor += 1;
        }
    }
    Ok(g)
}

/// Realization of `(D, D)` where `D = (d, k, .., k, k+1, .., k+1)` has `n`
/// entries, `count_k_plus_1` of which equal `k + 1`.
pub fn d_plus_almost_regular_bipartite(
    n: usize,
    d: u32,
    k: u32,
    count_k_plus_1: usize,
) -> Result<BipartiteGraph> {
    if n == 0 || count_k_plus_1 > n - 1 {
        return Err(Error::Precondition(format!(
            "{count_k_plus_1} entries of k+1 do not fit beside the special vertex in {n}"
        )));
    }
    if k as usize + 1 > n - 1 {
        return Err(Error::Precondition(format!(
            "k+1 = {} exceeds n-1 = {}",
            k + 1,
            n - 1
        )));
    }
    if d as usize > n {
        return Err(Error::Precondition(format!("d = {d} exceeds n = {n}")));
    }
    let mut seq = vec![d];
    seq.extend(std::iter::repeat(k).take(n - 1 - count_k_plus_1));
    seq.extend(std::iter::repeat(k + 1).take(count_k_plus_1));
    let side = DegreeSequence::new(seq)?;
    havel_hakimi_bipartite(&BipartiteDegreeSequence::new(side.clone(), side))
}

/// Havel–Hakimi for simple graphs: satisfy the largest residual degree from
/// the next largest ones. Edges are returned as `(u, v)` with `u < v`.
pub fn havel_hakimi_simple(d: &DegreeSequence) -> Result<BTreeSet<(usize, usize)>> {
    let n = d.len();
    if d.sum() % 2 != 0 {
        return Err(Error::NotGraphic(format!("odd degree sum {}", d.sum())));
    }
    let mut res: Vec<u32> = d.as_slice().to_vec();
    let mut alive = vec![true; n];
    let mut edges = BTreeSet::new();
    while let Some(v) = argmax_by_value(&res, (0..n).filter(|&i| alive[i])) {
        alive[v] = false;
        let need = res[v] as usize;
        if need == 0 {
            continue;
        }
        let mut others: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
        others.sort_by(|&a, &b| res[b].cmp(&res[a]).then(a.cmp(&b)));
        if need > others.len() || res[others[need - 1]] == 0 {
            return Err(Error::NotGraphic(format!(
                "vertex {v} needs {need} neighbours but fewer residuals remain"
            )));
        }
        for &u in &others[..need] {
            res[u] -= 1;
            edges.insert((v.min(u), v.max(u)));
        }
        res[v] = 0;
    }
    Ok(edges)
}

/// Bipartite realization of `(left, right)` that avoids every cell for which
/// `forbidden(l, r)` holds. Exact: returns `None` only if no such graph exists.
///
/// Tries the Havel–Hakimi greedy first and falls back to a max-flow.
pub fn realize_bipartite_avoiding<F>(
    left: &[u32],
    right: &[u32],
    forbidden: F,
) -> Option<BipartiteGraph>
where
    F: Fn(usize, usize) -> bool,
{
    let total_l: u64 = left.iter().map(|&d| d as u64).sum();
    let total_r: u64 = right.iter().map(|&d| d as u64).sum();
    if total_l != total_r {
        return None;
    }
    greedy_avoiding(left, right, &forbidden).or_else(|| flow_avoiding(left, right, &forbidden))
}

fn greedy_avoiding<F: Fn(usize, usize) -> bool>(
    left: &[u32],
    right: &[u32],
    forbidden: &F,
) -> Option<BipartiteGraph> {
    let mut res_r = right.to_vec();
    let mut g = BipartiteGraph::new(left.len(), right.len());
    for l in by_descending(left) {
        let need = left[l] as usize;
        if need == 0 {
            continue;
        }
        let order: Vec<usize> = by_descending(&res_r)
            .into_iter()
            .filter(|&r| res_r[r] > 0 && !forbidden(l, r))
            .take(need)
            .collect();
        if order.len() < need {
            return None;
        }
        for r in order {
            res_r[r] -= 1;
            g.insert(l, r);
        }
    }
    Some(g)
}

fn flow_avoiding<F: Fn(usize, usize) -> bool>(
    left: &[u32],
    right: &[u32],
    forbidden: &F,
) -> Option<BipartiteGraph> {
    let (nl, nr) = (left.len(), right.len());
    // used[l][r]: cell carries flow.
    let mut used = vec![vec![false; nr]; nl];
    let mut load_l = vec![0u32; nl];
    let mut load_r = vec![0u32; nr];
    let need: u64 = left.iter().map(|&d| d as u64).sum();
    let mut flow = 0u64;

    // Augment along alternating paths: free left -> (unused cell) -> right,
    // then either a right with spare capacity or back along a used cell.
    loop {
        if flow == need {
            break;
        }
        let Some(start) = (0..nl).find(|&l| load_l[l] < left[l]) else {
            break;
        };
        let mut prev_r: Vec<Option<usize>> = vec![None; nr];
        let mut prev_l: Vec<Option<usize>> = vec![None; nl];
        let mut seen_l = vec![false; nl];
        let mut seen_r = vec![false; nr];
        let mut queue = std::collections::VecDeque::new();
        seen_l[start] = true;
        queue.push_back(start);
        let mut sink: Option<usize> = None;
        'bfs: while let Some(l) = queue.pop_front() {
            for r in 0..nr {
                if seen_r[r] || used[l][r] || forbidden(l, r) {
                    continue;
                }
                seen_r[r] = true;
                prev_r[r] = Some(l);
                if load_r[r] < right[r] {
                    sink = Some(r);
                    break 'bfs;
                }
                for l2 in 0..nl {
                    if !seen_l[l2] && used[l2][r] {
                        seen_l[l2] = true;
                        prev_l[l2] = Some(r);
                        queue.push_back(l2);
                    }
                }
            }
        }
        let Some(mut r) = sink else {
            return None;
        };
        load_r[r] += 1;
        loop {
            let l = prev_r[r].expect("path");
            used[l][r] = true;
            match prev_l[l] {
                None => {
                    load_l[l] += 1;
                    break;
                }
                Some(r_back) => {
                    used[l][r_back] = false;
                    r = r_back;
                }
            }
        }
        flow += 1;
    }
    if flow != need {
        return None;
    }
    let mut g = BipartiteGraph::new(nl, nr);
    for (l, row) in used.iter().enumerate() {
        for (r, &on) in row.iter().enumerate() {
            if on {
                g.insert(l, r);
            }
        }
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bds(l: &[u32], r: &[u32]) -> BipartiteDegreeSequence {
        BipartiteDegreeSequence::new(
            DegreeSequence::new(l.to_vec()).unwrap(),
            DegreeSequence::new(r.to_vec()).unwrap(),
        )
    }

    /// Exhaustive oracle: does any 0-1 matrix have these margins?
    fn brute_force_graphic(left: &[u32], right: &[u32]) -> bool {
        let (nl, nr) = (left.len(), right.len());
        let cells = nl * nr;
        (0u32..1 << cells).any(|mask| {
            let mut dl = vec![0u32; nl];
            let mut dr = vec![0u32; nr];
            for c in 0..cells {
                if mask >> c & 1 == 1 {
                    dl[c / nr] += 1;
                    dr[c % nr] += 1;
                }
            }
            dl == left && dr == right
        })
    }

    #[test]
    fn havel_hakimi_examples() {
        let g = havel_hakimi_bipartite(&bds(&[2, 2, 2], &[3, 3])).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(matches!(
            havel_hakimi_bipartite(&bds(&[3], &[1, 1])),
            Err(Error::NotGraphic(_))
        ));
        let g = havel_hakimi_bipartite(&bds(&[2, 1], &[2, 1])).unwrap();
        let edges: Vec<_> = g.edges().copied().collect();
        assert_eq!(edges, vec![(0, 0), (0, 1), (1, 0)]);
    }

    #[test]
    fn almost_regular_examples() {
        let g = almost_regular_bipartite(3, 3, 9).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert_eq!(almost_regular_bipartite(3, 3, 0).unwrap().edge_count(), 0);
        let g = almost_regular_bipartite(4, 3, 7).unwrap();
        let mut l = g.left_degrees();
        let mut r = g.right_degrees();
        l.sort_unstable();
        r.sort_unstable();
        assert_eq!(l, vec![1, 2, 2, 2]);
        assert_eq!(r, vec![2, 2, 3]);
        assert!(almost_regular_bipartite(2, 2, 5).is_err());
    }

    #[test]
    fn d_plus_almost_regular_examples() {
        let g = d_plus_almost_regular_bipartite(3, 2, 1, 1).unwrap();
        assert_eq!(g.left_degrees(), vec![2, 1, 2]);
        assert_eq!(g.right_degrees(), vec![2, 1, 2]);
        assert_eq!(
            d_plus_almost_regular_bipartite(2, 0, 0, 0)
                .unwrap()
                .edge_count(),
            0
        );
        let g = d_plus_almost_regular_bipartite(4, 4, 2, 0).unwrap();
        assert_eq!(g.left_degrees(), vec![4, 2, 2, 2]);
        assert_eq!(g.right_degrees(), vec![4, 2, 2, 2]);
        assert!(d_plus_almost_regular_bipartite(4, 5, 2, 0).is_err());
        assert!(d_plus_almost_regular_bipartite(4, 1, 3, 0).is_err());
    }

    #[test]
    fn havel_hakimi_simple_examples() {
        let one = havel_hakimi_simple(&DegreeSequence::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(one.into_iter().collect::<Vec<_>>(), vec![(0, 1)]);
        let tri = havel_hakimi_simple(&DegreeSequence::new(vec![2, 2, 2]).unwrap()).unwrap();
        assert_eq!(tri.len(), 3);
        assert!(havel_hakimi_simple(&DegreeSequence::new(vec![3, 1]).unwrap()).is_err());
        assert!(havel_hakimi_simple(&DegreeSequence::new(vec![1, 1, 1]).unwrap()).is_err());
        for m in 2..30usize {
            for r in 0..m as u32 {
                if (r as usize * m) % 2 == 1 {
                    continue;
                }
                let edges = havel_hakimi_simple(&DegreeSequence::constant(m, r).unwrap()).unwrap();
                let mut deg = vec![0u32; m];
                for (u, v) in edges {
                    assert!(u < v);
                    deg[u] += 1;
                    deg[v] += 1;
                }
                assert!(deg.iter().all(|&d| d == r), "m={m} r={r}");
            }
        }
    }

    #[test]
    fn avoiding_respects_forbidden_cells() {
        // 2x2 with both sides degree 1 and the diagonal forbidden: only the anti-diagonal.
        let g = realize_bipartite_avoiding(&[1, 1], &[1, 1], |l, r| l == r).unwrap();
        assert!(g.contains(0, 1) && g.contains(1, 0));
        assert!(realize_bipartite_avoiding(&[2, 0], &[1, 1], |l, r| l == 0 && r == 1).is_none());
        // Greedy would take (0,0),(0,1) first; flow must repair.
        let g = realize_bipartite_avoiding(&[2, 1, 1], &[2, 1, 1], |l, r| l > 0 && r > 0).unwrap();
        assert_eq!(g.left_degrees(), vec![2, 1, 1]);
        assert_eq!(g.right_degrees(), vec![2, 1, 1]);
    }

    proptest! {
        #[test]
        fn havel_hakimi_matches_exhaustive(
            left in prop::collection::vec(0u32..=4, 1..=4),
            right in prop::collection::vec(0u32..=4, 1..=4),
        ) {
            prop_assume!(left.len() * right.len() <= 16);
            let truth = brute_force_graphic(&left, &right);
            match havel_hakimi_bipartite(&bds(&left, &right)) {
                Ok(g) => {
                    prop_assert!(truth);
                    prop_assert_eq!(g.left_degrees(), left);
                    prop_assert_eq!(g.right_degrees(), right);
                }
                Err(_) => prop_assert!(!truth),
            }
        }

        #[test]
        fn almost_regular_is_flat(nl in 1usize..12, nr in 1usize..12, frac in 0.0f64..=1.0) {
            let sum = ((nl * nr) as f64 * frac).floor() as u64;
            let g = almost_regular_bipartite(nl, nr, sum).unwrap();
            let l = g.left_degrees();
            let r = g.right_degrees();
            prop_assert_eq!(g.edge_count() as u64, sum);
            prop_assert!(l.iter().max().unwrap() - l.iter().min().unwrap() <= 1);
            prop_assert!(r.iter().max().unwrap() - r.iter().min().unwrap() <= 1);
        }

        #[test]
        fn avoiding_matches_exhaustive(
            left in prop::collection::vec(0u32..=3, 1..=3),
            right in prop::collection::vec(0u32..=3, 1..=3),
            mask in 0u32..512,
        ) {
            let nr = right.len();
            let forbidden = |l: usize, r: usize| mask >> (l * nr + r) & 1 == 1;
            let cells = left.len() * nr;
            let truth = (0u32..1 << cells).any(|m| {
                let mut dl = vec![0u32; left.len()];
                let mut dr = vec![0u32; nr];
                for c in 0..cells {
                    if m >> c & 1 == 1 {
                        if forbidden(c / nr, c % nr) { return false; }
                        dl[c / nr] += 1;
                        dr[c % nr] += 1;
                    }
                }
                dl == left && dr == right
            });
            match realize_bipartite_avoiding(&left, &right, forbidden) {
                Some(g) => {
                    prop_assert!(truth);
                    prop_assert_eq!(g.left_degrees(), left);
                    prop_assert_eq!(g.right_degrees(), right);
                    for &(l, r) in g.edges() { prop_assert!(!forbidden(l, r)); }
                }
                None => prop_assert!(!truth),
            }
        }
    }
}
