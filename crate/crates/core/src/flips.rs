//! Balancing hinge flips.
//!
//! A hinge flip replaces the edge `{from} ∪ X` by `{to} ∪ X`, moving one unit
//! of degree from `from` to `to`. It is balancing when `deg(from) > deg(to)`,
//! and such a flip always exists: the link of `from` has more pairs than the
//! link of `to`, so some pair lies in the first and not the second.

use std::fmt;

use crate::error::{Error, Result};
use crate::types::{
    Class, DegreeSequence, Edge, Hypergraph, TripartiteDegreeSequence, TripartiteHypergraph,
    VertexRef,
};

/// One applied flip. `removed` contains `from`, `added` contains `to`, and the
/// two share the remaining pair. Tripartite edges are stored as `[a, b, c]`,
/// plain edges as sorted vertex triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipStep {
    pub class: Class,
    pub from: VertexRef,
    pub to: VertexRef,
    pub removed: Edge,
    pub added: Edge,
}

impl FlipStep {
    fn edge_refs(&self, e: &Edge) -> [VertexRef; 3] {
        match self.class {
            Class::None => e.map(VertexRef::plain),
            _ => [
                VertexRef::new(Class::A, e[0]),
                VertexRef::new(Class::B, e[1]),
                VertexRef::new(Class::C, e[2]),
            ],
        }
    }
}

/// One line: class, from, to, removed edge, added edge.
impl fmt::Display for FlipStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.class, self.from, self.to)?;
        for e in [&self.removed, &self.added] {
            for v in self.edge_refs(e) {
                write!(f, " {v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FlipTrace {
    pub steps: Vec<FlipStep>,
}

impl FlipTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: FlipStep) {
        self.steps.push(step);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FlipStep> {
        self.steps.iter()
    }

    /// Steps restricted to one class.
    pub fn count_in(&self, class: Class) -> usize {
        self.steps.iter().filter(|s| s.class == class).count()
    }
}

impl fmt::Display for FlipTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

/// The degree-sequence effect of a balancing flip: `d_i - 1`, `d_j + 1`.
pub fn balancing_flip_sequence(d: &DegreeSequence, i: usize, j: usize) -> Result<DegreeSequence> {
    if i >= d.len() || j >= d.len() {
        return Err(Error::InvalidFlip(format!(
            "index out of range for a sequence of length {}",
            d.len()
        )));
    }
    if d[i] <= d[j] {
        return Err(Error::InvalidFlip(format!(
            "d[{i}] = {} is not larger than d[{j}] = {}",
            d[i], d[j]
        )));
    }
    let mut v = d.as_slice().to_vec();
    v[i] -= 1;
    v[j] += 1;
    DegreeSequence::new(v)
}

fn with_slot(pair: (usize, usize), slot: usize, v: usize) -> Edge {
    match slot {
        0 => [v, pair.0, pair.1],
        1 => [pair.0, v, pair.1],
        _ => [pair.0, pair.1, v],
    }
}

fn class_degree(h: &TripartiteHypergraph, slot: usize, v: usize) -> u32 {
    let [na, nb, nc] = h.sizes();
    let (n1, n2) = match slot {
        0 => (nb, nc),
        1 => (na, nc),
        _ => (na, nb),
    };
    let mut deg = 0;
    for p in 0..n1 {
        for q in 0..n2 {
            let [a, b, c] = with_slot((p, q), slot, v);
            deg += u32::from(h.contains(a, b, c));
        }
    }
    deg
}

/// Flips one edge of `from` over to `to` inside `class`, choosing the first
/// co-vertex pair (lexicographically) that `to` does not already use.
pub fn apply_balancing_flip_tripartite(
    h: &mut TripartiteHypergraph,
    class: Class,
    from: usize,
    to: usize,
) -> Result<FlipStep> {
    let slot = class
        .slot()
        .ok_or_else(|| Error::InvalidFlip("tripartite flip needs class A, B or C".into()))?;
    let size = h.sizes()[slot];
    if from >= size || to >= size {
        return Err(Error::InvalidFlip(format!(
            "vertex out of range for class {class} of size {size}"
        )));
    }
    if from == to {
        return Err(Error::InvalidFlip(format!(
            "{class}{from} flipped onto itself"
        )));
    }
    let (df, dt) = (class_degree(h, slot, from), class_degree(h, slot, to));
    if df <= dt {
        return Err(Error::InvalidFlip(format!(
            "deg({class}{from}) = {df} is not larger than deg({class}{to}) = {dt}"
        )));
    }
    let [na, nb, nc] = h.sizes();
    let (n1, n2) = match slot {
        0 => (nb, nc),
        1 => (na, nc),
        _ => (na, nb),
    };
    for p in 0..n1 {
        for q in 0..n2 {
            let removed = with_slot((p, q), slot, from);
            let added = with_slot((p, q), slot, to);
            if h.contains(removed[0], removed[1], removed[2])
                && !h.contains(added[0], added[1], added[2])
            {
                h.remove(removed[0], removed[1], removed[2]);
                h.insert(added[0], added[1], added[2]);
                return Ok(FlipStep {
                    class,
                    from: VertexRef::new(class, from),
                    to: VertexRef::new(class, to),
                    removed,
                    added,
                });
            }
        }
    }
    Err(Error::Internal(format!(
        "no co-vertex pair for a flip from {class}{from} to {class}{to}"
    )))
}

/// Plain-hypergraph flip; the co-vertex pair avoids both `from` and `to`.
pub fn apply_balancing_flip(h: &mut Hypergraph, from: usize, to: usize) -> Result<FlipStep> {
    let n = h.vertex_count();
    if from >= n || to >= n {
        return Err(Error::InvalidFlip(format!(
            "vertex out of range for {n} vertices"
        )));
    }
    if from == to {
        return Err(Error::InvalidFlip(format!("v{from} flipped onto itself")));
    }
    let deg = h.degrees();
    if deg[from] <= deg[to] {
        return Err(Error::InvalidFlip(format!(
            "deg(v{from}) = {} is not larger than deg(v{to}) = {}",
            deg[from], deg[to]
        )));
    }
    let mut links: Vec<(usize, usize)> = h
        .edges()
        .filter(|e| e.contains(&from) && !e.contains(&to))
        .map(|e| {
            let mut rest = e.iter().copied().filter(|&v| v != from);
            (rest.next().unwrap(), rest.next().unwrap())
        })
        .collect();
    links.sort_unstable();
    for (p, q) in links {
        let mut added = [to, p, q];
        added.sort_unstable();
        if !h.contains(&added) {
            let mut removed = [from, p, q];
            removed.sort_unstable();
            h.remove(&removed);
            h.insert(to, p, q)?;
            return Ok(FlipStep {
                class: Class::None,
                from: VertexRef::plain(from),
                to: VertexRef::plain(to),
                removed,
                added,
            });
        }
    }
    Err(Error::Internal(format!(
        "no co-vertex pair for a flip from v{from} to v{to}"
    )))
}

/// Picks the next flip pair: largest surplus and largest deficit, lowest index on ties.
fn next_pair(current: &[u32], target: &[u32]) -> Option<(usize, usize)> {
    let mut from: Option<(usize, u32)> = None;
    let mut to: Option<(usize, u32)> = None;
    for (i, (&c, &t)) in current.iter().zip(target).enumerate() {
        if c > t && from.map_or(true, |(_, s)| c - t > s) {
            from = Some((i, c - t));
        }
        if c < t && to.map_or(true, |(_, s)| t - c > s) {
            to = Some((i, t - c));
        }
    }
    match (from, to) {
        (Some((i, _)), Some((j, _))) => Some((i, j)),
        _ => None,
    }
}

fn check_target(class: Class, current: &[u32], target: &[u32]) -> Result<()> {
    if current.len() != target.len() {
        return Err(Error::ShapeMismatch(format!(
            "class {class}: {} vertices in the hypergraph, {} in the target",
            current.len(),
            target.len()
        )));
    }
    let (cs, ts): (u64, u64) = (
        current.iter().map(|&d| d as u64).sum(),
        target.iter().map(|&d| d as u64).sum(),
    );
    if cs != ts {
        return Err(Error::Precondition(format!(
            "class {class}: degree sum {cs} differs from the target sum {ts}"
        )));
    }
    let lo = current.iter().copied().min().unwrap_or(0);
    let hi = current.iter().copied().max().unwrap_or(0);
    if let Some((i, &t)) = target.iter().enumerate().find(|(_, &t)| t < lo || t > hi) {
        return Err(Error::Precondition(format!(
            "class {class}: target degree {t} of vertex {i} lies outside [{lo}, {hi}]"
        )));
    }
    Ok(())
}

/// Morphs `h` into a realization of `target` by balancing flips, class A
/// first, then B, then C. Every step lowers the L1 distance to the target by
/// exactly two.
pub fn transform_to_target_tripartite(
    h: &TripartiteHypergraph,
    target: &TripartiteDegreeSequence,
) -> Result<(TripartiteHypergraph, FlipTrace)> {
    if h.sizes() != target.sizes() {
        return Err(Error::ShapeMismatch(format!(
            "hypergraph classes {:?}, target classes {:?}",
            h.sizes(),
            target.sizes()
        )));
    }
    let start = h.degrees();
    for (k, class) in Class::TRIPARTITE.into_iter().enumerate() {
        check_target(class, &start[k], target.classes()[k].as_slice())?;
    }
    let mut work = h.clone();
    let mut trace = FlipTrace::new();
    for (k, class) in Class::TRIPARTITE.into_iter().enumerate() {
        let mut current = start[k].clone();
        let goal = target.classes()[k].as_slice();
        while let Some((i, j)) = next_pair(&current, goal) {
            if current[i] <= current[j] {
                return Err(Error::Internal(format!(
                    "flip {class}{i} -> {class}{j} would not be balancing"
                )));
            }
            trace.push(apply_balancing_flip_tripartite(&mut work, class, i, j)?);
            current[i] -= 1;
            current[j] += 1;
        }
    }
    Ok((work, trace))
}

/// Plain-hypergraph counterpart of [`transform_to_target_tripartite`].
pub fn transform_to_target(
    h: &Hypergraph,
    target: &DegreeSequence,
) -> Result<(Hypergraph, FlipTrace)> {
    let mut current = h.degrees();
    check_target(Class::None, &current, target.as_slice())?;
    let mut work = h.clone();
    let mut trace = FlipTrace::new();
    while let Some((i, j)) = next_pair(&current, target.as_slice()) {
        if current[i] <= current[j] {
            return Err(Error::Internal(format!(
                "flip v{i} -> v{j} would not be balancing"
            )));
        }
        trace.push(apply_balancing_flip(&mut work, i, j)?);
        current[i] -= 1;
        current[j] += 1;
    }
    Ok((work, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{degree_sequence_of, degree_sequence_of_tripartite};

    fn seq(v: &[u32]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sequence_flip_examples() {
        assert_eq!(
            balancing_flip_sequence(&seq(&[5, 2]), 0, 1).unwrap(),
            seq(&[4, 3])
        );
        assert_eq!(
            balancing_flip_sequence(&seq(&[7, 2, 2]), 0, 2).unwrap(),
            seq(&[6, 2, 3])
        );
        assert!(balancing_flip_sequence(&seq(&[3, 3]), 0, 1).is_err());
        assert!(balancing_flip_sequence(&seq(&[3, 3]), 1, 0).is_err());
        assert!(balancing_flip_sequence(&seq(&[3, 4]), 0, 1).is_err());
    }

    #[test]
    fn tripartite_flip_on_nearly_complete() {
        let mut h = TripartiteHypergraph::complete(2, 2, 2);
        h.remove(1, 0, 0);
        // A0 has 4 edges, A1 has 3; the only pair A1 lacks is (B0, C0).
        let step = apply_balancing_flip_tripartite(&mut h, Class::A, 0, 1).unwrap();
        assert_eq!(step.removed, [0, 0, 0]);
        assert_eq!(step.added, [1, 0, 0]);
        assert_eq!(h.degrees()[0], vec![3, 4]);
        assert_eq!(step.to_string(), "A A0 A1 A0 B0 C0 A1 B0 C0");

        let mut h = TripartiteHypergraph::complete(2, 2, 2);
        assert!(apply_balancing_flip_tripartite(&mut h, Class::A, 0, 0).is_err());
        assert!(apply_balancing_flip_tripartite(&mut h, Class::A, 0, 1).is_err());
        assert!(apply_balancing_flip_tripartite(&mut h, Class::None, 0, 1).is_err());
    }

    #[test]
    fn tripartite_flip_in_class_c() {
        let mut h =
            TripartiteHypergraph::from_edges([2, 2, 2], [(0, 0, 0), (0, 1, 0), (1, 1, 1)]).unwrap();
        let step = apply_balancing_flip_tripartite(&mut h, Class::C, 0, 1).unwrap();
        assert_eq!(step.removed, [0, 0, 0]);
        assert_eq!(step.added, [0, 0, 1]);
        assert_eq!(h.degrees()[2], vec![1, 2]);
    }

    #[test]
    fn plain_flip_avoids_endpoints() {
        // The link pair {1,2} of v0 touches v1 and is skipped; {2,5} is next.
        let mut h =
            Hypergraph::from_edges(6, [[0, 1, 2], [0, 3, 4], [0, 2, 5], [1, 3, 5]]).unwrap();
        let step = apply_balancing_flip(&mut h, 0, 1).unwrap();
        assert_eq!(step.removed, [0, 2, 5]);
        assert_eq!(step.added, [1, 2, 5]);
        assert_eq!(step.to_string(), "v v0 v1 v0 v2 v5 v1 v2 v5");
        assert_eq!(h.degrees(), vec![2, 3, 2, 2, 1, 2]);
    }

    #[test]
    fn transform_identity_and_single_swap() {
        let h = TripartiteHypergraph::complete(2, 2, 2);
        let d = degree_sequence_of_tripartite(&h);
        let (same, trace) = transform_to_target_tripartite(&h, &d).unwrap();
        assert!(trace.is_empty());
        assert_eq!(same, h);

        let mut h = TripartiteHypergraph::complete(3, 3, 3);
        h.remove(0, 0, 0);
        h.remove(0, 1, 1);
        // A degrees (7, 9, 9); aim for (8, 8, 9).
        let target = TripartiteDegreeSequence::from_vecs(
            vec![8, 8, 9],
            degree_sequence_of_tripartite(&h).classes()[1]
                .as_slice()
                .to_vec(),
            degree_sequence_of_tripartite(&h).classes()[2]
                .as_slice()
                .to_vec(),
        )
        .unwrap();
        let (out, trace) = transform_to_target_tripartite(&h, &target).unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(degree_sequence_of_tripartite(&out), target);
    }

    #[test]
    fn transform_rejects_bad_targets() {
        let h = TripartiteHypergraph::complete(2, 2, 2);
        let off_sum =
            TripartiteDegreeSequence::from_vecs(vec![4, 3], vec![4, 3], vec![4, 3]).unwrap();
        assert!(transform_to_target_tripartite(&h, &off_sum).is_err());
        let g = Hypergraph::from_edges(4, [[0, 1, 2]]).unwrap();
        // Sum matches but 2 lies above the current maximum 1.
        assert!(transform_to_target(&g, &seq(&[2, 1, 0, 0])).is_err());
    }

    #[test]
    fn plain_transform() {
        let h = Hypergraph::from_edges(6, [[0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 2, 3]]).unwrap();
        let target = seq(&[3, 2, 2, 2, 2, 1]);
        let start = degree_sequence_of(&h);
        let (out, trace) = transform_to_target(&h, &target).unwrap();
        assert_eq!(trace.len() as u64, start.l1_distance(&target) / 2);
        assert_eq!(degree_sequence_of(&out), target);
    }
}
