//! Regular and almost-regular tripartite hypergraphs, and the gadget that
//! clears one vertex per class while leaving the rest almost regular.

use crate::builder::SymmetricBuilder;
use crate::error::{Error, Result};
use crate::types::{DegreeSequence, TripartiteDegreeSequence, TripartiteHypergraph};

/// `n + n + n` classes, `count_k_plus_1` vertices of degree `k + 1` per
/// class (indices `0..count_k_plus_1`), the rest of degree `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlmostRegularSpec {
    pub n: usize,
    pub k: u32,
    pub count_k_plus_1: usize,
}

impl AlmostRegularSpec {
    pub fn new(n: usize, k: u32, count_k_plus_1: usize) -> Self {
        AlmostRegularSpec {
            n,
            k,
            count_k_plus_1,
        }
    }

    pub fn class_degrees(&self) -> Vec<u32> {
        (0..self.n)
            .map(|i| self.k + u32::from(i < self.count_k_plus_1))
            .collect()
    }
}

/// k-regular tripartite hypergraph on `n + n + n` vertices, `k <= n²`.
///
/// Vertex `a_i` takes the first `k` slots of the cyclic pattern
/// `(a_i, b_{i+r}, c_{i+r+s})`, `r, s in 0..n`, row by row: `k / n` full rows
/// and a partial row of `k mod n` slots. Shifting every index by one maps the
/// edge set onto itself, so B and C are regular as well.
pub fn regular_tripartite(n: usize, k: u32) -> Result<TripartiteHypergraph> {
    if k as usize > n * n {
        return Err(Error::Precondition(format!(
            "k = {k} exceeds n² = {}",
            n * n
        )));
    }
    let mut h = TripartiteHypergraph::new(n, n, n);
    for i in 0..n {
        for slot in 0..k as usize {
            let (r, s) = (slot / n, slot % n);
            h.insert(i, (i + r) % n, (i + r + s) % n);
        }
    }
    Ok(h)
}

/// Almost-regular tripartite hypergraph: the `(k+1)`-regular construction
/// minus the diagonal triples `(a_i, b_i, c_i)` of the degree-`k` indices.
pub fn almost_regular_tripartite(spec: &AlmostRegularSpec) -> Result<TripartiteHypergraph> {
    let AlmostRegularSpec {
        n,
        k,
        count_k_plus_1,
    } = *spec;
    if count_k_plus_1 > n {
        return Err(Error::Precondition(format!(
            "{count_k_plus_1} vertices of degree k+1 in a class of {n}"
        )));
    }
    if count_k_plus_1 == 0 {
        return regular_tripartite(n, k);
    }
    if k as usize + 1 > n * n {
        return Err(Error::Precondition(format!(
            "k+1 = {} exceeds n² = {}",
            k + 1,
            n * n
        )));
    }
    let mut h = regular_tripartite(n, k + 1)?;
    for i in count_k_plus_1..n {
        let removed = h.remove(i, i, i);
        debug_assert!(
            removed,
            "the (k+1)-regular pattern always holds the diagonal"
        );
    }
    Ok(h)
}

/// Clears the vertex of prescribed degree `d` (index 0) in every class of
/// `(d, k, .., k, k+1, .., k+1)³`, leaving the other residuals almost regular.
///
/// Three steps: `min(d, (n-1)²)` hyperedges per cleared vertex into the
/// other vertices, `⌊d'/2⌋` hyperedges for each pair of cleared vertices,
/// and the hyperedge on all three cleared vertices when `d'` is odd.
/// Returns the exhibited hyperedges and the residual degree sequence.
pub fn clear_intermediate_vertices(
    n: usize,
    d: u32,
    k: u32,
    count_k_plus_1: usize,
) -> Result<(TripartiteHypergraph, TripartiteDegreeSequence)> {
    if n < 2 {
        return Err(Error::Precondition(
            "need at least two vertices per class".into(),
        ));
    }
    if d as usize > n * n {
        return Err(Error::Precondition(format!(
            "d = {d} exceeds n² = {}",
            n * n
        )));
    }
    if (k as usize) < 2 * n - 1 {
        return Err(Error::Precondition(format!(
            "k = {k} is below 2n-1 = {}",
            2 * n - 1
        )));
    }
    if count_k_plus_1 > n - 1 {
        return Err(Error::Precondition(format!(
            "{count_k_plus_1} vertices of degree k+1 beside the cleared one in a class of {n}"
        )));
    }
    let mut degrees = vec![d];
    degrees.extend(std::iter::repeat(k).take(n - 1 - count_k_plus_1));
    degrees.extend(std::iter::repeat(k + 1).take(count_k_plus_1));

    let mut b = SymmetricBuilder::new(&degrees);
    let others: Vec<usize> = (1..n).collect();
    let first = d.min(((n - 1) * (n - 1)) as u32);
    b.star_levelled(0, &others, first)?;
    let rest = d - first;
    if rest > 0 {
        b.pairs(0, &others, (rest / 2) as usize)?;
        if rest % 2 == 1 {
            b.triple(0)?;
        }
    }
    let residual: Vec<u32> = b.residual().iter().map(|&r| r as u32).collect();
    let class = DegreeSequence::new(residual)?;
    Ok((b.into_graph(), TripartiteDegreeSequence::symmetric(class)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::degree_sequence_of_tripartite;

    fn assert_regular(h: &TripartiteHypergraph, k: u32) {
        for class in h.degrees() {
            assert!(class.iter().all(|&d| d == k), "{class:?} != {k}");
        }
    }

    #[test]
    fn regular_examples() {
        let full = regular_tripartite(2, 4).unwrap();
        assert_eq!(full, TripartiteHypergraph::complete(2, 2, 2));
        assert_eq!(regular_tripartite(3, 0).unwrap().edge_count(), 0);
        let h = regular_tripartite(2, 3).unwrap();
        assert_eq!(h.edge_count(), 6);
        // a_1 in one-based labels is a_0 here.
        assert!(h.contains(0, 0, 0) && h.contains(0, 0, 1) && h.contains(0, 1, 1));
        assert!(h.contains(1, 1, 1) && h.contains(1, 1, 0) && h.contains(1, 0, 0));
        assert_regular(&h, 3);
        assert!(regular_tripartite(2, 5).is_err());
    }

    #[test]
    fn regular_is_regular_and_rotation_invariant() {
        for n in 1..=12usize {
            for k in 0..=(n * n) as u32 {
                let h = regular_tripartite(n, k).unwrap();
                assert_eq!(h.edge_count(), n * k as usize);
                assert_regular(&h, k);
                for (a, b, c) in h.edges() {
                    assert!(h.contains((a + 1) % n, (b + 1) % n, (c + 1) % n));
                }
            }
        }
    }

    #[test]
    fn almost_regular_examples() {
        let full = almost_regular_tripartite(&AlmostRegularSpec::new(3, 8, 3)).unwrap();
        assert_eq!(full, TripartiteHypergraph::complete(3, 3, 3));
        let plain = almost_regular_tripartite(&AlmostRegularSpec::new(2, 3, 0)).unwrap();
        assert_eq!(plain, regular_tripartite(2, 3).unwrap());
        let h = almost_regular_tripartite(&AlmostRegularSpec::new(3, 3, 1)).unwrap();
        let d = degree_sequence_of_tripartite(&h);
        for class in d.classes() {
            assert_eq!(class.as_slice(), &[4, 3, 3]);
        }
        assert!(almost_regular_tripartite(&AlmostRegularSpec::new(2, 4, 1)).is_err());
    }

    #[test]
    fn almost_regular_sweep() {
        for n in 1..=8usize {
            for k in 0..(n * n) as u32 {
                for count in 0..=n {
                    let spec = AlmostRegularSpec::new(n, k, count);
                    let h = almost_regular_tripartite(&spec).unwrap();
                    let want = spec.class_degrees();
                    for class in h.degrees() {
                        assert_eq!(class, want);
                    }
                }
            }
        }
    }

    fn check_clearing(n: usize, d: u32, k: u32, count: usize) -> TripartiteDegreeSequence {
        let (h, residual) = clear_intermediate_vertices(n, d, k, count).unwrap();
        let mut original = vec![d];
        original.extend(std::iter::repeat(k).take(n - 1 - count));
        original.extend(std::iter::repeat(k + 1).take(count));
        let used = h.degrees();
        for (cls, res) in used.iter().zip(residual.classes()) {
            for i in 0..n {
                assert_eq!(cls[i] + res[i], original[i]);
            }
            assert_eq!(res[0], 0);
            let rest = &res.as_slice()[1..];
            assert!(rest.iter().max().unwrap() - rest.iter().min().unwrap() <= 1);
        }
        residual
    }

    #[test]
    fn clearing_examples() {
        let (h, res) = clear_intermediate_vertices(4, 0, 7, 0).unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(res.class(crate::types::Class::A).as_slice(), &[0, 7, 7, 7]);

        // (n-1)² = 16 covers d: only the first step fires.
        let (h, _) = clear_intermediate_vertices(5, 16, 9, 0).unwrap();
        assert_eq!(h.edge_count(), 3 * 16);
        check_clearing(5, 16, 9, 0);

        // d' = 2: one hyperedge per pair of cleared vertices, no triple.
        let (h, _) = clear_intermediate_vertices(5, 18, 9, 0).unwrap();
        assert_eq!(h.edge_count(), 3 * 16 + 3);
        assert!(!h.contains(0, 0, 0));
        check_clearing(5, 18, 9, 0);

        // Odd d' adds the triple.
        let (h, _) = clear_intermediate_vertices(5, 19, 9, 0).unwrap();
        assert!(h.contains(0, 0, 0));

        assert!(clear_intermediate_vertices(5, 26, 9, 0).is_err());
        assert!(clear_intermediate_vertices(5, 10, 8, 0).is_err());
    }

    #[test]
    fn clearing_sweep() {
        for n in 2..=7usize {
            for d in 0..=(n * n) as u32 {
                for k in (2 * n - 1) as u32..=(n * n) as u32 {
                    for count in 0..n {
                        check_clearing(n, d, k, count);
                    }
                }
            }
        }
    }
}
