//! Domain types shared by every construction: degree sequences, plain and
//! tripartite 3-uniform hypergraphs, bipartite graphs, degree extraction and
//! realization checking.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// Vertex class of a tripartite hypergraph. `None` marks vertices of a plain
/// (unpartitioned) hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    A,
    B,
    C,
    None,
}

impl Class {
    pub const TRIPARTITE: [Class; 3] = [Class::A, Class::B, Class::C];

    /// Position of the class inside an `(a, b, c)` triple.
    pub fn slot(self) -> Option<usize> {
        match self {
            Class::A => Some(0),
            Class::B => Some(1),
            Class::C => Some(2),
            Class::None => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Class::A => "A",
            Class::B => "B",
            Class::C => "C",
            Class::None => "v",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexRef {
    pub class: Class,
    pub index: usize,
}

impl VertexRef {
    pub fn new(class: Class, index: usize) -> Self {
        VertexRef { class, index }
    }

    pub fn plain(index: usize) -> Self {
        VertexRef {
            class: Class::None,
            index,
        }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class, self.index)
    }
}

/// Ordered sequence of vertex degrees. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(DegreeSequence(degrees))
    }

    /// `n` copies of `degree`.
    pub fn constant(n: usize, degree: u32) -> Result<Self> {
        Self::new(vec![degree; n])
    }

    pub(crate) fn from_raw(degrees: Vec<u32>) -> Self {
        DegreeSequence(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn min(&self) -> u32 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Sum of absolute entrywise differences. Panics if lengths differ.
    pub fn l1_distance(&self, other: &DegreeSequence) -> u64 {
        assert_eq!(self.len(), other.len(), "l1_distance on unequal lengths");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| (a as i64 - b as i64).unsigned_abs())
            .sum()
    }
}

impl Index<usize> for DegreeSequence {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Degree sequence of a tripartite hypergraph, one [`DegreeSequence`] per class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripartiteDegreeSequence {
    classes: [DegreeSequence; 3],
}

impl TripartiteDegreeSequence {
    pub fn new(a: DegreeSequence, b: DegreeSequence, c: DegreeSequence) -> Self {
        TripartiteDegreeSequence { classes: [a, b, c] }
    }

    pub fn from_vecs(a: Vec<u32>, b: Vec<u32>, c: Vec<u32>) -> Result<Self> {
        Ok(Self::new(
            DegreeSequence::new(a)?,
            DegreeSequence::new(b)?,
            DegreeSequence::new(c)?,
        ))
    }

    /// The same sequence in all three classes.
    pub fn symmetric(class: DegreeSequence) -> Self {
        Self::new(class.clone(), class.clone(), class)
    }

    pub fn class(&self, class: Class) -> &DegreeSequence {
        let slot = class
            .slot()
            .expect("tripartite sequences have no unclassed vertices");
        &self.classes[slot]
    }

    pub fn classes(&self) -> &[DegreeSequence; 3] {
        &self.classes
    }

    pub fn sizes(&self) -> [usize; 3] {
        [
            self.classes[0].len(),
            self.classes[1].len(),
            self.classes[2].len(),
        ]
    }

    pub fn sums(&self) -> [u64; 3] {
        [
            self.classes[0].sum(),
            self.classes[1].sum(),
            self.classes[2].sum(),
        ]
    }

    pub fn l1_distance(&self, other: &TripartiteDegreeSequence) -> [u64; 3] {
        [0, 1, 2].map(|k| self.classes[k].l1_distance(&other.classes[k]))
    }
}

impl fmt::Display for TripartiteDegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A: {} | B: {} | C: {}",
            self.classes[0], self.classes[1], self.classes[2]
        )
    }
}

/// A 3-element vertex set stored in increasing order.
pub type Edge = [usize; 3];

/// Sorts three distinct vertices into canonical edge order.
pub fn canonical_edge(u: usize, v: usize, w: usize) -> Result<Edge> {
    let mut e = [u, v, w];
    e.sort_unstable();
    if e[0] == e[1] || e[1] == e[2] {
        return Err(Error::Malformed(format!(
            "edge {{{u}, {v}, {w}}} repeats a vertex"
        )));
    }
    Ok(e)
}

/// Simple 3-uniform hypergraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hypergraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Hypergraph {
    pub fn new(n: usize) -> Self {
        Hypergraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = [usize; 3]>>(n: usize, edges: I) -> Result<Self> {
        let mut h = Hypergraph::new(n);
        for [u, v, w] in edges {
            if !h.insert(u, v, w)? {
                return Err(Error::Malformed(format!(
                    "duplicate edge {{{u}, {v}, {w}}}"
                )));
            }
        }
        Ok(h)
    }

    /// Every 3-subset of `0..n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    edges.insert([i, j, k]);
                }
            }
        }
        Hypergraph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Inserts `{u, v, w}`; returns `false` if it was already present.
    pub fn insert(&mut self, u: usize, v: usize, w: usize) -> Result<bool> {
        let e = canonical_edge(u, v, w)?;
        if e[2] >= self.n {
            return Err(Error::Malformed(format!(
                "vertex {} out of range for {} vertices",
                e[2], self.n
            )));
        }
        Ok(self.edges.insert(e))
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.edges.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }
}

/// Tripartite 3-uniform hypergraph: every edge holds one vertex of each class.
///
/// Stored as a dense 0-1 incidence tensor, so duplicate triples cannot exist
/// and iteration is always lexicographic.
#[derive(Clone, PartialEq, Eq)]
pub struct TripartiteHypergraph {
    sizes: [usize; 3],
    cells: Vec<bool>,
    count: usize,
}

impl fmt::Debug for TripartiteHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TripartiteHypergraph")
            .field("sizes", &self.sizes)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl TripartiteHypergraph {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        TripartiteHypergraph {
            sizes: [a, b, c],
            cells: vec![false; a * b * c],
            count: 0,
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize, usize)>>(
        sizes: [usize; 3],
        edges: I,
    ) -> Result<Self> {
        let mut h = TripartiteHypergraph::new(sizes[0], sizes[1], sizes[2]);
        for (a, b, c) in edges {
            h.check_range(a, b, c)?;
            if !h.insert(a, b, c) {
                return Err(Error::Malformed(format!(
                    "duplicate edge (A{a}, B{b}, C{c})"
                )));
            }
        }
        Ok(h)
    }

    /// All `a·b·c` triples.
    pub fn complete(a: usize, b: usize, c: usize) -> Self {
        TripartiteHypergraph {
            sizes: [a, b, c],
            cells: vec![true; a * b * c],
            count: a * b * c,
        }
    }

    fn check_range(&self, a: usize, b: usize, c: usize) -> Result<()> {
        if a >= self.sizes[0] || b >= self.sizes[1] || c >= self.sizes[2] {
            return Err(Error::Malformed(format!(
                "edge (A{a}, B{b}, C{c}) out of range for classes {:?}",
                self.sizes
            )));
        }
        Ok(())
    }

    #[inline]
    fn cell(&self, a: usize, b: usize, c: usize) -> usize {
        debug_assert!(a < self.sizes[0] && b < self.sizes[1] && c < self.sizes[2]);
        (a * self.sizes[1] + b) * self.sizes[2] + c
    }

    pub fn sizes(&self) -> [usize; 3] {
        self.sizes
    }

    pub fn edge_count(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        self.cells[self.cell(a, b, c)]
    }

    /// Inserts `(a, b, c)`; returns `false` if it was already present.
    /// Panics on out-of-range indices.
    pub fn insert(&mut self, a: usize, b: usize, c: usize) -> bool {
        assert!(
            a < self.sizes[0] && b < self.sizes[1] && c < self.sizes[2],
            "edge (A{a}, B{b}, C{c}) out of range for classes {:?}",
            self.sizes
        );
        let i = self.cell(a, b, c);
        if self.cells[i] {
            return false;
        }
        self.cells[i] = true;
        self.count += 1;
        true
    }

    pub fn remove(&mut self, a: usize, b: usize, c: usize) -> bool {
        let i = self.cell(a, b, c);
        if !self.cells[i] {
            return false;
        }
        self.cells[i] = false;
        self.count -= 1;
        true
    }

    /// Edges as `(a, b, c)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let [_, nb, nc] = self.sizes;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &on)| on)
            .map(move |(i, _)| {
                let c = i % nc;
                let b = (i / nc) % nb;
                let a = i / (nb * nc);
                (a, b, c)
            })
    }

    pub fn degrees(&self) -> [Vec<u32>; 3] {
        let mut deg = [
            vec![0u32; self.sizes[0]],
            vec![0u32; self.sizes[1]],
            vec![0u32; self.sizes[2]],
        ];
        for (a, b, c) in self.edges() {
            deg[0][a] += 1;
            deg[1][b] += 1;
            deg[2][c] += 1;
        }
        deg
    }

    /// Applies a per-class relabeling: vertex `i` of class `k` becomes `maps[k][i]`.
    pub fn relabel(&self, maps: [&[usize]; 3]) -> TripartiteHypergraph {
        let mut out = TripartiteHypergraph::new(self.sizes[0], self.sizes[1], self.sizes[2]);
        for (a, b, c) in self.edges() {
            out.insert(maps[0][a], maps[1][b], maps[2][c]);
        }
        out
    }
}

/// Simple bipartite graph with `left` and `right` vertex classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            left,
            right,
            edges: BTreeSet::new(),
        }
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.left, self.right)
    }

    /// Inserts `(l, r)`; returns `false` if it was already present.
    pub fn insert(&mut self, l: usize, r: usize) -> bool {
        assert!(
            l < self.left && r < self.right,
            "bipartite edge out of range"
        );
        self.edges.insert((l, r))
    }

    pub fn contains(&self, l: usize, r: usize) -> bool {
        self.edges.contains(&(l, r))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &(usize, usize)> + '_ {
        self.edges.iter()
    }

    pub fn left_degrees(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.left];
        for &(l, _) in &self.edges {
            d[l] += 1;
        }
        d
    }

    pub fn right_degrees(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.right];
        for &(_, r) in &self.edges {
            d[r] += 1;
        }
        d
    }
}

pub fn degree_sequence_of(h: &Hypergraph) -> DegreeSequence {
    DegreeSequence::from_raw(h.degrees())
}

pub fn degree_sequence_of_tripartite(h: &TripartiteHypergraph) -> TripartiteDegreeSequence {
    let [a, b, c] = h.degrees();
    TripartiteDegreeSequence::new(
        DegreeSequence::from_raw(a),
        DegreeSequence::from_raw(b),
        DegreeSequence::from_raw(c),
    )
}

/// Outcome of checking a hypergraph against a prescribed degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Realizes,
    /// First vertex (in class order, then index order) whose degree is off.
    Mismatch {
        vertex: VertexRef,
        expected: u32,
        actual: u32,
    },
    Malformed(String),
}

impl Verdict {
    pub fn is_realization(&self) -> bool {
        matches!(self, Verdict::Realizes)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Realizes => f.write_str("realization verified"),
            Verdict::Mismatch {
                vertex,
                expected,
                actual,
            } => write!(
                f,
                "vertex {vertex} has degree {actual}, expected {expected}"
            ),
            Verdict::Malformed(why) => write!(f, "malformed: {why}"),
        }
    }
}

fn first_mismatch(class: Class, expected: &[u32], actual: &[u32]) -> Option<Verdict> {
    expected
        .iter()
        .zip(actual)
        .position(|(e, a)| e != a)
        .map(|i| Verdict::Mismatch {
            vertex: VertexRef::new(class, i),
            expected: expected[i],
            actual: actual[i],
        })
}

/// Checks that `h` is well formed and its degrees equal `d` entrywise.
///
/// A vertex-count mismatch is an input error, not a negative verdict.
pub fn verify_realization(h: &Hypergraph, d: &DegreeSequence) -> Result<Verdict> {
    if h.vertex_count() != d.len() {
        return Err(Error::ShapeMismatch(format!(
            "hypergraph has {} vertices, sequence has {}",
            h.vertex_count(),
            d.len()
        )));
    }
    for e in h.edges() {
        if !(e[0] < e[1] && e[1] < e[2] && e[2] < h.vertex_count()) {
            return Ok(Verdict::Malformed(format!("bad edge {e:?}")));
        }
    }
    Ok(first_mismatch(Class::None, d.as_slice(), &h.degrees()).unwrap_or(Verdict::Realizes))
}

pub fn verify_tripartite_realization(
    h: &TripartiteHypergraph,
    d: &TripartiteDegreeSequence,
) -> Result<Verdict> {
    if h.sizes() != d.sizes() {
        return Err(Error::ShapeMismatch(format!(
            "hypergraph classes {:?}, sequence classes {:?}",
            h.sizes(),
            d.sizes()
        )));
    }
    let actual = h.degrees();
    for (k, class) in Class::TRIPARTITE.into_iter().enumerate() {
        if let Some(v) = first_mismatch(class, d.classes()[k].as_slice(), &actual[k]) {
            return Ok(v);
        }
    }
    Ok(Verdict::Realizes)
}

/// Complement inside the complete `n+n+n` tripartite hypergraph; degrees map `d -> n² - d`.
pub fn complement_tripartite(h: &TripartiteHypergraph) -> Result<TripartiteHypergraph> {
    let [a, b, c] = h.sizes();
    if a != b || b != c {
        return Err(Error::UnequalClassLengths { a, b, c });
    }
    let cells: Vec<bool> = h.cells.iter().map(|&on| !on).collect();
    Ok(TripartiteHypergraph {
        sizes: h.sizes,
        count: cells.len() - h.count,
        cells,
    })
}
