//! Degree counting done directly from edge lists, independent of the
//! library's own degree bookkeeping and verifier.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperdeg::{DegreeSequence, Hypergraph, TripartiteDegreeSequence, TripartiteHypergraph};

/// Checks that `h` is a simple tripartite realization of `d`.
pub fn check_tripartite(
    h: &TripartiteHypergraph,
    d: &TripartiteDegreeSequence,
) -> Result<(), String> {
    let sizes = d.sizes();
    if h.sizes() != sizes {
        return Err(format!("sizes {:?} != {:?}", h.sizes(), sizes));
    }
    let mut deg = [
        vec![0u32; sizes[0]],
        vec![0u32; sizes[1]],
        vec![0u32; sizes[2]],
    ];
    let mut seen = BTreeSet::new();
    for (a, b, c) in h.edges() {
        if a >= sizes[0] || b >= sizes[1] || c >= sizes[2] {
            return Err(format!("edge ({a},{b},{c}) out of range"));
        }
        if !seen.insert((a, b, c)) {
            return Err(format!("repeated edge ({a},{b},{c})"));
        }
        deg[0][a] += 1;
        deg[1][b] += 1;
        deg[2][c] += 1;
    }
    for k in 0..3 {
        if deg[k].as_slice() != d.classes()[k].as_slice() {
            return Err(format!(
                "class {k}: degrees {:?}, wanted {:?}",
                deg[k],
                d.classes()[k]
            ));
        }
    }
    Ok(())
}

/// Checks that `h` is a simple 3-uniform realization of `d`.
pub fn check_plain(h: &Hypergraph, d: &DegreeSequence) -> Result<(), String> {
    let n = d.len();
    if h.vertex_count() != n {
        return Err(format!("{} vertices, wanted {n}", h.vertex_count()));
    }
    let mut deg = vec![0u32; n];
    let mut seen = BTreeSet::new();
    for e in h.edges() {
        let mut s = *e;
        s.sort_unstable();
        if s[0] == s[1] || s[1] == s[2] || s[2] >= n {
            return Err(format!("bad edge {e:?}"));
        }
        if !seen.insert(s) {
            return Err(format!("repeated edge {e:?}"));
        }
        for v in s {
            deg[v] += 1;
        }
    }
    if deg.as_slice() != d.as_slice() {
        return Err(format!("degrees {deg:?}, wanted {:?}", d.as_slice()));
    }
    Ok(())
}
