mod common;

use std::collections::BTreeMap;

use common::{check_plain, check_tripartite};
use hyperdeg::{
    oracle_general, oracle_tripartite, Budget, DegreeSequence, TripartiteDegreeSequence,
};
use proptest::prelude::*;

/// Non-increasing length-`n` vectors over `0..=max`, grouped by sum.
fn sorted_vectors(n: usize, max: u32) -> BTreeMap<u32, Vec<Vec<u32>>> {
    fn rec(n: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut BTreeMap<u32, Vec<Vec<u32>>>) {
        if prefix.len() == n {
            out.entry(prefix.iter().sum())
                .or_default()
                .push(prefix.clone());
            return;
        }
        for x in 0..=cap {
            prefix.push(x);
            rec(n, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = BTreeMap::new();
    rec(n, max, &mut Vec::new(), &mut out);
    out
}

#[test]
fn complement_consistency_up_to_three() {
    // Relabelling inside a class preserves graphicality, so sorted classes
    // cover every instance.
    let mut checked = 0;
    for n in 1..=3usize {
        let full = (n * n) as u32;
        for group in sorted_vectors(n, full).values() {
            for a in group {
                for b in group {
                    for c in group {
                        let d =
                            TripartiteDegreeSequence::from_vecs(a.clone(), b.clone(), c.clone())
                                .unwrap();
                        let comp =
                            [a, b, c].map(|v| v.iter().map(|&x| full - x).collect::<Vec<_>>());
                        let [ca, cb, cc] = comp;
                        let e = TripartiteDegreeSequence::from_vecs(ca, cb, cc).unwrap();
                        let r = oracle_tripartite(&d, Budget::default());
                        let s = oracle_tripartite(&e, Budget::default());
                        assert!(!r.timed_out && !s.timed_out);
                        assert_eq!(r.graphic, s.graphic, "{d}");
                        if let Some(w) = &r.witness {
                            check_tripartite(w, &d).unwrap();
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 1000, "only {checked} instances");
}

#[test]
fn same_query_same_node_count() {
    let row = DegreeSequence::new(vec![9, 27, 27, 27, 27, 27]).unwrap();
    let d = TripartiteDegreeSequence::symmetric(row);
    let first = oracle_tripartite(&d, Budget::default());
    let second = oracle_tripartite(&d, Budget::default());
    assert_eq!(first.nodes_explored, second.nodes_explored);
    assert_eq!(first.witness, second.witness);
}

#[test]
fn exhausted_budget_is_reported() {
    let row = DegreeSequence::new(vec![9, 27, 27, 27, 27, 27]).unwrap();
    let d = TripartiteDegreeSequence::symmetric(row);
    let r = oracle_tripartite(&d, Budget::nodes(100));
    assert!(r.timed_out);
    assert!(r.witness.is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn general_witnesses_verify(degrees in prop::collection::vec(0u32..=10, 3..=6)) {
        let d = DegreeSequence::new(degrees).unwrap();
        let r = oracle_general(&d, Budget::default());
        prop_assert!(!r.timed_out);
        match &r.witness {
            Some(w) => {
                prop_assert!(r.graphic);
                prop_assert!(check_plain(w, &d).is_ok());
            }
            None => prop_assert!(!r.graphic),
        }
        // A sum that is not a multiple of 3 can never be graphic.
        if d.sum() % 3 != 0 {
            prop_assert!(!r.graphic);
        }
    }
}
