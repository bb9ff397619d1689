//! Realization of dense tripartite degree sequences on `n + n + n` vertices.
//!
//! Any sequence with equal class sums and every degree in
//! `[2n²/7, 5n²/7]` is graphic. The construction realizes the extreme
//! sequence with the same class sum, in which every class reads
//! `(L, .., L, d, S, .., S)` with `L = ⌊5n²/7⌋` and `S = ⌈2n²/7⌉`, and then
//! walks to the target with balancing hinge flips.

use std::fmt;

use crate::builder::SymmetricBuilder;
use crate::error::{Error, Result};
use crate::flips::{transform_to_target_tripartite, FlipTrace};
use crate::regular::regular_tripartite;
use crate::types::{
    complement_tripartite, verify_tripartite_realization, Class, DegreeSequence,
    TripartiteDegreeSequence, TripartiteHypergraph,
};

/// `⌊5n²/7⌋`, the degree of the large vertices.
pub fn large_degree(n: usize) -> u32 {
    (5 * n * n / 7) as u32
}

/// `⌈2n²/7⌉`, the degree of the small vertices.
pub fn small_degree(n: usize) -> u32 {
    (2 * n * n).div_ceil(7) as u32
}

/// Extreme class sequence: `x - 1` large vertices, then the intermediate
/// vertex of degree `d`, then `n - x` small vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtremeSpec {
    pub n: usize,
    pub x: usize,
    pub d: u32,
}

impl ExtremeSpec {
    pub fn new(n: usize, x: usize, d: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVertices { n, min: 2 });
        }
        if x == 0 || x > n {
            return Err(Error::Precondition(format!("x = {x} outside 1..={n}")));
        }
        let (s, l) = (small_degree(n), large_degree(n));
        if d < s || d > l {
            return Err(Error::Precondition(format!("d = {d} outside [{s}, {l}]")));
        }
        Ok(ExtremeSpec { n, x, d })
    }

    pub fn class_degrees(&self) -> Vec<u32> {
        let mut v = vec![large_degree(self.n); self.x - 1];
        v.push(self.d);
        v.resize(self.n, small_degree(self.n));
        v
    }

    pub fn class_sum(&self) -> u64 {
        self.class_degrees().iter().map(|&d| d as u64).sum()
    }

    pub fn sequence(&self) -> TripartiteDegreeSequence {
        TripartiteDegreeSequence::symmetric(
            DegreeSequence::new(self.class_degrees()).expect("n >= 2"),
        )
    }

    /// `d = S` is the same sequence as one large vertex fewer with `d = L`.
    fn normalized(self) -> Self {
        if self.d == small_degree(self.n) && self.x > 1 {
            ExtremeSpec {
                x: self.x - 1,
                d: large_degree(self.n),
                ..self
            }
        } else {
            self
        }
    }

    fn wants_complement(&self) -> bool {
        let n = self.n;
        if self.d == large_degree(n) {
            self.x < n.div_ceil(2)
        } else {
            self.x <= n / 2
        }
    }

    /// The spec of the sequence `n² - d_i`, read in reverse.
    fn complement(&self) -> Result<Self> {
        let n2 = (self.n * self.n) as u64;
        extreme_spec_for(self.n as u64 * n2 - self.class_sum(), self.n).map(Self::normalized)
    }
}

impl fmt::Display for ExtremeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} x={} d={}", self.n, self.x, self.d)
    }
}

/// Which branch of the construction produced a realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    BaseSmallN,
    Case1,
    Case2a,
    Case2bI,
    Case2bII,
    Complemented,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::BaseSmallN => "BASE_SMALL_N",
            CaseTag::Case1 => "CASE1",
            CaseTag::Case2a => "CASE2A",
            CaseTag::Case2bI => "CASE2B_I",
            CaseTag::Case2bII => "CASE2B_II",
            CaseTag::Complemented => "COMPLEMENTED",
        })
    }
}

/// Quotas for the branch where the intermediate vertex behaves like a large
/// one: each small vertex takes `f_floor` or `f_ceil` of the intermediate
/// degree, `t` of them the floor, so that `d_star` is consumed in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Case2bIIWork {
    pub p: u32,
    pub d_star: u32,
    pub f_ceil: u32,
    pub f_floor: u32,
    pub t: usize,
}

impl Case2bIIWork {
    pub fn new(n: usize, x: usize, d: u32) -> Result<Self> {
        let x2 = (x * x) as u32;
        if d <= x2 || x >= n {
            return Err(Error::Precondition(format!(
                "need d > x² and x < n, got {n} {x} {d}"
            )));
        }
        let p = (d - x2) % 2;
        let d_star = d - x2 + p;
        let ns = (n - x) as u32;
        let f_ceil = d_star.div_ceil(2 * ns);
        let f_floor = d_star / (2 * ns);
        let t = if f_ceil == f_floor {
            ns as usize
        } else {
            (ns * f_ceil - d_star / 2) as usize
        };
        Ok(Case2bIIWork {
            p,
            d_star,
            f_ceil,
            f_floor,
            t,
        })
    }
}

/// The unique extreme spec with the given class sum. At the minimal sum the
/// degenerate `x = 1, d = S` is returned.
pub fn extreme_spec_for(class_sum: u64, n: usize) -> Result<ExtremeSpec> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let (s, l) = (small_degree(n) as u64, large_degree(n) as u64);
    let (lo, hi) = (n as u64 * s, n as u64 * l);
    if class_sum < lo || class_sum > hi {
        return Err(Error::Precondition(format!(
            "class sum {class_sum} outside [{lo}, {hi}] for n = {n}"
        )));
    }
    if class_sum == lo {
        return ExtremeSpec::new(n, 1, s as u32);
    }
    let r = class_sum - lo;
    let q = (r - 1) / (l - s);
    ExtremeSpec::new(n, q as usize + 1, (s + r - q * (l - s)) as u32)
}

/// The branch [`realize_extreme`] takes for `spec`.
pub fn classify(spec: &ExtremeSpec) -> CaseTag {
    let n = spec.n;
    if n <= 3 {
        return CaseTag::BaseSmallN;
    }
    let spec = spec.normalized();
    if spec.wants_complement() {
        return CaseTag::Complemented;
    }
    let (x, d) = (spec.x, spec.d);
    if (x - 1) * (x - 1) >= small_degree(n) as usize {
        CaseTag::Case1
    } else if d == large_degree(n) {
        CaseTag::Case2a
    } else if d as usize <= x * x {
        CaseTag::Case2bI
    } else {
        CaseTag::Case2bII
    }
}

/// Realizations of the extreme sequences on `3 + 3 + 3` vertices that no
/// complement reduces further. Edge `"abc"` is `(A_a, B_b, C_c)`.
const BASE_N3: [([u32; 3], &str); 5] = [
    (
        [6, 6, 6],
        "000 001 002 010 011 012 100 101 102 120 121 122 210 211 212 220 221 222",
    ),
    (
        [6, 6, 5],
        "000 001 002 010 011 012 100 101 102 110 120 121 211 212 220 221 222",
    ),
    (
        [6, 6, 4],
        "000 001 002 010 011 012 100 101 102 110 111 120 211 220 221 222",
    ),
    (
        [6, 6, 3],
        "000 001 002 010 011 012 100 101 102 110 111 120 211 220 221",
    ),
    (
        [6, 5, 3],
        "000 001 002 010 011 012 100 101 102 110 120 211 220 221",
    ),
];

fn base_n3(degrees: &[u32]) -> Option<TripartiteHypergraph> {
    let (_, cells) = BASE_N3.iter().find(|(d, _)| d.as_slice() == degrees)?;
    let digit = |c: u8| (c - b'0') as usize;
    let edges = cells.split(' ').map(|e| {
        let e = e.as_bytes();
        (digit(e[0]), digit(e[1]), digit(e[2]))
    });
    Some(TripartiteHypergraph::from_edges([3, 3, 3], edges).expect("table edges are distinct"))
}

fn reversed_complement(h: &TripartiteHypergraph) -> Result<TripartiteHypergraph> {
    let n = h.sizes()[0];
    let rev: Vec<usize> = (0..n).rev().collect();
    Ok(complement_tripartite(h)?.relabel([&rev, &rev, &rev]))
}

fn realize_small(spec: &ExtremeSpec) -> Result<TripartiteHypergraph> {
    if spec.n == 2 {
        return regular_tripartite(2, 2);
    }
    let degrees = spec.class_degrees();
    if let Some(h) = base_n3(&degrees) {
        return Ok(h);
    }
    let comp: Vec<u32> = degrees.iter().rev().map(|&d| 9 - d).collect();
    let h = base_n3(&comp)
        .ok_or_else(|| Error::Internal(format!("no base realization for {degrees:?}")))?;
    reversed_complement(&h)
}

/// Realizes `(D, D, D)` for the extreme class sequence `D` of `spec`, with
/// vertices in canonical order: large, intermediate, small.
pub fn realize_extreme(spec: &ExtremeSpec) -> Result<(TripartiteHypergraph, CaseTag)> {
    let spec = ExtremeSpec::new(spec.n, spec.x, spec.d)?;
    let tag = classify(&spec);
    let h = match tag {
        CaseTag::BaseSmallN => realize_small(&spec)?,
        CaseTag::Complemented => {
            let comp = spec.normalized().complement()?;
            if comp.wants_complement() {
                return Err(Error::Internal(format!(
                    "complement of {spec} complements again"
                )));
            }
            reversed_complement(&build(&comp, classify(&comp))?)?
        }
        _ => build(&spec.normalized(), tag)?,
    };
    match verify_tripartite_realization(&h, &spec.sequence())? {
        v if v.is_realization() => Ok((h, tag)),
        v => Err(Error::Internal(format!(
            "extreme realization for {spec} fails: {v}"
        ))),
    }
}

fn build(spec: &ExtremeSpec, tag: CaseTag) -> Result<TripartiteHypergraph> {
    let ExtremeSpec { n, x, d } = *spec;
    let s = small_degree(n);
    let ell = x - 1;
    let ell2 = (ell * ell) as u32;
    let large: Vec<usize> = (0..ell).collect();
    let mid = ell;
    let small: Vec<usize> = (x..n).collect();
    let mut b = SymmetricBuilder::new(&spec.class_degrees());

    match tag {
        CaseTag::Case1 => {
            let upper: Vec<usize> = (0..x).collect();
            for &v in &small {
                b.star_levelled(v, &upper, s)?;
            }
            debug_assert!(
                small.is_empty() || b.residual()[..x].iter().sum::<i64>() < (x * x * x) as i64,
                "residual above x³ after the small stars"
            );
            if !b.is_almost_regular(&upper) {
                let r = b.residual()[mid] as u32;
                let first = r.min(ell2);
                b.star_levelled(mid, &large, first)?;
                let rest = r - first;
                b.pairs(mid, &large, (rest / 2) as usize)?;
                if rest % 2 == 1 {
                    b.triple(mid)?;
                }
                b.block(&large)?;
            } else {
                b.block(&upper)?;
            }
        }
        CaseTag::Case2a => {
            let upper: Vec<usize> = (0..x).collect();
            let per_small = s.min((x * x) as u32);
            for &v in &small {
                b.star_levelled(v, &upper, per_small)?;
            }
            b.block(&upper)?;
            b.block(&small)?;
        }
        CaseTag::Case2bI => {
            let d_star = d - (s - ell2);
            b.star_levelled(mid, &large, ell2)?;
            let d_prime = d_star - ell2;
            b.pairs(mid, &large, (d_prime / 2) as usize)?;
            // An odd d' leaves the intermediate vertex one above the small
            // ones; the block below absorbs it instead of the triple edge.
            for &v in &small {
                b.star_levelled(v, &large, ell2)?;
            }
            let mut lower = vec![mid];
            lower.extend(&small);
            if n % 2 == 1 && x == n.div_ceil(2) {
                let cap = (s - ell2) / 2;
                for &p in &large {
                    let e = (b.residual()[p] as u32).min(cap);
                    b.star_levelled(p, &lower, e)?;
                }
            }
            b.block(&lower)?;
            b.block(&large)?;
        }
        CaseTag::Case2bII => {
            let work = Case2bIIWork::new(n, x, d)?;
            let upper: Vec<usize> = (0..x).collect();
            for (k, &v) in small.iter().enumerate() {
                let f = if k < work.t {
                    work.f_floor
                } else {
                    work.f_ceil
                };
                let e = s.min(f + ell2);
                let loss =
                    b.waterfill(&upper, 2 * (e - f) as u64, 2 * x as u32, &[(mid, 2 * f)])?;
                b.star(v, &upper, &loss)?;
            }
            b.star_levelled(mid, &large, ell2)?;
            b.pairs(mid, &large, ell)?;
            if work.p == 0 {
                b.triple(mid)?;
            }
            // At odd n with x = ⌈n/2⌉ (only n = 7 in practice) the large
            // residuals can end one above (x-1)²; push the excess into the
            // small vertices as in the previous branch.
            let top = large.iter().map(|&p| b.residual()[p]).max().unwrap_or(0);
            if top > ell2 as i64 {
                let excess = (top - ell2 as i64) as u32;
                for &p in &large {
                    let e = (b.residual()[p] as u32).min(excess);
                    b.star_levelled(p, &small, e)?;
                }
            }
            b.block(&large)?;
            b.block(&small)?;
        }
        CaseTag::BaseSmallN | CaseTag::Complemented => {
            return Err(Error::Internal(format!(
                "{tag} is not a direct construction"
            )));
        }
    }
    if let Some(v) = b.residual().iter().position(|&r| r != 0) {
        return Err(Error::Internal(format!(
            "{tag} for {spec} leaves residual {} on vertex {v}",
            b.residual()[v]
        )));
    }
    Ok(b.into_graph())
}

/// Checks the input domain: equal class sizes, every degree within
/// `[2n²/7, 5n²/7]` as real bounds, equal class sums.
pub fn check_domain(d: &TripartiteDegreeSequence) -> Result<usize> {
    let [a, b, c] = d.sizes();
    if a != b || b != c {
        return Err(Error::UnequalClassLengths { a, b, c });
    }
    let n = a;
    let n2 = (n * n) as u64;
    for (k, class) in Class::TRIPARTITE.into_iter().enumerate() {
        for (index, &degree) in d.classes()[k].iter().enumerate() {
            if 7 * degree as u64 > 5 * n2 {
                return Err(Error::AboveUpperBound {
                    class,
                    index,
                    degree,
                    bound: format!("5n²/7 = {:.3}", 5.0 * n2 as f64 / 7.0),
                });
            }
            if (7 * degree as u64) < 2 * n2 {
                return Err(Error::BelowLowerBound {
                    class,
                    index,
                    degree,
                    bound: format!("2n²/7 = {:.3}", 2.0 * n2 as f64 / 7.0),
                });
            }
        }
    }
    let [sa, sb, sc] = d.sums();
    if sa != sb || sb != sc {
        return Err(Error::UnequalSums {
            a: sa,
            b: sb,
            c: sc,
        });
    }
    Ok(n)
}

/// Realizes `d` and returns the flips that led from the extreme realization
/// to it.
pub fn realize_tripartite(
    d: &TripartiteDegreeSequence,
) -> Result<(TripartiteHypergraph, FlipTrace)> {
    let n = check_domain(d)?;
    let spec = extreme_spec_for(d.sums()[0], n)?;
    let (extreme, _) = realize_extreme(&spec)?;

    // Canonical position p of each class goes to the vertex with the p-th
    // largest target degree.
    let maps: [Vec<usize>; 3] = [0, 1, 2].map(|k| {
        let target = d.classes()[k].as_slice();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&u, &v| target[v].cmp(&target[u]).then(u.cmp(&v)));
        order
    });
    let start = extreme.relabel([&maps[0], &maps[1], &maps[2]]);
    let (h, trace) = transform_to_target_tripartite(&start, d)?;
    match verify_tripartite_realization(&h, d)? {
        v if v.is_realization() => Ok((h, trace)),
        v => Err(Error::Internal(format!(
            "flip transformation ends off target: {v}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_bounds() {
        assert_eq!((small_degree(2), large_degree(2)), (2, 2));
        assert_eq!((small_degree(3), large_degree(3)), (3, 6));
        assert_eq!((small_degree(7), large_degree(7)), (14, 35));
        for n in 1..200 {
            assert_eq!(small_degree(n) + large_degree(n), (n * n) as u32);
        }
    }

    #[test]
    fn spec_for_examples() {
        assert_eq!(
            extreme_spec_for(98, 7).unwrap(),
            ExtremeSpec { n: 7, x: 1, d: 14 }
        );
        assert_eq!(
            extreme_spec_for(245, 7).unwrap(),
            ExtremeSpec { n: 7, x: 7, d: 35 }
        );
        assert_eq!(
            extreme_spec_for(167, 7).unwrap(),
            ExtremeSpec { n: 7, x: 4, d: 20 }
        );
        assert!(extreme_spec_for(97, 7).is_err());
        assert!(extreme_spec_for(246, 7).is_err());
        assert_eq!(
            extreme_spec_for(4, 2).unwrap(),
            ExtremeSpec { n: 2, x: 1, d: 2 }
        );
    }

    #[test]
    fn spec_for_is_unique_and_round_trips() {
        for n in 2..=15usize {
            let (s, l) = (small_degree(n), large_degree(n));
            for x in 1..=n {
                for d in s + 1..=l {
                    let spec = ExtremeSpec::new(n, x, d).unwrap();
                    assert_eq!(extreme_spec_for(spec.class_sum(), n).unwrap(), spec);
                }
            }
        }
    }

    #[test]
    fn case2bii_work_examples() {
        // n=7, x=4: d in (16, 35).
        let w = Case2bIIWork::new(7, 4, 21).unwrap();
        assert_eq!((w.p, w.d_star), (1, 6));
        assert_eq!((w.f_floor, w.f_ceil, w.t), (1, 1, 3));
        let w = Case2bIIWork::new(7, 4, 30).unwrap();
        assert_eq!((w.p, w.d_star, w.f_floor, w.f_ceil), (0, 14, 2, 3));
        assert_eq!(
            w.t as u32 * w.f_floor + (3 - w.t as u32) * w.f_ceil,
            w.d_star / 2
        );
        assert!(Case2bIIWork::new(7, 4, 16).is_err());
    }

    #[test]
    fn complement_spec_lands_in_direct_range() {
        for n in 4..=20usize {
            let (s, l) = (small_degree(n), large_degree(n));
            for x in 1..=n {
                for d in s..=l {
                    let spec = ExtremeSpec::new(n, x, d).unwrap().normalized();
                    if spec.wants_complement() {
                        let comp = spec.complement().unwrap();
                        assert!(!comp.wants_complement(), "{spec} -> {comp}");
                        let mut want: Vec<u32> = spec
                            .class_degrees()
                            .iter()
                            .map(|&v| (n * n) as u32 - v)
                            .collect();
                        want.reverse();
                        assert_eq!(comp.class_degrees(), want);
                    }
                }
            }
        }
    }

    #[test]
    fn base_table_is_valid() {
        for (d, _) in BASE_N3 {
            let h = base_n3(&d).unwrap();
            let seq = TripartiteDegreeSequence::symmetric(DegreeSequence::new(d.to_vec()).unwrap());
            assert!(verify_tripartite_realization(&h, &seq)
                .unwrap()
                .is_realization());
        }
    }

    #[test]
    fn every_small_extreme_spec_realizes() {
        for n in 2..=16usize {
            let (s, l) = (small_degree(n), large_degree(n));
            for x in 1..=n {
                for d in s..=l {
                    let spec = ExtremeSpec::new(n, x, d).unwrap();
                    if let Err(e) = realize_extreme(&spec) {
                        panic!("{spec} ({}): {e}", classify(&spec));
                    }
                }
            }
        }
    }

    #[test]
    fn domain_errors() {
        let ok = TripartiteDegreeSequence::symmetric(DegreeSequence::constant(7, 21).unwrap());
        assert!(realize_tripartite(&ok).is_ok());
        let mut low = vec![21u32; 7];
        low[2] = 13;
        let d = TripartiteDegreeSequence::from_vecs(low, vec![21; 7], vec![21; 7]).unwrap();
        assert!(matches!(
            realize_tripartite(&d),
            Err(Error::BelowLowerBound { index: 2, .. })
        ));
        let mut high = vec![21u32; 7];
        high[0] = 36;
        let d = TripartiteDegreeSequence::from_vecs(vec![21; 7], high, vec![21; 7]).unwrap();
        assert!(matches!(
            realize_tripartite(&d),
            Err(Error::AboveUpperBound {
                class: Class::B,
                ..
            })
        ));
        let mut off = vec![21u32; 7];
        off[6] = 22;
        let d = TripartiteDegreeSequence::from_vecs(vec![21; 7], vec![21; 7], off).unwrap();
        assert!(matches!(
            realize_tripartite(&d),
            Err(Error::UnequalSums {
                a: 147,
                b: 147,
                c: 148
            })
        ));
        let d = TripartiteDegreeSequence::from_vecs(vec![2; 2], vec![2; 2], vec![3; 3]).unwrap();
        assert!(matches!(
            realize_tripartite(&d),
            Err(Error::UnequalClassLengths { .. })
        ));
    }
}
