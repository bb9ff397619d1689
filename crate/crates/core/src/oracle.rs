//! Exhaustive graphicality search for small instances, and the numeric
//! constant from the density conjecture.
//!
//! The searches never guess: a query either ends with a verified witness, a
//! proof of non-graphicality by exhaustion, or a timeout.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::types::{DegreeSequence, Hypergraph, TripartiteDegreeSequence, TripartiteHypergraph};

/// Search limits; whichever is hit first ends the query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

/// Outcome of a search. `graphic` is only meaningful when `timed_out` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<H> {
    pub graphic: bool,
    pub witness: Option<H>,
    pub nodes_explored: u64,
    pub timed_out: bool,
}

struct Meter {
    budget: Budget,
    start: Instant,
    nodes: u64,
    out: bool,
}

impl Meter {
    fn new(budget: Budget) -> Self {
        Meter {
            budget,
            start: Instant::now(),
            nodes: 0,
            out: false,
        }
    }

    /// Counts one node; returns false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.out {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes & 0xffff == 0 && self.start.elapsed() > self.budget.max_time)
        {
            self.out = true;
        }
        !self.out
    }
}

/// Indices sorted by decreasing value, stable.
fn descending_order(d: &[u32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..d.len()).collect();
    idx.sort_by(|&x, &y| d[y].cmp(&d[x]).then(x.cmp(&y)));
    idx
}

struct TriSearch {
    sizes: [usize; 3],
    res: [Vec<i64>; 3],
    avail: [Vec<i64>; 3],
    /// `eq_*[v]`: vertex `v` has the same degree as `v - 1` and, so far, an
    /// identical pattern in the comparison order of its class.
    eq_a: bool,
    eq_b: Vec<bool>,
    eq_c: Vec<bool>,
    same_a: Vec<bool>,
    cells: Vec<bool>,
    meter: Meter,
}

impl TriSearch {
    fn idx(&self, i: usize, j: usize, l: usize) -> usize {
        (i * self.sizes[1] + j) * self.sizes[2] + l
    }

    /// Every edge of the remaining problem either lies inside the top-k
    /// residual sets of all three classes or uses a vertex outside them.
    fn aggregate_ok(&self, first_a: usize) -> bool {
        let mut ra: Vec<i64> = self.res[0][first_a..].to_vec();
        let mut rb = self.res[1].clone();
        let mut rc = self.res[2].clone();
        for v in [&mut ra, &mut rb, &mut rc] {
            v.sort_unstable_by(|x, y| y.cmp(x));
        }
        let total: i64 = ra.iter().sum();
        let tail = |v: &[i64]| -> Vec<i64> {
            // tail[k] = sum of entries from position k on.
            let mut t = vec![0i64; v.len() + 1];
            for k in (0..v.len()).rev() {
                t[k] = t[k + 1] + v[k];
            }
            t
        };
        let (ta, tb, tc) = (tail(&ra), tail(&rb), tail(&rc));
        for ka in 0..=ra.len() {
            for kb in 0..=rb.len() {
                for kc in 0..=rc.len() {
                    if total > (ka * kb * kc) as i64 + ta[ka] + tb[kb] + tc[kc] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, pos: usize) -> bool {
        let [na, nb, nc] = self.sizes;
        if pos == na * nb * nc {
            return self.res.iter().all(|r| r.iter().all(|&x| x == 0));
        }
        let l = pos % nc;
        let j = (pos / nc) % nb;
        let i = pos / (nb * nc);
        if j == 0 && l == 0 {
            if i > 0 && self.res[0][i - 1] != 0 {
                return false;
            }
            if !self.aggregate_ok(i) {
                return false;
            }
            self.eq_a = i > 0 && self.same_a[i];
        }
        if !self.meter.tick() {
            return false;
        }

        // Symmetry: a value of 1 is forbidden where the orbit predecessor has 0.
        let saved = (self.eq_a, self.eq_b[j], self.eq_c[l]);
        let prev_a = if self.eq_a {
            Some(self.cells[self.idx(i - 1, j, l)])
        } else {
            None
        };
        let prev_b = if self.eq_b[j] {
            Some(self.cells[self.idx(i, j - 1, l)])
        } else {
            None
        };
        let prev_c = if self.eq_c[l] {
            Some(self.cells[self.idx(i, j, l - 1)])
        } else {
            None
        };
        let one_allowed = [prev_a, prev_b, prev_c].iter().all(|p| *p != Some(false));

        for k in 0..3 {
            let v = [i, j, l][k];
            self.avail[k][v] -= 1;
        }
        let mut found = false;
        if one_allowed && self.res[0][i] > 0 && self.res[1][j] > 0 && self.res[2][l] > 0 {
            for k in 0..3 {
                self.res[k][[i, j, l][k]] -= 1;
            }
            if self.fits(i, j, l) {
                let c = self.idx(i, j, l);
                self.cells[c] = true;
                found = self.run(pos + 1);
                if !found {
                    self.cells[c] = false;
                }
            }
            if !found {
                for k in 0..3 {
                    self.res[k][[i, j, l][k]] += 1;
                }
            }
        }
        if !found && !self.meter.out && self.fits(i, j, l) {
            (self.eq_a, self.eq_b[j], self.eq_c[l]) = saved;
            // Placing 0 where the predecessor has 1 breaks the tie for good.
            if prev_a == Some(true) {
                self.eq_a = false;
            }
            if prev_b == Some(true) {
                self.eq_b[j] = false;
            }
            if prev_c == Some(true) {
                self.eq_c[l] = false;
            }
            found = self.run(pos + 1);
        }
        if !found {
            (self.eq_a, self.eq_b[j], self.eq_c[l]) = saved;
            for k in 0..3 {
                let v = [i, j, l][k];
                self.avail[k][v] += 1;
            }
        }
        found
    }

    fn fits(&self, i: usize, j: usize, l: usize) -> bool {
        self.res[0][i] <= self.avail[0][i]
            && self.res[1][j] <= self.avail[1][j]
            && self.res[2][l] <= self.avail[2][l]
    }
}

/// Decides whether `d` has a tripartite realization by backtracking over the
/// 0-1 incidence tensor.
///
/// Cells are visited in `(a, b, c)` lexicographic order after sorting each
/// class by decreasing degree. Pruning: residual degrees never exceed the
/// cells still open for a vertex; at every A-slice boundary a counting bound
/// over the top residuals of each class; and equal-degree vertices of one
/// class must carry lexicographically non-increasing patterns.
pub fn oracle_tripartite(
    d: &TripartiteDegreeSequence,
    budget: Budget,
) -> OracleResult<TripartiteHypergraph> {
    let sizes = d.sizes();
    let orders = [0, 1, 2].map(|k| descending_order(d.classes()[k].as_slice()));
    let sorted: [Vec<u32>; 3] =
        [0, 1, 2].map(|k| orders[k].iter().map(|&v| d.classes()[k][v]).collect());
    let same = |k: usize| -> Vec<bool> {
        (0..sizes[k])
            .map(|v| v > 0 && sorted[k][v] == sorted[k][v - 1])
            .collect()
    };
    let [na, nb, nc] = sizes;
    let mut search = TriSearch {
        sizes,
        res: [0, 1, 2].map(|k| sorted[k].iter().map(|&x| x as i64).collect()),
        avail: [
            vec![(nb * nc) as i64; na],
            vec![(na * nc) as i64; nb],
            vec![(na * nb) as i64; nc],
        ],
        eq_a: false,
        eq_b: same(1),
        eq_c: same(2),
        same_a: same(0),
        cells: vec![false; na * nb * nc],
        meter: Meter::new(budget),
    };
    let sums = d.sums();
    let found = sums[0] == sums[1] && sums[1] == sums[2] && search.run(0);
    let timed_out = !found && search.meter.out;
    let witness = found.then(|| {
        let mut h = TripartiteHypergraph::new(na, nb, nc);
        for i in 0..na {
            for j in 0..nb {
                for l in 0..nc {
                    if search.cells[search.idx(i, j, l)] {
                        h.insert(orders[0][i], orders[1][j], orders[2][l]);
                    }
                }
            }
        }
        h
    });
    OracleResult {
        graphic: found,
        witness,
        nodes_explored: search.meter.nodes,
        timed_out,
    }
}

struct GenSearch {
    meter: Meter,
    failed: HashSet<Vec<u32>>,
    edges: Vec<[usize; 3]>,
}

impl GenSearch {
    /// `alive` lists the vertices still in play, `res` holds residual degrees.
    fn solve(&mut self, alive: &[usize], res: &mut [u32]) -> bool {
        if !self.meter.tick() {
            return false;
        }
        let live: Vec<usize> = alive.iter().copied().filter(|&v| res[v] > 0).collect();
        if live.is_empty() {
            return true;
        }
        let total: u64 = live.iter().map(|&v| res[v] as u64).sum();
        let m = alive.len();
        if total % 3 != 0 || m < 3 {
            return false;
        }
        let pairs_per_vertex = ((m - 1) * (m - 2) / 2) as u32;
        if live.iter().any(|&v| res[v] > pairs_per_vertex) {
            return false;
        }
        let mut key: Vec<u32> = alive.iter().map(|&v| res[v]).collect();
        key.sort_unstable();
        if self.failed.contains(&key) {
            return false;
        }
        let v = *alive
            .iter()
            .max_by(|&&x, &&y| res[x].cmp(&res[y]).then(y.cmp(&x)))
            .unwrap();
        let rest: Vec<usize> = alive.iter().copied().filter(|&u| u != v).collect();
        let pairs: Vec<(usize, usize)> = (0..rest.len())
            .flat_map(|p| (p + 1..rest.len()).map(move |q| (p, q)))
            .map(|(p, q)| (rest[p], rest[q]))
            .collect();
        let need = res[v];
        res[v] = 0;
        let mark = self.edges.len();
        let ok = self.link(v, &rest, &pairs, 0, need, res);
        if !ok {
            res[v] = need;
            self.edges.truncate(mark);
            if !self.meter.out {
                self.failed.insert(key);
            }
        }
        ok
    }

    fn link(
        &mut self,
        v: usize,
        rest: &[usize],
        pairs: &[(usize, usize)],
        from: usize,
        need: u32,
        res: &mut [u32],
    ) -> bool {
        if need == 0 {
            return self.solve(rest, res);
        }
        if pairs.len() - from < need as usize || !self.meter.tick() {
            return false;
        }
        for k in from..pairs.len() {
            if pairs.len() - k < need as usize {
                break;
            }
            let (p, q) = pairs[k];
            if res[p] == 0 || res[q] == 0 {
                continue;
            }
            res[p] -= 1;
            res[q] -= 1;
            self.edges.push([v, p, q]);
            if self.link(v, rest, pairs, k + 1, need - 1, res) {
                return true;
            }
            self.edges.pop();
            res[p] += 1;
            res[q] += 1;
            if self.meter.out {
                return false;
            }
        }
        false
    }
}

/// Decides whether `d` has a simple 3-uniform realization.
///
/// Repeatedly satisfies the largest residual degree by enumerating its link
/// graph on the remaining vertices, then recurses without that vertex.
/// Failed residual multisets are cached, since the remaining vertices are
/// interchangeable up to their degrees.
pub fn oracle_general(d: &DegreeSequence, budget: Budget) -> OracleResult<Hypergraph> {
    let n = d.len();
    let mut search = GenSearch {
        meter: Meter::new(budget),
        failed: HashSet::new(),
        edges: Vec::new(),
    };
    let mut res = d.as_slice().to_vec();
    let alive: Vec<usize> = (0..n).collect();
    let found = d.sum() % 3 == 0 && search.solve(&alive, &mut res);
    let timed_out = !found && search.meter.out;
    let witness = found.then(|| {
        Hypergraph::from_edges(n, search.edges.iter().copied())
            .expect("search only emits distinct 3-sets")
    });
    OracleResult {
        graphic: found,
        witness,
        nodes_explored: search.meter.nodes,
        timed_out,
    }
}

/// `z³ - (1 + c)z + 2c`, whose double positive root defines the constant.
pub fn conjecture_cubic(c: f64, z: f64) -> f64 {
    z * z * z - (1.0 + c) * z + 2.0 * c
}

/// Real roots of `z³ - (1 + c)z + 2c` that are positive, increasing.
pub fn conjecture_cubic_positive_roots(c: f64) -> Vec<f64> {
    // Depressed cubic z³ + pz + q with three real roots when 4p³ + 27q² < 0.
    let (p, q) = (-(1.0 + c), 2.0 * c);
    let disc = 4.0 * p * p * p + 27.0 * q * q;
    let mut roots = if disc <= 0.0 {
        let r = 2.0 * (-p / 3.0).sqrt();
        let phi = ((3.0 * q) / (p * r)).clamp(-1.0, 1.0).acos() / 3.0;
        (0..3)
            .map(|k| r * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos())
            .collect::<Vec<_>>()
    } else {
        let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt()]
    };
    for z in roots.iter_mut() {
        for _ in 0..4 {
            let slope = 3.0 * *z * *z - (1.0 + c);
            if slope.abs() > 1e-12 {
                *z -= conjecture_cubic(c, *z) / slope;
            }
        }
    }
    roots.retain(|&z| z > 0.0);
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    roots
}

/// The `c` in `(0, 1/2)` at which the cubic gains a double positive root,
/// about 0.278066.
///
/// A double root of `z³ + pz + q` exists exactly when `4p³ + 27q² = 0`, which
/// here reads `(1 + c)³ = 27c²`; the left side minus the right changes sign
/// once on `(0, 1/2)` and is bisected to machine precision.
pub fn conjectured_constant() -> f64 {
    let g = |c: f64| (1.0 + c).powi(3) - 27.0 * c * c;
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
