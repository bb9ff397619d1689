//! Seeded random degree sequences inside the constructors' domains.

use crate::error::{Error, Result};
use crate::general::{degree_bounds, MIN_VERTICES};
use crate::tripartite::{large_degree, small_degree};
use crate::types::{DegreeSequence, TripartiteDegreeSequence};

/// SplitMix64: a Weyl sequence with increment `0x9E3779B97F4A7C15` fed
/// through two xor-shift-multiply rounds (`0xBF58476D1CE4E5B9`,
/// `0x94D049BB133111EB`). Output depends only on the seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `lo..=hi` by rejection, so there is no modulo bias.
    pub fn range(&mut self, lo: u32, hi: u32) -> u32 {
        assert!(lo <= hi);
        let span = u64::from(hi - lo) + 1;
        let zone = u64::MAX - (u64::MAX % span);
        loop {
            let v = self.next_u64();
            if v < zone {
                return lo + (v % span) as u32;
            }
        }
    }
}

/// Random `n + n + n` sequence with degrees in `[⌈2n²/7⌉, ⌊5n²/7⌋]`.
///
/// Every class is drawn independently, then the classes with a larger sum are
/// brought down to the smallest class sum by repeatedly decrementing their
/// largest degree (lowest index on ties).
pub fn random_tripartite(n: usize, seed: u64) -> Result<TripartiteDegreeSequence> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let (lo, hi) = (small_degree(n), large_degree(n));
    let mut rng = SplitMix64::new(seed);
    let mut classes: Vec<Vec<u32>> = (0..3)
        .map(|_| (0..n).map(|_| rng.range(lo, hi)).collect())
        .collect();
    let target = classes
        .iter()
        .map(|c| c.iter().map(|&d| u64::from(d)).sum::<u64>())
        .min()
        .expect("three classes");
    for class in &mut classes {
        let mut sum: u64 = class.iter().map(|&d| u64::from(d)).sum();
        while sum > target {
            let top = argmax(class);
            debug_assert!(class[top] > lo, "the target sum is at least n·lo");
            class[top] -= 1;
            sum -= 1;
        }
    }
    let [a, b, c]: [Vec<u32>; 3] = classes.try_into().expect("three classes");
    TripartiteDegreeSequence::from_vecs(a, b, c)
}

/// Random sequence on `n >= 45` vertices within the general integer bounds,
/// with the sum made divisible by 3.
///
/// The repair lowers the largest degree while it is above the lower bound and
/// raises the smallest degree otherwise.
pub fn random_general(n: usize, seed: u64) -> Result<DegreeSequence> {
    if n < MIN_VERTICES {
        return Err(Error::TooFewVertices {
            n,
            min: MIN_VERTICES,
        });
    }
    let (lo, hi) = degree_bounds(n);
    let mut rng = SplitMix64::new(seed);
    let mut degrees: Vec<u32> = (0..n).map(|_| rng.range(lo, hi)).collect();
    let mut sum: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
    while sum % 3 != 0 {
        let top = argmax(&degrees);
        if degrees[top] > lo {
            degrees[top] -= 1;
            sum -= 1;
        } else {
            let bottom = argmin(&degrees);
            degrees[bottom] += 1;
            sum += 1;
        }
    }
    DegreeSequence::new(degrees)
}

fn argmax(v: &[u32]) -> usize {
    let mut best = 0;
    for (i, &d) in v.iter().enumerate() {
        if d > v[best] {
            best = i;
        }
    }
    best
}

fn argmin(v: &[u32]) -> usize {
    let mut best = 0;
    for (i, &d) in v.iter().enumerate() {
        if d < v[best] {
            best = i;
        }
    }
    best
}
