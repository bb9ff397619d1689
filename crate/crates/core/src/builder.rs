//! Class-symmetric edge exhibition.
//!
//! Every extreme-sequence construction prescribes the same degree vector in
//! all three classes and only ever adds edge gadgets that take the same
//! number of degrees from vertex `i` of A, B and C. The residual degrees are
//! therefore a single vector, tracked here, while the edges go into one
//! shared tripartite hypergraph.

use crate::bipartite::realize_bipartite_avoiding;
use crate::error::{Error, Result};
use crate::regular::{almost_regular_tripartite, AlmostRegularSpec};
use crate::types::TripartiteHypergraph;

#[derive(Debug, Clone)]
pub(crate) struct SymmetricBuilder {
    residual: Vec<i64>,
    graph: TripartiteHypergraph,
}

fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

impl SymmetricBuilder {
    pub fn new(degrees: &[u32]) -> Self {
        let n = degrees.len();
        SymmetricBuilder {
            residual: degrees.iter().map(|&d| d as i64).collect(),
            graph: TripartiteHypergraph::new(n, n, n),
        }
    }

    pub fn residual(&self) -> &[i64] {
        &self.residual
    }

    pub fn into_graph(self) -> TripartiteHypergraph {
        self.graph
    }

    fn add(&mut self, a: usize, b: usize, c: usize) -> Result<()> {
        if !self.graph.insert(a, b, c) {
            return Err(internal(format!("edge (A{a}, B{b}, C{c}) exhibited twice")));
        }
        Ok(())
    }

    fn take(&mut self, v: usize, amount: i64) -> Result<()> {
        self.residual[v] -= amount;
        if self.residual[v] < 0 {
            return Err(internal(format!(
                "residual degree of vertex {v} went negative"
            )));
        }
        Ok(())
    }

    /// Spreads `units` degree losses over `targets`, always charging the
    /// target whose residual after the pending losses is largest (lowest
    /// position on ties). `fixed` pre-assigns losses that take no part in the
    /// levelling. No target is charged more than `cap` or its residual.
    pub fn waterfill(
        &self,
        targets: &[usize],
        units: u64,
        cap: u32,
        fixed: &[(usize, u32)],
    ) -> Result<Vec<u32>> {
        let mut loss = vec![0u32; targets.len()];
        let mut frozen = vec![false; targets.len()];
        for &(v, amount) in fixed {
            let pos = targets
                .iter()
                .position(|&t| t == v)
                .ok_or_else(|| internal(format!("fixed loss on non-target {v}")))?;
            loss[pos] = amount;
            frozen[pos] = true;
        }
        for _ in 0..units {
            let mut best: Option<usize> = None;
            let mut best_level = 0i64;
            for (pos, &v) in targets.iter().enumerate() {
                if frozen[pos] || loss[pos] >= cap {
                    continue;
                }
                let level = self.residual[v] - loss[pos] as i64;
                if level > 0 && (best.is_none() || level > best_level) {
                    best = Some(pos);
                    best_level = level;
                }
            }
            let pos = best.ok_or_else(|| {
                internal(format!(
                    "cannot spread {units} losses over targets {targets:?}"
                ))
            })?;
            loss[pos] += 1;
        }
        Ok(loss)
    }

    /// Gives the three copies of `center` `Σloss / 2` hyperedges each whose
    /// other two ends lie in `targets`; every class loses `loss[p]` on
    /// `targets[p]`.
    ///
    /// The loss vector is split into near-halves `u` and `v`; the configurations
    /// of a, b and c use margins `(u, v)`, `(v, u)` and `(u, v)` on the two
    /// opposite classes, which sums to `loss` in each class.
    pub fn star(&mut self, center: usize, targets: &[usize], loss: &[u32]) -> Result<()> {
        if targets.contains(&center) {
            return Err(internal("star center among its own targets"));
        }
        let total: u64 = loss.iter().map(|&x| x as u64).sum();
        if total % 2 != 0 {
            return Err(internal("star loss vector has odd sum"));
        }
        let edges = (total / 2) as i64;
        let mut u = Vec::with_capacity(loss.len());
        let mut v = Vec::with_capacity(loss.len());
        let mut ceil_to_u = true;
        for &l in loss {
            let half = l / 2;
            if l % 2 == 1 {
                u.push(half + u32::from(ceil_to_u));
                v.push(half + u32::from(!ceil_to_u));
                ceil_to_u = !ceil_to_u;
            } else {
                u.push(half);
                v.push(half);
            }
        }
        let t = targets;
        let g1 = realize_bipartite_avoiding(&u, &v, |p, q| self.graph.contains(center, t[p], t[q]));
        let g2 = realize_bipartite_avoiding(&v, &u, |p, q| self.graph.contains(t[p], center, t[q]));
        let g3 = realize_bipartite_avoiding(&u, &v, |p, q| self.graph.contains(t[p], t[q], center));
        let (Some(g1), Some(g2), Some(g3)) = (g1, g2, g3) else {
            return Err(internal(format!(
                "no configuration for vertex {center} with losses {loss:?} on {targets:?}"
            )));
        };
        for &(p, q) in g1.edges() {
            self.add(center, t[p], t[q])?;
        }
        for &(p, q) in g2.edges() {
            self.add(t[p], center, t[q])?;
        }
        for &(p, q) in g3.edges() {
            self.add(t[p], t[q], center)?;
        }
        self.take(center, edges)?;
        for (&vtx, &l) in targets.iter().zip(loss) {
            self.take(vtx, l as i64)?;
        }
        Ok(())
    }

    /// [`star`](Self::star) with `edges` hyperedges per copy, spread almost
    /// regularly over `targets` from the highest residual down.
    pub fn star_levelled(&mut self, center: usize, targets: &[usize], edges: u32) -> Result<()> {
        let cap = 2 * targets.len() as u32;
        let loss = self.waterfill(targets, 2 * edges as u64, cap, &[])?;
        self.star(center, targets, &loss)
    }

    /// For `count` targets `q` with the highest residuals, adds the three
    /// hyperedges holding two copies of `center` and the copy of `q` in the
    /// remaining class.
    pub fn pairs(&mut self, center: usize, targets: &[usize], count: usize) -> Result<()> {
        let mut order: Vec<usize> = targets.to_vec();
        order.sort_by(|&a, &b| self.residual[b].cmp(&self.residual[a]).then(a.cmp(&b)));
        if count > order.len() {
            return Err(internal(format!(
                "{count} pair edges need more than {} targets",
                order.len()
            )));
        }
        for &q in &order[..count] {
            self.add(center, center, q)?;
            self.add(center, q, center)?;
            self.add(q, center, center)?;
            self.take(q, 1)?;
        }
        self.take(center, 2 * count as i64)
    }

    /// The hyperedge on the three copies of `v`.
    pub fn triple(&mut self, v: usize) -> Result<()> {
        self.add(v, v, v)?;
        self.take(v, 1)
    }

    /// True when the residuals on `members` differ by at most one.
    pub fn is_almost_regular(&self, members: &[usize]) -> bool {
        let vals = members.iter().map(|&v| self.residual[v]);
        match (vals.clone().min(), vals.max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    /// Realizes the (almost regular) residuals on `members³` with the
    /// rotational construction and zeroes them.
    pub fn block(&mut self, members: &[usize]) -> Result<()> {
        if members.is_empty() {
            return Ok(());
        }
        if !self.is_almost_regular(members) {
            return Err(internal(format!(
                "residuals on block {members:?} are not almost regular: {:?}",
                members
                    .iter()
                    .map(|&v| self.residual[v])
                    .collect::<Vec<_>>()
            )));
        }
        let k = members.iter().map(|&v| self.residual[v]).min().unwrap();
        let mut ordered: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| self.residual[v] > k)
            .collect();
        let count = ordered.len();
        ordered.extend(members.iter().copied().filter(|&v| self.residual[v] == k));
        let spec = AlmostRegularSpec::new(members.len(), k as u32, count);
        let local = almost_regular_tripartite(&spec)
            .map_err(|e| internal(format!("block on {members:?}: {e}")))?;
        for (a, b, c) in local.edges() {
            self.add(ordered[a], ordered[b], ordered[c])?;
        }
        for &v in members {
            self.residual[v] = 0;
        }
        Ok(())
    }
}
