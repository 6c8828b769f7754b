//! Partition quality: modularity, entropy, mutual information, NMI, the
//! modularity-vs-k sweep and the sliding-window elbow selector.
//!
//! Entropy and mutual information are in bits. Modularity uses the Newman
//! formulation with a_r as the community degree fraction.

use crate::divisive::{partition_at_k, Dendrogram, Partition};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Q = Σ_r (e_rr − a_r²) with e_rr the intra-community edge fraction and
/// a_r the community degree fraction.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    if p.community.len() != g.node_count() {
        return Err(Error::PartitionMismatch(p.community.len(), g.node_count()));
    }
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::UndefinedModularity);
    }
    let mut intra = vec![0usize; p.community_count];
    let mut degree_sum = vec![0usize; p.community_count];
    for u in g.nodes() {
        degree_sum[p.community[u.index()] as usize] += g.degree(u).unwrap();
    }
    for (u, v) in g.edges() {
        let (cu, cv) = (p.community[u.index()], p.community[v.index()]);
        if cu == cv {
            intra[cu as usize] += 1;
        }
    }
    let m = m as f64;
    let mut q = 0.0;
    for r in 0..p.community_count {
        let e_rr = intra[r] as f64 / m;
        let a_r = degree_sum[r] as f64 / (2.0 * m);
        q += e_rr - a_r * a_r;
    }
    Ok(q)
}

/// Shannon entropy of the community size distribution, in bits.
pub fn entropy(p: &Partition) -> f64 {
    let n = p.community.len() as f64;
    if n == 0.0 {
        return 0.0;
    }
    let mut sizes = vec![0usize; p.community_count];
    for &c in &p.community {
        sizes[c as usize] += 1;
    }
    let mut h = 0.0;
    for s in sizes {
        if s > 0 {
            let pi = s as f64 / n;
            h -= pi * pi.log2();
        }
    }
    h
}

/// Joint membership counts n_ij = |X_i ∩ Y_j| for two partitions of the
/// same node set.
#[derive(Clone, Debug)]
pub struct ContingencyTable {
    pub counts: Vec<Vec<usize>>,
    pub total: usize,
}

impl ContingencyTable {
    pub fn from_partitions(x: &Partition, y: &Partition) -> Result<Self> {
        if x.community.len() != y.community.len() {
            return Err(Error::PartitionMismatch(
                x.community.len(),
                y.community.len(),
            ));
        }
        let mut counts = vec![vec![0usize; y.community_count]; x.community_count];
        for (node, &cx) in x.community.iter().enumerate() {
            counts[cx as usize][y.community[node] as usize] += 1;
        }
        Ok(ContingencyTable {
            counts,
            total: x.community.len(),
        })
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.counts.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        let cols = self.counts.first().map_or(0, Vec::len);
        (0..cols)
            .map(|j| self.counts.iter().map(|r| r[j]).sum())
            .collect()
    }
}

/// Mutual information J(X, Y) in bits; zero-probability cells contribute 0.
pub fn mutual_information(x: &Partition, y: &Partition) -> Result<f64> {
    let table = ContingencyTable::from_partitions(x, y)?;
    let n = table.total as f64;
    let rows = table.row_sums();
    let cols = table.col_sums();
    let mut j = 0.0;
    for (i, row) in table.counts.iter().enumerate() {
        for (jj, &nij) in row.iter().enumerate() {
            if nij == 0 {
                continue;
            }
            let pij = nij as f64 / n;
            let pi = rows[i] as f64 / n;
            let pj = cols[jj] as f64 / n;
            j += pij * (pij / (pi * pj)).log2();
        }
    }
    Ok(j)
}

/// NMI₂ = 2J / (H(X) + H(Y)); 1 means identical partitions, 0 independent.
/// Two single-cluster partitions over the same nodes are identical, so the
/// degenerate zero-entropy case returns 1.
pub fn nmi(x: &Partition, y: &Partition) -> Result<f64> {
    let j = mutual_information(x, y)?;
    let h = entropy(x) + entropy(y);
    if h == 0.0 {
        return Ok(1.0);
    }
    Ok(2.0 * j / h)
}

/// Modularity at each community count k = 2..=k_max along one dendrogram.
#[derive(Clone, Debug, PartialEq)]
pub struct ModularityCurve {
    pub points: Vec<(usize, f64)>,
}

impl ModularityCurve {
    /// Highest-modularity point; ties go to the smallest k.
    pub fn max_point(&self) -> Option<(usize, f64)> {
        self.points
            .iter()
            .copied()
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap().then(b.0.cmp(&a.0)))
    }
}

pub fn modularity_sweep(g: &Graph, d: &Dendrogram, k_max: usize) -> ModularityCurve {
    let start = 2.max(g.connected_components().component_count);
    let end = k_max.min(d.final_components);
    let mut points = Vec::new();
    for k in start..=end {
        if let Ok(p) = partition_at_k(d, k) {
            if let Ok(q) = modularity(g, &p) {
                points.push((k, q));
            }
        }
    }
    ModularityCurve { points }
}

/// Sliding-window elbow: returns the k maximizing
/// (Q(k) − Q(k−w)) − (Q(k+w) − Q(k)), window arguments clamped to the
/// curve's domain; ties go to the smallest k.
pub fn elbow_select(curve: &ModularityCurve, w: usize) -> Result<(usize, f64)> {
    if curve.points.len() < 2 {
        return Err(Error::InsufficientCurve(curve.points.len()));
    }
    if w == 0 {
        return Err(Error::InvalidConfig("elbow window must be positive".into()));
    }
    let points = &curve.points;
    let lo = points.first().unwrap().0;
    let hi = points.last().unwrap().0;
    // Q at a clamped k, linearly interpolated between recorded points.
    let q = |k: usize| -> f64 {
        let k = k.clamp(lo, hi);
        match points.binary_search_by_key(&k, |p| p.0) {
            Ok(i) => points[i].1,
            Err(i) => {
                let (k0, q0) = points[i - 1];
                let (k1, q1) = points[i];
                q0 + (q1 - q0) * (k - k0) as f64 / (k1 - k0) as f64
            }
        }
    };
    let mut best: Option<(i64, usize)> = None;
    for &(k, _) in points {
        let drop = (q(k) - q(k.saturating_sub(w))) - (q(k + w) - q(k));
        let quantized = (drop * 1e12).round() as i64;
        if best.is_none() || quantized > best.unwrap().0 {
            best = Some((quantized, k));
        }
    }
    let (_, k) = best.unwrap();
    Ok((k, q(k)))
}
