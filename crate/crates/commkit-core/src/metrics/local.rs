//! Local scorers: the Radicchi edge-clustering coefficient, ten
//! neighborhood similarity indices, and the node clustering coefficient.
//!
//! Degenerate denominators (an isolated endpoint, an empty union) score 0:
//! an isolated node shares nothing, so 0 marks the pair weakest. The
//! Adamic-Adar logarithm is the natural log; any base only rescales the
//! index, and the remove-min ordering the divisive engine consumes is
//! invariant to that.

use crate::error::Result;
use crate::graph::{ordered, Graph, NodeId};
use crate::metrics::EdgeScore;

/// Radicchi edge-clustering coefficient c = (z + 1) / min(k_u - 1, k_v - 1)
/// where z counts triangles on the edge. Pendant edges (a degree-1
/// endpoint) make the denominator vanish and come back `excluded`.
pub fn radicchi_coefficient(g: &Graph, u: NodeId, v: NodeId) -> Result<EdgeScore> {
    let z = g.triangles_on_edge(u, v)?;
    let denom = g.degree(u)?.min(g.degree(v)?) - 1;
    if denom == 0 {
        return Ok(EdgeScore {
            edge: ordered(u, v),
            value: f64::NAN,
            excluded: true,
        });
    }
    Ok(EdgeScore {
        edge: ordered(u, v),
        value: (z as f64 + 1.0) / denom as f64,
        excluded: false,
    })
}

struct Pair {
    common: usize,
    deg_u: usize,
    deg_v: usize,
}

fn pair(g: &Graph, u: NodeId, v: NodeId) -> Result<Pair> {
    let common = g.common_neighborhood(u, v)?.len();
    Ok(Pair {
        common,
        deg_u: g.degree(u)?,
        deg_v: g.degree(v)?,
    })
}

/// Common neighbors: |Γu ∩ Γv|.
pub fn score_cn(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    Ok(pair(g, u, v)?.common as f64)
}

/// Adamic-Adar: Σ 1/ln|Γz| over common neighbors z. A common neighbor is
/// adjacent to both endpoints, so |Γz| ≥ 2 and the log never vanishes.
pub fn score_aa(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let common = g.common_neighborhood(u, v)?;
    let mut total = 0.0;
    for z in common {
        total += 1.0 / (g.degree(z)? as f64).ln();
    }
    Ok(total)
}

/// Resource allocation: Σ 1/|Γz| over common neighbors z.
pub fn score_ra(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let common = g.common_neighborhood(u, v)?;
    let mut total = 0.0;
    for z in common {
        total += 1.0 / g.degree(z)? as f64;
    }
    Ok(total)
}

/// Preferential attachment: |Γu| · |Γv|.
pub fn score_pa(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let p = pair(g, u, v)?;
    Ok((p.deg_u * p.deg_v) as f64)
}

/// Jaccard: |Γu ∩ Γv| / |Γu ∪ Γv|.
pub fn score_jaccard(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let p = pair(g, u, v)?;
    let union = p.deg_u + p.deg_v - p.common;
    Ok(ratio(p.common, union))
}

/// Sørensen: 2|Γu ∩ Γv| / (|Γu| + |Γv|).
pub fn score_sorensen(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let p = pair(g, u, v)?;
    Ok(ratio(2 * p.common, p.deg_u + p.deg_v))
}

/// Salton cosine: |Γu ∩ Γv| / sqrt(|Γu| · |Γv|).
pub fn score_salton(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let p = pair(g, u, v)?;
    if p.deg_u == 0 || p.deg_v == 0 {
        return Ok(0.0);
    }
    Ok(p.common as f64 / ((p.deg_u * p.deg_v) as f64).sqrt())
}

/// Hub depressed: |Γu ∩ Γv| / max(|Γu|, |Γv|).
pub fn score_hub_depressed(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let p = pair(g, u, v)?;
    Ok(ratio(p.common, p.deg_u.max(p.deg_v)))
}

/// Hub promoted: |Γu ∩ Γv| / min(|Γu|, |Γv|).
pub fn score_hub_promoted(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let p = pair(g, u, v)?;
    Ok(ratio(p.common, p.deg_u.min(p.deg_v)))
}

/// Local Leicht-Holme-Newman: |Γu ∩ Γv| / (|Γu| · |Γv|).
pub fn score_llhn(g: &Graph, u: NodeId, v: NodeId) -> Result<f64> {
    let p = pair(g, u, v)?;
    Ok(ratio(p.common, p.deg_u * p.deg_v))
}

fn ratio(num: usize, denom: usize) -> f64 {
    if denom == 0 {
        0.0
    } else {
        num as f64 / denom as f64
    }
}

/// Node clustering coefficient C = 2m / (k(k-1)) where m counts edges among
/// the node's neighbors. Degree ≤ 1 scores 0 by convention.
pub fn node_clustering(g: &Graph, i: NodeId) -> Result<f64> {
    let nbrs = g.neighbors(i)?;
    let k = nbrs.len();
    if k <= 1 {
        return Ok(0.0);
    }
    let mut m = 0usize;
    for (a, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[a + 1..] {
            if g.has_edge(x, y) {
                m += 1;
            }
        }
    }
    Ok(2.0 * m as f64 / (k * (k - 1)) as f64)
}
