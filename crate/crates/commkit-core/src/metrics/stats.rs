//! Whole-graph descriptive statistics: the counts, averages and centrality
//! means reported by `commkit stats`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::betweenness::node_betweenness;
use crate::metrics::local::node_clustering;

/// Descriptive statistics for one graph.
///
/// Centrality conventions (pinned so the numbers are reproducible):
/// closeness per node is (reachable - 1) / Σ d(u, v), which is (n-1)/Σ d on
/// a connected graph; the eigenvector is the adjacency principal vector
/// scaled to unit Euclidean norm; node betweenness is unordered-pair,
/// endpoint-excluded and unnormalized. `avg_path_length` averages over
/// unordered reachable pairs and `connected` flags whether any pair was
/// excluded.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphStats {
    pub node_count: usize,
    pub edge_count: usize,
    pub degree_avg: f64,
    pub clustering_coef_avg: f64,
    pub avg_path_length: f64,
    pub closeness_avg: f64,
    pub eigenvector_avg: f64,
    pub betweenness_avg: f64,
    pub connected: bool,
}

pub fn graph_stats(g: &Graph) -> Result<GraphStats> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut clustering_sum = 0.0;
    for u in g.nodes() {
        clustering_sum += node_clustering(g, u)?;
    }

    let mut dist_sum = 0u64;
    let mut pair_count = 0u64;
    let mut closeness_sum = 0.0;
    let mut connected = true;
    for u in g.nodes() {
        let dist = g.shortest_path_lengths(u)?;
        let mut row_sum = 0u64;
        let mut reachable = 0u64;
        for v in g.nodes() {
            match dist[v.index()] {
                Some(d) if v != u => {
                    row_sum += u64::from(d);
                    reachable += 1;
                    if v > u {
                        dist_sum += u64::from(d);
                        pair_count += 1;
                    }
                }
                None => connected = false,
                _ => {}
            }
        }
        if row_sum > 0 {
            closeness_sum += reachable as f64 / row_sum as f64;
        }
    }

    let betweenness = node_betweenness(g);

    Ok(GraphStats {
        node_count: n,
        edge_count: g.edge_count(),
        degree_avg: 2.0 * g.edge_count() as f64 / n as f64,
        clustering_coef_avg: clustering_sum / n as f64,
        avg_path_length: if pair_count == 0 {
            0.0
        } else {
            dist_sum as f64 / pair_count as f64
        },
        closeness_avg: closeness_sum / n as f64,
        eigenvector_avg: eigenvector_centrality(g).iter().sum::<f64>() / n as f64,
        betweenness_avg: betweenness.iter().sum::<f64>() / n as f64,
        connected,
    })
}

/// Principal eigenvector of the adjacency matrix by power iteration,
/// scaled to unit Euclidean norm. Tolerance 1e-10 on the infinity norm of
/// successive iterates, capped at 10_000 rounds, uniform positive start.
fn eigenvector_centrality(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut next = vec![0.0; n];
    for _ in 0..10_000 {
        for v in next.iter_mut() {
            *v = 0.0;
        }
        for u in g.nodes() {
            let xu = x[u.index()];
            for &v in g.neighbors(u).unwrap() {
                next[v.index()] += xu;
            }
        }
        let norm = next.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            // no edges: centrality degenerates to the start vector
            return x;
        }
        for v in next.iter_mut() {
            *v /= norm;
        }
        let diff = x
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0_f64, f64::max);
        std::mem::swap(&mut x, &mut next);
        if diff < 1e-10 {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn toy() -> Graph {
        let mut b = GraphBuilder::new();
        for (a, c) in [("1", "2"), ("1", "3"), ("2", "3"), ("3", "4"), ("4", "5")] {
            b.add_edge(a, c);
        }
        b.finish()
    }

    #[test]
    fn toy_graph_stats() {
        let s = graph_stats(&toy()).unwrap();
        assert_eq!(s.node_count, 5);
        assert_eq!(s.edge_count, 5);
        assert!((s.degree_avg - 2.0).abs() < 1e-12);
        // pair distances sum to 17 over 10 pairs
        assert!((s.avg_path_length - 1.7).abs() < 1e-12);
        assert!(s.connected);
        assert!(s.clustering_coef_avg > 0.0 && s.clustering_coef_avg <= 1.0);
    }

    #[test]
    fn empty_graph_is_an_error() {
        let g = GraphBuilder::new().finish();
        assert!(matches!(graph_stats(&g), Err(Error::EmptyGraph)));
    }

    #[test]
    fn disconnected_graph_is_flagged() {
        let mut b = GraphBuilder::new();
        b.add_edge("a", "b");
        b.node("z");
        let s = graph_stats(&b.finish()).unwrap();
        assert!(!s.connected);
        assert!((s.avg_path_length - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigenvector_of_k3_is_uniform() {
        let mut b = GraphBuilder::new();
        b.add_edge("a", "b");
        b.add_edge("b", "c");
        b.add_edge("a", "c");
        let g = b.finish();
        let s = graph_stats(&g).unwrap();
        // each entry 1/sqrt(3)
        assert!((s.eigenvector_avg - 1.0 / 3.0_f64.sqrt()).abs() < 1e-8);
        // closeness of every K3 node is (n-1)/sum d = 2/2 = 1
        assert!((s.closeness_avg - 1.0).abs() < 1e-12);
    }
}
