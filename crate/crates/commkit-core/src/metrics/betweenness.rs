//! Shortest-path betweenness via single-source accumulation: one BFS plus
//! dependency back-propagation per source, O(|V|·|E|) total.
//!
//! Conventions: unordered node pairs, fractional credit split equally
//! across multiple shortest paths, pairs in different components contribute
//! nothing. Sources are accumulated in ascending node order so the result
//! is bit-for-bit deterministic.

use std::collections::VecDeque;

use crate::graph::{Graph, NodeId};
use crate::metrics::EdgeScore;

/// Betweenness of every edge, in canonical edge order.
pub fn edge_betweenness(g: &Graph) -> Vec<EdgeScore> {
    let n = g.node_count();
    let edges: Vec<(NodeId, NodeId)> = g.edges().collect();
    let index: std::collections::HashMap<(usize, usize), usize> = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| ((u.index(), v.index()), i))
        .collect();
    let mut acc = vec![0.0_f64; edges.len()];

    let mut state = SearchState::new(n);
    for s in 0..n {
        state.search(g, NodeId::new(s));
        // Back-propagate dependencies; credit each predecessor edge.
        while let Some(w) = state.stack.pop() {
            for &v in &state.preds[w] {
                let credit = state.sigma[v] / state.sigma[w] * (1.0 + state.delta[w]);
                state.delta[v] += credit;
                acc[index[&key(v, w)]] += credit;
            }
        }
    }

    // Each unordered pair was counted from both endpoints.
    edges
        .iter()
        .zip(acc)
        .map(|(&(u, v), total)| EdgeScore {
            edge: (u, v),
            value: total / 2.0,
            excluded: false,
        })
        .collect()
}

/// Node betweenness (endpoint-excluded, unordered pairs, unnormalized).
pub fn node_betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let mut acc = vec![0.0_f64; n];
    let mut state = SearchState::new(n);
    for s in 0..n {
        state.search(g, NodeId::new(s));
        while let Some(w) = state.stack.pop() {
            for &v in &state.preds[w] {
                state.delta[v] += state.sigma[v] / state.sigma[w] * (1.0 + state.delta[w]);
            }
            if w != s {
                acc[w] += state.delta[w];
            }
        }
    }
    for v in &mut acc {
        *v /= 2.0;
    }
    acc
}

struct SearchState {
    stack: Vec<usize>,
    preds: Vec<Vec<usize>>,
    sigma: Vec<f64>,
    dist: Vec<i64>,
    delta: Vec<f64>,
}

impl SearchState {
    fn new(n: usize) -> Self {
        SearchState {
            stack: Vec::with_capacity(n),
            preds: vec![Vec::new(); n],
            sigma: vec![0.0; n],
            dist: vec![-1; n],
            delta: vec![0.0; n],
        }
    }

    /// BFS from `s`, filling path counts and the predecessor dag.
    fn search(&mut self, g: &Graph, s: NodeId) {
        self.stack.clear();
        for i in 0..self.sigma.len() {
            self.preds[i].clear();
            self.sigma[i] = 0.0;
            self.dist[i] = -1;
            self.delta[i] = 0.0;
        }
        self.sigma[s.index()] = 1.0;
        self.dist[s.index()] = 0;
        let mut queue = VecDeque::from([s.index()]);
        while let Some(v) = queue.pop_front() {
            self.stack.push(v);
            for &w in g.neighbors(NodeId::new(v)).unwrap() {
                let w = w.index();
                if self.dist[w] < 0 {
                    self.dist[w] = self.dist[v] + 1;
                    queue.push_back(w);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] += self.sigma[v];
                    self.preds[w].push(v);
                }
            }
        }
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
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

    fn value_of(g: &Graph, scores: &[EdgeScore], a: &str, b: &str) -> f64 {
        let u = g.node_by_label(a).unwrap();
        let v = g.node_by_label(b).unwrap();
        let e = crate::graph::ordered(u, v);
        scores.iter().find(|s| s.edge == e).unwrap().value
    }

    #[test]
    fn bridge_carries_all_cross_traffic() {
        let g = toy();
        let scores = edge_betweenness(&g);
        // Pairs {1,4},{1,5},{2,4},{2,5},{3,4},{3,5} each cross 3-4 uniquely.
        assert!((value_of(&g, &scores, "3", "4") - 6.0).abs() < 1e-12);
        assert!((value_of(&g, &scores, "1", "2") - 1.0).abs() < 1e-12);
    }

    #[test]
    fn triangle_edges_carry_only_their_endpoint_pair() {
        let mut b = GraphBuilder::new();
        b.add_edge("a", "b");
        b.add_edge("b", "c");
        b.add_edge("a", "c");
        let g = b.finish();
        for s in edge_betweenness(&g) {
            assert!((s.value - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn betweenness_sum_equals_pair_distance_sum() {
        let g = toy();
        let total: f64 = edge_betweenness(&g).iter().map(|s| s.value).sum();
        let mut dist_sum = 0u64;
        for u in g.nodes() {
            let d = g.shortest_path_lengths(u).unwrap();
            for v in g.nodes() {
                if v > u {
                    dist_sum += u64::from(d[v.index()].unwrap());
                }
            }
        }
        assert!((total - dist_sum as f64).abs() < 1e-9);
    }

    #[test]
    fn disconnected_pairs_contribute_nothing() {
        let mut b = GraphBuilder::new();
        b.add_edge("a", "b");
        b.add_edge("c", "d");
        let g = b.finish();
        for s in edge_betweenness(&g) {
            assert!((s.value - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn node_betweenness_of_path_center() {
        // path a-b-c: only b lies between a and c
        let mut b = GraphBuilder::new();
        b.add_edge("a", "b");
        b.add_edge("b", "c");
        let g = b.finish();
        let nb = node_betweenness(&g);
        let bid = g.node_by_label("b").unwrap().index();
        assert!((nb[bid] - 1.0).abs() < 1e-12);
        assert!(nb.iter().sum::<f64>() - 1.0 < 1e-12);
    }
}
