//! The hierarchical divisive engine: iteratively score the remaining edges,
//! remove the extreme one, track component splits, and replay the removal
//! log to a partition at any community count.
//!
//! Selection is deterministic. Scores are quantized at 1e-9 before
//! comparison so mathematically tied edges compare equal regardless of
//! accumulation noise. Ties follow the ranked-list convention: order the
//! tied edges by (larger endpoint, smaller endpoint); a remove-max scorer
//! takes the first of them, a remove-min scorer the last. This matches the
//! published reference runs on the benchmark networks (a ranked list built
//! over the standard edge-declaration order, consumed from its ends).
//! Scores are recomputed on the modified graph every iteration; the
//! NEIGHBORHOOD policy only narrows *which* edges are rescored and must
//! produce a dendrogram identical to FULL.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{ordered, Graph, NodeId};
use crate::metrics::{score_edges, EdgeScore, MetricId, Orientation};

/// Desired community count, or run until no removable edge remains.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Target {
    Communities(usize),
    All,
}

/// How much rescoring happens after each removal.
///
/// `Neighborhood` is valid for the local scorers (Radicchi and the ten
/// similarity indices), whose edge scores depend only on the endpoints'
/// neighborhoods; it rescores only edges within distance 2 of the removed
/// edge's endpoints. Non-local scorers always recompute fully.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum RecomputePolicy {
    Full,
    Neighborhood,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub metric: MetricId,
    pub target: Target,
    pub policy: RecomputePolicy,
}

/// Why a divisive run ended.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum StopReason {
    TargetReached,
    EdgesExhausted,
    /// Only excluded (pendant Radicchi) edges remained before the target
    /// community count was reached.
    Deadlock,
}

/// One removal step.
#[derive(Clone, Debug, PartialEq)]
pub struct Removal {
    pub edge: (NodeId, NodeId),
    pub score: f64,
    pub components_after: usize,
}

/// Ordered log of removals over a base graph. Partitions at any community
/// count are derived from it with [`partition_at_k`].
#[derive(Clone, Debug)]
pub struct Dendrogram {
    base: Graph,
    pub removals: Vec<Removal>,
    pub final_components: usize,
    pub stop: StopReason,
}

impl Dendrogram {
    pub fn base_graph(&self) -> &Graph {
        &self.base
    }
}

/// Node-to-community assignment with dense community ids, ordered by each
/// community's smallest member node id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub community: Vec<u32>,
    pub community_count: usize,
}

impl Partition {
    pub fn node_count(&self) -> usize {
        self.community.len()
    }

    /// Members of each community, in community id order.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.community_count];
        for (node, &c) in self.community.iter().enumerate() {
            groups[c as usize].push(node);
        }
        groups
    }
}

/// Anything that can score the current edge set. `MetricId` is the stock
/// implementation; tests wrap scorers to check selection invariances.
pub trait EdgeScorer {
    fn orientation(&self) -> Orientation;
    /// Whether edge scores depend only on endpoint neighborhoods.
    fn is_local(&self) -> bool;
    fn score_edges(&self, g: &Graph) -> Vec<EdgeScore>;

    /// Score one existing edge. The default rescans the whole edge set;
    /// local metrics override it with a direct computation.
    fn score_edge(&self, g: &Graph, u: NodeId, v: NodeId) -> EdgeScore {
        let e = ordered(u, v);
        self.score_edges(g)
            .into_iter()
            .find(|s| s.edge == e)
            .expect("edge exists in graph")
    }
}

impl EdgeScorer for MetricId {
    fn orientation(&self) -> Orientation {
        MetricId::orientation(*self)
    }

    fn is_local(&self) -> bool {
        MetricId::is_local(*self)
    }

    fn score_edges(&self, g: &Graph) -> Vec<EdgeScore> {
        score_edges(g, *self)
    }

    fn score_edge(&self, g: &Graph, u: NodeId, v: NodeId) -> EdgeScore {
        use crate::metrics::{radicchi_coefficient, score_pair};
        match self {
            MetricId::Radicchi => radicchi_coefficient(g, u, v).expect("edge exists"),
            MetricId::Betweenness => {
                let e = ordered(u, v);
                self.score_edges(g)
                    .into_iter()
                    .find(|s| s.edge == e)
                    .expect("edge exists in graph")
            }
            m => EdgeScore {
                edge: ordered(u, v),
                value: score_pair(g, *m, u, v).expect("endpoints exist"),
                excluded: false,
            },
        }
    }
}

pub fn run_divisive(g: &Graph, cfg: &RunConfig) -> Result<Dendrogram> {
    run_divisive_with(g, &cfg.metric, cfg.target, cfg.policy)
}

pub fn run_divisive_with(
    g: &Graph,
    scorer: &dyn EdgeScorer,
    target: Target,
    policy: RecomputePolicy,
) -> Result<Dendrogram> {
    if g.edge_count() == 0 {
        return Err(Error::InvalidConfig("graph has no edges".into()));
    }
    if let Target::Communities(k) = target {
        if k < 2 {
            return Err(Error::InvalidConfig(format!(
                "target community count must be at least 2, got {k}"
            )));
        }
        if k > g.node_count() {
            return Err(Error::InvalidConfig(format!(
                "target community count {k} exceeds node count {}",
                g.node_count()
            )));
        }
    }

    let incremental = policy == RecomputePolicy::Neighborhood && scorer.is_local();
    let mut current = g.clone();
    let mut components = current.connected_components().component_count;
    let mut removals = Vec::new();
    let mut cache: HashMap<(NodeId, NodeId), EdgeScore> = HashMap::new();
    if incremental {
        for s in scorer.score_edges(&current) {
            cache.insert(s.edge, s);
        }
    }

    let stop = loop {
        if let Target::Communities(k) = target {
            if components >= k {
                break StopReason::TargetReached;
            }
        }
        if current.edge_count() == 0 {
            break StopReason::EdgesExhausted;
        }

        let picked = if incremental {
            select(scorer.orientation(), current.edges().map(|e| cache[&e]))
        } else {
            select(scorer.orientation(), scorer.score_edges(&current).into_iter())
        };
        let Some(score) = picked else {
            break StopReason::Deadlock;
        };

        let (u, v) = score.edge;
        current.remove_edge_in_place(u, v);
        if incremental {
            cache.remove(&score.edge);
            rescore_neighborhood(&current, scorer, &mut cache, u, v);
        }
        components = current.connected_components().component_count;
        removals.push(Removal {
            edge: score.edge,
            score: score.value,
            components_after: components,
        });
    };

    Ok(Dendrogram {
        base: g.clone(),
        removals,
        final_components: components,
        stop,
    })
}

/// Quantize a score so mathematical ties compare equal.
fn quantize(value: f64) -> i64 {
    (value * 1e9).round() as i64
}

/// Tie-break rank of an edge in the ranked list: (larger endpoint, smaller
/// endpoint), ascending.
fn rank(edge: (NodeId, NodeId)) -> (NodeId, NodeId) {
    (edge.1, edge.0)
}

/// Pick the extreme non-excluded edge; among quantized ties a remove-max
/// scorer takes the first edge in rank order, a remove-min scorer the last.
fn select(orientation: Orientation, scores: impl Iterator<Item = EdgeScore>) -> Option<EdgeScore> {
    let mut best: Option<(i64, EdgeScore)> = None;
    for s in scores {
        if s.excluded {
            continue;
        }
        let q = quantize(s.value);
        let better = match &best {
            None => true,
            Some((bq, bs)) => match orientation {
                Orientation::RemoveMax => q > *bq || (q == *bq && rank(s.edge) < rank(bs.edge)),
                Orientation::RemoveMin => q < *bq || (q == *bq && rank(s.edge) > rank(bs.edge)),
            },
        };
        if better {
            best = Some((q, s));
        }
    }
    best.map(|(_, s)| s)
}

/// Rescore the edges whose value can have changed: everything with an
/// endpoint within distance 2 of the removed edge's endpoints.
fn rescore_neighborhood(
    g: &Graph,
    scorer: &dyn EdgeScorer,
    cache: &mut HashMap<(NodeId, NodeId), EdgeScore>,
    u: NodeId,
    v: NodeId,
) {
    let mut affected: HashSet<NodeId> = HashSet::new();
    let mut queue = VecDeque::new();
    for seed in [u, v] {
        affected.insert(seed);
        queue.push_back((seed, 0u32));
    }
    while let Some((x, d)) = queue.pop_front() {
        if d == 2 {
            continue;
        }
        for &y in g.neighbors(x).unwrap() {
            if affected.insert(y) {
                queue.push_back((y, d + 1));
            }
        }
    }
    for &x in &affected {
        for &y in g.neighbors(x).unwrap() {
            let e = ordered(x, y);
            cache.insert(e, scorer.score_edge(g, e.0, e.1));
        }
    }
}

/// Partition after replaying removals until the component count first
/// reaches `k`. `k = 1` is the trivial partition before any split (on a
/// connected base graph).
pub fn partition_at_k(d: &Dendrogram, k: usize) -> Result<Partition> {
    let base_components = d.base.connected_components();
    if k < 1 || k > d.final_components {
        return Err(Error::KNotReached {
            requested: k,
            reached: d.final_components,
        });
    }
    if base_components.component_count >= k {
        if base_components.component_count > k {
            return Err(Error::KNotReached {
                requested: k,
                reached: d.final_components,
            });
        }
        return Ok(labeling_to_partition(base_components));
    }
    let mut current = d.base.clone();
    for removal in &d.removals {
        let (u, v) = removal.edge;
        current.remove_edge_in_place(u, v);
        if removal.components_after >= k {
            return Ok(labeling_to_partition(current.connected_components()));
        }
    }
    Err(Error::KNotReached {
        requested: k,
        reached: d.final_components,
    })
}

fn labeling_to_partition(l: crate::graph::ComponentLabeling) -> Partition {
    Partition {
        community: l.component_id,
        community_count: l.component_count,
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

    fn edge_labels(g: &Graph, e: (NodeId, NodeId)) -> (String, String) {
        (g.label(e.0).to_string(), g.label(e.1).to_string())
    }

    #[test]
    fn radicchi_splits_toy_at_the_bridge() {
        let g = toy();
        let cfg = RunConfig {
            metric: MetricId::Radicchi,
            target: Target::Communities(2),
            policy: RecomputePolicy::Full,
        };
        let d = run_divisive(&g, &cfg).unwrap();
        assert_eq!(d.removals.len(), 1);
        assert_eq!(edge_labels(&g, d.removals[0].edge), ("3".into(), "4".into()));
        assert!((d.removals[0].score - 1.0).abs() < 1e-12);
        assert_eq!(d.removals[0].components_after, 2);
        assert_eq!(d.stop, StopReason::TargetReached);
    }

    #[test]
    fn betweenness_splits_toy_at_the_bridge() {
        let g = toy();
        let cfg = RunConfig {
            metric: MetricId::Betweenness,
            target: Target::Communities(2),
            policy: RecomputePolicy::Full,
        };
        let d = run_divisive(&g, &cfg).unwrap();
        assert_eq!(edge_labels(&g, d.removals[0].edge), ("3".into(), "4".into()));
        assert!((d.removals[0].score - 6.0).abs() < 1e-12);
    }

    #[test]
    fn star_graph_deadlocks_under_radicchi() {
        let mut b = GraphBuilder::new();
        b.add_edge("c", "x");
        b.add_edge("c", "y");
        b.add_edge("c", "z");
        let g = b.finish();
        let cfg = RunConfig {
            metric: MetricId::Radicchi,
            target: Target::Communities(2),
            policy: RecomputePolicy::Full,
        };
        let d = run_divisive(&g, &cfg).unwrap();
        assert_eq!(d.stop, StopReason::Deadlock);
        assert!(d.removals.is_empty());
        assert_eq!(d.final_components, 1);
    }

    #[test]
    fn invalid_targets_are_rejected() {
        let g = toy();
        for k in [0, 1, 6] {
            let cfg = RunConfig {
                metric: MetricId::Jaccard,
                target: Target::Communities(k),
                policy: RecomputePolicy::Full,
            };
            assert!(matches!(run_divisive(&g, &cfg), Err(Error::InvalidConfig(_))));
        }
    }

    #[test]
    fn partition_replay_on_toy() {
        let g = toy();
        let cfg = RunConfig {
            metric: MetricId::Radicchi,
            target: Target::Communities(2),
            policy: RecomputePolicy::Full,
        };
        let d = run_divisive(&g, &cfg).unwrap();

        let p1 = partition_at_k(&d, 1).unwrap();
        assert_eq!(p1.community_count, 1);

        let p2 = partition_at_k(&d, 2).unwrap();
        assert_eq!(p2.community_count, 2);
        let by_label = |l: &str| p2.community[g.node_by_label(l).unwrap().index()];
        assert_eq!(by_label("1"), by_label("2"));
        assert_eq!(by_label("1"), by_label("3"));
        assert_eq!(by_label("4"), by_label("5"));
        assert_ne!(by_label("3"), by_label("4"));

        assert!(matches!(
            partition_at_k(&d, 3),
            Err(Error::KNotReached { requested: 3, .. })
        ));
    }

    #[test]
    fn same_score_everywhere_proceeds_by_tie_break() {
        // triangle-free square: every edge scores CN = 0
        let mut b = GraphBuilder::new();
        for (a, c) in [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")] {
            b.add_edge(a, c);
        }
        let g = b.finish();
        let cfg = RunConfig {
            metric: MetricId::CommonNeighbors,
            target: Target::Communities(2),
            policy: RecomputePolicy::Full,
        };
        let d = run_divisive(&g, &cfg).unwrap();
        // remove-min takes the last tied edge in rank order: (c, d)
        assert_eq!(edge_labels(&g, d.removals[0].edge), ("c".into(), "d".into()));
        assert_eq!(d.stop, StopReason::TargetReached);
    }

    #[test]
    fn remove_max_ties_take_the_first_ranked_edge() {
        // two disjoint edges: equal betweenness 1.0 everywhere
        let mut b = GraphBuilder::new();
        b.add_edge("a", "b");
        b.add_edge("c", "d");
        let g = b.finish();
        let cfg = RunConfig {
            metric: MetricId::Betweenness,
            target: Target::All,
            policy: RecomputePolicy::Full,
        };
        let d = run_divisive(&g, &cfg).unwrap();
        // rank orders by (larger endpoint, smaller endpoint): (a,b) first
        assert_eq!(edge_labels(&g, d.removals[0].edge), ("a".into(), "b".into()));
    }

    #[test]
    fn run_to_exhaustion_counts_every_node() {
        let g = toy();
        let cfg = RunConfig {
            metric: MetricId::Jaccard,
            target: Target::All,
            policy: RecomputePolicy::Full,
        };
        let d = run_divisive(&g, &cfg).unwrap();
        assert_eq!(d.stop, StopReason::EdgesExhausted);
        assert_eq!(d.removals.len(), 5);
        assert_eq!(d.final_components, 5);
    }

    #[test]
    fn monotone_component_counts() {
        let g = toy();
        let cfg = RunConfig {
            metric: MetricId::Salton,
            target: Target::All,
            policy: RecomputePolicy::Full,
        };
        let d = run_divisive(&g, &cfg).unwrap();
        let mut prev = 1;
        for r in &d.removals {
            assert!(r.components_after >= prev);
            assert!(r.components_after - prev <= 1);
            prev = r.components_after;
        }
    }
}
