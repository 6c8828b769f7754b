//! Immutable undirected simple graph with the neighborhood, degree,
//! component and triangle queries the scorers are built on.
//!
//! Node labels from input files are interned to dense ids in first-seen
//! order; the label table round-trips every output format. Self-loops and
//! duplicate edges are dropped at construction (the builder counts them so
//! parsers can report diagnostics).

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Dense node identifier, assigned in first-seen order during ingestion.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn new(index: usize) -> Self {
        NodeId(index as u32)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Normalize an edge to (low, high) endpoint order.
pub fn ordered(u: NodeId, v: NodeId) -> (NodeId, NodeId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable undirected simple graph.
///
/// Adjacency lists are sorted, symmetric and free of self-loops and
/// parallel edges. All mutation happens by constructing a derived graph
/// (see [`Graph::without_edge`]); the label table is shared between
/// derived graphs.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Arc<Vec<String>>,
    label_index: Arc<HashMap<String, NodeId>>,
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.adjacency.len()).map(NodeId::new)
    }

    /// Edges in canonical order: (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = NodeId::new(u);
            nbrs.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn contains(&self, u: NodeId) -> bool {
        u.index() < self.adjacency.len()
    }

    fn check_node(&self, u: NodeId) -> Result<()> {
        if self.contains(u) {
            Ok(())
        } else {
            Err(Error::NodeNotFound(u.to_string()))
        }
    }

    pub fn degree(&self, u: NodeId) -> Result<usize> {
        self.check_node(u)?;
        Ok(self.adjacency[u.index()].len())
    }

    /// Sorted neighbor list Γ(u).
    pub fn neighbors(&self, u: NodeId) -> Result<&[NodeId]> {
        self.check_node(u)?;
        Ok(&self.adjacency[u.index()])
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.contains(u)
            && self.contains(v)
            && self.adjacency[u.index()].binary_search(&v).is_ok()
    }

    /// Γ(u) ∩ Γ(v), sorted. Neither endpoint can be a member because the
    /// graph has no self-loops.
    pub fn common_neighborhood(&self, u: NodeId, v: NodeId) -> Result<Vec<NodeId>> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(Error::InvalidPair(self.label(u).to_string()));
        }
        let (a, b) = (&self.adjacency[u.index()], &self.adjacency[v.index()]);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(out)
    }

    /// Number of triangles the edge (u, v) participates in.
    pub fn triangles_on_edge(&self, u: NodeId, v: NodeId) -> Result<usize> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotFound(
                self.label_or_id(u),
                self.label_or_id(v),
            ));
        }
        Ok(self.common_neighborhood(u, v)?.len())
    }

    /// BFS hop distances from `source`; `None` marks unreachable nodes.
    pub fn shortest_path_lengths(&self, source: NodeId) -> Result<Vec<Option<u32>>> {
        self.check_node(source)?;
        let mut dist = vec![None; self.adjacency.len()];
        dist[source.index()] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u.index()].unwrap();
            for &v in &self.adjacency[u.index()] {
                if dist[v.index()].is_none() {
                    dist[v.index()] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Deterministic component labeling: the component containing the
    /// smallest node id gets id 0, the next unseen component id 1, and so on.
    pub fn connected_components(&self) -> ComponentLabeling {
        let n = self.adjacency.len();
        let mut component_id = vec![u32::MAX; n];
        let mut count = 0u32;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if component_id[start] != u32::MAX {
                continue;
            }
            component_id[start] = count;
            queue.push_back(NodeId::new(start));
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u.index()] {
                    if component_id[v.index()] == u32::MAX {
                        component_id[v.index()] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        ComponentLabeling {
            component_id,
            component_count: count as usize,
        }
    }

    /// A copy of this graph with one edge removed. The label table is shared.
    pub fn without_edge(&self, u: NodeId, v: NodeId) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotFound(
                self.label_or_id(u),
                self.label_or_id(v),
            ));
        }
        let mut g = self.clone();
        g.remove_edge_in_place(u, v);
        Ok(g)
    }

    pub(crate) fn remove_edge_in_place(&mut self, u: NodeId, v: NodeId) {
        let au = &mut self.adjacency[u.index()];
        if let Ok(i) = au.binary_search(&v) {
            au.remove(i);
        }
        let av = &mut self.adjacency[v.index()];
        if let Ok(i) = av.binary_search(&u) {
            av.remove(i);
        }
        self.edge_count -= 1;
    }

    pub fn label(&self, u: NodeId) -> &str {
        &self.labels[u.index()]
    }

    fn label_or_id(&self, u: NodeId) -> String {
        if self.contains(u) {
            self.label(u).to_string()
        } else {
            u.to_string()
        }
    }

    pub fn node_by_label(&self, label: &str) -> Option<NodeId> {
        self.label_index.get(label).copied()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// Component assignment produced by [`Graph::connected_components`].
///
/// Two nodes share a `component_id` iff a path connects them; ids are dense
/// and ordered by each component's smallest member node id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub component_id: Vec<u32>,
    pub component_count: usize,
}

/// Accumulates labeled edges, collapsing duplicates and self-loops.
#[derive(Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    label_index: HashMap<String, NodeId>,
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
    dropped_self_loops: usize,
    dropped_duplicate_edges: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Intern a label, returning its dense id (first-seen order).
    pub fn node(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.label_index.get(label) {
            return id;
        }
        let id = NodeId::new(self.labels.len());
        self.labels.push(label.to_string());
        self.label_index.insert(label.to_string(), id);
        self.adjacency.push(Vec::new());
        id
    }

    pub fn add_edge(&mut self, a: &str, b: &str) {
        let u = self.node(a);
        let v = self.node(b);
        self.add_edge_ids(u, v);
    }

    pub fn add_edge_ids(&mut self, u: NodeId, v: NodeId) {
        if u == v {
            self.dropped_self_loops += 1;
            return;
        }
        if self.adjacency[u.index()].binary_search(&v).is_ok() {
            self.dropped_duplicate_edges += 1;
            return;
        }
        let au = &mut self.adjacency[u.index()];
        let pos = au.binary_search(&v).unwrap_err();
        au.insert(pos, v);
        let av = &mut self.adjacency[v.index()];
        let pos = av.binary_search(&u).unwrap_err();
        av.insert(pos, u);
        self.edge_count += 1;
    }

    pub fn dropped_self_loops(&self) -> usize {
        self.dropped_self_loops
    }

    pub fn dropped_duplicate_edges(&self) -> usize {
        self.dropped_duplicate_edges
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn finish(self) -> Graph {
        Graph {
            labels: Arc::new(self.labels),
            label_index: Arc::new(self.label_index),
            adjacency: self.adjacency,
            edge_count: self.edge_count,
        }
    }
}
