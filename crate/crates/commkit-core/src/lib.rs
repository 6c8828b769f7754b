//! Divisive community detection on undirected graphs.
//!
//! The toolkit centers on one loop: score every remaining edge, remove the
//! extreme one, watch the component structure split. Twelve interchangeable
//! scorers drive it — shortest-path edge betweenness (remove the max), the
//! Radicchi edge-clustering coefficient and ten local link-prediction
//! similarity indices (remove the min). Partitions extracted from the
//! removal log are evaluated with modularity and normalized mutual
//! information.
//!
//! Modules:
//! - [`graph`]: immutable simple graph with dense ids and a label table
//! - [`io`]: edge-list / GML / Pajek parsers and output writers
//! - [`metrics`]: the twelve edge scorers plus graph statistics
//! - [`divisive`]: the removal engine and dendrogram replay
//! - [`evaluation`]: modularity, entropy, NMI, sweeps and elbow selection

pub mod divisive;
pub mod error;
pub mod evaluation;
pub mod graph;
pub mod io;
pub mod metrics;

pub use divisive::{
    partition_at_k, run_divisive, run_divisive_with, Dendrogram, EdgeScorer, Partition,
    RecomputePolicy, Removal, RunConfig, StopReason, Target,
};
pub use error::{Error, Result};
pub use evaluation::{
    elbow_select, entropy, modularity, modularity_sweep, mutual_information, nmi,
    ContingencyTable, ModularityCurve,
};
pub use graph::{ComponentLabeling, Graph, GraphBuilder, NodeId};
pub use metrics::{
    edge_betweenness, graph_stats, node_clustering, radicchi_coefficient, score_edges, score_pair,
    EdgeScore, GraphStats, MetricId, Orientation,
};
