//! Python bindings: the graph type, the twelve edge scorers, the divisive
//! engine and the evaluation metrics, exposed as module `commkit_py`.

use std::collections::HashMap;
use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use commkit_core as core;
use commkit_core::io;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn metric_id(name: &str) -> PyResult<core::MetricId> {
    core::MetricId::from_str(name).map_err(err)
}

fn node(graph: &core::Graph, label: &str) -> PyResult<core::NodeId> {
    graph
        .node_by_label(label)
        .ok_or_else(|| PyValueError::new_err(format!("node '{label}' does not exist")))
}

/// An immutable undirected simple graph.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    /// Parse a whitespace edge list (`a b` per line, `#` comments).
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        let (inner, _) = io::parse_edge_list(text.as_bytes()).map_err(err)?;
        Ok(PyGraph { inner })
    }

    /// Parse the `graph [ node [...] edge [...] ]` GML subset.
    #[staticmethod]
    fn from_gml(text: &str) -> PyResult<Self> {
        let (inner, _) = io::parse_gml(text.as_bytes()).map_err(err)?;
        Ok(PyGraph { inner })
    }

    /// Parse a Pajek `.net` file.
    #[staticmethod]
    fn from_pajek(text: &str) -> PyResult<Self> {
        let (inner, _) = io::parse_pajek(text.as_bytes()).map_err(err)?;
        Ok(PyGraph { inner })
    }

    /// Read a file, picking the format from its extension.
    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let bytes = std::fs::read(path)
            .map_err(|e| PyValueError::new_err(format!("cannot read {path}: {e}")))?;
        let format = io::Format::from_extension(path);
        let (inner, _) = io::parse_graph(&bytes, format).map_err(err)?;
        Ok(PyGraph { inner })
    }

    fn node_count(&self) -> usize {
        self.inner.node_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn nodes(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn edges(&self) -> Vec<(String, String)> {
        self.inner
            .edges()
            .map(|(u, v)| {
                (
                    self.inner.label(u).to_string(),
                    self.inner.label(v).to_string(),
                )
            })
            .collect()
    }

    fn degree(&self, label: &str) -> PyResult<usize> {
        self.inner.degree(node(&self.inner, label)?).map_err(err)
    }

    fn neighbors(&self, label: &str) -> PyResult<Vec<String>> {
        let ids = self.inner.neighbors(node(&self.inner, label)?).map_err(err)?;
        Ok(ids.iter().map(|&v| self.inner.label(v).to_string()).collect())
    }

    fn common_neighborhood(&self, a: &str, b: &str) -> PyResult<Vec<String>> {
        let ids = self
            .inner
            .common_neighborhood(node(&self.inner, a)?, node(&self.inner, b)?)
            .map_err(err)?;
        Ok(ids.iter().map(|&v| self.inner.label(v).to_string()).collect())
    }

    /// Descriptive statistics as a dict.
    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = core::graph_stats(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("nodes", s.node_count)?;
        d.set_item("edges", s.edge_count)?;
        d.set_item("degree_avg", s.degree_avg)?;
        d.set_item("clustering_avg", s.clustering_coef_avg)?;
        d.set_item("avg_path_length", s.avg_path_length)?;
        d.set_item("closeness_avg", s.closeness_avg)?;
        d.set_item("eigenvector_avg", s.eigenvector_avg)?;
        d.set_item("betweenness_avg", s.betweenness_avg)?;
        d.set_item("connected", s.connected)?;
        Ok(d)
    }

    /// Betweenness of every edge as `[((u, v), value), ...]`.
    fn edge_betweenness(&self) -> Vec<((String, String), f64)> {
        core::edge_betweenness(&self.inner)
            .into_iter()
            .map(|s| {
                (
                    (
                        self.inner.label(s.edge.0).to_string(),
                        self.inner.label(s.edge.1).to_string(),
                    ),
                    s.value,
                )
            })
            .collect()
    }

    /// One of the ten similarity indices on any node pair.
    fn score(&self, metric: &str, a: &str, b: &str) -> PyResult<f64> {
        core::score_pair(
            &self.inner,
            metric_id(metric)?,
            node(&self.inner, a)?,
            node(&self.inner, b)?,
        )
        .map_err(err)
    }

    /// Radicchi edge-clustering coefficient; None when the edge is excluded
    /// (pendant endpoint).
    fn radicchi(&self, a: &str, b: &str) -> PyResult<Option<f64>> {
        let s = core::radicchi_coefficient(&self.inner, node(&self.inner, a)?, node(&self.inner, b)?)
            .map_err(err)?;
        Ok(if s.excluded { None } else { Some(s.value) })
    }

    fn node_clustering(&self, label: &str) -> PyResult<f64> {
        core::node_clustering(&self.inner, node(&self.inner, label)?).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(nodes={}, edges={})",
            self.inner.node_count(),
            self.inner.edge_count()
        )
    }
}

/// Node-to-community assignment over one graph's label set.
#[pyclass(name = "Partition", frozen)]
struct PyPartition {
    inner: core::Partition,
    labels: Vec<String>,
}

#[pymethods]
impl PyPartition {
    #[getter]
    fn community_count(&self) -> usize {
        self.inner.community_count
    }

    /// `{node_label: community_id}`.
    fn membership(&self) -> HashMap<String, u32> {
        self.labels
            .iter()
            .cloned()
            .zip(self.inner.community.iter().copied())
            .collect()
    }

    /// Members of each community, in community id order.
    fn communities(&self) -> Vec<Vec<String>> {
        self.inner
            .groups()
            .into_iter()
            .map(|group| group.into_iter().map(|i| self.labels[i].clone()).collect())
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Partition(nodes={}, communities={})",
            self.inner.community.len(),
            self.inner.community_count
        )
    }
}

/// Removal log of one divisive run.
#[pyclass(name = "Dendrogram", frozen)]
struct PyDendrogram {
    inner: core::Dendrogram,
    labels: Vec<String>,
}

#[pymethods]
impl PyDendrogram {
    #[getter]
    fn final_components(&self) -> usize {
        self.inner.final_components
    }

    #[getter]
    fn stop_reason(&self) -> &'static str {
        match self.inner.stop {
            core::StopReason::TargetReached => "target_reached",
            core::StopReason::EdgesExhausted => "edges_exhausted",
            core::StopReason::Deadlock => "deadlock",
        }
    }

    /// Removal records as dicts with step, edge, score, components_after.
    fn removals<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        self.inner
            .removals
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let d = PyDict::new(py);
                d.set_item("step", i + 1)?;
                d.set_item(
                    "edge",
                    (
                        self.labels[r.edge.0.index()].clone(),
                        self.labels[r.edge.1.index()].clone(),
                    ),
                )?;
                d.set_item("score", r.score)?;
                d.set_item("components_after", r.components_after)?;
                Ok(d)
            })
            .collect()
    }

    /// Partition after the component count first reaches k.
    fn partition_at(&self, k: usize) -> PyResult<PyPartition> {
        let inner = core::partition_at_k(&self.inner, k).map_err(err)?;
        Ok(PyPartition {
            inner,
            labels: self.labels.clone(),
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Dendrogram(removals={}, final_components={}, stop={})",
            self.inner.removals.len(),
            self.inner.final_components,
            self.stop_reason()
        )
    }
}

/// Run the divisive engine: score, remove the extreme edge, repeat.
/// `k=None` runs until no removable edge remains.
#[pyfunction]
#[pyo3(signature = (graph, metric, k=None, policy="full"))]
fn detect(graph: &PyGraph, metric: &str, k: Option<usize>, policy: &str) -> PyResult<PyDendrogram> {
    let policy = match policy {
        "full" => core::RecomputePolicy::Full,
        "neighborhood" => core::RecomputePolicy::Neighborhood,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown policy '{other}' (expected 'full' or 'neighborhood')"
            )))
        }
    };
    let cfg = core::RunConfig {
        metric: metric_id(metric)?,
        target: match k {
            Some(k) => core::Target::Communities(k),
            None => core::Target::All,
        },
        policy,
    };
    let inner = core::run_divisive(&graph.inner, &cfg).map_err(err)?;
    Ok(PyDendrogram {
        inner,
        labels: graph.inner.labels().to_vec(),
    })
}

#[pyfunction]
fn modularity(graph: &PyGraph, partition: &PyPartition) -> PyResult<f64> {
    core::modularity(&graph.inner, &partition.inner).map_err(err)
}

#[pyfunction]
fn entropy(partition: &PyPartition) -> f64 {
    core::entropy(&partition.inner)
}

#[pyfunction]
fn mutual_information(x: &PyPartition, y: &PyPartition) -> PyResult<f64> {
    core::mutual_information(&x.inner, &y.inner).map_err(err)
}

#[pyfunction]
fn nmi(x: &PyPartition, y: &PyPartition) -> PyResult<f64> {
    core::nmi(&x.inner, &y.inner).map_err(err)
}

/// Modularity over k = 2..k_max as `[(k, q), ...]`.
#[pyfunction]
#[pyo3(signature = (graph, metric, k_max=10))]
fn sweep(graph: &PyGraph, metric: &str, k_max: usize) -> PyResult<Vec<(usize, f64)>> {
    let cfg = core::RunConfig {
        metric: metric_id(metric)?,
        target: core::Target::Communities(k_max.min(graph.inner.node_count())),
        policy: core::RecomputePolicy::Full,
    };
    let d = core::run_divisive(&graph.inner, &cfg).map_err(err)?;
    Ok(core::modularity_sweep(&graph.inner, &d, k_max).points)
}

/// Sliding-window elbow pick over a `[(k, q), ...]` curve.
#[pyfunction]
fn elbow(points: Vec<(usize, f64)>, w: usize) -> PyResult<(usize, f64)> {
    core::elbow_select(&core::ModularityCurve { points }, w).map_err(err)
}

/// The twelve metric codes, detection order first.
#[pyfunction]
fn metrics() -> Vec<&'static str> {
    core::MetricId::ALL.iter().map(|m| m.code()).collect()
}

#[pymodule]
fn commkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyPartition>()?;
    m.add_class::<PyDendrogram>()?;
    m.add_function(wrap_pyfunction!(detect, m)?)?;
    m.add_function(wrap_pyfunction!(modularity, m)?)?;
    m.add_function(wrap_pyfunction!(entropy, m)?)?;
    m.add_function(wrap_pyfunction!(mutual_information, m)?)?;
    m.add_function(wrap_pyfunction!(nmi, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(elbow, m)?)?;
    m.add_function(wrap_pyfunction!(metrics, m)?)?;
    Ok(())
}
