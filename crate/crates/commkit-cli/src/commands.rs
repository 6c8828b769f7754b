//! The stats / detect / sweep / compare subcommands.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use commkit_core::io::{self, Format, ParseDiagnostics};
use commkit_core::{
    elbow_select, graph_stats, modularity, modularity_sweep, nmi, partition_at_k, run_divisive,
    Dendrogram, Graph, MetricId, ModularityCurve, Partition, RecomputePolicy, RunConfig,
    StopReason, Target,
};
use sha2::{Digest, Sha256};

pub fn load_graph(path: &Path, format: &str) -> Result<(Graph, ParseDiagnostics)> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let format = resolve_format(path, format)?;
    let parsed = io::parse_graph(&bytes, format)
        .with_context(|| format!("cannot parse {}", path.display()))?;
    report_diagnostics(path, &parsed.1);
    Ok(parsed)
}

fn resolve_format(path: &Path, format: &str) -> Result<Format> {
    if format == "auto" {
        Ok(Format::from_extension(&path.to_string_lossy()))
    } else {
        format.parse().map_err(|e| anyhow!("{e}"))
    }
}

fn report_diagnostics(path: &Path, d: &ParseDiagnostics) {
    let name = path.display();
    if d.dropped_self_loops > 0 {
        eprintln!("warning: {name}: dropped {} self-loop(s)", d.dropped_self_loops);
    }
    if d.dropped_duplicate_edges > 0 {
        eprintln!(
            "warning: {name}: dropped {} duplicate edge(s)",
            d.dropped_duplicate_edges
        );
    }
    if d.discarded_weights > 0 {
        eprintln!(
            "warning: {name}: discarded {} edge weight(s)",
            d.discarded_weights
        );
    }
    if d.symmetrized_arcs > 0 {
        eprintln!(
            "warning: {name}: symmetrized {} directed arc(s)",
            d.symmetrized_arcs
        );
    }
}

pub fn file_sha256(path: &Path) -> Result<String> {
    let bytes = fs::read(path)?;
    Ok(format!("{:x}", Sha256::digest(&bytes)))
}

pub fn stats(input: &Path, format: &str, csv: Option<&Path>) -> Result<ExitCode> {
    let (graph, _) = load_graph(input, format)?;
    let s = graph_stats(&graph)?;
    let rows: [(&str, String); 9] = [
        ("nodes", s.node_count.to_string()),
        ("edges", s.edge_count.to_string()),
        ("degree avg", format!("{:.3}", s.degree_avg)),
        ("eigenvector centrality avg", format!("{:.3}", s.eigenvector_avg)),
        ("closeness centrality avg", format!("{:.3}", s.closeness_avg)),
        ("clustering coefficient avg", format!("{:.3}", s.clustering_coef_avg)),
        ("betweenness centrality avg", format!("{:.3}", s.betweenness_avg)),
        ("avg path length", format!("{:.3}", s.avg_path_length)),
        ("connected", s.connected.to_string()),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap();
    for (key, value) in &rows {
        println!("{key:<width$}  {value}");
    }
    if let Some(path) = csv {
        let csv_text = format!(
            "nodes,edges,degree_avg,eigenvector_avg,closeness_avg,clustering_avg,betweenness_avg,avg_path_length,connected\n{},{},{},{},{},{},{},{},{}\n",
            s.node_count, s.edge_count, s.degree_avg, s.eigenvector_avg, s.closeness_avg,
            s.clustering_coef_avg, s.betweenness_avg, s.avg_path_length, s.connected,
        );
        fs::write(path, csv_text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

pub struct Detection {
    pub dendrogram: Dendrogram,
    pub partition: Partition,
    pub reached_target: bool,
}

pub fn run_detection(graph: &Graph, metric: MetricId, k: Option<usize>, policy: RecomputePolicy) -> Result<Detection> {
    let target = match k {
        Some(k) => Target::Communities(k),
        None => Target::All,
    };
    let cfg = RunConfig {
        metric,
        target,
        policy,
    };
    let dendrogram = run_divisive(graph, &cfg)?;
    let achieved = match k {
        Some(k) if dendrogram.final_components >= k => k,
        _ => dendrogram.final_components.max(1),
    };
    let partition = partition_at_k(&dendrogram, achieved)?;
    let reached_target = match k {
        Some(k) => dendrogram.final_components >= k,
        None => true,
    };
    Ok(Detection {
        dendrogram,
        partition,
        reached_target,
    })
}

#[allow(clippy::too_many_arguments)]
pub fn detect(
    input: &Path,
    metric: &str,
    k: Option<usize>,
    all: bool,
    policy: &str,
    out_partition: Option<&Path>,
    out_dendrogram: Option<&Path>,
    format: &str,
) -> Result<ExitCode> {
    let metric: MetricId = metric.parse()?;
    let policy = parse_policy(policy)?;
    if k.is_none() && !all {
        bail!("either --k <n> or --all is required");
    }
    let (graph, _) = load_graph(input, format)?;
    let detection = run_detection(&graph, metric, k.filter(|_| !all), policy)?;

    if let Some(path) = out_partition {
        fs::write(path, io::write_partition(&detection.partition, graph.labels()))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    if let Some(path) = out_dendrogram {
        fs::write(path, io::write_dendrogram(&detection.dendrogram, graph.labels()))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }

    let q = modularity(&graph, &detection.partition)?;
    println!("k={} Q={:.6}", detection.partition.community_count, q);

    if detection.dendrogram.stop == StopReason::Deadlock {
        eprintln!("stopped early: deadlock, only excluded (pendant) edges remain");
        return Ok(ExitCode::from(3));
    }
    if !detection.reached_target {
        eprintln!("stopped early: edges exhausted before the target was reached");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_policy(policy: &str) -> Result<RecomputePolicy> {
    match policy.to_ascii_lowercase().as_str() {
        "full" => Ok(RecomputePolicy::Full),
        "neighborhood" => Ok(RecomputePolicy::Neighborhood),
        other => bail!("unknown policy '{other}' (expected full or neighborhood)"),
    }
}

pub fn sweep_curve(graph: &Graph, metric: MetricId, k_max: usize) -> Result<(ModularityCurve, Dendrogram)> {
    if k_max < 2 {
        bail!("--k-max must be at least 2");
    }
    let cfg = RunConfig {
        metric,
        target: Target::Communities(k_max.min(graph.node_count())),
        policy: RecomputePolicy::Full,
    };
    let dendrogram = run_divisive(graph, &cfg)?;
    let curve = modularity_sweep(graph, &dendrogram, k_max);
    Ok((curve, dendrogram))
}

pub fn sweep(
    input: &Path,
    metric: &str,
    k_max: usize,
    out: Option<&Path>,
    format: &str,
) -> Result<ExitCode> {
    let metric: MetricId = metric.parse()?;
    let (graph, _) = load_graph(input, format)?;
    let (curve, dendrogram) = sweep_curve(&graph, metric, k_max)?;

    let mut text = io::write_curve_csv(&curve);
    for w in [2usize, 3, 5] {
        match elbow_select(&curve, w) {
            Ok((k, q)) => text.push_str(&format!("# elbow w={w}: k={k} modularity={q}\n")),
            Err(_) => text.push_str(&format!("# elbow w={w}: curve too short\n")),
        }
    }
    let deadlocked = dendrogram.stop == StopReason::Deadlock;
    if deadlocked {
        text.push_str("# stopped early: deadlock (only excluded edges remained)\n");
    }
    match out {
        Some(path) => fs::write(path, &text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    if deadlocked && dendrogram.final_components < k_max {
        eprintln!("stopped early: deadlock, curve truncated at k={}", dendrogram.final_components);
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn compare(
    input: &Path,
    metrics: &str,
    k: usize,
    reference: &str,
    out: Option<&Path>,
    format: &str,
) -> Result<ExitCode> {
    let (graph, _) = load_graph(input, format)?;
    let mut metric_ids: Vec<MetricId> = metrics
        .split(',')
        .map(|m| m.trim().parse::<MetricId>().map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;
    metric_ids.sort_by_key(|m| m.code());
    metric_ids.dedup();

    let reference_partition = resolve_reference(&graph, reference, k)?;

    let mut csv_text = String::from("metric,k,modularity,nmi_vs_reference\n");
    let mut early_stop = false;
    for metric in metric_ids {
        let detection = run_detection(&graph, metric, Some(k), RecomputePolicy::Full)?;
        if !detection.reached_target {
            eprintln!(
                "warning: {metric} stopped at {} communities before reaching k={k}",
                detection.dendrogram.final_components
            );
            early_stop = true;
            continue;
        }
        let q = modularity(&graph, &detection.partition)?;
        let score = nmi(&detection.partition, &reference_partition)?;
        csv_text.push_str(&format!("{},{},{},{}\n", metric.code(), k, q, score));
    }

    match out {
        Some(path) => {
            fs::write(path, &csv_text)
                .with_context(|| format!("cannot write {}", path.display()))?;
            let provenance = serde_json::json!({
                "input_sha256": file_sha256(input)?,
                "config": format!("compare --metrics {metrics} --k {k} --reference {reference}"),
                "version": env!("CARGO_PKG_VERSION"),
            });
            let mut sidecar = path.as_os_str().to_owned();
            sidecar.push(".provenance.json");
            fs::write(Path::new(&sidecar), format!("{provenance:#}\n"))?;
        }
        None => print!("{csv_text}"),
    }
    Ok(if early_stop { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

/// A reference is either `run:<metric>` (same input, same k) or a partition
/// CSV path with `node,community` rows covering the same node set.
fn resolve_reference(graph: &Graph, reference: &str, k: usize) -> Result<Partition> {
    if let Some(metric) = reference.strip_prefix("run:") {
        let metric: MetricId = metric.trim().parse()?;
        let detection = run_detection(graph, metric, Some(k), RecomputePolicy::Full)?;
        if !detection.reached_target {
            bail!("reference run {metric} never reached k={k}");
        }
        return Ok(detection.partition);
    }
    let text = fs::read_to_string(reference)
        .with_context(|| format!("cannot read reference partition {reference}"))?;
    parse_partition_csv(&text, graph)
}

pub fn parse_partition_csv(text: &str, graph: &Graph) -> Result<Partition> {
    let mut assignment: Vec<Option<u32>> = vec![None; graph.node_count()];
    let mut seen_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !seen_header {
            if line != "node,community" {
                bail!("reference partition line 1 must be 'node,community'");
            }
            seen_header = true;
            continue;
        }
        let (label, community) = line
            .rsplit_once(',')
            .ok_or_else(|| anyhow!("line {}: expected 'node,community'", i + 1))?;
        let label = label.trim_matches('"').replace("\"\"", "\"");
        let community: u32 = community
            .trim()
            .parse()
            .map_err(|_| anyhow!("line {}: bad community id", i + 1))?;
        let node = graph
            .node_by_label(&label)
            .ok_or_else(|| anyhow!("reference names unknown node '{label}'"))?;
        assignment[node.index()] = Some(community);
    }
    let community: Vec<u32> = assignment
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| anyhow!("reference misses node '{}'", graph.labels()[i])))
        .collect::<Result<_>>()?;
    // normalize to dense ids ordered by smallest member
    let mut remap: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
    let mut normalized = Vec::with_capacity(community.len());
    for c in community {
        let next = remap.len() as u32;
        normalized.push(*remap.entry(c).or_insert(next));
    }
    Ok(Partition {
        community: normalized,
        community_count: remap.len(),
    })
}
