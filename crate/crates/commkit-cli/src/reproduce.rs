//! `commkit reproduce`: regenerate the benchmark tables over the six
//! networks, write them (plus per-metric modularity curves) as CSV, and
//! check every reproducible cell against the embedded reference values.
//!
//! Hard cells gate the exit code; soft cells are informational — either
//! their reference convention is unrecoverable (centrality normalizations,
//! elbow formula) or the reference value is dominated by unspecified
//! tie-breaking in the original tooling. See README for the full analysis.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use commkit_core::io::write_curve_csv;
use commkit_core::{
    elbow_select, graph_stats, nmi, partition_at_k, Graph, MetricId, ModularityCurve, Partition,
};

use crate::commands::{file_sha256, load_graph, sweep_curve};
use crate::datasets::{dataset, expected, DatasetSpec, DATASETS, KARATE_FACTIONS};

const K_MAX: usize = 10;

pub fn run(dataset_dir: Option<&Path>, out: &Path, networks: Option<&str>) -> Result<ExitCode> {
    let dir = dataset_dir
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("datasets"));

    let requested: Vec<&str> = match networks {
        Some(list) => {
            let mut names: Vec<&str> = list.split(',').map(str::trim).collect();
            names.sort_unstable();
            names.dedup();
            for name in &names {
                if dataset(name).is_none() {
                    bail!("unknown network '{name}'");
                }
            }
            names
        }
        None => DATASETS.iter().map(|d| d.name).collect(),
    };

    let missing: Vec<&DatasetSpec> = requested
        .iter()
        .map(|name| dataset(name).unwrap())
        .filter(|spec| !dir.join(spec.file).exists())
        .collect();
    if !missing.is_empty() {
        let listing: Vec<String> = missing
            .iter()
            .map(|spec| format!("{} ({})", spec.file, spec.source))
            .collect();
        bail!(
            "missing benchmark files in {}: {} (supply them or restrict --networks)",
            dir.display(),
            listing.join("; ")
        );
    }

    fs::create_dir_all(out.join("figure1_data"))
        .with_context(|| format!("cannot create {}", out.display()))?;

    let mut checks = Checks::default();
    let mut table1 = String::from(
        "network,nodes,edges,degree_avg,eigenvector_avg,closeness_avg,clustering_avg,betweenness_avg,avg_path_length\n",
    );
    let mut table2 = table_header();
    let mut table3 = table_header();
    let mut table4 = String::from(
        "network,gn_max_k,rad_max_k,gn_elbow2_k,rad_elbow2_k,gn_elbow3_k,rad_elbow3_k,gn_elbow5_k,rad_elbow5_k\n",
    );
    let mut table5 = String::from(
        "metric,max_k,max_q,elbow2_k,elbow2_q,elbow3_k,elbow3_q,elbow5_k,elbow5_q\n",
    );
    let mut table6 = String::from("metric,k,nmi_vs_gn,nmi_vs_factions\n");
    let mut provenance_inputs = BTreeMap::new();

    for name in &requested {
        let spec = dataset(name).unwrap();
        let path = dir.join(spec.file);
        let checksum = file_sha256(&path)?;
        if let Some(pinned) = spec.sha256 {
            if checksum != pinned {
                eprintln!(
                    "warning: {}: checksum differs from the bundled canonical copy; \
                     structural checks still apply",
                    spec.file
                );
            }
        }
        provenance_inputs.insert(spec.name.to_string(), checksum);

        let (graph, _) = load_graph(&path, "auto")?;
        if graph.node_count() != spec.nodes || graph.edge_count() != spec.edges {
            eprintln!(
                "warning: {}: parsed {} nodes / {} edges, manifest says {} / {}",
                spec.file,
                graph.node_count(),
                graph.edge_count(),
                spec.nodes,
                spec.edges
            );
        }
        check_table1(&mut checks, &mut table1, spec.name, &graph)?;

        // every metric: curve for the figure export
        let mut curves: BTreeMap<&'static str, ModularityCurve> = BTreeMap::new();
        for metric in MetricId::ALL {
            let (curve, _) = sweep_curve(&graph, metric, K_MAX)?;
            fs::write(
                out.join("figure1_data")
                    .join(format!("{}_{}.csv", spec.name, metric.code())),
                write_curve_csv(&curve),
            )?;
            curves.insert(metric.code(), curve);
        }

        let gn = summarize(&curves["betweenness"]);
        let rad = summarize(&curves["radicchi"]);
        table2.push_str(&table_row(spec.name, &gn));
        table3.push_str(&table_row(spec.name, &rad));
        table4.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            spec.name,
            gn.max.0, rad.max.0,
            gn.elbows[0].0, rad.elbows[0].0,
            gn.elbows[1].0, rad.elbows[1].0,
            gn.elbows[2].0, rad.elbows[2].0,
        ));

        check_table2(&mut checks, spec.name, &gn);
        check_table3(&mut checks, spec.name, &rad);

        if spec.name == "karate" {
            karate_tables(&mut checks, &mut table5, &mut table6, &graph, &curves)?;
        }
    }

    fs::write(out.join("table1.csv"), table1)?;
    fs::write(out.join("table2.csv"), table2)?;
    fs::write(out.join("table3.csv"), table3)?;
    fs::write(out.join("table4.csv"), table4)?;
    if requested.contains(&"karate") {
        fs::write(out.join("table5.csv"), table5)?;
        fs::write(out.join("table6.csv"), table6)?;
    }
    let provenance = serde_json::json!({
        "inputs_sha256": provenance_inputs,
        "config": format!("reproduce --networks {}", requested.join(",")),
        "version": env!("CARGO_PKG_VERSION"),
        "tolerances": {
            "modularity": expected::MOD_TOLERANCE,
            "nmi": expected::NMI_TOLERANCE,
            "statistics": expected::STAT_TOLERANCE,
        },
    });
    fs::write(out.join("provenance.json"), format!("{provenance:#}\n"))?;

    println!(
        "reproduce: {} hard cells checked, {} passed, {} failed; {} soft cells reported",
        checks.hard_total, checks.hard_passed, checks.hard_total - checks.hard_passed,
        checks.soft_total,
    );
    Ok(if checks.hard_passed == checks.hard_total {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Default)]
struct Checks {
    hard_total: usize,
    hard_passed: usize,
    soft_total: usize,
}

impl Checks {
    fn hard(&mut self, cell: &str, got: f64, want: f64, tolerance: f64) {
        self.hard_where(cell, got, (got - want).abs() <= tolerance, want, tolerance);
    }

    fn hard_where(&mut self, cell: &str, got: f64, pass: bool, want: f64, tolerance: f64) {
        self.hard_total += 1;
        if pass {
            self.hard_passed += 1;
            println!("[PASS] {cell}: got {got:.4} (reference {want:.3} ±{tolerance})");
        } else {
            println!("[FAIL] {cell}: got {got:.4}, reference {want:.3} ±{tolerance}");
        }
    }

    fn hard_exact(&mut self, cell: &str, got: usize, want: usize) {
        self.hard_total += 1;
        if got == want {
            self.hard_passed += 1;
            println!("[PASS] {cell}: got {got} (reference {want})");
        } else {
            println!("[FAIL] {cell}: got {got}, reference {want}");
        }
    }

    fn soft(&mut self, cell: &str, got: f64, reference: f64) {
        self.soft_total += 1;
        println!("[SOFT] {cell}: got {got:.4}, reference {reference:.3} (informational)");
    }
}

fn check_table1(checks: &mut Checks, table1: &mut String, name: &str, graph: &Graph) -> Result<()> {
    let s = graph_stats(graph)?;
    table1.push_str(&format!(
        "{},{},{},{},{},{},{},{},{}\n",
        name,
        s.node_count,
        s.edge_count,
        s.degree_avg,
        s.eigenvector_avg,
        s.closeness_avg,
        s.clustering_coef_avg,
        s.betweenness_avg,
        s.avg_path_length,
    ));
    let row = expected::TABLE1_HARD.iter().find(|r| r.0 == name).unwrap();
    checks.hard_exact(&format!("table1/{name} nodes"), s.node_count, row.1);
    checks.hard_exact(&format!("table1/{name} edges"), s.edge_count, row.2);
    let rounded = (s.degree_avg * 1000.0).round() / 1000.0;
    checks.hard_where(
        &format!("table1/{name} degree_avg"),
        s.degree_avg,
        (rounded - row.3).abs() < 5e-4,
        row.3,
        0.0005,
    );
    checks.hard(
        &format!("table1/{name} clustering_avg"),
        s.clustering_coef_avg,
        row.4,
        expected::STAT_TOLERANCE,
    );
    checks.hard(
        &format!("table1/{name} avg_path_length"),
        s.avg_path_length,
        row.5,
        expected::STAT_TOLERANCE,
    );
    let soft = expected::TABLE1_SOFT.iter().find(|r| r.0 == name).unwrap();
    checks.soft(&format!("table1/{name} eigenvector_avg"), s.eigenvector_avg, soft.1);
    checks.soft(&format!("table1/{name} closeness_avg"), s.closeness_avg, soft.2);
    checks.soft(&format!("table1/{name} betweenness_avg"), s.betweenness_avg, soft.3);
    Ok(())
}

/// Max-modularity point plus elbow picks for one curve; k = 1 (one
/// community, modularity 0) backstops curves that never go positive.
struct CurveSummary {
    max: (usize, f64),
    elbows: [(usize, f64); 3],
}

fn summarize(curve: &ModularityCurve) -> CurveSummary {
    let mut max = curve.max_point().unwrap_or((1, 0.0));
    if max.1 < 0.0 {
        max = (1, 0.0);
    }
    let elbow = |w: usize| elbow_select(curve, w).unwrap_or((1, 0.0));
    CurveSummary {
        max,
        elbows: [elbow(2), elbow(3), elbow(5)],
    }
}

fn table_header() -> String {
    String::from("network,max_k,max_q,elbow2_k,elbow2_q,elbow3_k,elbow3_q,elbow5_k,elbow5_q\n")
}

fn table_row(name: &str, s: &CurveSummary) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}\n",
        name,
        s.max.0, s.max.1,
        s.elbows[0].0, s.elbows[0].1,
        s.elbows[1].0, s.elbows[1].1,
        s.elbows[2].0, s.elbows[2].1,
    )
}

fn check_table2(checks: &mut Checks, name: &str, gn: &CurveSummary) {
    let Some(row) = expected::TABLE2_HARD.iter().find(|r| r.0 == name) else {
        return;
    };
    checks.hard_exact(&format!("table2/{name} max_k"), gn.max.0, row.1);
    checks.hard(
        &format!("table2/{name} max_modularity"),
        gn.max.1,
        row.2,
        expected::MOD_TOLERANCE,
    );
}

fn check_table3(checks: &mut Checks, name: &str, rad: &CurveSummary) {
    let Some(row) = expected::TABLE3_HARD.iter().find(|r| r.0 == name) else {
        return;
    };
    checks.hard_exact(&format!("table3/{name} max_k"), rad.max.0, row.1);
    let pass = row.2.iter().any(|want| (rad.max.1 - want).abs() <= expected::MOD_TOLERANCE);
    checks.hard_where(
        &format!("table3/{name} max_modularity"),
        rad.max.1,
        pass,
        row.2[0],
        expected::MOD_TOLERANCE,
    );
}

fn karate_tables(
    checks: &mut Checks,
    table5: &mut String,
    table6: &mut String,
    graph: &Graph,
    curves: &BTreeMap<&'static str, ModularityCurve>,
) -> Result<()> {
    for metric in MetricId::ALL {
        let summary = summarize(&curves[metric.code()]);
        table5.push_str(&table_row(metric.code(), &summary));

        if let Some(row) = expected::TABLE5_HARD.iter().find(|r| r.0 == metric.code()) {
            checks.hard_exact(&format!("table5/karate {metric} max_k"), summary.max.0, row.1);
            checks.hard(
                &format!("table5/karate {metric} max_modularity"),
                summary.max.1,
                row.2,
                expected::MOD_TOLERANCE,
            );
            if matches!(metric, MetricId::AdamicAdar | MetricId::ResourceAllocation) {
                for (w, elbow) in [(2usize, summary.elbows[0]), (3, summary.elbows[1]), (5, summary.elbows[2])] {
                    let q = elbow.1;
                    let near = (q - expected::TABLE5_AA_RA_ELBOW_Q).abs() <= expected::MOD_TOLERANCE;
                    checks.hard_where(
                        &format!("table5/karate {metric} elbow{w}_modularity"),
                        q,
                        q < 0.0 && near,
                        expected::TABLE5_AA_RA_ELBOW_Q,
                        expected::MOD_TOLERANCE,
                    );
                }
            }
        }
        if let Some(row) = expected::TABLE5_SOFT.iter().find(|r| r.0 == metric.code()) {
            checks.soft(&format!("table5/karate {metric} max_modularity"), summary.max.1, row.2);
        }
    }

    // NMI rows: each metric's partition at k, against the betweenness
    // partition at the same k and against the observed factions.
    let gn_dendrogram = commkit_core::run_divisive(
        graph,
        &commkit_core::RunConfig {
            metric: MetricId::Betweenness,
            target: commkit_core::Target::Communities(5),
            policy: commkit_core::RecomputePolicy::Full,
        },
    )?;
    let factions = karate_faction_partition(graph);
    for metric in MetricId::ALL {
        if metric == MetricId::Betweenness {
            continue;
        }
        let dendrogram = commkit_core::run_divisive(
            graph,
            &commkit_core::RunConfig {
                metric,
                target: commkit_core::Target::Communities(5),
                policy: commkit_core::RecomputePolicy::Full,
            },
        )?;
        for k in 2..=5usize {
            let (Ok(mine), Ok(reference)) = (partition_at_k(&dendrogram, k), partition_at_k(&gn_dendrogram, k)) else {
                continue;
            };
            let vs_gn = nmi(&mine, &reference)?;
            let vs_truth = nmi(&mine, &factions)?;
            table6.push_str(&format!("{},{k},{vs_gn},{vs_truth}\n", metric.code()));
            if k == 4 {
                if let Some(row) = expected::TABLE6_HARD_K4.iter().find(|r| r.0 == metric.code()) {
                    checks.hard(
                        &format!("table6/karate {metric} nmi_vs_gn@k=4"),
                        vs_gn,
                        row.1,
                        expected::NMI_TOLERANCE,
                    );
                }
            }
        }
    }
    Ok(())
}

pub fn karate_faction_partition(graph: &Graph) -> Partition {
    let mut community = vec![0u32; graph.node_count()];
    for (label, faction) in KARATE_FACTIONS {
        let node = graph
            .node_by_label(label)
            .expect("karate labels 1..34 present");
        community[node.index()] = faction;
    }
    Partition {
        community,
        community_count: 2,
    }
}
