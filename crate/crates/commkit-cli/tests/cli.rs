//! End-to-end checks of the `commkit` binary: exit codes, output file
//! schemas, and golden-file stability.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn commkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn datasets_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../datasets")
}

fn karate() -> String {
    datasets_dir().join("karate.gml").to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn exit_code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

/// Strict CSV reader: exact header, uniform field counts, `#` comment
/// trailer lines allowed.
fn parse_strict_csv(text: &str, header: &str) -> Vec<Vec<String>> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    assert_eq!(lines.next().expect("header"), header);
    let width = header.split(',').count();
    let mut rows = Vec::new();
    for line in lines {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .from_reader(line.as_bytes());
        for record in reader.records() {
            let record = record.expect("valid csv row");
            assert_eq!(record.len(), width, "row width in {line:?}");
            rows.push(record.iter().map(str::to_string).collect());
        }
    }
    rows
}

#[test]
fn stats_prints_reference_counts() {
    let out = commkit(&["stats", &karate()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("34"));
    assert!(text.contains("78"));
    assert!(text.contains("4.588"));
    assert!(text.contains("2.408"));
}

#[test]
fn stats_csv_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("stats.csv");
    let out = commkit(&["stats", &karate(), "--csv", csv_path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = fs::read_to_string(&csv_path).unwrap();
    let rows = parse_strict_csv(
        &text,
        "nodes,edges,degree_avg,eigenvector_avg,closeness_avg,clustering_avg,betweenness_avg,avg_path_length,connected",
    );
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], "34");
    assert_eq!(rows[0][1], "78");
}

#[test]
fn stats_rejects_malformed_input_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 2\n3\n").unwrap();
    let out = commkit(&["stats", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("line 2"), "stderr: {}", stderr(&out));
}

#[test]
fn stats_reads_pajek() {
    let dir = tempfile::tempdir().unwrap();
    let net = dir.path().join("lesmis.net");
    fs::write(&net, "*Vertices 3\n1 \"a\"\n2 \"b\"\n3 \"c\"\n*Edges\n1 2\n2 3\n").unwrap();
    let out = commkit(&["stats", net.to_str().unwrap(), "--format", "pajek"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("3"));
}

#[test]
fn detect_writes_partition_and_dendrogram() {
    let dir = tempfile::tempdir().unwrap();
    let part = dir.path().join("partition.csv");
    let dend = dir.path().join("dendrogram.json");
    let out = commkit(&[
        "detect",
        &karate(),
        "--metric",
        "betweenness",
        "--k",
        "2",
        "--out-partition",
        part.to_str().unwrap(),
        "--out-dendrogram",
        dend.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let summary = stdout(&out);
    assert!(summary.starts_with("k=2 Q="), "got {summary}");
    let q: f64 = summary.trim().strip_prefix("k=2 Q=").unwrap().parse().unwrap();
    assert!((q - 0.360).abs() < 0.005, "got {summary}");

    let rows = parse_strict_csv(&fs::read_to_string(&part).unwrap(), "node,community");
    assert_eq!(rows.len(), 34);
    let mut communities: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    communities.sort_unstable();
    communities.dedup();
    assert_eq!(communities, vec!["0", "1"]);

    let records =
        commkit_core::io::parse_dendrogram_json(&fs::read_to_string(&dend).unwrap()).unwrap();
    assert!(!records.is_empty());
    for (i, r) in records.iter().enumerate() {
        assert_eq!(r.step, i + 1, "steps strictly increasing");
    }
    let mut prev = 1;
    for r in &records {
        assert!(r.components_after >= prev);
        assert!(r.components_after - prev <= 1);
        prev = r.components_after;
    }
}

#[test]
fn detect_deadlock_exits_three_with_partial_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let star = dir.path().join("star.txt");
    fs::write(&star, "c x\nc y\nc z\n").unwrap();
    let part = dir.path().join("partition.csv");
    let out = commkit(&[
        "detect",
        star.to_str().unwrap(),
        "--metric",
        "radicchi",
        "--k",
        "2",
        "--out-partition",
        part.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("deadlock"));
    let rows = parse_strict_csv(&fs::read_to_string(&part).unwrap(), "node,community");
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r[1] == "0"));
}

#[test]
fn detect_requires_k_or_all() {
    let out = commkit(&["detect", &karate(), "--metric", "ja"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn detect_neighborhood_policy_matches_full() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("full.json");
    let b = dir.path().join("nbhd.json");
    for (policy, path) in [("full", &a), ("neighborhood", &b)] {
        let out = commkit(&[
            "detect",
            &karate(),
            "--metric",
            "radicchi",
            "--k",
            "4",
            "--policy",
            policy,
            "--out-dendrogram",
            path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn sweep_emits_curve_with_elbow_trailers() {
    let out = commkit(&["sweep", &karate(), "--metric", "betweenness", "--k-max", "10"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let rows = parse_strict_csv(&text, "k,modularity");
    assert_eq!(rows.len(), 9, "k = 2..10");
    let q5: f64 = rows.iter().find(|r| r[0] == "5").unwrap()[1].parse().unwrap();
    assert!((q5 - 0.401).abs() < 0.005);
    assert_eq!(text.matches("# elbow w=").count(), 3);
}

#[test]
fn sweep_reports_deadlock_truncation_with_exit_three() {
    // radicchi on karate deadlocks at 10 components, short of k-max 20
    let out = commkit(&["sweep", &karate(), "--metric", "radicchi", "--k-max", "20"]);
    assert_eq!(exit_code(&out), 3);
    let text = stdout(&out);
    assert!(text.contains("# stopped early: deadlock"));
    assert!(stderr(&out).contains("deadlock"));
    let rows = parse_strict_csv(&text, "k,modularity");
    assert_eq!(rows.len(), 9, "curve truncated at k = 10");
}

#[test]
fn sweep_k_max_two_gives_single_row() {
    let out = commkit(&["sweep", &karate(), "--metric", "ja", "--k-max", "2"]);
    assert_eq!(exit_code(&out), 0);
    let rows = parse_strict_csv(&stdout(&out), "k,modularity");
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][0], "2");
}

#[test]
fn compare_against_reference_run() {
    let out = commkit(&[
        "compare",
        &karate(),
        "--metrics",
        "ja,so,sa,hp,llhn",
        "--k",
        "4",
        "--reference",
        "run:betweenness",
    ]);
    assert_eq!(exit_code(&out), 0);
    let rows = parse_strict_csv(&stdout(&out), "metric,k,modularity,nmi_vs_reference");
    assert_eq!(rows.len(), 5);
    // rows sorted by metric code
    let metrics: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(metrics, vec!["hp", "ja", "llhn", "sa", "so"]);
    for row in &rows {
        let nmi: f64 = row[3].parse().unwrap();
        assert!((nmi - 0.707).abs() < 0.01, "row {row:?}");
    }
}

#[test]
fn compare_partition_against_itself_gives_unit_nmi() {
    let dir = tempfile::tempdir().unwrap();
    let part = dir.path().join("ref.csv");
    let out = commkit(&[
        "detect",
        &karate(),
        "--metric",
        "betweenness",
        "--k",
        "3",
        "--out-partition",
        part.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let out = commkit(&[
        "compare",
        &karate(),
        "--metrics",
        "betweenness",
        "--k",
        "3",
        "--reference",
        part.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let rows = parse_strict_csv(&stdout(&out), "metric,k,modularity,nmi_vs_reference");
    let nmi: f64 = rows[0][3].parse().unwrap();
    assert!((nmi - 1.0).abs() < 1e-12);
}

#[test]
fn compare_rejects_mismatched_reference() {
    let dir = tempfile::tempdir().unwrap();
    let part = dir.path().join("other.csv");
    fs::write(&part, "node,community\nnot-a-karate-node,0\n").unwrap();
    let out = commkit(&[
        "compare",
        &karate(),
        "--metrics",
        "ja",
        "--k",
        "2",
        "--reference",
        part.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn reproduce_rejects_missing_datasets() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = tempfile::tempdir().unwrap();
    let out = commkit(&[
        "reproduce",
        "--dataset-dir",
        dir.path().to_str().unwrap(),
        "--out",
        out_dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr(&out);
    for file in ["karate.gml", "dolphins.gml", "football.gml", "polbooks.gml", "adjnoun.gml", "lesmis.gml"] {
        assert!(err.contains(file), "missing {file} in: {err}");
    }
}

#[test]
fn reproduce_outputs_are_deterministic_and_parse() {
    let run = |dir: &Path| {
        let out = commkit(&[
            "reproduce",
            "--dataset-dir",
            datasets_dir().to_str().unwrap(),
            "--out",
            dir.to_str().unwrap(),
            "--networks",
            "karate,lesmis",
        ]);
        let text = stdout(&out);
        let summary = text.lines().last().unwrap().to_string();
        (exit_code(&out), summary)
    };
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let (code_a, summary_a) = run(a.path());
    let (code_b, summary_b) = run(b.path());
    assert_eq!(code_a, code_b);
    assert_eq!(summary_a, summary_b);

    // exit code agrees with the printed summary
    let failed: usize = summary_a
        .split("passed, ")
        .nth(1)
        .and_then(|s| s.split(" failed").next())
        .and_then(|s| s.parse().ok())
        .expect("summary shape");
    assert_eq!(code_a == 0, failed == 0, "summary: {summary_a}");

    // byte-identical table set across runs
    for file in ["table1.csv", "table2.csv", "table3.csv", "table4.csv", "table5.csv", "table6.csv", "provenance.json"] {
        let fa = fs::read(a.path().join(file)).unwrap();
        let fb = fs::read(b.path().join(file)).unwrap();
        assert_eq!(fa, fb, "{file} differs between runs");
    }
    let mut figure_files: Vec<_> = fs::read_dir(a.path().join("figure1_data"))
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    figure_files.sort();
    assert_eq!(figure_files.len(), 24, "2 networks x 12 metrics");
    for name in figure_files {
        let fa = fs::read(a.path().join("figure1_data").join(&name)).unwrap();
        let fb = fs::read(b.path().join("figure1_data").join(&name)).unwrap();
        assert_eq!(fa, fb);
    }

    // every emitted table parses under the strict reader
    parse_strict_csv(
        &fs::read_to_string(a.path().join("table1.csv")).unwrap(),
        "network,nodes,edges,degree_avg,eigenvector_avg,closeness_avg,clustering_avg,betweenness_avg,avg_path_length",
    );
    for file in ["table2.csv", "table3.csv"] {
        parse_strict_csv(
            &fs::read_to_string(a.path().join(file)).unwrap(),
            "network,max_k,max_q,elbow2_k,elbow2_q,elbow3_k,elbow3_q,elbow5_k,elbow5_q",
        );
    }
    parse_strict_csv(
        &fs::read_to_string(a.path().join("table5.csv")).unwrap(),
        "metric,max_k,max_q,elbow2_k,elbow2_q,elbow3_k,elbow3_q,elbow5_k,elbow5_q",
    );
    parse_strict_csv(
        &fs::read_to_string(a.path().join("table6.csv")).unwrap(),
        "metric,k,nmi_vs_gn,nmi_vs_factions",
    );
    parse_strict_csv(
        &fs::read_to_string(a.path().join("figure1_data/karate_betweenness.csv")).unwrap(),
        "k,modularity",
    );
}

#[test]
fn unknown_metric_exits_two() {
    let out = commkit(&["detect", &karate(), "--metric", "nonsense", "--k", "2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn three_formats_yield_the_same_graph() {
    // express the toy graph in all three formats; stats must agree
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("toy.txt");
    fs::write(&el, "1 2\n1 3\n2 3\n3 4\n4 5\n").unwrap();
    let gml = dir.path().join("toy.gml");
    fs::write(
        &gml,
        "graph [\n  node [ id 1 ]\n  node [ id 2 ]\n  node [ id 3 ]\n  node [ id 4 ]\n  node [ id 5 ]\n\
         \n  edge [ source 1 target 2 ]\n  edge [ source 1 target 3 ]\n  edge [ source 2 target 3 ]\n\
         edge [ source 3 target 4 ]\n  edge [ source 4 target 5 ]\n]\n",
    )
    .unwrap();
    let net = dir.path().join("toy.net");
    fs::write(
        &net,
        "*Vertices 5\n1 \"1\"\n2 \"2\"\n3 \"3\"\n4 \"4\"\n5 \"5\"\n*Edges\n1 2\n1 3\n2 3\n3 4\n4 5\n",
    )
    .unwrap();

    let mut outputs = Vec::new();
    for path in [&el, &gml, &net] {
        let out = commkit(&["stats", path.to_str().unwrap()]);
        assert_eq!(exit_code(&out), 0);
        outputs.push(stdout(&out));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[1], outputs[2]);
}

#[test]
fn karate_parses_identically_in_all_three_formats() {
    let gml_bytes = fs::read(datasets_dir().join("karate.gml")).unwrap();
    let (from_gml, _) =
        commkit_core::io::parse_graph(&gml_bytes, commkit_core::io::Format::Gml).unwrap();

    // re-encode the same network as an edge list and as Pajek
    let edge_list = commkit_core::io::write_edge_list(&from_gml);
    let mut pajek = format!("*Vertices {}\n", from_gml.node_count());
    for (i, label) in from_gml.labels().iter().enumerate() {
        pajek.push_str(&format!("{} \"{label}\"\n", i + 1));
    }
    pajek.push_str("*Edges\n");
    for (u, v) in from_gml.edges() {
        pajek.push_str(&format!("{} {}\n", u.index() + 1, v.index() + 1));
    }

    let (from_el, _) = commkit_core::io::parse_edge_list(edge_list.as_bytes()).unwrap();
    let (from_net, _) =
        commkit_core::io::parse_pajek(pajek.as_bytes()).unwrap();

    let edge_labels = |g: &commkit_core::Graph| -> Vec<(String, String)> {
        let mut edges: Vec<_> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (g.label(u).to_string(), g.label(v).to_string());
                if a <= b { (a, b) } else { (b, a) }
            })
            .collect();
        edges.sort();
        edges
    };
    for other in [&from_el, &from_net] {
        assert_eq!(other.node_count(), 34);
        assert_eq!(other.edge_count(), 78);
        assert_eq!(edge_labels(other), edge_labels(&from_gml));
    }
    let mut labels_sorted = from_gml.labels().to_vec();
    labels_sorted.sort();
    let mut net_labels = from_net.labels().to_vec();
    net_labels.sort();
    assert_eq!(labels_sorted, net_labels, "identical label sets");
}
