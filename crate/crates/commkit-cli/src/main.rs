//! `commkit` — divisive community detection over benchmark graph files.
//!
//! Exit codes: 0 success, 2 input/usage errors, 3 algorithmic stops
//! (deadlock or an unreached community count), 1 reproduction cells
//! failing their reference values.

mod commands;
mod datasets;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "commkit", version, about = "Divisive community detection toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print descriptive statistics for a graph file
    Stats {
        input: PathBuf,
        /// Input format: auto, edgelist, gml, pajek
        #[arg(long, default_value = "auto")]
        format: String,
        /// Also write the statistics as a one-row CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run one divisive detection and write partition/dendrogram files
    Detect {
        input: PathBuf,
        /// Edge scorer: betweenness, radicchi, cn, aa, ra, pa, ja, so, sa, hd, hp, llhn
        #[arg(long)]
        metric: String,
        /// Target community count (>= 2)
        #[arg(long, conflicts_with = "all")]
        k: Option<usize>,
        /// Run until no removable edge remains
        #[arg(long)]
        all: bool,
        /// Rescoring policy: full or neighborhood
        #[arg(long, default_value = "full")]
        policy: String,
        #[arg(long)]
        out_partition: Option<PathBuf>,
        #[arg(long)]
        out_dendrogram: Option<PathBuf>,
        #[arg(long, default_value = "auto")]
        format: String,
    },
    /// Modularity over k = 2..k-max for one metric, with elbow selections
    Sweep {
        input: PathBuf,
        #[arg(long)]
        metric: String,
        #[arg(long, default_value_t = 10)]
        k_max: usize,
        /// Write the curve CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "auto")]
        format: String,
    },
    /// Detect with several metrics and score each against a reference partition
    Compare {
        input: PathBuf,
        /// Comma-separated metric list
        #[arg(long)]
        metrics: String,
        #[arg(long)]
        k: usize,
        /// Reference: a partition CSV path, or `run:<metric>` for a fresh
        /// run of that metric at the same k
        #[arg(long)]
        reference: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "auto")]
        format: String,
    },
    /// Regenerate the benchmark tables and check them against reference values
    Reproduce {
        /// Directory holding the benchmark files (default: ./datasets)
        #[arg(long, env = "COMMKIT_DATASET_DIR")]
        dataset_dir: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated subset of networks to run (default: all six)
        #[arg(long)]
        networks: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Stats { input, format, csv } => commands::stats(&input, &format, csv.as_deref()),
        Command::Detect {
            input,
            metric,
            k,
            all,
            policy,
            out_partition,
            out_dendrogram,
            format,
        } => commands::detect(
            &input,
            &metric,
            k,
            all,
            &policy,
            out_partition.as_deref(),
            out_dendrogram.as_deref(),
            &format,
        ),
        Command::Sweep {
            input,
            metric,
            k_max,
            out,
            format,
        } => commands::sweep(&input, &metric, k_max, out.as_deref(), &format),
        Command::Compare {
            input,
            metrics,
            k,
            reference,
            out,
            format,
        } => commands::compare(&input, &metrics, k, &reference, out.as_deref(), &format),
        Command::Reproduce {
            dataset_dir,
            out,
            networks,
        } => reproduce::run(dataset_dir.as_deref(), &out, networks.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
