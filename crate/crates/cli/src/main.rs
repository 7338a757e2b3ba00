use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use tinysample::generator::{generate_ba, BaConfig};
use tinysample::graph::{load_edge_list, save_edge_list, LoadedGraph};
use tinysample::harness::{run_convergence, run_alpha_sweep, ExperimentConfig};
use tinysample::metrics::{assortativity, avg_clustering, ccdf, fit_degree_exponent, MetricsError};
use tinysample::oracle::{OracleFactory, SampleTrace};
use tinysample::samplers::{
    brwfb_sample, forest_fire_sample, mrw_sample, snowball_sample, tiny_sample_extractor,
    TseReport,
};

#[derive(Parser)]
#[command(
    name = "tinysample",
    about = "Extract small representative subgraphs from large graphs and benchmark samplers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a Barabási-Albert scale-free graph as an edge list
    Generate {
        /// Number of nodes
        #[arg(long)]
        nodes: usize,
        /// Edges attached per new node
        #[arg(long, default_value_t = 2)]
        edges_per_node: usize,
        #[arg(long)]
        seed: u64,
        /// Output edge-list file
        #[arg(long)]
        out: PathBuf,
    },
    /// Run one sampler on a graph and write the sampled nodes and stats
    Sample {
        /// Input edge-list file
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        /// Sample size (number of nodes)
        #[arg(long)]
        size: usize,
        /// Bias exponent (required for brwfb)
        #[arg(long)]
        alpha: Option<f64>,
        /// Forward burning probability for forestfire
        #[arg(long)]
        pf: Option<f64>,
        /// Start node id (as written in the graph file); random if omitted
        #[arg(long)]
        start: Option<u64>,
        #[arg(long)]
        seed: u64,
        /// Output file: one sampled node id per line, discovery order
        #[arg(long)]
        out_nodes: PathBuf,
        /// Output file: key=value run statistics
        #[arg(long)]
        out_stats: PathBuf,
    },
    /// Compute graph metrics (degree exponent, assortativity, clustering)
    Metrics {
        /// Input edge-list file
        #[arg(long)]
        graph: PathBuf,
        /// Optional CSV file for the CCDF points (degree,fraction)
        #[arg(long)]
        ccdf_out: Option<PathBuf>,
    },
    /// Run the convergence experiment described by a TOML config
    Convergence {
        #[arg(long)]
        config: PathBuf,
        /// Output CSV file
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep the biased walk's alpha and fit exponent-vs-alpha
    SweepAlpha {
        #[arg(long)]
        config: PathBuf,
        /// Sample size per sweep cell
        #[arg(long)]
        size: usize,
        /// Output CSV file
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Algo {
    Mrw,
    Brwfb,
    Snowball,
    Forestfire,
    Tse,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Generate {
            nodes,
            edges_per_node,
            seed,
            out,
        } => {
            let graph = generate_ba(&BaConfig::new(nodes, edges_per_node, seed))?;
            save_edge_list(&graph, &out)
                .with_context(|| format!("writing {}", out.display()))?;
            eprintln!(
                "generated {} nodes, {} edges -> {}",
                graph.node_count(),
                graph.edge_count(),
                out.display()
            );
            Ok(())
        }
        Command::Sample {
            graph,
            algo,
            size,
            alpha,
            pf,
            start,
            seed,
            out_nodes,
            out_stats,
        } => sample(graph, algo, size, alpha, pf, start, seed, out_nodes, out_stats),
        Command::Metrics { graph, ccdf_out } => metrics(graph, ccdf_out),
        Command::Convergence { config, out } => {
            let cfg = ExperimentConfig::from_file(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let writer = BufWriter::new(
                File::create(&out).with_context(|| format!("creating {}", out.display()))?,
            );
            run_convergence(&cfg, writer)?;
            Ok(())
        }
        Command::SweepAlpha { config, size, out } => {
            let cfg = ExperimentConfig::from_file(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let writer = BufWriter::new(
                File::create(&out).with_context(|| format!("creating {}", out.display()))?,
            );
            run_alpha_sweep(&cfg, size, writer)?;
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn sample(
    graph_path: PathBuf,
    algo: Algo,
    size: usize,
    alpha: Option<f64>,
    pf: Option<f64>,
    start: Option<u64>,
    seed: u64,
    out_nodes: PathBuf,
    out_stats: PathBuf,
) -> Result<()> {
    let loaded =
        load_edge_list(&graph_path).with_context(|| format!("loading {}", graph_path.display()))?;
    if loaded.self_loops_dropped > 0 || loaded.duplicates_dropped > 0 {
        eprintln!(
            "warning: dropped {} self-loops and {} duplicate edges while loading",
            loaded.self_loops_dropped, loaded.duplicates_dropped
        );
    }
    let start_internal = match start {
        Some(external) => Some(loaded.internal_id(external).ok_or_else(|| {
            anyhow!("start node {external} does not appear in {}", graph_path.display())
        })?),
        None => None,
    };

    let factory = OracleFactory::new(&loaded.graph);
    let mut tse_report: Option<TseReport> = None;
    let trace: SampleTrace = match algo {
        Algo::Mrw => {
            let mut oracle = factory.oracle();
            mrw_sample(&mut oracle, size, seed, start_internal)?
        }
        Algo::Brwfb => {
            let alpha = alpha.ok_or_else(|| anyhow!("--alpha is required for brwfb"))?;
            let mut oracle = factory.oracle();
            brwfb_sample(&mut oracle, size, alpha, seed, start_internal)?
        }
        Algo::Snowball => {
            let mut oracle = factory.oracle();
            snowball_sample(&mut oracle, size, seed, start_internal)?
        }
        Algo::Forestfire => {
            let pf = pf.unwrap_or(0.7);
            let mut oracle = factory.oracle();
            forest_fire_sample(&mut oracle, size, pf, seed, start_internal)?
        }
        Algo::Tse => {
            if start.is_some() {
                bail!("tse picks its own stage start nodes; --start is not supported");
            }
            let (trace, report) = tiny_sample_extractor(&factory, size, seed)?;
            tse_report = Some(report);
            trace
        }
    };

    write_nodes(&out_nodes, &loaded, &trace)?;
    write_stats(&out_stats, &trace, tse_report.as_ref())?;
    eprintln!(
        "sampled {} nodes ({} distinct visited, {} neighbor queries)",
        trace.len(),
        trace.stats.distinct_visited,
        trace.stats.neighbor_queries
    );
    Ok(())
}

fn write_nodes(path: &PathBuf, loaded: &LoadedGraph, trace: &SampleTrace) -> Result<()> {
    let mut out = BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    );
    for &node in &trace.nodes {
        writeln!(out, "{}", loaded.external_id(node))?;
    }
    out.flush()?;
    Ok(())
}

fn write_stats(path: &PathBuf, trace: &SampleTrace, report: Option<&TseReport>) -> Result<()> {
    let mut out = BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    );
    match report {
        Some(report) => {
            // the extractor's cost is the sum over its four stages
            writeln!(out, "distinct_visited={}", report.total_distinct_visited())?;
            writeln!(out, "neighbor_queries={}", report.total_neighbor_queries())?;
            writeln!(out, "alpha_used={}", report.alpha)?;
            writeln!(out, "D={}", report.estimated_exponent)?;
            writeln!(out, "D0={}", report.exponent_at_zero)?;
            writeln!(out, "D1={}", report.exponent_at_neg_one)?;
        }
        None => {
            writeln!(out, "distinct_visited={}", trace.stats.distinct_visited)?;
            writeln!(out, "neighbor_queries={}", trace.stats.neighbor_queries)?;
            if let Some(alpha) = trace.alpha {
                writeln!(out, "alpha_used={alpha}")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn metrics(graph_path: PathBuf, ccdf_out: Option<PathBuf>) -> Result<()> {
    let loaded =
        load_edge_list(&graph_path).with_context(|| format!("loading {}", graph_path.display()))?;
    let graph = &loaded.graph;
    let degrees = graph.degrees();

    println!("nodes={}", graph.node_count());
    println!("edges={}", graph.edge_count());
    match fit_degree_exponent(&degrees) {
        Ok(fit) => {
            println!("degree_exponent={}", fit.slope);
            println!("r_squared={}", fit.r_squared);
        }
        Err(MetricsError::CannotFit { .. }) => {
            println!("degree_exponent=nan");
            println!("r_squared=nan");
        }
        Err(e) => return Err(e.into()),
    }
    match assortativity(graph) {
        Ok(v) => println!("assortativity={v}"),
        Err(MetricsError::AssortativityUndefined) | Err(MetricsError::NoEdges) => {
            println!("assortativity=undefined")
        }
        Err(e) => return Err(e.into()),
    }
    println!("avg_clustering={}", avg_clustering(graph)?);

    if let Some(path) = ccdf_out {
        let mut out = BufWriter::new(
            File::create(&path).with_context(|| format!("creating {}", path.display()))?,
        );
        writeln!(out, "degree,fraction")?;
        for (degree, fraction) in ccdf(&degrees)? {
            writeln!(out, "{degree},{fraction}")?;
        }
        out.flush()?;
    }
    Ok(())
}
