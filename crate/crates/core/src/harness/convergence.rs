//! Convergence experiment: run each (sampler, seed) replicate once to the
//! final checkpoint size and measure the induced subgraph at every
//! checkpoint along the way.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;

use crate::graph::{induced_subgraph, load_edge_list, Graph};
use crate::metrics::{assortativity, avg_clustering, fit_degree_exponent};
use crate::oracle::{CrawlOracle, OracleFactory, OracleStats, SampleTrace};
use crate::samplers::{
    brwfb_sample, calibrate, forest_fire_sample, mrw_sample, snowball_sample, stage_seed,
    SamplerError,
};

use super::config::{ExperimentConfig, SamplerSpec};
use super::{metric_cell, HarnessError};

/// One CSV row: the metrics of one sampler run's induced subgraph at one
/// growth checkpoint.
#[derive(Debug, Clone)]
pub struct ConvergenceRecord {
    pub sampler: String,
    pub seed: u64,
    pub alpha: Option<f64>,
    pub fraction: f64,
    pub sample_size: usize,
    pub degree_exponent: Option<f64>,
    pub r_squared: Option<f64>,
    /// `None` renders as the `undefined` literal.
    pub assortativity: Option<f64>,
    /// `None` renders as the `nan` literal.
    pub avg_clustering: Option<f64>,
    pub distinct_visited: u64,
    pub neighbor_queries: u64,
    /// Always 0: physical timing would break byte-reproducibility, so
    /// wall times go to stderr instead of the CSV.
    pub wall_ms: u64,
}

pub(crate) const CSV_HEADER: [&str; 12] = [
    "sampler",
    "seed",
    "alpha",
    "fraction",
    "sample_size",
    "degree_exponent",
    "r_squared",
    "assortativity",
    "avg_clustering",
    "distinct_visited",
    "neighbor_queries",
    "wall_ms",
];

impl ConvergenceRecord {
    fn to_row(&self) -> Vec<String> {
        vec![
            self.sampler.clone(),
            self.seed.to_string(),
            self.alpha.map(|a| format!("{a}")).unwrap_or_default(),
            format!("{}", self.fraction),
            self.sample_size.to_string(),
            metric_cell(self.degree_exponent),
            metric_cell(self.r_squared),
            match self.assortativity {
                Some(v) if v.is_finite() => format!("{v}"),
                _ => "undefined".to_string(),
            },
            metric_cell(self.avg_clustering),
            self.distinct_visited.to_string(),
            self.neighbor_queries.to_string(),
            self.wall_ms.to_string(),
        ]
    }
}

/// Runs the convergence experiment described by `cfg` and writes the CSV
/// to `out`. Rows are post-sorted by (sampler, seed, fraction), so the
/// bytes do not depend on the parallelism level.
pub fn run_convergence(cfg: &ExperimentConfig, out: impl Write) -> Result<(), HarnessError> {
    cfg.validate()?;
    let loaded = load_edge_list(&cfg.graph_path)?;
    run_convergence_on(cfg, &loaded.graph, out)
}

/// Same as [`run_convergence`] but over an already-loaded graph.
pub fn run_convergence_on(
    cfg: &ExperimentConfig,
    graph: &Graph,
    out: impl Write,
) -> Result<(), HarnessError> {
    let n = graph.node_count();
    let checkpoints = cfg.resolved_checkpoints();
    let sizes: Vec<usize> = checkpoints
        .iter()
        .map(|f| (f * n as f64).round() as usize)
        .collect();
    if let Some(pos) = sizes.iter().position(|&h| h == 0) {
        return Err(HarnessError::Config(format!(
            "checkpoint {} rounds to zero nodes on a graph of {n} nodes",
            checkpoints[pos]
        )));
    }
    let h_max = *sizes.iter().max().expect("validated non-empty");
    let largest = graph.largest_component_size();
    if largest < h_max {
        return Err(HarnessError::Config(format!(
            "largest component has {largest} nodes but the final checkpoint needs {h_max}"
        )));
    }

    let specs = cfg.sampler_specs()?;
    let tasks: Vec<(SamplerSpec, u64)> = specs
        .iter()
        .flat_map(|&spec| cfg.seeds.iter().map(move |&seed| (spec, seed)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| HarnessError::Config(format!("thread pool: {e}")))?;
    let mut records: Vec<ConvergenceRecord> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(spec, seed)| run_replicate(graph, spec, seed, &checkpoints, &sizes, h_max))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    });

    records.sort_by(|a, b| {
        (a.sampler.as_str(), a.seed)
            .cmp(&(b.sampler.as_str(), b.seed))
            .then(a.fraction.total_cmp(&b.fraction))
    });

    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for record in &records {
        writer.write_record(record.to_row())?;
    }
    writer.flush()?;
    Ok(())
}

struct ReplicateRun {
    trace: SampleTrace,
    alpha: Option<f64>,
    /// Counter baseline from stages that ran before the snapshotted walk
    /// (the tiny sample extractor's calibration).
    offset: OracleStats,
}

fn run_replicate(
    graph: &Graph,
    spec: SamplerSpec,
    seed: u64,
    checkpoints: &[f64],
    sizes: &[usize],
    h_max: usize,
) -> Vec<ConvergenceRecord> {
    let label = spec.label();
    let started = Instant::now();
    let run = execute_sampler(graph, spec, seed, h_max);
    eprintln!(
        "[convergence] sampler={label} seed={seed} elapsed_ms={} status={}",
        started.elapsed().as_millis(),
        if run.is_ok() { "ok" } else { "error" },
    );
    let run = match run {
        Ok(run) => run,
        Err(err) => {
            eprintln!("[convergence] sampler={label} seed={seed} failed: {err}");
            return checkpoints
                .iter()
                .zip(sizes)
                .map(|(&fraction, &sample_size)| ConvergenceRecord {
                    sampler: label.clone(),
                    seed,
                    alpha: None,
                    fraction,
                    sample_size,
                    degree_exponent: None,
                    r_squared: None,
                    assortativity: None,
                    avg_clustering: None,
                    distinct_visited: 0,
                    neighbor_queries: 0,
                    wall_ms: 0,
                })
                .collect();
        }
    };

    checkpoints
        .iter()
        .zip(sizes)
        .map(|(&fraction, &sample_size)| {
            let prefix = &run.trace.nodes[..sample_size];
            let induced = induced_subgraph(graph, prefix).expect("trace nodes are valid");
            let fit = fit_degree_exponent(&induced.graph.degrees()).ok();
            let stats = run.trace.discovery_stats[sample_size - 1];
            ConvergenceRecord {
                sampler: label.clone(),
                seed,
                alpha: run.alpha,
                fraction,
                sample_size,
                degree_exponent: fit.map(|f| f.slope),
                r_squared: fit.map(|f| f.r_squared),
                assortativity: assortativity(&induced.graph).ok(),
                avg_clustering: avg_clustering(&induced.graph).ok(),
                distinct_visited: stats.distinct_visited + run.offset.distinct_visited,
                neighbor_queries: stats.neighbor_queries + run.offset.neighbor_queries,
                wall_ms: 0,
            }
        })
        .collect()
}

fn execute_sampler(
    graph: &Graph,
    spec: SamplerSpec,
    seed: u64,
    h_max: usize,
) -> Result<ReplicateRun, SamplerError> {
    let factory = OracleFactory::new(graph);
    let mut oracle: CrawlOracle<'_> = factory.oracle();
    match spec {
        SamplerSpec::Mrw => Ok(ReplicateRun {
            trace: mrw_sample(&mut oracle, h_max, seed, None)?,
            alpha: None,
            offset: OracleStats::default(),
        }),
        SamplerSpec::Brwfb { alpha } => Ok(ReplicateRun {
            trace: brwfb_sample(&mut oracle, h_max, alpha, seed, None)?,
            alpha: Some(alpha),
            offset: OracleStats::default(),
        }),
        SamplerSpec::Snowball => Ok(ReplicateRun {
            trace: snowball_sample(&mut oracle, h_max, seed, None)?,
            alpha: None,
            offset: OracleStats::default(),
        }),
        SamplerSpec::ForestFire { pf } => Ok(ReplicateRun {
            trace: forest_fire_sample(&mut oracle, h_max, pf, seed, None)?,
            alpha: None,
            offset: OracleStats::default(),
        }),
        SamplerSpec::Tse => {
            // calibration runs once at the full target size; the final
            // extraction walk is the one snapshotted at each checkpoint
            let calibration = calibrate(&factory, h_max, seed)?;
            let mut final_oracle = factory.oracle();
            let mut trace = brwfb_sample(
                &mut final_oracle,
                h_max,
                calibration.alpha,
                stage_seed(seed, 3),
                None,
            )?;
            trace.sampler = "tse".to_string();
            trace.seed = seed;
            let offset = calibration.stage_stats.iter().fold(
                OracleStats::default(),
                |acc, s| OracleStats {
                    distinct_visited: acc.distinct_visited + s.distinct_visited,
                    neighbor_queries: acc.neighbor_queries + s.neighbor_queries,
                },
            );
            Ok(ReplicateRun {
                trace,
                alpha: Some(calibration.alpha),
                offset,
            })
        }
    }
}
