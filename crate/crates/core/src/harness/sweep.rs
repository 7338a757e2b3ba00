//! Alpha sweep: the induced-sample degree exponent of the biased walk as
//! a function of its bias, with a trailing least-squares summary of how
//! linear that relationship is.

use std::io::Write;

use rayon::prelude::*;

use crate::graph::{induced_subgraph, load_edge_list, Graph};
use crate::metrics::{fit_degree_exponent, ols};
use crate::oracle::CrawlOracle;
use crate::samplers::brwfb_sample;

use super::config::ExperimentConfig;
use super::{metric_cell, HarnessError};

/// Runs `brwfb` to `h` nodes for every (alpha, seed) cell of the sweep
/// and writes one CSV row per cell, then one trailing summary row
/// `summary,<slope>,<intercept>,<r_squared>` with the OLS line of the
/// per-alpha mean exponent against alpha.
pub fn run_alpha_sweep(
    cfg: &ExperimentConfig,
    h: usize,
    out: impl Write,
) -> Result<(), HarnessError> {
    cfg.validate()?;
    let loaded = load_edge_list(&cfg.graph_path)?;
    run_alpha_sweep_on(cfg, &loaded.graph, h, out)
}

/// Same as [`run_alpha_sweep`] but over an already-loaded graph.
pub fn run_alpha_sweep_on(
    cfg: &ExperimentConfig,
    graph: &Graph,
    h: usize,
    out: impl Write,
) -> Result<(), HarnessError> {
    if h == 0 {
        return Err(HarnessError::Config("sweep size must be positive".into()));
    }
    let largest = graph.largest_component_size();
    if largest < h {
        return Err(HarnessError::Config(format!(
            "largest component has {largest} nodes but the sweep needs {h}"
        )));
    }
    let alphas = cfg.resolved_alpha_sweep();
    let cells: Vec<(usize, f64, usize, u64)> = alphas
        .iter()
        .enumerate()
        .flat_map(|(ai, &alpha)| {
            cfg.seeds
                .iter()
                .enumerate()
                .map(move |(si, &seed)| (ai, alpha, si, seed))
        })
        .collect();

    struct SweepCell {
        alpha_index: usize,
        seed_index: usize,
        alpha: f64,
        seed: u64,
        fit: Option<(f64, f64)>,
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| HarnessError::Config(format!("thread pool: {e}")))?;
    let mut rows: Vec<SweepCell> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(alpha_index, alpha, seed_index, seed)| {
                let mut oracle = CrawlOracle::new(graph);
                let fit = brwfb_sample(&mut oracle, h, alpha, seed, None)
                    .ok()
                    .and_then(|trace| {
                        let induced = induced_subgraph(graph, &trace.nodes).ok()?;
                        fit_degree_exponent(&induced.graph.degrees()).ok()
                    })
                    .map(|f| (f.slope, f.r_squared));
                SweepCell {
                    alpha_index,
                    seed_index,
                    alpha,
                    seed,
                    fit,
                }
            })
            .collect()
    });
    rows.sort_by_key(|cell| (cell.alpha_index, cell.seed_index));

    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["alpha", "seed", "degree_exponent", "r_squared"])?;
    for cell in &rows {
        writer.write_record([
            format!("{}", cell.alpha),
            cell.seed.to_string(),
            metric_cell(cell.fit.map(|f| f.0)),
            metric_cell(cell.fit.map(|f| f.1)),
        ])?;
    }

    // mean exponent per alpha over the cells whose fit succeeded
    let mut mean_points: Vec<(f64, f64)> = Vec::new();
    for (alpha_index, &alpha) in alphas.iter().enumerate() {
        let slopes: Vec<f64> = rows
            .iter()
            .filter(|cell| cell.alpha_index == alpha_index)
            .filter_map(|cell| cell.fit.map(|f| f.0))
            .collect();
        if !slopes.is_empty() {
            mean_points.push((alpha, slopes.iter().sum::<f64>() / slopes.len() as f64));
        }
    }
    let line = ols(&mean_points);
    writer.write_record([
        "summary".to_string(),
        metric_cell(line.map(|l| l.0)),
        metric_cell(line.map(|l| l.1)),
        metric_cell(line.map(|l| l.2)),
    ])?;
    writer.flush()?;
    Ok(())
}
