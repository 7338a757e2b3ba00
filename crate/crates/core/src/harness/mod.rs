//! Experiment orchestration: convergence-versus-sample-size curves and
//! alpha sweeps across samplers and seeds, emitted as analysis-ready CSV.
//!
//! Output is a pure function of the graph file bytes and the config:
//! replicates run on isolated RNGs and the rows are post-sorted, so any
//! parallelism level produces byte-identical files.

mod config;
mod convergence;
mod sweep;

pub use config::{default_alpha_sweep, default_checkpoints, ExperimentConfig, SamplerSpec};
pub use convergence::{run_convergence, run_convergence_on, ConvergenceRecord};
pub use sweep::{run_alpha_sweep, run_alpha_sweep_on};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid experiment config: {0}")]
    Config(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("config parse error: {0}")]
    Toml(#[from] toml::de::Error),
}

/// Formats a metric cell, using the literal `nan` for a missing value.
pub(crate) fn metric_cell(value: Option<f64>) -> String {
    match value {
        Some(v) if v.is_finite() => format!("{v}"),
        _ => "nan".to_string(),
    }
}
