//! The five sampling algorithms. Every sampler sees the graph only
//! through a [`CrawlOracle`](crate::oracle::CrawlOracle) and emits nodes
//! one at a time, so callers can snapshot growing samples.

mod brwfb;
mod forest_fire;
mod mrw;
mod snowball;
mod tse;

pub use brwfb::{brwfb_sample, brwfb_transition, transition_probabilities};
pub use forest_fire::forest_fire_sample;
pub use mrw::{acceptance_probability, estimate_exponent_mrw, mrw_sample, mrw_walk};
pub use snowball::snowball_sample;
pub use tse::{calibrate, calibrate_alpha, stage_seed, tiny_sample_extractor, TseCalibration, TseReport};

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::GraphError;
use crate::metrics::MetricsError;
use crate::oracle::{CrawlOracle, OracleStats, SampleTrace};

#[derive(Debug, Error)]
pub enum SamplerError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("node {node} is isolated")]
    Isolated { node: usize },
    #[error("component too small or walk trapped (sampled {sampled} of {requested})")]
    ComponentTooSmall { sampled: usize, requested: usize },
    #[error("calibration degenerate: |D1 - D0| = {gap:e} below threshold")]
    CalibrationDegenerate { gap: f64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Fit(#[from] MetricsError),
}

/// Accumulates a [`SampleTrace`] during a run; rejects duplicates and
/// snapshots oracle counters at every discovery.
pub(crate) struct TraceBuilder {
    nodes: Vec<usize>,
    members: HashSet<usize>,
    discovery_stats: Vec<OracleStats>,
    seed: u64,
    sampler: &'static str,
    alpha: Option<f64>,
}

impl TraceBuilder {
    pub(crate) fn new(sampler: &'static str, seed: u64, alpha: Option<f64>, capacity: usize) -> Self {
        TraceBuilder {
            nodes: Vec::with_capacity(capacity),
            members: HashSet::with_capacity(capacity * 2),
            discovery_stats: Vec::with_capacity(capacity),
            seed,
            sampler,
            alpha,
        }
    }

    pub(crate) fn contains(&self, node: usize) -> bool {
        self.members.contains(&node)
    }

    pub(crate) fn len(&self) -> usize {
        self.nodes.len()
    }

    pub(crate) fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Records a newly discovered node. Returns false if it was already
    /// in the sample.
    pub(crate) fn push(&mut self, node: usize, oracle: &CrawlOracle<'_>) -> bool {
        if !self.members.insert(node) {
            return false;
        }
        self.nodes.push(node);
        self.discovery_stats.push(oracle.stats());
        true
    }

    pub(crate) fn finish(self, oracle: &CrawlOracle<'_>) -> SampleTrace {
        SampleTrace {
            nodes: self.nodes,
            stats: oracle.stats(),
            discovery_stats: self.discovery_stats,
            sampler: self.sampler.to_string(),
            seed: self.seed,
            alpha: self.alpha,
        }
    }
}

/// Resolves the caller-supplied start node, or draws a uniformly random
/// one when none is given.
pub(crate) fn resolve_start<R: rand::Rng>(
    oracle: &mut CrawlOracle<'_>,
    start: Option<usize>,
    rng: &mut R,
) -> Result<usize, SamplerError> {
    let node = match start {
        Some(node) => node,
        None => oracle.random_start(rng),
    };
    // surfaces invalid ids before any walking happens
    oracle.degree(node)?;
    Ok(node)
}

pub(crate) fn require_positive_size(h: usize) -> Result<(), SamplerError> {
    if h == 0 {
        return Err(SamplerError::InvalidParameter(
            "sample size must be at least 1".into(),
        ));
    }
    Ok(())
}
