//! The tiny sample extractor: estimates the graph's degree exponent with
//! a Metropolized random walk, measures the exponent the biased walk
//! produces at `alpha = 0` and `alpha = -1`, interpolates the `alpha`
//! that should reproduce the estimated exponent, and extracts the final
//! sample at that `alpha`.

use std::collections::HashSet;

use crate::metrics::fit_degree_exponent;
use crate::oracle::{CrawlOracle, OracleFactory, OracleStats, SampleTrace};

use super::{brwfb_sample, estimate_exponent_mrw, SamplerError};

/// Threshold below which the two calibration exponents are considered
/// indistinguishable and the interpolation is refused.
pub const CALIBRATION_EPSILON: f64 = 1e-3;

/// Outcome of the three calibration stages.
#[derive(Debug, Clone, Copy)]
pub struct TseCalibration {
    /// Degree exponent of the full graph, estimated by MRW node sampling.
    pub estimated_exponent: f64,
    /// Induced-sample exponent of the biased walk at `alpha = 0`.
    pub exponent_at_zero: f64,
    /// Induced-sample exponent of the biased walk at `alpha = -1`.
    pub exponent_at_neg_one: f64,
    /// Interpolated bias for the final extraction.
    pub alpha: f64,
    /// Oracle counters of the MRW, `alpha = 0`, and `alpha = -1` stages.
    pub stage_stats: [OracleStats; 3],
}

/// Calibration plus the final extraction stage's counters.
#[derive(Debug, Clone, Copy)]
pub struct TseReport {
    pub estimated_exponent: f64,
    pub exponent_at_zero: f64,
    pub exponent_at_neg_one: f64,
    pub alpha: f64,
    /// MRW, `alpha = 0`, `alpha = -1`, final walk.
    pub stage_stats: [OracleStats; 4],
}

impl TseReport {
    /// Sum of the four stages' distinct-visited counters. The stages run
    /// on independent oracles, so this is the total crawl footprint
    /// without cross-stage deduplication.
    pub fn total_distinct_visited(&self) -> u64 {
        self.stage_stats.iter().map(|s| s.distinct_visited).sum()
    }

    pub fn total_neighbor_queries(&self) -> u64 {
        self.stage_stats.iter().map(|s| s.neighbor_queries).sum()
    }
}

/// Derives the seed for stage `stage` of a run seeded with `seed`
/// (splitmix64 of the stage-offset seed).
pub fn stage_seed(seed: u64, stage: u64) -> u64 {
    let mut z = seed
        .wrapping_add(stage.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Solves the linear interpolation for the target bias:
/// `alpha = -(d - d0) / (d1 - d0)`, where `d` is the target exponent and
/// `d0`, `d1` are the exponents measured at `alpha = 0` and `alpha = -1`.
pub fn calibrate_alpha(d: f64, d0: f64, d1: f64) -> Result<f64, SamplerError> {
    let gap = (d1 - d0).abs();
    if gap < CALIBRATION_EPSILON {
        return Err(SamplerError::CalibrationDegenerate { gap });
    }
    Ok(-((d - d0) / (d1 - d0)))
}

/// Degree of every sampled node within the subgraph induced by the
/// sample, obtained through the oracle alone (one neighbor query per
/// sampled node, intersected with the sample set).
fn induced_degrees(
    oracle: &mut CrawlOracle<'_>,
    nodes: &[usize],
) -> Result<Vec<usize>, SamplerError> {
    let members: HashSet<usize> = nodes.iter().copied().collect();
    let mut degrees = Vec::with_capacity(nodes.len());
    for &v in nodes {
        let d = oracle
            .neighbors(v)?
            .iter()
            .filter(|y| members.contains(y))
            .count();
        degrees.push(d);
    }
    Ok(degrees)
}

/// Runs the three calibration stages on fresh oracles and returns the
/// interpolated `alpha`. Stage `i` is seeded with `stage_seed(seed, i)`.
pub fn calibrate(
    factory: &OracleFactory<'_>,
    h: usize,
    seed: u64,
) -> Result<TseCalibration, SamplerError> {
    if h < 100 {
        return Err(SamplerError::InvalidParameter(format!(
            "tiny sample extractor needs h >= 100 for its exponent fits, got {h}"
        )));
    }

    let mut mrw_oracle = factory.oracle();
    let estimated = estimate_exponent_mrw(&mut mrw_oracle, h, stage_seed(seed, 0))?;

    let mut zero_oracle = factory.oracle();
    let trace0 = brwfb_sample(&mut zero_oracle, h, 0.0, stage_seed(seed, 1), None)?;
    let d0 = fit_degree_exponent(&induced_degrees(&mut zero_oracle, &trace0.nodes)?)?;

    let mut neg_oracle = factory.oracle();
    let trace1 = brwfb_sample(&mut neg_oracle, h, -1.0, stage_seed(seed, 2), None)?;
    let d1 = fit_degree_exponent(&induced_degrees(&mut neg_oracle, &trace1.nodes)?)?;

    let alpha = calibrate_alpha(estimated.slope, d0.slope, d1.slope)?;
    Ok(TseCalibration {
        estimated_exponent: estimated.slope,
        exponent_at_zero: d0.slope,
        exponent_at_neg_one: d1.slope,
        alpha,
        stage_stats: [
            mrw_oracle.stats(),
            zero_oracle.stats(),
            neg_oracle.stats(),
        ],
    })
}

/// The full extractor: calibrate, then extract the final sample with the
/// interpolated bias on a fresh oracle seeded with `stage_seed(seed, 3)`.
pub fn tiny_sample_extractor(
    factory: &OracleFactory<'_>,
    h: usize,
    seed: u64,
) -> Result<(SampleTrace, TseReport), SamplerError> {
    let calibration = calibrate(factory, h, seed)?;
    let mut final_oracle = factory.oracle();
    let mut trace = brwfb_sample(
        &mut final_oracle,
        h,
        calibration.alpha,
        stage_seed(seed, 3),
        None,
    )?;
    trace.sampler = "tse".to_string();
    trace.seed = seed;
    let report = TseReport {
        estimated_exponent: calibration.estimated_exponent,
        exponent_at_zero: calibration.exponent_at_zero,
        exponent_at_neg_one: calibration.exponent_at_neg_one,
        alpha: calibration.alpha,
        stage_stats: [
            calibration.stage_stats[0],
            calibration.stage_stats[1],
            calibration.stage_stats[2],
            final_oracle.stats(),
        ],
    };
    Ok((trace, report))
}
