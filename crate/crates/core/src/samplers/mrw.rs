//! Metropolized random walk: uniform-neighbor proposals with
//! Metropolis-Hastings acceptance, so the stationary distribution is
//! uniform over nodes and the per-step degree sequence is an unbiased
//! estimate of the graph's degree distribution.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::metrics::{fit_degree_exponent, ExponentFit};
use crate::oracle::{CrawlOracle, SampleTrace};

use super::{require_positive_size, resolve_start, SamplerError, TraceBuilder};

/// Probability of accepting a proposed move from degree `deg_x` to degree
/// `deg_y`: `min(1, deg_x / deg_y)`. Moves toward equal or lower degree
/// are always accepted.
pub fn acceptance_probability(deg_x: usize, deg_y: usize) -> f64 {
    (deg_x as f64 / deg_y as f64).min(1.0)
}

/// Runs `steps` Metropolis-Hastings steps from `start` and returns the
/// degree of the current node after every step; a rejected move
/// re-records the degree of the node the walk stayed on.
pub fn mrw_walk(
    oracle: &mut CrawlOracle<'_>,
    start: usize,
    steps: usize,
    seed: u64,
) -> Result<Vec<usize>, SamplerError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    mrw_walk_with_rng(oracle, start, steps, &mut rng)
}

fn mrw_walk_with_rng<R: Rng>(
    oracle: &mut CrawlOracle<'_>,
    start: usize,
    steps: usize,
    rng: &mut R,
) -> Result<Vec<usize>, SamplerError> {
    let mut current = start;
    let mut current_degree = oracle.degree(current)?;
    if current_degree == 0 {
        return Err(SamplerError::Isolated { node: start });
    }
    let mut recorded = Vec::with_capacity(steps);
    // the neighbor list of the node the walk stands on is fetched once
    // per arrival, not once per proposal
    let mut neighbors = oracle.neighbors(current)?;
    for _ in 0..steps {
        let proposed = neighbors[rng.gen_range(0..neighbors.len())];
        let proposed_degree = oracle.degree(proposed)?;
        let accept =
            proposed_degree <= current_degree || rng.gen::<f64>() < acceptance_probability(current_degree, proposed_degree);
        if accept {
            current = proposed;
            current_degree = proposed_degree;
            neighbors = oracle.neighbors(current)?;
        }
        recorded.push(current_degree);
    }
    Ok(recorded)
}

/// Runs the Metropolis-Hastings chain until it has touched `h` distinct
/// nodes and returns them in first-visit order. This is the walk used as
/// a graph sampler; the chain itself is the same as [`mrw_walk`].
pub fn mrw_sample(
    oracle: &mut CrawlOracle<'_>,
    h: usize,
    seed: u64,
    start: Option<usize>,
) -> Result<SampleTrace, SamplerError> {
    require_positive_size(h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = resolve_start(oracle, start, &mut rng)?;

    let mut trace = TraceBuilder::new("mrw", seed, None, h);
    trace.push(start, oracle);
    if h == 1 {
        return Ok(trace.finish(oracle));
    }
    let mut current = start;
    let mut current_degree = oracle.degree(current)?;
    if current_degree == 0 {
        return Err(SamplerError::ComponentTooSmall {
            sampled: 1,
            requested: h,
        });
    }
    let mut neighbors = oracle.neighbors(current)?;
    let mut steps_since_new = 0usize;
    while trace.len() < h {
        let proposed = neighbors[rng.gen_range(0..neighbors.len())];
        let proposed_degree = oracle.degree(proposed)?;
        let accept = proposed_degree <= current_degree
            || rng.gen::<f64>() < acceptance_probability(current_degree, proposed_degree);
        if accept {
            current = proposed;
            current_degree = proposed_degree;
            neighbors = oracle.neighbors(current)?;
        }
        if trace.push(current, oracle) {
            steps_since_new = 0;
        } else {
            steps_since_new += 1;
            if steps_since_new >= (10 * trace.len()).max(1000) {
                return Err(SamplerError::ComponentTooSmall {
                    sampled: trace.len(),
                    requested: h,
                });
            }
        }
    }
    Ok(trace.finish(oracle))
}

/// Estimates the degree exponent of the underlying graph: a burn-in of
/// `max(100, h/10)` discarded steps, then `h` recorded steps, then a
/// CCDF fit over the recorded degree multiset.
pub fn estimate_exponent_mrw(
    oracle: &mut CrawlOracle<'_>,
    h: usize,
    seed: u64,
) -> Result<ExponentFit, SamplerError> {
    if h < 100 {
        return Err(SamplerError::InvalidParameter(format!(
            "exponent estimation needs h >= 100, got {h}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut start = oracle.random_start(&mut rng);
    for _ in 0..1000 {
        if oracle.degree(start)? > 0 {
            break;
        }
        start = oracle.random_start(&mut rng);
    }
    if oracle.degree(start)? == 0 {
        return Err(SamplerError::Isolated { node: start });
    }
    let burn_in = 100.max(h / 10);
    let degrees = mrw_walk_with_rng(oracle, start, burn_in + h, &mut rng)?;
    Ok(fit_degree_exponent(&degrees[burn_in..])?)
}
