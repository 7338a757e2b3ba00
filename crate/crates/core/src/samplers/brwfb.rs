//! Biased random walk with fly-back: each step moves to a neighbor with
//! probability proportional to that neighbor's degree raised to `alpha`,
//! and every time a new node is discovered the walk restarts from the
//! start node.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::oracle::{CrawlOracle, SampleTrace};

use super::{require_positive_size, resolve_start, SamplerError, TraceBuilder};

/// Walks the bias kernel once: from `x`, the probability of moving to
/// neighbor `y` is `deg(y)^alpha / sum over n in N(x) of deg(n)^alpha`.
pub fn brwfb_transition<R: Rng>(
    oracle: &mut CrawlOracle<'_>,
    x: usize,
    alpha: f64,
    rng: &mut R,
) -> Result<usize, SamplerError> {
    let (neighbors, weights, total) = transition_weights(oracle, x, alpha)?;
    let mut r = rng.gen::<f64>() * total;
    for (i, &w) in weights.iter().enumerate() {
        if r < w {
            return Ok(neighbors[i]);
        }
        r -= w;
    }
    Ok(*neighbors.last().expect("non-empty neighbor list"))
}

/// The full transition distribution out of `x`, as `(neighbor,
/// probability)` pairs in neighbor order. Probabilities sum to 1.
pub fn transition_probabilities(
    oracle: &mut CrawlOracle<'_>,
    x: usize,
    alpha: f64,
) -> Result<Vec<(usize, f64)>, SamplerError> {
    let (neighbors, weights, total) = transition_weights(oracle, x, alpha)?;
    Ok(neighbors
        .iter()
        .zip(weights)
        .map(|(&y, w)| (y, w / total))
        .collect())
}

fn transition_weights<'g>(
    oracle: &mut CrawlOracle<'g>,
    x: usize,
    alpha: f64,
) -> Result<(&'g [usize], Vec<f64>, f64), SamplerError> {
    let neighbors = oracle.neighbors(x)?;
    if neighbors.is_empty() {
        return Err(SamplerError::Isolated { node: x });
    }
    let mut weights = Vec::with_capacity(neighbors.len());
    let mut total = 0.0;
    for &y in neighbors {
        // every neighbor has degree >= 1 (it is adjacent to x), so the
        // power is finite for any alpha
        let w = (oracle.degree(y)? as f64).powf(alpha);
        weights.push(w);
        total += w;
    }
    Ok((neighbors, weights, total))
}

/// Biased random walk with fly-back: starting from `start` (random when
/// `None`), walk under the `alpha` bias through already-sampled nodes
/// until an unsampled node is found, add it, fly back to the start, and
/// repeat until `h` nodes are sampled.
///
/// A single inner walk that exceeds `max(10 * sampled, 1000)` steps
/// without a discovery flies back and retries; 50 consecutive such trips
/// abort the run.
pub fn brwfb_sample(
    oracle: &mut CrawlOracle<'_>,
    h: usize,
    alpha: f64,
    seed: u64,
    start: Option<usize>,
) -> Result<SampleTrace, SamplerError> {
    require_positive_size(h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = resolve_start(oracle, start, &mut rng)?;

    let mut trace = TraceBuilder::new("brwfb", seed, Some(alpha), h);
    trace.push(start, oracle);
    if trace.len() == h {
        return Ok(trace.finish(oracle));
    }
    if oracle.degree(start)? == 0 {
        return Err(SamplerError::ComponentTooSmall {
            sampled: 1,
            requested: h,
        });
    }

    let mut guard_trips = 0u32;
    while trace.len() < h {
        let walk_cap = (10 * trace.len()).max(1000);
        let mut x = start;
        let mut steps = 0usize;
        loop {
            let y = brwfb_transition(oracle, x, alpha, &mut rng)?;
            steps += 1;
            if trace.push(y, oracle) {
                guard_trips = 0;
                break;
            }
            if steps >= walk_cap {
                guard_trips += 1;
                if guard_trips >= 50 {
                    return Err(SamplerError::ComponentTooSmall {
                        sampled: trace.len(),
                        requested: h,
                    });
                }
                break;
            }
            x = y;
        }
    }
    Ok(trace.finish(oracle))
}
