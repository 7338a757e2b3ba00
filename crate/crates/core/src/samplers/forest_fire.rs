//! Forest-fire sampling: a probabilistic breadth-first burn where each
//! burning node ignites a geometric number of its unburned neighbors.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use std::collections::VecDeque;

use crate::oracle::{CrawlOracle, SampleTrace};

use super::{require_positive_size, resolve_start, SamplerError, TraceBuilder};

/// Number of neighbors a burning node ignites: geometric on
/// `{0, 1, 2, ...}` with success probability `1 - pf`, mean
/// `pf / (1 - pf)`.
fn burn_count<R: Rng>(rng: &mut R, pf: f64) -> usize {
    let u: f64 = rng.gen();
    if u <= 0.0 {
        return usize::MAX;
    }
    let k = (u.ln() / pf.ln()).floor();
    if k >= usize::MAX as f64 {
        usize::MAX
    } else {
        k as usize
    }
}

/// Burns outward from `start` (random when `None`) until `h` nodes are
/// sampled. Each dequeued node draws a geometric burn count and ignites
/// that many of its unburned neighbors, chosen uniformly without
/// replacement.
///
/// When the fire dies before reaching `h`, it reignites from a uniformly
/// random already-sampled node; after 100 consecutive reignitions that
/// burn nothing, it restarts from a random unburned neighbor of the
/// sample (the reachable frontier), which guarantees progress while the
/// component has nodes left.
pub fn forest_fire_sample(
    oracle: &mut CrawlOracle<'_>,
    h: usize,
    pf: f64,
    seed: u64,
    start: Option<usize>,
) -> Result<SampleTrace, SamplerError> {
    require_positive_size(h)?;
    if !(pf > 0.0 && pf < 1.0) {
        return Err(SamplerError::InvalidParameter(format!(
            "forward burning probability must be in (0, 1), got {pf}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = resolve_start(oracle, start, &mut rng)?;

    let mut trace = TraceBuilder::new("forestfire", seed, None, h);
    trace.push(start, oracle);
    let mut queue: VecDeque<usize> = VecDeque::from([start]);
    let mut dead_reignitions = 0u32;

    while trace.len() < h {
        let Some(node) = queue.pop_front() else {
            if dead_reignitions >= 100 {
                let frontier = unburned_frontier(oracle, &trace)?;
                if frontier.is_empty() {
                    return Err(SamplerError::ComponentTooSmall {
                        sampled: trace.len(),
                        requested: h,
                    });
                }
                let fresh = frontier[rng.gen_range(0..frontier.len())];
                trace.push(fresh, oracle);
                queue.push_back(fresh);
                dead_reignitions = 0;
            } else {
                let again = trace.nodes()[rng.gen_range(0..trace.len())];
                queue.push_back(again);
                dead_reignitions += 1;
            }
            continue;
        };

        let k = burn_count(&mut rng, pf);
        if k == 0 {
            continue;
        }
        let mut unburned: Vec<usize> = oracle
            .neighbors(node)?
            .iter()
            .copied()
            .filter(|&y| !trace.contains(y))
            .collect();
        if unburned.is_empty() {
            continue;
        }
        unburned.shuffle(&mut rng);
        for &y in unburned.iter().take(k) {
            trace.push(y, oracle);
            queue.push_back(y);
            dead_reignitions = 0;
            if trace.len() == h {
                break;
            }
        }
    }
    Ok(trace.finish(oracle))
}

/// All unburned neighbors of the sample, sorted and deduplicated.
fn unburned_frontier(
    oracle: &mut CrawlOracle<'_>,
    trace: &TraceBuilder,
) -> Result<Vec<usize>, SamplerError> {
    let mut frontier = Vec::new();
    for &s in trace.nodes() {
        for &y in oracle.neighbors(s)? {
            if !trace.contains(y) {
                frontier.push(y);
            }
        }
    }
    frontier.sort_unstable();
    frontier.dedup();
    Ok(frontier)
}
