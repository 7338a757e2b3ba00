//! Snowball sampling: seeded breadth-first expansion, truncated exactly
//! at the requested size.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::oracle::{CrawlOracle, SampleTrace};

use super::{require_positive_size, resolve_start, SamplerError, TraceBuilder};

/// Breadth-first search from `start` (random when `None`). Nodes within
/// each frontier are expanded in seeded random order, and each node's
/// newly discovered neighbors are appended in seeded random order, so a
/// truncated last level keeps a random subset rather than the
/// lowest-numbered ids.
pub fn snowball_sample(
    oracle: &mut CrawlOracle<'_>,
    h: usize,
    seed: u64,
    start: Option<usize>,
) -> Result<SampleTrace, SamplerError> {
    require_positive_size(h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = resolve_start(oracle, start, &mut rng)?;

    let mut trace = TraceBuilder::new("snowball", seed, None, h);
    trace.push(start, oracle);
    let mut frontier = vec![start];
    while trace.len() < h {
        if frontier.is_empty() {
            return Err(SamplerError::ComponentTooSmall {
                sampled: trace.len(),
                requested: h,
            });
        }
        frontier.shuffle(&mut rng);
        let mut next = Vec::new();
        'level: for &node in &frontier {
            let mut fresh: Vec<usize> = oracle
                .neighbors(node)?
                .iter()
                .copied()
                .filter(|&y| !trace.contains(y))
                .collect();
            fresh.shuffle(&mut rng);
            for y in fresh {
                trace.push(y, oracle);
                next.push(y);
                if trace.len() == h {
                    break 'level;
                }
            }
        }
        frontier = next;
    }
    Ok(trace.finish(oracle))
}
