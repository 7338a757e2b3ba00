//! Barabási-Albert scale-free graph generation, used as ground truth for
//! the sampling experiments.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
}

/// Configuration for [`generate_ba`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaConfig {
    /// Target node count, at least 3.
    pub nodes: usize,
    /// Edges added per new node. The bootstrap wires node 2 to both
    /// initial nodes, which caps this at 3.
    pub edges_per_node: usize,
    pub seed: u64,
}

impl BaConfig {
    pub fn new(nodes: usize, edges_per_node: usize, seed: u64) -> BaConfig {
        BaConfig {
            nodes,
            edges_per_node,
            seed,
        }
    }

    fn validate(&self) -> Result<(), GeneratorError> {
        if self.nodes < 3 {
            return Err(GeneratorError::InvalidConfig(format!(
                "need at least 3 nodes, got {}",
                self.nodes
            )));
        }
        if self.edges_per_node < 1 || self.edges_per_node > 3 {
            return Err(GeneratorError::InvalidConfig(format!(
                "edges_per_node must be in 1..=3 (node 3 has only 3 predecessors), got {}",
                self.edges_per_node
            )));
        }
        if self.nodes < self.edges_per_node + 1 {
            return Err(GeneratorError::InvalidConfig(format!(
                "need nodes >= edges_per_node + 1, got {} < {}",
                self.nodes,
                self.edges_per_node + 1
            )));
        }
        Ok(())
    }
}

/// Grows a preferential-attachment graph: nodes 0 and 1 start
/// unconnected, node 2 connects to both (this bootstrap makes the
/// degree-proportional attachment probability well defined), and every
/// later node attaches to `edges_per_node` distinct existing nodes
/// chosen with probability proportional to their current degree.
///
/// The result is connected, and with `edges_per_node = 2` has exactly
/// `2 * (nodes - 2)` edges. Same config, same graph.
pub fn generate_ba(cfg: &BaConfig) -> Result<Graph, GeneratorError> {
    cfg.validate()?;
    let n = cfg.nodes;
    let m = cfg.edges_per_node;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(2 + m * n.saturating_sub(3));
    // one entry per unit of degree, so a uniform draw is exactly
    // degree-proportional
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * (2 + m * n.saturating_sub(3)));

    edges.push((2, 0));
    edges.push((2, 1));
    endpoints.extend([2, 0, 2, 1]);

    let mut targets: Vec<usize> = Vec::with_capacity(m);
    for new_node in 3..n {
        targets.clear();
        while targets.len() < m {
            let candidate = endpoints[rng.gen_range(0..endpoints.len())];
            if !targets.contains(&candidate) {
                targets.push(candidate);
            }
        }
        for &t in &targets {
            edges.push((new_node, t));
            endpoints.push(new_node);
            endpoints.push(t);
        }
    }

    Graph::from_edges(n, edges).map_err(|e| GeneratorError::InvalidConfig(e.to_string()))
}
