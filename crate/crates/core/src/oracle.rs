//! The crawl oracle: the only view of a graph that samplers get.
//!
//! A crawler standing on a node can read its degree and fetch its
//! neighbor list, and nothing else — no node count, no edge count, no
//! global properties. The oracle counts neighbor queries and the set of
//! distinct nodes touched, which is what the samplers are ultimately
//! benchmarked on.

use rand::Rng;

use crate::graph::{Graph, GraphError};

/// Snapshot of the oracle counters at some instant of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OracleStats {
    /// Distinct nodes touched by degree or neighbor queries so far.
    pub distinct_visited: u64,
    /// Number of neighbor-list queries issued so far.
    pub neighbor_queries: u64,
}

/// Instrumented degree/neighbor query interface over a borrowed graph.
///
/// Single-owner per sampler run; counters are monotone and never reset.
pub struct CrawlOracle<'g> {
    graph: &'g Graph,
    visited: Vec<bool>,
    distinct_visited: u64,
    neighbor_queries: u64,
}

impl<'g> CrawlOracle<'g> {
    pub fn new(graph: &'g Graph) -> CrawlOracle<'g> {
        CrawlOracle {
            graph,
            visited: vec![false; graph.node_count()],
            distinct_visited: 0,
            neighbor_queries: 0,
        }
    }

    /// Degree of `node`. Marks the node visited; reading the degree of a
    /// node you stand on does not cost a neighbor query.
    pub fn degree(&mut self, node: usize) -> Result<usize, GraphError> {
        self.check(node)?;
        self.mark(node);
        Ok(self.graph.degree(node))
    }

    /// Sorted neighbor list of `node`. Counts one neighbor query and
    /// marks `node` and every returned id as visited.
    pub fn neighbors(&mut self, node: usize) -> Result<&'g [usize], GraphError> {
        self.check(node)?;
        self.neighbor_queries += 1;
        self.mark(node);
        let list = self.graph.neighbors(node);
        for &y in list {
            self.mark(y);
        }
        Ok(list)
    }

    /// A uniformly random node id, modeling the crawler's ability to pick
    /// a seed from the known part of the network. Does not mark anything
    /// visited and reveals nothing beyond the returned id.
    pub fn random_start<R: Rng>(&self, rng: &mut R) -> usize {
        rng.gen_range(0..self.graph.node_count())
    }

    pub fn stats(&self) -> OracleStats {
        OracleStats {
            distinct_visited: self.distinct_visited,
            neighbor_queries: self.neighbor_queries,
        }
    }

    fn check(&self, node: usize) -> Result<(), GraphError> {
        if node >= self.graph.node_count() {
            return Err(GraphError::InvalidNode {
                node,
                node_count: self.graph.node_count(),
            });
        }
        Ok(())
    }

    fn mark(&mut self, node: usize) {
        if !self.visited[node] {
            self.visited[node] = true;
            self.distinct_visited += 1;
        }
    }
}

/// Hands out fresh oracles over a shared graph, one per sampler stage or
/// replicate.
#[derive(Clone, Copy)]
pub struct OracleFactory<'g> {
    graph: &'g Graph,
}

impl<'g> OracleFactory<'g> {
    pub fn new(graph: &'g Graph) -> OracleFactory<'g> {
        OracleFactory { graph }
    }

    pub fn oracle(&self) -> CrawlOracle<'g> {
        CrawlOracle::new(self.graph)
    }
}

/// Ordered record of one sampler run: the distinct nodes in discovery
/// order plus oracle counter snapshots.
#[derive(Debug, Clone)]
pub struct SampleTrace {
    /// Distinct node ids in discovery order.
    pub nodes: Vec<usize>,
    /// Oracle counters at completion.
    pub stats: OracleStats,
    /// Oracle counters at the moment each node was discovered
    /// (`discovery_stats[i]` corresponds to `nodes[i]`).
    pub discovery_stats: Vec<OracleStats>,
    pub sampler: String,
    pub seed: u64,
    pub alpha: Option<f64>,
}

impl SampleTrace {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}
