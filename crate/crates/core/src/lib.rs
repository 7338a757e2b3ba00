//! Extraction of small representative subgraphs from large graphs.
//!
//! The library is organised around a crawl model: samplers never see the
//! whole graph, only a [`CrawlOracle`] that answers degree and neighbor
//! queries while counting how much of the graph a run has touched. On top
//! of that sit five samplers (a Metropolized random walk, a degree-biased
//! random walk with fly-back, snowball, forest fire, and the calibrated
//! tiny-sample extractor), the metrics used to judge sample quality
//! (CCDF degree-exponent fit, assortativity, average clustering), a
//! Barabási-Albert generator for ground-truth graphs, and a harness that
//! runs convergence and alpha-sweep experiments to CSV.

pub mod generator;
pub mod graph;
pub mod harness;
pub mod metrics;
pub mod oracle;
pub mod samplers;

pub use graph::{
    induced_subgraph, load_edge_list, save_edge_list, write_edge_list, Graph, GraphError,
    InducedSubgraph, LoadedGraph,
};
pub use oracle::{CrawlOracle, OracleFactory, OracleStats, SampleTrace};
