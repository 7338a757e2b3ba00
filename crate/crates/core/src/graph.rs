//! Undirected simple graph storage, edge-list I/O, and induced subgraphs.
//!
//! A [`Graph`] is immutable after construction and keeps one sorted
//! adjacency list per node, so membership tests are `O(log d)` and
//! iteration order is deterministic.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse failure at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("no edges")]
    NoEdges,
    #[error("invalid node id {node} (graph has {node_count} nodes)")]
    InvalidNode { node: usize, node_count: usize },
}

/// Immutable undirected simple graph over node ids `0..node_count`.
///
/// Invariants held by construction: no self-loops, no duplicate edges,
/// every adjacency list sorted ascending, and `y in adj[x]` iff
/// `x in adj[y]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a canonical graph from an edge list over ids `0..node_count`.
    ///
    /// Self-loops and duplicate edges are dropped silently; use
    /// [`Graph::from_edges_counted`] when the drop counts matter.
    pub fn from_edges(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let (graph, _, _) = Graph::from_edges_counted(node_count, edges)?;
        Ok(graph)
    }

    /// Like [`Graph::from_edges`] but also reports how many self-loops and
    /// duplicate edges were dropped during canonicalization.
    pub fn from_edges_counted(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<(Graph, u64, u64), GraphError> {
        let mut cleaned: Vec<(usize, usize)> = Vec::new();
        let mut self_loops = 0u64;
        for (a, b) in edges {
            if a >= node_count {
                return Err(GraphError::InvalidNode { node: a, node_count });
            }
            if b >= node_count {
                return Err(GraphError::InvalidNode { node: b, node_count });
            }
            if a == b {
                self_loops += 1;
                continue;
            }
            cleaned.push((a.min(b), a.max(b)));
        }
        cleaned.sort_unstable();
        let before = cleaned.len();
        cleaned.dedup();
        let duplicates = (before - cleaned.len()) as u64;

        let mut adjacency = vec![Vec::new(); node_count];
        for &(a, b) in &cleaned {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok((
            Graph {
                adjacency,
                edge_count: cleaned.len(),
            },
            self_loops,
            duplicates,
        ))
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        a < self.node_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Degree of every node, indexed by node id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(|l| l.len()).collect()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count() == 0 {
            return true;
        }
        self.component_size_from(0) == self.node_count()
    }

    pub fn largest_component_size(&self) -> usize {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut best = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut size = 0;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(x) = queue.pop_front() {
                size += 1;
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            best = best.max(size);
        }
        best
    }

    fn component_size_from(&self, start: usize) -> usize {
        let mut seen = vec![false; self.node_count()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut size = 0;
        while let Some(x) = queue.pop_front() {
            size += 1;
            for &y in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        size
    }
}

/// Result of loading an edge-list file: the canonical graph plus the map
/// from compacted internal ids back to the ids found in the file.
#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `external_ids[internal]` is the id the file used for that node.
    pub external_ids: Vec<u64>,
    pub self_loops_dropped: u64,
    pub duplicates_dropped: u64,
    internal: HashMap<u64, usize>,
}

impl LoadedGraph {
    /// Wraps an in-memory graph as if it had been loaded from a file whose
    /// ids already were `0..n`.
    pub fn from_graph(graph: Graph) -> LoadedGraph {
        let external_ids: Vec<u64> = (0..graph.node_count() as u64).collect();
        let internal = external_ids.iter().map(|&e| (e, e as usize)).collect();
        LoadedGraph {
            graph,
            external_ids,
            self_loops_dropped: 0,
            duplicates_dropped: 0,
            internal,
        }
    }

    pub fn internal_id(&self, external: u64) -> Option<usize> {
        self.internal.get(&external).copied()
    }

    pub fn external_id(&self, internal: usize) -> u64 {
        self.external_ids[internal]
    }
}

/// Loads an undirected edge list: one edge per line, two whitespace
/// separated non-negative integers, `#` lines ignored.
///
/// Ids are compacted to `0..n` in first-appearance order. Self-loops are
/// dropped (counted), duplicate edges are collapsed (counted). A file
/// that yields no edges at all is an error.
pub fn load_edge_list(path: impl AsRef<Path>) -> Result<LoadedGraph, GraphError> {
    let text = fs::read_to_string(path)?;
    let mut internal: HashMap<u64, usize> = HashMap::new();
    let mut external_ids: Vec<u64> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut self_loops = 0u64;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let a = parse_id(tokens.next(), line_no)?;
        let b = parse_id(tokens.next(), line_no)?;
        if let Some(extra) = tokens.next() {
            return Err(GraphError::Parse {
                line: line_no,
                message: format!("unexpected trailing token '{extra}'"),
            });
        }
        let a = intern(a, &mut internal, &mut external_ids);
        let b = intern(b, &mut internal, &mut external_ids);
        if a == b {
            self_loops += 1;
            continue;
        }
        edges.push((a, b));
    }

    if edges.is_empty() {
        return Err(GraphError::NoEdges);
    }
    let (graph, extra_loops, duplicates) = Graph::from_edges_counted(external_ids.len(), edges)?;
    Ok(LoadedGraph {
        graph,
        external_ids,
        self_loops_dropped: self_loops + extra_loops,
        duplicates_dropped: duplicates,
        internal,
    })
}

fn parse_id(token: Option<&str>, line_no: usize) -> Result<u64, GraphError> {
    let token = token.ok_or_else(|| GraphError::Parse {
        line: line_no,
        message: "expected two node ids".into(),
    })?;
    token.parse::<u64>().map_err(|e| GraphError::Parse {
        line: line_no,
        message: format!("bad node id '{token}': {e}"),
    })
}

fn intern(id: u64, internal: &mut HashMap<u64, usize>, external_ids: &mut Vec<u64>) -> usize {
    *internal.entry(id).or_insert_with(|| {
        external_ids.push(id);
        external_ids.len() - 1
    })
}

/// Writes the graph in the same edge-list format [`load_edge_list`] reads:
/// each edge once as `u v` with `u < v`, ascending.
pub fn write_edge_list(graph: &Graph, mut writer: impl Write) -> Result<(), GraphError> {
    let mut buf = String::new();
    for (u, v) in graph.edges() {
        buf.clear();
        writeln!(buf, "{u} {v}").expect("write to string");
        writer.write_all(buf.as_bytes())?;
    }
    Ok(())
}

pub fn save_edge_list(graph: &Graph, path: impl AsRef<Path>) -> Result<(), GraphError> {
    let file = fs::File::create(path)?;
    let mut writer = std::io::BufWriter::new(file);
    write_edge_list(graph, &mut writer)?;
    writer.flush()?;
    Ok(())
}

/// The subgraph induced by a node set, with ids compacted to `0..k` in
/// ascending order of the old ids.
#[derive(Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `node_map[new]` is the old id; sorted ascending.
    pub node_map: Vec<usize>,
}

impl InducedSubgraph {
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.node_map.binary_search(&old).ok()
    }

    pub fn old_id(&self, new: usize) -> usize {
        self.node_map[new]
    }
}

/// Extracts the subgraph of `graph` induced by `nodes`: all selected
/// nodes plus every edge with both endpoints selected. Duplicate ids in
/// `nodes` are tolerated.
pub fn induced_subgraph(graph: &Graph, nodes: &[usize]) -> Result<InducedSubgraph, GraphError> {
    let mut node_map: Vec<usize> = nodes.to_vec();
    node_map.sort_unstable();
    node_map.dedup();
    if let Some(&bad) = node_map.iter().find(|&&x| x >= graph.node_count()) {
        return Err(GraphError::InvalidNode {
            node: bad,
            node_count: graph.node_count(),
        });
    }

    let mut edges = Vec::new();
    for (new_u, &old_u) in node_map.iter().enumerate() {
        for &old_v in graph.neighbors(old_u) {
            if old_v <= old_u {
                continue;
            }
            if let Ok(new_v) = node_map.binary_search(&old_v) {
                edges.push((new_u, new_v));
            }
        }
    }
    let graph = Graph::from_edges(node_map.len(), edges)?;
    Ok(InducedSubgraph { graph, node_map })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load_str(contents: &str) -> Result<LoadedGraph, GraphError> {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(contents.as_bytes()).unwrap();
        load_edge_list(file.path())
    }

    #[test]
    fn load_simple_path() {
        let loaded = load_str("0 1\n1 2\n").unwrap();
        assert_eq!(loaded.graph.node_count(), 3);
        assert_eq!(loaded.graph.edge_count(), 2);
        assert_eq!(loaded.graph.neighbors(0), &[1]);
        assert_eq!(loaded.graph.neighbors(1), &[0, 2]);
        assert_eq!(loaded.graph.neighbors(2), &[1]);
    }

    #[test]
    fn load_collapses_duplicates_and_drops_self_loops() {
        let loaded = load_str("0 1\n1 0\n0 0\n").unwrap();
        assert_eq!(loaded.graph.node_count(), 2);
        assert_eq!(loaded.graph.edge_count(), 1);
        assert_eq!(loaded.self_loops_dropped, 1);
        assert_eq!(loaded.duplicates_dropped, 1);
    }

    #[test]
    fn load_compacts_ids_by_first_appearance() {
        let loaded = load_str("7 9\n9 3\n").unwrap();
        assert_eq!(loaded.external_ids, vec![7, 9, 3]);
        assert_eq!(loaded.internal_id(7), Some(0));
        assert_eq!(loaded.internal_id(9), Some(1));
        assert_eq!(loaded.internal_id(3), Some(2));
        assert_eq!(loaded.graph.neighbors(0), &[1]);
        assert_eq!(loaded.graph.neighbors(1), &[0, 2]);
        assert_eq!(loaded.graph.neighbors(2), &[1]);
    }

    #[test]
    fn load_rejects_garbage_with_line_number() {
        let err = load_str("0 1\nnot an edge\n").unwrap_err();
        match err {
            GraphError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn load_rejects_empty_file() {
        assert!(matches!(load_str(""), Err(GraphError::NoEdges)));
        assert!(matches!(load_str("# only comments\n"), Err(GraphError::NoEdges)));
    }

    #[test]
    fn induced_triangle_from_triangle_plus_pendant() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (3, 0)]).unwrap();
        let sub = induced_subgraph(&g, &[0, 1, 2]).unwrap();
        assert_eq!(sub.graph.node_count(), 3);
        assert_eq!(sub.graph.edge_count(), 3);
    }

    #[test]
    fn induced_full_node_set_is_identity() {
        let g = Graph::from_edges(5, [(0, 3), (3, 4), (1, 2), (2, 4)]).unwrap();
        let sub = induced_subgraph(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(sub.graph, g);
        assert_eq!(sub.node_map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn induced_non_adjacent_pair_has_no_edges() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let sub = induced_subgraph(&g, &[0, 2]).unwrap();
        assert_eq!(sub.graph.node_count(), 2);
        assert_eq!(sub.graph.edge_count(), 0);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            induced_subgraph(&g, &[0, 7]),
            Err(GraphError::InvalidNode { node: 7, .. })
        ));
    }

    #[test]
    fn save_then_load_preserves_structure_through_id_map() {
        let g = Graph::from_edges(4, [(0, 2), (1, 2), (2, 3)]).unwrap();
        let mut bytes = Vec::new();
        write_edge_list(&g, &mut bytes).unwrap();
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(&bytes).unwrap();
        let loaded = load_edge_list(file.path()).unwrap();
        assert_eq!(loaded.graph.node_count(), g.node_count());
        assert_eq!(loaded.graph.edge_count(), g.edge_count());
        for (u, v) in g.edges() {
            let lu = loaded.internal_id(u as u64).unwrap();
            let lv = loaded.internal_id(v as u64).unwrap();
            assert!(loaded.graph.contains_edge(lu, lv));
        }
    }
}
