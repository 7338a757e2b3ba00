//! Shared fixtures and independent brute-force oracles for the
//! integration tests.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tinysample::graph::Graph;

/// Random connected graph: a random attachment tree plus `extra` random
/// non-loop edges. Every node is reachable from every other.
pub fn random_connected_graph(n: usize, extra: usize, seed: u64) -> Graph {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n - 1 + extra);
    for v in 1..n {
        edges.push((v, rng.gen_range(0..v)));
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Erdős-Rényi-style random graph (each pair independently with
/// probability `p`). May be disconnected.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Textbook Pearson correlation over the symmetrized endpoint-degree
/// pairs, accumulated in plain f64 — independent of the library's
/// integer-exact implementation. `None` when undefined.
pub fn brute_force_assortativity(g: &Graph) -> Option<f64> {
    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    for (u, v) in g.edges() {
        let du = g.degree(u) as f64;
        let dv = g.degree(v) as f64;
        xs.push(du);
        ys.push(dv);
        xs.push(dv);
        ys.push(du);
    }
    if xs.is_empty() {
        return None;
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// All-triples triangle enumeration and the definition of the average
/// clustering coefficient, in the most literal form possible.
pub fn brute_force_avg_clustering(g: &Graph) -> f64 {
    let n = g.node_count();
    let mut total = 0.0;
    for v in 0..n {
        let d = g.degree(v);
        if d <= 1 {
            continue;
        }
        let mut triangles = 0usize;
        for i in 0..n {
            for j in (i + 1)..n {
                if g.contains_edge(v, i) && g.contains_edge(v, j) && g.contains_edge(i, j) {
                    triangles += 1;
                }
            }
        }
        total += 2.0 * triangles as f64 / (d as f64 * (d as f64 - 1.0));
    }
    total / n as f64
}

/// Number of edges of `g` with both endpoints in `nodes`, counted over
/// every pair.
pub fn brute_force_induced_edge_count(g: &Graph, nodes: &[usize]) -> usize {
    let mut count = 0;
    for (i, &a) in nodes.iter().enumerate() {
        for &b in &nodes[i + 1..] {
            if g.contains_edge(a, b) {
                count += 1;
            }
        }
    }
    count
}
