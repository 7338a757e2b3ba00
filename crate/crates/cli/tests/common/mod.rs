//! Independent brute-force oracles and fixtures for the acceptance
//! suite. These deliberately re-derive every quantity from definitions
//! rather than calling the library's optimized paths.

#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tinysample::graph::Graph;

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

/// Textbook Pearson correlation over both orientations of every edge.
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

/// All-triples triangle enumeration straight from the definition.
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
