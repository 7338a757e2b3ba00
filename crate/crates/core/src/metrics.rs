//! Graph properties used to judge sample quality: the CCDF degree
//! exponent, degree assortativity, and the average clustering
//! coefficient.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("empty input")]
    EmptyInput,
    #[error("cannot fit: {usable_points} usable CCDF points (need at least 3)")]
    CannotFit { usable_points: usize },
    #[error("no edges")]
    NoEdges,
    #[error("assortativity undefined: endpoint degrees have zero variance")]
    AssortativityUndefined,
}

/// Log-log least-squares fit of a complementary cumulative degree
/// distribution. `slope` is the degree exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub points_used: usize,
}

/// Complementary cumulative distribution of a degree multiset: for each
/// distinct degree `d` present, the fraction of entries strictly greater
/// than `d`. Sorted by degree ascending; the last fraction is always 0.
pub fn ccdf(degrees: &[usize]) -> Result<Vec<(usize, f64)>, MetricsError> {
    if degrees.is_empty() {
        return Err(MetricsError::EmptyInput);
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &d in degrees {
        *counts.entry(d).or_insert(0) += 1;
    }
    let n = degrees.len() as f64;
    let mut pairs = Vec::with_capacity(counts.len());
    let mut above = 0usize;
    for (&d, &c) in counts.iter().rev() {
        pairs.push((d, above as f64 / n));
        above += c;
    }
    pairs.reverse();
    Ok(pairs)
}

/// Ordinary least squares over `(x, y)` points. Returns
/// `(slope, intercept, r_squared)`, or `None` when the x values have no
/// variance. A perfectly flat `y` fits exactly, so its r-squared is 1.
pub(crate) fn ols(points: &[(f64, f64)]) -> Option<(f64, f64, f64)> {
    let n = points.len() as f64;
    if points.len() < 2 {
        return None;
    }
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for &(x, y) in points {
        sxx += (x - mean_x) * (x - mean_x);
        syy += (y - mean_y) * (y - mean_y);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r_squared = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Some((slope, intercept, r_squared))
}

/// Fits the degree exponent: OLS on `(log10 d, log10 CCDF(d))` over all
/// distinct degrees `d >= 1` with positive CCDF. Degree-0 entries stay in
/// the CCDF denominator but contribute no fit point.
pub fn fit_degree_exponent(degrees: &[usize]) -> Result<ExponentFit, MetricsError> {
    let pairs = ccdf(degrees)?;
    let points: Vec<(f64, f64)> = pairs
        .iter()
        .filter(|&&(d, frac)| d >= 1 && frac > 0.0)
        .map(|&(d, frac)| ((d as f64).log10(), frac.log10()))
        .collect();
    if points.len() < 3 {
        return Err(MetricsError::CannotFit {
            usable_points: points.len(),
        });
    }
    let (slope, intercept, r_squared) = ols(&points).ok_or(MetricsError::CannotFit {
        usable_points: points.len(),
    })?;
    Ok(ExponentFit {
        slope,
        intercept,
        r_squared,
        points_used: points.len(),
    })
}

/// Degree assortativity: Pearson correlation of the degrees at the two
/// ends of an edge, with every undirected edge contributing both
/// orientations. Exact integer accumulation, one division at the end.
pub fn assortativity(graph: &Graph) -> Result<f64, MetricsError> {
    if graph.edge_count() == 0 {
        return Err(MetricsError::NoEdges);
    }
    let mut sum_x = 0u128;
    let mut sum_xx = 0u128;
    let mut sum_xy = 0u128;
    for (u, v) in graph.edges() {
        let du = graph.degree(u) as u128;
        let dv = graph.degree(v) as u128;
        sum_x += du + dv;
        sum_xx += du * du + dv * dv;
        sum_xy += 2 * du * dv;
    }
    let m = 2 * graph.edge_count() as u128;
    let numerator = (m * sum_xy) as i128 - (sum_x * sum_x) as i128;
    let denominator = (m * sum_xx) as i128 - (sum_x * sum_x) as i128;
    if denominator == 0 {
        return Err(MetricsError::AssortativityUndefined);
    }
    Ok(numerator as f64 / denominator as f64)
}

/// Average clustering coefficient: the mean over all nodes of
/// `2 T(v) / (d_v (d_v - 1))`, where `T(v)` counts triangles through `v`.
/// Nodes of degree <= 1 contribute 0.
pub fn avg_clustering(graph: &Graph) -> Result<f64, MetricsError> {
    let n = graph.node_count();
    if n == 0 {
        return Err(MetricsError::EmptyInput);
    }
    let mut total = 0.0;
    for v in 0..n {
        let d = graph.degree(v);
        if d <= 1 {
            continue;
        }
        let nbrs = graph.neighbors(v);
        // sum over u in N(v) of |N(v) ∩ N(u)| counts each triangle
        // through v twice
        let mut closed = 0usize;
        for &u in nbrs {
            closed += sorted_intersection_count(nbrs, graph.neighbors(u));
        }
        total += closed as f64 / (d as f64 * (d as f64 - 1.0));
    }
    Ok(total / n as f64)
}

fn sorted_intersection_count(a: &[usize], b: &[usize]) -> usize {
    let mut i = 0;
    let mut j = 0;
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
