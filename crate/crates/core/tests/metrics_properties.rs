mod common;

use proptest::prelude::*;

use tinysample::metrics::{assortativity, avg_clustering, ccdf, fit_degree_exponent, MetricsError};

use common::{brute_force_assortativity, brute_force_avg_clustering, random_graph};

proptest! {
    #[test]
    fn fit_is_invariant_under_count_scaling(
        degrees in proptest::collection::vec(0usize..40, 4..60),
        k in 2usize..6,
    ) {
        let base = fit_degree_exponent(&degrees);
        let scaled: Vec<usize> = degrees
            .iter()
            .flat_map(|&d| std::iter::repeat_n(d, k))
            .collect();
        let rep = fit_degree_exponent(&scaled);
        match (base, rep) {
            (Ok(a), Ok(b)) => {
                prop_assert!((a.slope - b.slope).abs() < 1e-9);
                prop_assert!((a.intercept - b.intercept).abs() < 1e-9);
                prop_assert!((a.r_squared - b.r_squared).abs() < 1e-9);
                prop_assert_eq!(a.points_used, b.points_used);
            }
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "scaling changed fitability: {a:?} vs {b:?}"),
        }
    }

    #[test]
    fn assortativity_matches_brute_force_and_stays_in_range(
        n in 2usize..30,
        p in 0.05f64..0.6,
        seed in 0u64..2000,
    ) {
        let g = random_graph(n, p, seed);
        match (assortativity(&g), brute_force_assortativity(&g)) {
            (Ok(fast), Some(brute)) => {
                prop_assert!((-1.0..=1.0).contains(&fast), "out of range: {fast}");
                prop_assert!((fast - brute).abs() < 1e-10, "{fast} vs {brute}");
            }
            (Err(MetricsError::NoEdges), None) => {}
            (Err(MetricsError::AssortativityUndefined), None) => {}
            (a, b) => prop_assert!(false, "disagree on definedness: {a:?} vs {b:?}"),
        }
    }

    #[test]
    fn clustering_matches_brute_force_and_stays_in_range(
        n in 1usize..30,
        p in 0.05f64..0.6,
        seed in 0u64..2000,
    ) {
        let g = random_graph(n, p, seed);
        let fast = avg_clustering(&g).unwrap();
        let brute = brute_force_avg_clustering(&g);
        prop_assert!((0.0..=1.0).contains(&fast));
        prop_assert!((fast - brute).abs() < 1e-12, "{fast} vs {brute}");
    }

    #[test]
    fn ccdf_is_non_increasing_and_anchored(
        degrees in proptest::collection::vec(0usize..30, 1..60),
    ) {
        let pairs = ccdf(&degrees).unwrap();
        prop_assert!(pairs[0].1 < 1.0, "first fraction must exclude its own degree");
        prop_assert_eq!(pairs.last().unwrap().1, 0.0);
        for w in pairs.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
            prop_assert!(w[0].1 >= w[1].1);
        }
    }
}

/// The brute-force Pearson with the two orientation lists swapped is the
/// same number, and the library value agrees with both.
#[test]
fn assortativity_is_orientation_symmetric() {
    for seed in 0..50u64 {
        let g = random_graph(15, 0.3, seed);
        if let Ok(v) = assortativity(&g) {
            let brute = brute_force_assortativity(&g).unwrap();
            assert!((v - brute).abs() < 1e-10);
        }
    }
}
