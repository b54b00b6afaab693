use num_integer::Integer;
use proptest::prelude::*;
use quartic_circulant::arithmetic::{psi_cardinality, psi_intersection_cardinality};
use quartic_circulant::circulant::graphs_of_order;
use quartic_circulant::oracle::{kernel, kernel_dimension, kernel_with, same_span, PivotOrder};
use quartic_circulant::{nullity, NullityCase, QuarticCirculant};

fn graph(max_n: u64) -> impl Strategy<Value = QuarticCirculant> {
    (5..=max_n)
        .prop_flat_map(|n| {
            let top = (n - 1) / 2;
            (Just(n), 1..top).prop_flat_map(move |(n, p)| (Just(n), Just(p), p + 1..=top))
        })
        .prop_map(|(n, p, q)| QuarticCirculant::new(n as i64, p as i64, q as i64).unwrap())
}

fn shift(v: &[i64], by: usize) -> Vec<i64> {
    let n = v.len();
    (0..n).map(|i| v[(i + n - by % n) % n]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjacency_is_symmetric_and_quartic(g in graph(300)) {
        let a = g.adjacency_matrix();
        prop_assert!(a.is_symmetric());
        for row in a.rows() {
            prop_assert_eq!(row.iter().sum::<i64>(), 4);
            prop_assert!(row.iter().all(|&x| x == 0 || x == 1));
        }
        prop_assert!((0..g.order()).all(|i| a.get(i, i) == 0));
    }

    #[test]
    fn kernel_is_closed_under_cyclic_shift(g in graph(90), by in 1usize..90) {
        let k = kernel(&g.adjacency_matrix()).integer_basis();
        let shifted: Vec<Vec<i64>> = k.iter().map(|v| shift(v, by)).collect();
        prop_assert!(same_span(&k, &shifted));
    }

    #[test]
    fn formula_matches_elimination(g in graph(160)) {
        prop_assert_eq!(nullity(&g).nullity, kernel_dimension(&g.adjacency_matrix()) as u64);
    }

    #[test]
    fn shuffled_pivots_give_the_same_kernel(g in graph(80), seed in any::<u64>()) {
        let a = g.adjacency_matrix();
        let plain = kernel(&a);
        let shuffled = kernel_with(&a, PivotOrder::Shuffled(seed));
        prop_assert_eq!(plain.dimension, shuffled.dimension);
        prop_assert!(same_span(&plain.integer_basis(), &shuffled.integer_basis()));
    }

    #[test]
    fn breakdown_is_consistent(g in graph(10_000)) {
        let b = nullity(&g);
        prop_assert_eq!(b.nullity, b.nullity_from_case());
        prop_assert_eq!(b.eta3, b.eta1.gcd(&b.eta2));
        prop_assert!(b.nullity <= g.n());
        if b.case == NullityCase::SumMinusGcd {
            prop_assert!(b.eta1 + b.eta2 > b.eta3);
        }
    }

    #[test]
    fn psi_counts_are_bounded(n in 1i64..500, y in 1i64..1000, z in 1i64..1000) {
        let both = psi_intersection_cardinality(n, y, z).unwrap();
        let one = psi_cardinality(n, y).unwrap();
        prop_assert!(one <= n.gcd(&y) as u64);
        prop_assert!(both <= one.min(psi_cardinality(n, z).unwrap()));
    }
}

#[test]
fn gcd_connectivity_matches_breadth_first_search() {
    for n in 5..=50 {
        for g in graphs_of_order(n) {
            assert_eq!(
                g.is_connected(),
                g.adjacency_matrix().is_connected_bfs(),
                "{g}"
            );
        }
    }
}

#[test]
fn zero_eigenvalue_count_matches_kernel_dimension() {
    for n in 5..=50 {
        for g in graphs_of_order(n) {
            let zeros = g.spectrum().iter().filter(|e| e.is_zero()).count();
            assert_eq!(zeros, kernel_dimension(&g.adjacency_matrix()), "{g}");
            for e in g.spectrum() {
                assert_eq!(e.is_zero(), e.approx.abs() < 1e-9, "{g} at t = {}", e.t);
            }
        }
    }
}
