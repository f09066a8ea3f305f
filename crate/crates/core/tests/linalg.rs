use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use nutkit::graph::{parse_graph6, write_graph6, Graph};
use nutkit::linalg::{adjacency_matrix, cyclic_corner_determinant, determinant, kernel_basis, rank, IntegerMatrix};
use nutkit::nut::nullity;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn matrix_strategy() -> impl Strategy<Value = IntegerMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-4i64..=4, r * c)
            .prop_map(move |xs| IntegerMatrix::new(r, c, xs.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

/// Odd-order matrix on the cyclic band with random entries.
fn cyclic_strategy() -> impl Strategy<Value = IntegerMatrix> {
    prop_oneof![Just(3usize), Just(5), Just(7)].prop_flat_map(|n| {
        proptest::collection::vec(-9i64..=9, 2 * n).prop_map(move |xs| {
            let mut m = IntegerMatrix::zeros(n, n);
            for i in 0..n {
                m.set(i, (i + 1) % n, BigInt::from(xs[2 * i]));
                m.set((i + 1) % n, i, BigInt::from(xs[2 * i + 1]));
            }
            m
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy(20)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn rank_nullity_on_adjacency(g in graph_strategy(12)) {
        let a = adjacency_matrix(&g);
        let basis = kernel_basis(&a);
        prop_assert_eq!(rank(&a) + basis.len(), g.order());
        prop_assert_eq!(nullity(&g).eta, basis.len());
        for v in &basis {
            prop_assert!(a.mul_vector(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_nullity_on_integer_matrices(m in matrix_strategy()) {
        let basis = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + basis.len(), m.cols());
        for v in &basis {
            prop_assert!(m.mul_vector(v).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(kernel_basis(&m), basis);
    }

    #[test]
    fn graph6_header_is_accepted(g in graph_strategy(8)) {
        let mut text = b">>graph6<<".to_vec();
        text.extend(write_graph6(&g).unwrap());
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cyclic_determinant_matches_bareiss(m in cyclic_strategy()) {
        prop_assert_eq!(cyclic_corner_determinant(&m).unwrap(), determinant(&m).unwrap());
    }
}
