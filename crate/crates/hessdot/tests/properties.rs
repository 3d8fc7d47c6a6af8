use hessdot::betti::{is_shortest_coset_rep, shortest_coset_decompose};
use hessdot::dot_action::{total_dimension_check, zero_one_matrices};
use hessdot::roots::{hessenberg_of_ideal, ideal_of};
use hessdot::{
    build_graph, decompose, partitions_of, poincare, Composition, HessenbergFunction, Permutation,
};
use proptest::prelude::*;

/// Arbitrary Hessenberg functions on `[n]` for `1 <= n <= max_n`.
fn hessenberg(max_n: usize) -> impl Strategy<Value = HessenbergFunction> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(1..=n, n))
        .prop_map(|raw| {
            let mut prev = 0;
            let values = raw
                .iter()
                .enumerate()
                .map(|(k, &v)| {
                    prev = prev.max(v).max(k + 1);
                    prev
                })
                .collect();
            HessenbergFunction::new(values).expect("clamped to a valid function")
        })
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).expect("shuffle of 1..=n"))
}

proptest! {
    #[test]
    fn ideals_round_trip(h in hessenberg(9)) {
        prop_assert_eq!(hessenberg_of_ideal(&ideal_of(&h)).unwrap(), h);
    }

    #[test]
    fn decomposition_reproduces_betti_numbers(h in hessenberg(6)) {
        let dec = decompose(&h).unwrap();
        prop_assert!(total_dimension_check(&h, &dec).passed);
        let regular = poincare(&Composition::new(vec![1; h.n()]), &h).unwrap();
        let betti: Vec<i64> = dec.betti_numbers().iter().map(|&b| b as i64).collect();
        prop_assert_eq!(betti, regular.coeffs);
    }

    #[test]
    fn edges_match_the_negative_part(h in hessenberg(9)) {
        prop_assert_eq!(build_graph(&h).edges().len(), h.dim());
    }

    #[test]
    fn composition_and_inverse(w in permutation(9)) {
        let e = Permutation::identity(w.n());
        prop_assert_eq!(w.compose(&w.inverse()), e.clone());
        prop_assert_eq!(w.inverse().compose(&w), e);
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(w.inversion_set().len(), w.length());
    }

    #[test]
    fn coset_factorization(w in permutation(9), split in 0usize..8) {
        prop_assume!(w.n() >= 2);
        let nu1 = 1 + split % (w.n() - 1);
        let (y, z) = shortest_coset_decompose(&w, nu1).unwrap();
        prop_assert!(is_shortest_coset_rep(&z, nu1));
        prop_assert!(y.truncate(nu1 + 1).is_some());
        prop_assert_eq!(y.compose(&z), w.clone());
        prop_assert_eq!(y.length() + z.length(), w.length());
    }

    #[test]
    fn zero_one_matrices_are_transpose_symmetric(n in 1usize..=7, a in 0usize..100, b in 0usize..100) {
        let order = partitions_of(n);
        let lambda = order.get(a % order.len());
        let mu = order.get(b % order.len());
        prop_assert_eq!(
            zero_one_matrices(lambda.parts(), mu.parts()),
            zero_one_matrices(mu.parts(), lambda.parts())
        );
    }
}
