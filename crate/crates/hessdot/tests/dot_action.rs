use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use hessdot::betti::permutations;
use hessdot::dot_action::{
    betti_table, csf_oracle, decompose_from_betti, e_positivity_check, e_positivity_report,
    gasharov_check, orientation_checks, palindromic_check, support_check, total_dimension_check,
    zero_one_matrices,
};
use hessdot::partitions::count_ph_tableaux;
use hessdot::roots::{enumerate_hessenberg_functions, is_abelian};
use hessdot::{
    decompose, partitions_of, poincare, DecompositionCache, HessenbergFunction, Int, Partition,
};
use serde_json::json;

fn hf(v: &[usize]) -> HessenbergFunction {
    HessenbergFunction::new(v.to_vec()).unwrap()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Counts 0-1 matrices with the given margins by trying every matrix.
fn brute_zero_one(rows: &[usize], cols: &[usize]) -> u64 {
    let (r, c) = (rows.len(), cols.len());
    let mut count = 0;
    for bits in 0u32..(1 << (r * c)) {
        let entry = |i: usize, j: usize| ((bits >> (i * c + j)) & 1) as usize;
        let row_ok = (0..r).all(|i| (0..c).map(|j| entry(i, j)).sum::<usize>() == rows[i]);
        let col_ok = (0..c).all(|j| (0..r).map(|i| entry(i, j)).sum::<usize>() == cols[j]);
        if row_ok && col_ok {
            count += 1;
        }
    }
    count
}

#[test]
fn zero_one_matrix_goldens() {
    assert_eq!(zero_one_matrices(&[1, 1], &[1, 1]), 2);
    assert_eq!(zero_one_matrices(&[2], &[1, 1]), 1);
    assert_eq!(zero_one_matrices(&[2], &[2]), 0);
    assert_eq!(zero_one_matrices(&[2], &[1]), 0);
}

#[test]
fn zero_one_matrices_match_brute_force() {
    for n in 1..=5 {
        let order = partitions_of(n);
        for lambda in order.list() {
            for mu in order.list() {
                if lambda.len() * mu.len() > 20 {
                    continue;
                }
                assert_eq!(
                    zero_one_matrices(lambda.parts(), mu.parts()),
                    brute_zero_one(lambda.parts(), mu.parts()),
                    "{lambda} {mu}"
                );
            }
        }
    }
}

#[test]
fn single_edge_is_the_trivial_module_in_two_degrees() {
    let dec = decompose(&hf(&[2, 2])).unwrap();
    assert_eq!(dec.degrees(), 2);
    for i in 0..2 {
        assert_eq!(dec.c_at(&part(&[2]), i), 1);
        assert_eq!(dec.c_at(&part(&[1, 1]), i), 0);
        assert_eq!(dec.d_at(&part(&[2]), i), 1);
    }
    assert_eq!(dec.m_gamma, 1);
    assert_eq!(
        dec.to_json(),
        json!({
            "h": [2, 2],
            "m_gamma": 1,
            "coeffs": {
                "c": {"0": {"2": 1}, "1": {"2": 1}},
                "d": {"0": {"2": 1}, "1": {"2": 1}},
            },
        })
    );
}

#[test]
fn edgeless_graph_gives_the_regular_representation() {
    for n in 1..=6 {
        let dec = decompose(&HessenbergFunction::identity(n)).unwrap();
        let ones = Partition::new(vec![1; n]).unwrap();
        assert_eq!(dec.degrees(), 1);
        assert_eq!(dec.m_gamma, n);
        for lambda in &dec.labels {
            assert_eq!(dec.c_at(lambda, 0), Int::from(*lambda == ones), "{lambda}");
        }
        assert_eq!(dec.betti_numbers(), vec![(1..=n as Int).product::<Int>()]);
    }
}

#[test]
fn complete_graph_is_trivial_with_mahonian_grading() {
    for n in 1..=6 {
        let dec = decompose(&HessenbergFunction::full(n)).unwrap();
        let mut mahonian = vec![0 as Int; n * (n - 1) / 2 + 1];
        for w in permutations(n) {
            mahonian[w.length()] += 1;
        }
        let trivial = part(&[n]);
        for (i, &m) in mahonian.iter().enumerate() {
            assert_eq!(dec.c_at(&trivial, i), m);
            for lambda in dec.labels.iter().filter(|l| **l != trivial) {
                assert_eq!(dec.c_at(lambda, i), 0);
            }
        }
    }
}

#[test]
fn specht_multiplicities_count_ph_tableaux() {
    let h = hf(&[2, 3, 4, 5, 5]);
    let dec = decompose(&h).unwrap();
    let lambda = part(&[3, 2]);
    let total: Int = (0..dec.degrees()).map(|i| dec.d_at(&lambda, i)).sum();
    // Multiplicities count tableaux of the dual shape (2,2,1).
    assert_eq!(lambda.dual(), part(&[2, 2, 1]));
    assert_eq!(
        total,
        Int::from(count_ph_tableaux(&h, &lambda.dual()).unwrap())
    );
    assert_eq!(total, 9);
}

#[test]
fn out_of_range_lookups_are_zero() {
    let dec = decompose(&hf(&[2, 3, 3])).unwrap();
    assert_eq!(dec.c_at(&part(&[3]), 99), 0);
    assert_eq!(dec.c_at(&part(&[4]), 0), 0);
    assert_eq!(dec.c_shifted(&part(&[3]), 0, 1), 0);
    assert_eq!(dec.c_shifted(&part(&[3]), 1, 1), dec.c_at(&part(&[3]), 0));
}

#[test]
fn rows_cover_every_degree_and_partition() {
    let dec = decompose(&hf(&[2, 3, 3])).unwrap();
    let rows = dec.rows();
    assert_eq!(rows.len(), dec.degrees() * 3);
    assert_eq!(rows[0].0, 0);
    assert_eq!(rows[0].1, "3");
    let last = rows.last().unwrap();
    assert_eq!((last.0, last.1.as_str()), (dec.degrees() - 1, "1,1,1"));
}

#[test]
fn every_oracle_agrees_up_to_five() {
    for n in 1..=5 {
        for h in enumerate_hessenberg_functions(n) {
            let dec = decompose(&h).unwrap();
            for report in [
                orientation_checks(&h, &dec),
                gasharov_check(&h, &dec),
                total_dimension_check(&h, &dec),
                palindromic_check(&h, &dec),
                support_check(&h, &dec),
                csf_oracle(&h, &dec),
            ] {
                assert!(report.passed, "{}", serde_json::to_string(&report).unwrap());
            }
        }
    }
}

#[test]
fn abelian_cases_are_e_positive() {
    for n in 1..=6 {
        for h in enumerate_hessenberg_functions(n).filter(is_abelian) {
            let dec = decompose(&h).unwrap();
            assert!(e_positivity_report(&dec).is_empty(), "{h}");
            assert!(e_positivity_check(&h, &dec).passed);
        }
    }
}

#[test]
fn negative_coefficients_are_listed() {
    let mut dec = decompose(&hf(&[2, 3, 3])).unwrap();
    dec.c[1][2] = -4;
    let negatives = e_positivity_report(&dec);
    assert_eq!(negatives.len(), 1);
    assert_eq!(negatives[0].lambda, part(&[1, 1, 1]));
    assert_eq!((negatives[0].degree, negatives[0].value), (1, -4));
    assert!(!e_positivity_check(&dec.h.clone(), &dec).passed);
}

#[test]
fn betti_table_rows_follow_partition_order() {
    let h = hf(&[2, 3, 4, 4]);
    let table = betti_table(&h);
    assert_eq!(table.labels, partitions_of(4).list().to_vec());
    let ones = part(&[1, 1, 1, 1]);
    assert_eq!(table.get(&ones).unwrap().total(), 24);
    assert_eq!(table.get(&part(&[4])).unwrap().coeffs, vec![1, 3, 3, 1]);
    assert!(table.get(&part(&[5])).is_none());
    assert_eq!(
        decompose_from_betti(&table).unwrap(),
        decompose(&h).unwrap()
    );
}

#[test]
fn cache_computes_each_function_once() {
    let calls = Arc::new(AtomicUsize::new(0));
    let counter = calls.clone();
    let cache = DecompositionCache::new(Box::new(move |nu, h| {
        counter.fetch_add(1, Ordering::SeqCst);
        poincare(nu, h)
    }));
    let h = hf(&[3, 3, 4, 4]);
    let first = cache.get(&h).unwrap();
    let second = cache.get(&h).unwrap();
    assert!(Arc::ptr_eq(&first, &second));
    assert_eq!(calls.load(Ordering::SeqCst), partitions_of(4).len());
    assert_eq!(*first, decompose(&h).unwrap());
}
