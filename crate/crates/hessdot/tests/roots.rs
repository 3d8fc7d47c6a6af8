use hessdot::roots::{
    enumerate_hessenberg_functions, height_via_chains, hessenberg_of_ideal, ideal_of, index,
    is_abelian, is_abelian_index, is_abelian_pairwise, is_ideal, is_strictly_negative,
    lower_central_series, roots_of,
};
use hessdot::{Error, HessenbergFunction, Root, RootSet};

fn hf(v: &[usize]) -> HessenbergFunction {
    HessenbergFunction::new(v.to_vec()).unwrap()
}

fn ideal(n: usize, pairs: &[(usize, usize)]) -> RootSet {
    RootSet::from_pairs(n, pairs).unwrap()
}

#[test]
fn validation_accepts_worked_examples() {
    assert_eq!(hf(&[3, 4, 5, 6, 6, 6]).n(), 6);
    assert_eq!(hf(&[1, 2, 3, 4]), HessenbergFunction::identity(4));
}

#[test]
fn validation_reports_the_violated_constraint() {
    assert!(matches!(
        HessenbergFunction::new(vec![2, 1]),
        Err(Error::BelowDiagonal { index: 2, value: 1 })
    ));
    assert!(matches!(HessenbergFunction::new(vec![]), Err(Error::Empty)));
    assert!(matches!(
        HessenbergFunction::new(vec![4, 4, 4]),
        Err(Error::OutOfRange { .. })
    ));
    assert!(matches!(
        HessenbergFunction::new(vec![3, 2, 3]),
        Err(Error::NotNondecreasing { .. })
    ));
}

#[test]
fn hessenberg_functions_serialize_as_integer_arrays() {
    let h = hf(&[3, 4, 5, 6, 6, 6]);
    let text = serde_json::to_string(&h).unwrap();
    assert_eq!(text, "[3,4,5,6,6,6]");
    let back: HessenbergFunction = serde_json::from_str(&text).unwrap();
    assert_eq!(back, h);
    assert!(serde_json::from_str::<HessenbergFunction>("[2,1]").is_err());
    assert_eq!(serde_json::to_string(&Root::new(4, 1)).unwrap(), "[4,1]");
}

#[test]
fn negative_part_of_hessenberg_space() {
    let (minus, _) = roots_of(&hf(&[3, 4, 5, 6, 6, 6]));
    assert_eq!(minus.len(), 9);
    assert!(roots_of(&HessenbergFunction::identity(5)).0.is_empty());
    assert_eq!(roots_of(&HessenbergFunction::full(5)).0.len(), 10);
}

#[test]
fn hessenberg_space_contains_all_positive_roots() {
    let h = hf(&[2, 3, 4, 4]);
    let (minus, full) = roots_of(&h);
    assert_eq!(full.len(), minus.len() + 6);
    assert!(full.iter().filter(|r| r.is_positive()).count() == 6);
}

#[test]
fn ideals_of_worked_examples() {
    // i > h(j): h(1) = 3 admits i = 4, 5, 6; h(2) = 4 admits 5, 6; h(3) = 5 admits 6.
    assert_eq!(
        ideal_of(&hf(&[3, 4, 5, 6, 6, 6])),
        ideal(6, &[(4, 1), (5, 1), (6, 1), (5, 2), (6, 2), (6, 3)])
    );
    assert_eq!(
        ideal_of(&hf(&[2, 3, 4, 4])),
        ideal(4, &[(4, 1), (4, 2), (3, 1)])
    );
    assert!(ideal_of(&HessenbergFunction::full(4)).is_empty());
}

#[test]
fn ideal_to_hessenberg_function() {
    assert_eq!(
        hessenberg_of_ideal(&ideal(4, &[(4, 1)])).unwrap(),
        hf(&[3, 4, 4, 4])
    );
    assert_eq!(
        hessenberg_of_ideal(&RootSet::empty(4)).unwrap(),
        hf(&[4, 4, 4, 4])
    );
    assert_eq!(
        hessenberg_of_ideal(&ideal(2, &[(2, 1)])).unwrap(),
        hf(&[1, 2])
    );
}

#[test]
fn non_ideals_are_rejected() {
    // t_3 - t_2 in I forces t_3 - t_1 in I.
    let not_closed = ideal(3, &[(3, 2)]);
    assert!(!is_ideal(&not_closed));
    assert!(matches!(
        hessenberg_of_ideal(&not_closed),
        Err(Error::NotAnIdeal(_))
    ));
    assert!(matches!(
        lower_central_series(&not_closed),
        Err(Error::NotAnIdeal(_))
    ));
}

#[test]
fn round_trip_through_ideals_up_to_eight() {
    for n in 1..=8 {
        for h in enumerate_hessenberg_functions(n) {
            let i = ideal_of(&h);
            assert!(is_ideal(&i), "{h}");
            assert_eq!(hessenberg_of_ideal(&i).unwrap(), h);
        }
    }
}

#[test]
fn ideal_closure_under_adding_negative_roots() {
    for n in 1..=7 {
        for h in enumerate_hessenberg_functions(n) {
            let i = ideal_of(&h);
            for a in i.iter() {
                for b in RootSet::negative_roots(n).iter() {
                    if let Some(s) = a.checked_add(b) {
                        if s.is_negative() {
                            assert!(i.contains(s), "{h}: {a} + {b}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn abelian_examples() {
    assert!(is_abelian(&hf(&[3, 4, 5, 6, 6, 6])));
    assert!(!is_abelian(&hf(&[2, 4, 4, 5, 5])));
    assert!(is_abelian(&HessenbergFunction::full(6)));
    assert_eq!(index(&HessenbergFunction::full(6)), 0);
}

#[test]
fn strictly_negative_examples() {
    assert!(is_strictly_negative(&hf(&[2, 3, 4, 4])));
    assert!(!is_strictly_negative(&hf(&[1, 4, 4, 4])));
    assert!(is_strictly_negative(&HessenbergFunction::full(4)));
}

#[test]
fn the_eight_abelian_functions_for_four() {
    let abelian: Vec<Vec<usize>> = enumerate_hessenberg_functions(4)
        .filter(is_abelian)
        .map(|h| h.values().to_vec())
        .collect();
    assert_eq!(
        abelian,
        vec![
            vec![1, 4, 4, 4],
            vec![2, 2, 4, 4],
            vec![2, 3, 4, 4],
            vec![2, 4, 4, 4],
            vec![3, 3, 3, 4],
            vec![3, 3, 4, 4],
            vec![3, 4, 4, 4],
            vec![4, 4, 4, 4],
        ]
    );
    let strict: Vec<Vec<usize>> = enumerate_hessenberg_functions(4)
        .filter(|h| is_abelian(h) && is_strictly_negative(h))
        .map(|h| h.values().to_vec())
        .collect();
    assert_eq!(strict.len(), 5);
    assert!(!strict.contains(&vec![1, 4, 4, 4]));
    assert!(!strict.contains(&vec![2, 2, 4, 4]));
    assert!(!strict.contains(&vec![3, 3, 3, 4]));
}

#[test]
fn abelian_characterizations_agree_up_to_eight() {
    for n in 1..=8 {
        for h in enumerate_hessenberg_functions(n) {
            assert_eq!(is_abelian_pairwise(&h), is_abelian_index(&h), "{h}");
        }
    }
}

#[test]
fn heights_of_worked_examples() {
    let h = hf(&[2, 4, 4, 5, 5]);
    let report = lower_central_series(&ideal_of(&h)).unwrap();
    assert_eq!(report.height, 2);
    assert_eq!(height_via_chains(&ideal_of(&h)), 2);
    let chain = report.witness_chain.unwrap();
    assert_eq!(chain.len(), 2);
    // Consecutive chain members share an index: t_{q2}-t_{q1}, t_{q3}-t_{q2}.
    assert_eq!(chain[0].i, chain[1].j);

    assert_eq!(
        lower_central_series(&ideal_of(&hf(&[3, 4, 5, 6, 6, 6])))
            .unwrap()
            .height,
        1
    );
    let empty = lower_central_series(&RootSet::empty(4)).unwrap();
    assert_eq!(empty.height, 0);
    assert!(empty.series.is_empty());
    assert!(empty.witness_chain.is_none());
    assert_eq!(height_via_chains(&ideal(3, &[(3, 1)])), 1);
}

#[test]
fn lower_central_series_strictly_shrinks() {
    for n in 1..=7 {
        for h in enumerate_hessenberg_functions(n) {
            let report = lower_central_series(&ideal_of(&h)).unwrap();
            assert_eq!(report.height, report.series.len());
            for pair in report.series.windows(2) {
                assert!(pair[1].len() < pair[0].len());
                assert!(pair[1].iter().all(|r| pair[0].contains(r)));
            }
            assert_eq!(report.height <= 1, is_abelian(&h), "{h}");
        }
    }
}

#[test]
fn enumeration_is_lexicographic() {
    let two: Vec<_> = enumerate_hessenberg_functions(2)
        .map(|h| h.values().to_vec())
        .collect();
    assert_eq!(two, vec![vec![1, 2], vec![2, 2]]);
    assert_eq!(enumerate_hessenberg_functions(4).count(), 14);
    let five: Vec<_> = enumerate_hessenberg_functions(5)
        .map(|h| h.values().to_vec())
        .collect();
    let mut sorted = five.clone();
    sorted.sort();
    assert_eq!(five, sorted);
}
