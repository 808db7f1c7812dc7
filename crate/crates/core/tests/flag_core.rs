use std::collections::BTreeSet;

use gc_fibers::{
    complex_dimension, compositions, monotone_lambda, nonconstant_indices, parse_lambda,
    LambdaSpec, Scalar,
};
use proptest::prelude::*;

fn non_increasing() -> impl Strategy<Value = Vec<i64>> {
    (1usize..9, -20i64..20).prop_flat_map(|(n, top)| {
        prop::collection::vec(0i64..3, n - 1).prop_map(move |drops| {
            let mut v = vec![top];
            for d in drops {
                v.push(v[v.len() - 1] - d);
            }
            v
        })
    })
}

proptest! {
    #[test]
    fn parse_round_trips_values(v in non_increasing()) {
        let spec = LambdaSpec::from_ints(&v).unwrap();
        let again = parse_lambda(spec.values()).unwrap();
        prop_assert_eq!(&again, &spec);
        let text: Vec<String> = spec.values().iter().map(Scalar::to_string).collect();
        let reparsed: LambdaSpec = text.join(",").parse().unwrap();
        prop_assert_eq!(reparsed, spec);
    }

    #[test]
    fn multiplicities_count_equal_runs(v in non_increasing()) {
        let spec = LambdaSpec::from_ints(&v).unwrap();
        let runs = 1 + v.windows(2).filter(|w| w[0] != w[1]).count();
        prop_assert_eq!(spec.multiplicities().len(), runs);
        prop_assert_eq!(spec.multiplicities().iter().sum::<usize>(), v.len());
    }

    #[test]
    fn monotone_lambda_drops_exactly_at_breakpoints(
        n in 2usize..9,
        mask in any::<u16>(),
        m in -5i64..5,
    ) {
        let breaks: Vec<usize> = (1..n).filter(|i| mask & (1 << i) != 0).collect();
        let spec = monotone_lambda(&breaks, n, Scalar::int(m)).unwrap();
        let vals = spec.values();
        prop_assert!(vals.windows(2).all(|w| w[0] >= w[1]));
        let drops: Vec<usize> = (1..n).filter(|&i| vals[i - 1] > vals[i]).collect();
        prop_assert_eq!(drops, breaks);
    }
}

#[test]
fn dimension_equals_nonconstant_count_up_to_eight() {
    for n in 1..=8 {
        for c in compositions(n) {
            let spec = LambdaSpec::unit_gap(&c).unwrap();
            assert_eq!(
                complex_dimension(&spec),
                nonconstant_indices(&spec).nonconstant.len(),
                "{c:?}"
            );
        }
    }
}

#[test]
fn compositions_are_all_distinct() {
    for n in 1..=8 {
        let all = compositions(n);
        assert_eq!(all.len(), 1 << (n - 1));
        let set: BTreeSet<Vec<usize>> = all.into_iter().collect();
        assert_eq!(set.len(), 1 << (n - 1));
    }
}

#[test]
fn dimension_closed_forms() {
    // Full flags have dimension n(n-1)/2 and Gr(k, n) has k(n-k).
    for n in 1..=8 {
        let full = LambdaSpec::unit_gap(&vec![1; n]).unwrap();
        assert_eq!(complex_dimension(&full), n * (n - 1) / 2);
        for k in 1..n {
            let gr = LambdaSpec::unit_gap(&[k, n - k]).unwrap();
            assert_eq!(complex_dimension(&gr), k * (n - k));
        }
    }
}
