//! Walk-counting ground truth: frozen reference values and table invariants.

use num_rational::BigRational as Rat;
use num_traits::{One, Signed, Zero};
use oracle::{walk_count_at, walk_counts, EndpointFilter, WalkModel, WalkTable};

fn rats(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| Rat::from_integer(v.into())).collect()
}

#[test]
fn simple_walk_first_step() {
    // Only N and E keep the walk in the quadrant.
    let model = WalkModel::unweighted(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], 2).unwrap();
    let counts = walk_counts(&model, &EndpointFilter::Anywhere, 1).unwrap();
    assert_eq!(counts, rats(&[1, 2]));
}

#[test]
fn gouyou_beauchamps_balanced_excursions_vanish_at_odd_length() {
    // Steps E, W, NW, SE with weights (1/a, a, b/a, a/b) at a = b = 1.
    let one = Rat::one();
    let model = WalkModel::new(
        vec![
            (vec![1, 0], one.clone()),
            (vec![-1, 0], one.clone()),
            (vec![-1, 1], one.clone()),
            (vec![1, -1], one),
        ],
        vec![0, 0],
    )
    .unwrap();
    let counts = walk_counts(&model, &EndpointFilter::Origin, 13).unwrap();
    for (k, c) in counts.iter().enumerate() {
        if k % 2 == 1 {
            assert!(c.is_zero(), "odd length {k} must have no excursions");
        }
    }
    // Even lengths do occur (sanity that the filter is not trivially zero).
    assert!(!counts[2].is_zero());
}

#[test]
fn tandem_style_model_matches_frozen_reference() {
    // {NE, NW, S} in the quarter plane; values frozen from an independent
    // dynamic program.
    let model = WalkModel::unweighted(&[&[1, 1], &[-1, 1], &[0, -1]], 2).unwrap();
    let anywhere = walk_counts(&model, &EndpointFilter::Anywhere, 12).unwrap();
    assert_eq!(
        anywhere,
        rats(&[1, 1, 3, 7, 19, 49, 139, 379, 1079, 3011, 8681, 24641, 71303])
    );
    let origin = walk_counts(&model, &EndpointFilter::Origin, 12).unwrap();
    assert_eq!(origin, rats(&[1, 0, 0, 0, 2, 0, 0, 0, 28, 0, 0, 0, 660]));
}

#[test]
fn table_satisfies_structural_invariants() {
    let model = WalkModel::unweighted(&[&[1, 1], &[-1, 1], &[0, -1]], 2).unwrap();
    let table = WalkTable::build(&model, 8).unwrap();
    assert_eq!(table.count(&[0, 0], 0), Rat::one());
    assert!(table.verify_recurrence());
    for len in 0..=8 {
        for (_, c) in table.endpoints_at(len) {
            assert!(!c.is_negative());
        }
    }
}

#[test]
fn axis_filters_agree_between_engines_and_table() {
    let model = WalkModel::unweighted(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]], 2).unwrap();
    let table = WalkTable::build(&model, 10).unwrap();
    for filter in [
        EndpointFilter::AxesZero(vec![0]),
        EndpointFilter::AxesZero(vec![1]),
        EndpointFilter::AxesZero(vec![0, 1]),
    ] {
        assert_eq!(
            table.filtered(&filter),
            walk_counts(&model, &filter, 10).unwrap(),
            "filter {filter:?}"
        );
    }
}

#[test]
fn single_length_lookup_matches_full_run() {
    let model = WalkModel::unweighted(&[&[1, 1], &[-1, 1], &[0, -1]], 2).unwrap();
    let all = walk_counts(&model, &EndpointFilter::Anywhere, 70).unwrap();
    let at = walk_count_at(&model, &EndpointFilter::Anywhere, 70).unwrap();
    assert_eq!(at, all[70]);
}

#[test]
fn off_origin_start_counts_from_the_interior() {
    // Starting at (1, 1) the simple walk has all four first moves available.
    let model = WalkModel::new(
        [[1i64, 0], [-1, 0], [0, 1], [0, -1]]
            .iter()
            .map(|s| (s.to_vec(), Rat::one()))
            .collect(),
        vec![1, 1],
    )
    .unwrap();
    let counts = walk_counts(&model, &EndpointFilter::Anywhere, 1).unwrap();
    assert_eq!(counts, rats(&[1, 4]));
    let origin = walk_counts(&model, &EndpointFilter::Origin, 2).unwrap();
    assert_eq!(origin, rats(&[0, 0, 2])); // WS and SW

}
