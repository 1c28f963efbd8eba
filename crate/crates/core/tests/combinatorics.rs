//! Property tests for partitions, cores and straightening.

use proptest::prelude::*;
use specht_core::partition::{p_core_weight, rim_hook_oracle};
use specht_core::tableau::{
    enumerate_standard, garnir_straighten, polytabloid, PolytabloidVector, Tableau,
    DEFAULT_ENUMERATION_LIMIT,
};
use specht_core::{specht_dimension, Partition};

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_n, 0..=max_n).prop_filter_map(
        "too large",
        move |mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let n: usize = parts.iter().sum();
            (n <= max_n).then(|| Partition::new(parts).unwrap())
        },
    )
}

fn prime() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![2usize, 3, 5, 7])
}

/// A partition with a random filling of its diagram.
fn filled_tableau(max_n: usize) -> impl Strategy<Value = Tableau> {
    partition(max_n)
        .prop_filter("nonempty", |mu| mu.size() > 0)
        .prop_flat_map(|mu| {
            let entries: Vec<u8> = (1..=mu.size() as u8).collect();
            (Just(mu), Just(entries).prop_shuffle())
        })
        .prop_map(|(mu, entries)| Tableau::new(mu.parts().to_vec(), entries).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn core_and_weight_account_for_every_box(mu in partition(14), p in prime()) {
        let cw = p_core_weight(&mu, p);
        prop_assert_eq!(cw.core.size() + p * cw.weight, mu.size());
        let again = p_core_weight(&cw.core, p);
        prop_assert_eq!(again.weight, 0);
        prop_assert_eq!(&again.core, &cw.core);
        prop_assert_eq!(rim_hook_oracle(&mu, p).unwrap(), cw);
    }

    #[test]
    fn conjugation_commutes_with_cores(mu in partition(14), p in prime()) {
        let cw = p_core_weight(&mu, p);
        let conj = p_core_weight(&mu.conjugate(), p);
        prop_assert_eq!(conj.core, cw.core.conjugate());
        prop_assert_eq!(conj.weight, cw.weight);
    }

    #[test]
    fn hook_length_dimension_counts_standard_tableaux(mu in partition(9)) {
        let count = enumerate_standard(&mu, DEFAULT_ENUMERATION_LIMIT).unwrap().len();
        prop_assert_eq!(specht_dimension(&mu), count.into());
    }

    #[test]
    fn straightening_preserves_the_polytabloid(t in filled_tableau(7), p in prime()) {
        let p = p as u32;
        let lhs = polytabloid(&t, DEFAULT_ENUMERATION_LIMIT).unwrap().reduce_mod(p);
        let mut rhs = PolytabloidVector::default();
        for (std, c) in garnir_straighten(&t, p).unwrap() {
            prop_assert!(c > 0 && c < p);
            let e = polytabloid(&std, DEFAULT_ENUMERATION_LIMIT).unwrap();
            rhs.add_scaled(&e, i64::from(c));
        }
        prop_assert_eq!(lhs, rhs.reduce_mod(p));
    }
}
