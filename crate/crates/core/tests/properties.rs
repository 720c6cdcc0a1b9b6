use proptest::prelude::*;

use pdom::subset_opt::{
    admissible_family, min_sum_at_least_dp, min_sum_at_least_enumerate,
};
use pdom::{
    build_witness, compute_gamma, demand, is_admissible, min_demand, min_demand_fast,
    subset_weight, DemandValue, PartSet, PartSizes,
};

fn parts_strategy(max_t: usize, max_n: u64) -> impl Strategy<Value = PartSizes> {
    prop::collection::vec(1..=max_n, 1..=max_t).prop_map(|v| PartSizes::new(v).unwrap())
}

fn with_p(max_t: usize, max_n: u64) -> impl Strategy<Value = (PartSizes, u64)> {
    parts_strategy(max_t, max_n).prop_flat_map(|parts| {
        let total = parts.total();
        (Just(parts), 1..=total + 1)
    })
}

/// Instances outside the trivial case, where s1 and s2 are both defined.
fn nontrivial(max_t: usize, max_n: u64) -> impl Strategy<Value = (PartSizes, u64)> {
    prop::collection::vec(1..=max_n, 2..=max_t).prop_flat_map(|v| {
        let parts = PartSizes::new(v).unwrap();
        let total = parts.total();
        (Just(parts), 1..total)
    })
}

proptest! {
    #[test]
    fn gamma_bounds((parts, p) in with_p(6, 8)) {
        let g = compute_gamma(&parts, p).unwrap().gamma;
        prop_assert!(g >= p.min(parts.total()));
        prop_assert!(g <= parts.total());
    }

    #[test]
    fn gamma_monotone_in_p((parts, p) in with_p(6, 8)) {
        let a = compute_gamma(&parts, p).unwrap().gamma;
        let b = compute_gamma(&parts, p + 1).unwrap().gamma;
        prop_assert!(a <= b);
    }

    #[test]
    fn gamma_permutation_invariant(
        (parts, p) in with_p(6, 8),
        seed in any::<u64>(),
    ) {
        let t = parts.len();
        let mut perm: Vec<usize> = (0..t).collect();
        // Fisher-Yates driven by the seed
        let mut s = seed;
        for i in (1..t).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled = parts.permuted(&perm).unwrap();
        let a = compute_gamma(&parts, p).unwrap();
        let b = compute_gamma(&shuffled, p).unwrap();
        prop_assert_eq!(a.gamma, b.gamma);
        prop_assert_eq!(a.s1, b.s1);
        prop_assert_eq!(a.s2, b.s2);
        // witness from the shuffled instance maps back to an equally good one
        let mut inverse = vec![0; t];
        for (new, &old) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        if let Some(w) = &b.s1_witness {
            let back = w.mapped(&inverse);
            prop_assert_eq!(Some(subset_weight(&parts, &back).unwrap()), a.s1);
        }
    }

    #[test]
    fn breakdown_invariants((parts, p) in nontrivial(7, 9)) {
        let b = compute_gamma(&parts, p).unwrap();
        let s1 = b.s1.unwrap();
        prop_assert!(s1 >= p);
        let s2 = b.s2.unwrap();
        if let DemandValue::Finite(v) = s2 {
            prop_assert!(v >= 1);
        }
        prop_assert_eq!(DemandValue::Finite(b.gamma), DemandValue::Finite(s1).min(s2.plus(p)));
    }

    #[test]
    fn s1_witness_is_optimal((parts, p) in nontrivial(9, 12)) {
        let (s1, w) = min_sum_at_least_enumerate(&parts, p).unwrap();
        prop_assert_eq!(subset_weight(&parts, &w).unwrap(), s1);
        for mask in 0u64..1 << parts.len() {
            let f = subset_weight(&parts, &PartSet::from_mask(mask)).unwrap();
            prop_assert!(f < p || f >= s1);
        }
    }

    #[test]
    fn s1_dp_matches_enumeration((parts, p) in nontrivial(12, 30)) {
        prop_assert_eq!(
            min_sum_at_least_dp(&parts, p).unwrap(),
            min_sum_at_least_enumerate(&parts, p).unwrap()
        );
    }

    #[test]
    fn s2_witness_is_admissible_and_optimal((parts, p) in nontrivial(8, 10)) {
        let (s2, w) = min_demand(&parts, p).unwrap();
        match (s2, w) {
            (DemandValue::Finite(d), Some(w)) => {
                prop_assert!(is_admissible(&parts, p, &w).unwrap());
                prop_assert_eq!(demand(&parts, p, &w).unwrap(), d);
                for i in admissible_family(&parts, p).unwrap() {
                    prop_assert!(demand(&parts, p, &i).unwrap() >= d);
                }
            }
            (DemandValue::Infinite, None) => {
                prop_assert!(admissible_family(&parts, p).unwrap().is_empty());
            }
            other => prop_assert!(false, "inconsistent result {:?}", other),
        }
    }

    #[test]
    fn family_demands_fit_excluded_parts((parts, p) in nontrivial(8, 10)) {
        for set in admissible_family(&parts, p).unwrap() {
            let d = demand(&parts, p, &set).unwrap();
            prop_assert!(set.complement(parts.len()).all(|i| d <= parts.size(i)));
        }
    }

    #[test]
    fn s2_fast_matches_reference((parts, p) in nontrivial(12, 50)) {
        prop_assert_eq!(min_demand_fast(&parts, p).unwrap(), min_demand(&parts, p).unwrap());
    }

    #[test]
    fn witness_total_is_gamma((parts, p) in with_p(7, 9)) {
        let w = build_witness(&parts, p).unwrap();
        prop_assert_eq!(w.total(), compute_gamma(&parts, p).unwrap().gamma);
        prop_assert!(w.dominates(&parts, p));
    }
}

#[test]
fn large_t_fast_paths_agree_with_enumeration_at_the_boundary() {
    // t = 21 crosses the enumeration threshold; min_demand still enumerates.
    let sizes: Vec<u64> = (0..21).map(|i| 1 + (i * 5 % 7)).collect();
    let parts = PartSizes::new(sizes).unwrap();
    for p in [1, 9, 30, 55, 80] {
        let b = compute_gamma(&parts, p).unwrap();
        let (s2, w) = min_demand(&parts, p).unwrap();
        assert_eq!(b.s2, Some(s2));
        assert_eq!(b.s2_witness, w);
        assert_eq!(b.s1, Some(min_sum_at_least_enumerate(&parts, p).unwrap().0));
    }
}

#[test]
fn witnesses_dominate_for_many_parts() {
    // well past the enumeration threshold; only feasibility and consistency
    // can be checked here, optimality is covered on small instances
    let sizes: Vec<u64> = (0..60).map(|i| 1 + (i * 11 % 13)).collect();
    let parts = PartSizes::new(sizes).unwrap();
    for p in [1, 7, 50, 200, parts.total() - 1] {
        let b = compute_gamma(&parts, p).unwrap();
        let w = build_witness(&parts, p).unwrap();
        assert_eq!(w.total(), b.gamma);
        assert!(w.dominates(&parts, p), "p = {p}");
        if let Some(set) = &b.s2_witness {
            assert!(is_admissible(&parts, p, set).unwrap());
            assert_eq!(DemandValue::Finite(demand(&parts, p, set).unwrap()), b.s2.unwrap());
        }
    }
}
