//! Cross-module invariants: the counting chain against the tableau oracle,
//! the recursion identity, and the spectral bounds' growth factors.

use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use schublines_core::spectral::a2_bound_integrals;
use schublines_core::{
    a2_difference, all_valid_problems_up_to_sum, cg_apply, enumerate_tableaux,
    find_discriminating_rearrangement, hook_kostka, kostka, kostka_of_parts, RepRingVector,
    SchubertProblem,
};

/// Arbitrary condition lists with even sum (a trailing 1 fixes parity).
fn arb_parts() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1u32..=8, 1..=10).prop_map(|mut parts| {
        if parts.iter().sum::<u32>() % 2 == 1 {
            parts.push(1);
        }
        parts
    })
}

proptest! {
    #[test]
    fn count_ignores_condition_order(mut parts in arb_parts(), seed in 0u64..1000) {
        let reference = kostka_of_parts(&parts);
        // a cheap deterministic shuffle
        let mut s = seed;
        for i in (1..parts.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            parts.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(kostka_of_parts(&parts), reference);
    }

    #[test]
    fn count_positive_iff_valid(parts in arb_parts()) {
        let p = SchubertProblem::new(&parts).unwrap();
        prop_assert_eq!(kostka(&p) > BigUint::zero(), p.is_valid());
    }

    #[test]
    fn split_preserves_count(parts in arb_parts(), i in 0usize..12, j in 0usize..12) {
        let p = SchubertProblem::new(&parts).unwrap();
        prop_assume!(p.is_valid() && p.len() >= 2);
        let (i, j) = (i % p.len(), j % p.len());
        prop_assume!(i != j);
        let (merged, decremented) = p.recursion_split(i, j).unwrap();
        prop_assert_eq!(kostka(&p), kostka(&merged) + kostka(&decremented));
    }

    #[test]
    fn operator_is_linear(b1 in 0u32..12, b2 in 0u32..12, a in 0u32..8) {
        let u = RepRingVector::basis(b1);
        let v = RepRingVector::basis(b2);
        prop_assert_eq!(
            cg_apply(&(&u + &v), a),
            &cg_apply(&u, a) + &cg_apply(&v, a)
        );
    }

    #[test]
    fn chain_support_stays_in_one_parity_class(parts in arb_parts()) {
        let mut v = RepRingVector::basis(0);
        let mut prefix = 0u32;
        for &a in &parts {
            v = cg_apply(&v, a);
            prefix += a;
            if !v.is_zero() {
                prop_assert_eq!(v.support_parity(), Some((prefix % 2) as u8));
            }
        }
    }
}

#[test]
fn oracle_counts_match_the_chain_exhaustively() {
    // every valid problem with sum at most 16
    for p in all_valid_problems_up_to_sum(16) {
        let listed = enumerate_tableaux(&p).unwrap();
        assert_eq!(
            BigUint::from(listed.len() as u64),
            kostka(&p),
            "oracle mismatch at {p}"
        );
    }
}

#[test]
fn reduction_preserves_counts_exhaustively() {
    for p in all_valid_problems_up_to_sum(16) {
        assert_eq!(kostka(&p.reduce().unwrap()), kostka(&p), "at {p}");
    }
}

#[test]
fn every_pair_splits_the_count_exhaustively() {
    for p in all_valid_problems_up_to_sum(16) {
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                let (merged, decremented) = p.recursion_split(i, j).unwrap();
                assert_eq!(
                    kostka(&p),
                    kostka(&merged) + kostka(&decremented),
                    "split ({i}, {j}) of {p}"
                );
            }
        }
    }
}

#[test]
fn every_reduced_problem_has_a_discriminating_pair() {
    for p in all_valid_problems_up_to_sum(16) {
        if p.is_reduced() && p.len() >= 2 {
            find_discriminating_rearrangement(&p)
                .unwrap_or_else(|e| panic!("no pair for {p}: {e}"));
        }
    }
}

#[test]
fn hook_formula_matches_the_chain() {
    for total in (2..=24u32).step_by(2) {
        for b in 0..=total {
            let ones = total - b;
            let mut parts = vec![1u32; ones as usize];
            if b > 0 {
                parts.push(b);
            }
            assert_eq!(
                hook_kostka(ones, b).unwrap(),
                kostka_of_parts(&parts),
                "K(1^{ones}, {b})"
            );
        }
    }
}

#[test]
fn difference_column_crosses_zero_at_fourteen() {
    for m in 0..14 {
        assert!(a2_difference(m) < 0.into(), "m = {m}");
    }
    for m in 14..=30 {
        assert!(a2_difference(m) > 0.into(), "m = {m}");
    }
}

#[test]
fn bound_growth_factors_bracket_the_induction_constant() {
    // lambda >= 1 + sqrt(3) on [0, pi/12] and |lambda| <= 1 + sqrt(3) on
    // [pi/12, pi/3], so the two sides grow by at least/at most that factor
    let factor = 1.0 + 3.0f64.sqrt();
    let mut prev = a2_bound_integrals(14);
    for m in 15..=26 {
        let cur = a2_bound_integrals(m);
        assert!(cur.lhs >= factor * prev.lhs * (1.0 - 1e-12), "lhs at m = {m}");
        assert!(
            cur.rhs_integral <= factor * prev.rhs_integral * (1.0 + 1e-12),
            "rhs at m = {m}"
        );
        prev = cur;
    }
}
