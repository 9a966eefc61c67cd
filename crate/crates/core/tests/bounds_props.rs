use proptest::prelude::*;
use smallsub_core::bounds::{
    b_recursion, cubic_eta_a, default_b3, eta_a_i, frak_r, phi, phi_coprime, quadric_b, quadric_thresholds,
    stillman_c, BoundTable, Characteristic,
};
use smallsub_core::groebner::Budget;
use smallsub_core::poly::DimensionSequence;
use smallsub_core::{BudgetLimit, Error};

const CHARS: [Characteristic; 4] = [
    Characteristic::Zero,
    Characteristic::Two,
    Characteristic::Three,
    Characteristic::Other,
];

fn arb_char() -> impl Strategy<Value = Characteristic> {
    prop::sample::select(CHARS.to_vec())
}

fn small_budget() -> Budget {
    Budget {
        max_states: 20_000,
        ..Budget::default()
    }
}

/// `None` when the recursion outgrows the test budget.
fn b_or_skip(delta: &[u64], table: &BoundTable) -> Option<u128> {
    match b_recursion(&DimensionSequence::new(delta.to_vec()), table, &small_budget()) {
        Ok(v) => Some(v),
        Err(Error::BudgetExceeded(BudgetLimit::States(_))) | Err(Error::Overflow(_)) => None,
        Err(e) => panic!("{e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn quadric_bounds_ascend(n in 1u64..40, eta in 0u64..40) {
        let (a, b) = quadric_thresholds(n, eta).unwrap();
        let (a1, b1) = quadric_thresholds(n + 1, eta).unwrap();
        let (a2, b2) = quadric_thresholds(n, eta + 1).unwrap();
        prop_assert!(a <= a1 && b <= b1 && a <= a2 && b <= b2 && a <= b);
        prop_assert!(quadric_b(n).unwrap() <= quadric_b(n + 1).unwrap());
    }

    #[test]
    fn frak_r_ascends(b in 0u64..10_000, c in arb_char()) {
        prop_assert!(frak_r(b, c).unwrap() <= frak_r(b + 1, c).unwrap());
    }

    #[test]
    fn cubic_thresholds_ascend(n1 in 0u64..20, n2 in 0u64..20, n3 in 0u64..20, eta in 0u64..20, c in arb_char()) {
        let base = cubic_eta_a(n1, n2, n3, eta, c).unwrap();
        for bumped in [
            cubic_eta_a(n1 + 1, n2, n3, eta, c).unwrap(),
            cubic_eta_a(n1, n2 + 1, n3, eta, c).unwrap(),
            cubic_eta_a(n1, n2, n3 + 1, eta, c).unwrap(),
            cubic_eta_a(n1, n2, n3, eta + 1, c).unwrap(),
        ] {
            prop_assert!(base.iter().zip(&bumped).all(|(x, y)| x <= y));
        }
    }

    #[test]
    fn cubic_branches_differ_only_in_the_third_slot(n1 in 0u64..20, n2 in 0u64..20, n3 in 0u64..20, eta in 0u64..20) {
        let zero = cubic_eta_a(n1, n2, n3, eta, Characteristic::Zero).unwrap();
        for c in [Characteristic::Two, Characteristic::Three, Characteristic::Other] {
            let other = cubic_eta_a(n1, n2, n3, eta, c).unwrap();
            prop_assert_eq!(&zero[..2], &other[..2]);
        }
        prop_assert_eq!(zero, cubic_eta_a(n1, n2, n3, eta, Characteristic::Other).unwrap());
    }

    #[test]
    fn base_tables_respect_degree_floor(eta in 0u64..30, c in arb_char()) {
        let t = BoundTable::standard(eta, c).unwrap();
        for (d, v) in t.entries() {
            prop_assert!(v + 1 >= d as u64);
        }
        prop_assert!(BoundTable::custom(eta, c, &[(3, 1)]).is_err());
    }

    #[test]
    fn eta_a_i_ascends(delta in prop::collection::vec(0u64..6, 1..4), bump in 0usize..3, eta in 0u64..6) {
        prop_assume!(delta.iter().sum::<u64>() > 0);
        let t = BoundTable::standard(eta, Characteristic::Zero).unwrap();
        let mut bigger = delta.clone();
        let k = bump % bigger.len();
        bigger[k] += 1;
        for i in 1..=3 {
            let a = eta_a_i(&DimensionSequence::new(delta.clone()), i, &t).unwrap();
            let b = eta_a_i(&DimensionSequence::new(bigger.clone()), i, &t).unwrap();
            prop_assert!(a <= b);
        }
        let tighter = BoundTable::standard(eta + 1, Characteristic::Zero).unwrap();
        let d = DimensionSequence::new(delta);
        prop_assert!(eta_a_i(&d, 3, &t).unwrap() <= eta_a_i(&d, 3, &tighter).unwrap());
    }

    #[test]
    fn phi_ascends(h in 0u64..30, d in 2u32..4) {
        let a = phi(h, d, &default_b3).unwrap();
        let b = phi(h + 1, d, &default_b3).unwrap();
        prop_assert!(a <= b && a > h as u128 / 2);
        prop_assert_eq!(phi_coprime(h, d, 0), Some(h as u128));
    }

    #[test]
    fn recursion_dominates_dimension(delta in prop::collection::vec(0u64..3, 1..=2)) {
        prop_assume!(delta.iter().sum::<u64>() > 0);
        let t = BoundTable::custom(0, Characteristic::Zero, &[(1, 0), (2, 1)]).unwrap();
        if let Some(b) = b_or_skip(&delta, &t) {
            prop_assert!(b >= delta.iter().sum::<u64>() as u128);
        }
    }
}

#[test]
fn recursion_ascends_on_a_grid() {
    let t = BoundTable::custom(0, Characteristic::Zero, &[(1, 0), (2, 1)]).unwrap();
    for a in 0..4u64 {
        for b in 0..2u64 {
            if a + b == 0 {
                continue;
            }
            let (Some(x), Some(y), Some(z)) = (
                b_or_skip(&[a, b], &t),
                b_or_skip(&[a + 1, b], &t),
                b_or_skip(&[a, b + 1], &t),
            ) else {
                continue;
            };
            assert!(x <= y && x <= z, "({a},{b})");
        }
    }
}

#[test]
fn recursion_fixtures() {
    let quadric = BoundTable::custom(0, Characteristic::Zero, &[(1, 0), (2, 1)]).unwrap();
    let strong = BoundTable::custom(0, Characteristic::Zero, &[(1, 0)]).unwrap();
    assert_eq!(b_recursion(&DimensionSequence::new(vec![7]), &strong, &small_budget()).unwrap(), 7);
    assert_eq!(b_or_skip(&[0, 1], &quadric), Some(2));
    let budget = small_budget();
    assert_eq!(stillman_c(1, 1, 1, &strong, &budget).unwrap(), 1);
    assert_eq!(stillman_c(2, 3, 1, &strong, &budget).unwrap(), 6);
}
