mod common;

use std::cmp::Ordering;

use common::*;
use proptest::prelude::*;
use smallsub_core::descent::{
    compare_sequences, small_subalgebra, subalgebra_membership, DescentOptions, StopReason, ThresholdPolicy,
};
use smallsub_core::field::PrimeField;
use smallsub_core::poly::{DimensionSequence, Form, GradedSpace};
use smallsub_core::strength::find_collapse;

fn arb_space(p: u32, n: usize) -> impl Strategy<Value = GradedSpace<PrimeField>> {
    prop::collection::vec((1u32..=3).prop_flat_map(move |d| arb_form(p, n, d)), 1..=2)
        .prop_map(move |forms| GradedSpace::from_forms(gf(p), n, forms).unwrap())
}

fn seq(v: &[u64]) -> DimensionSequence {
    DimensionSequence::new(v.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn maximal_descent_reaches_linear_forms(v in arb_space(2, 3)) {
        let t = small_subalgebra(&v, &ThresholdPolicy::Maximal { max_k: 3 }, &DescentOptions::default(), &budget()).unwrap();
        prop_assert_eq!(t.stop, StopReason::NoCollapse);
        prop_assert!(t.final_generators.iter().all(Form::is_linear));
        prop_assert_eq!(t.membership, Some(true));
        prop_assert_eq!(t.regular_sequence, Some(true));
        for f in v.basis() {
            prop_assert!(subalgebra_membership(f.poly(), &t.final_generators, &budget()).unwrap());
        }
    }

    #[test]
    fn every_step_lowers_the_sequence(v in arb_space(3, 3), seed in 0u64..4) {
        let opts = DescentOptions { seed, ..DescentOptions::default() };
        let t = small_subalgebra(&v, &ThresholdPolicy::uniform(1, 2..=3), &opts, &budget()).unwrap();
        for s in &t.steps {
            prop_assert_eq!(compare_sequences(&s.after, &s.before), Ordering::Less);
        }
        prop_assert!(t.final_sequence <= v.dimension_sequence());
        prop_assert_eq!(t.membership, Some(true));
    }

    #[test]
    fn completed_descent_leaves_no_collapse(v in arb_space(2, 3)) {
        let t = small_subalgebra(&v, &ThresholdPolicy::uniform(1, 2..=3), &DescentOptions::default(), &budget()).unwrap();
        if t.complete {
            for f in t.final_generators.iter().filter(|f| f.degree() >= 2) {
                prop_assert!(find_collapse(f, 1, &budget()).unwrap().is_none());
            }
        }
    }
}

#[test]
fn ordering_fixtures() {
    assert_eq!(compare_sequences(&seq(&[5, 0, 1]), &seq(&[2, 1, 1])), Ordering::Less);
    assert_eq!(compare_sequences(&seq(&[1, 1]), &seq(&[1, 1])), Ordering::Equal);
    assert_eq!(compare_sequences(&seq(&[9]), &seq(&[0, 1])), Ordering::Less);
}
