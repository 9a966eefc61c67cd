mod common;

use common::*;
use proptest::prelude::*;
use smallsub_core::certify::{
    check_reta, is_regular_sequence, koszul_h1_vanishes, minors_height_check, singular_locus_codim,
};
use smallsub_core::field::PrimeField;
use smallsub_core::matrix::PolyMatrix;
use smallsub_core::poly::Form;

fn arb_forms(p: u32, n: usize, count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Form<PrimeField>>> {
    prop::collection::vec((1u32..=2).prop_flat_map(move |d| arb_form(p, n, d)), count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn height_criterion_agrees_with_koszul(forms in arb_forms(5, 3, 2..=3)) {
        prop_assert_eq!(
            is_regular_sequence(&forms, &budget()).unwrap(),
            koszul_h1_vanishes(&forms, &budget()).unwrap()
        );
    }

    #[test]
    fn regularity_is_order_independent(forms in arb_forms(3, 4, 2..=3)) {
        let mut rev = forms.clone();
        rev.reverse();
        prop_assert_eq!(
            is_regular_sequence(&forms, &budget()).unwrap(),
            is_regular_sequence(&rev, &budget()).unwrap()
        );
    }

    #[test]
    fn prefixes_of_regular_sequences_are_regular(forms in arb_forms(5, 4, 2..=3)) {
        if is_regular_sequence(&forms, &budget()).unwrap() {
            prop_assert!(is_regular_sequence(&forms[..forms.len() - 1], &budget()).unwrap());
        }
    }

    #[test]
    fn minors_bound_holds_for_two_rows(
        n in 3usize..=4,
        row1 in prop::collection::vec(prop::collection::vec(0u32..5, 4), 4),
        row2 in prop::collection::vec(prop::collection::vec(0u32..5, 10), 4),
    ) {
        let r1: Vec<P> = row1.iter().take(n).map(|c| homogeneous(5, n, 1, &c[..n])).collect();
        let r2: Vec<P> = row2.iter().take(n).map(|c| homogeneous(5, n, 2, c)).collect();
        let check = minors_height_check(&PolyMatrix::from_rows(vec![r1, r2]).unwrap(), &budget()).unwrap();
        prop_assert!(check.holds, "{:?}", check);
    }

    #[test]
    fn reta_verdict_matches_codimension(forms in arb_forms(5, 3, 1..=2), eta in 0u64..3) {
        prop_assume!(is_regular_sequence(&forms, &budget()).unwrap());
        let loc = singular_locus_codim(&forms, &budget()).unwrap();
        let cert = check_reta(&forms, eta, &budget()).unwrap();
        prop_assert_eq!(cert.pass, loc.codim > eta);
        prop_assert!(loc.codim as usize <= 3 - forms.len());
    }
}

#[test]
fn reta_fixtures() {
    let b = budget();
    assert_eq!(singular_locus_codim(&[form(5, 2, "x1*x2")], &b).unwrap().codim, 1);
    let lin = singular_locus_codim(&[form(5, 4, "x1"), form(5, 4, "x2")], &b).unwrap();
    assert!(lin.smooth);
    assert_eq!(lin.codim, 2);
    assert!(check_reta(&[form(5, 4, "x1"), form(5, 4, "x2")], 1, &b).unwrap().pass);
}
