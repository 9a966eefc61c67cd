mod common;

use common::*;
use proptest::prelude::*;
use smallsub_core::field::PrimeField;
use smallsub_core::groebner::Ideal;
use smallsub_core::poly::{derivative_space, Form, Polynomial};
use smallsub_core::strength::{strength_exact, trivial_witness, CollapseWitness};
use smallsub_core::ExtNat;

/// Nonzero linear forms with leading coefficient 1.
fn projective_linear_forms(p: u32, n: usize) -> Vec<P> {
    let mut out = Vec::new();
    for code in 1..(p as usize).pow(n as u32) {
        let mut c = Vec::with_capacity(n);
        let mut x = code;
        for _ in 0..n {
            c.push((x % p as usize) as u32);
            x /= p as usize;
        }
        if c.iter().find(|v| **v != 0) == Some(&1) {
            out.push(homogeneous(p, n, 1, &c));
        }
    }
    out
}

fn has_linear_factor(f: &P, p: u32) -> bool {
    projective_linear_forms(p, f.nvars()).iter().any(|l| f.div_exact(l).is_some())
}

fn strength(f: &Form<PrimeField>) -> ExtNat {
    let r = strength_exact(f, None, &budget()).unwrap();
    assert!(r.complete);
    r.exact.unwrap()
}

fn arb_small_form() -> impl Strategy<Value = (u32, Form<PrimeField>)> {
    (prop::sample::select(vec![2u32, 3]), 2usize..=4, 2u32..=3)
        .prop_filter("desk scale", |(p, n, d)| *p == 2 || *n < 4 || *d < 3)
        .prop_flat_map(|(p, n, d)| arb_form(p, n, d).prop_map(move |f| (p, f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn witnesses_are_sound((_p, f) in arb_small_form()) {
        let r = strength_exact(&f, None, &budget()).unwrap();
        prop_assert!(r.lower <= r.upper);
        let w = r.witness.unwrap();
        prop_assert_eq!(ExtNat::Finite(w.k() as u64 - 1), r.upper);
        // the identity is re-checked by the constructor
        prop_assert!(CollapseWitness::new(f.clone(), w.pairs().to_vec()).is_ok());
        // F and its partials lie in the ideal of the 2k factors
        let factors = Ideal::new(*f.field(), f.nvars(), w.factors().into_iter().map(Form::into_poly).collect()).unwrap();
        prop_assert!(factors.contains(f.poly(), &budget()).unwrap());
        for g in derivative_space(f.poly()).unwrap() {
            prop_assert!(factors.contains(&g, &budget()).unwrap());
        }
        let mut gens = derivative_space(f.poly()).unwrap();
        gens.push(f.poly().clone());
        let h = Ideal::new(*f.field(), f.nvars(), gens).unwrap().height(&budget()).unwrap();
        prop_assert!(h <= ExtNat::Finite(2 * w.k() as u64));
    }

    #[test]
    fn strength_zero_iff_linear_factor((p, f) in arb_small_form()) {
        prop_assert_eq!(strength(&f) == ExtNat::Finite(0), has_linear_factor(f.poly(), p));
    }

    #[test]
    fn strength_ignores_extra_variables(f in arb_form(2, 3, 2)) {
        let wide = Form::new(f.poly().embed(4, 1)).unwrap();
        prop_assert_eq!(strength(&f), strength(&wide));
    }

    #[test]
    fn restriction_never_raises_strength(f in arb_form(3, 3, 2), v in 0usize..3) {
        let r = f.poly().set_variable(v, &0);
        prop_assume!(!r.is_zero());
        let r = Form::new(r).unwrap();
        prop_assert!(strength(&r) <= strength(&f));
    }

    #[test]
    fn trivial_witness_uses_at_most_n_pairs(f in arb_form(5, 4, 3)) {
        let w = trivial_witness(&f).unwrap();
        prop_assert!(w.k() <= 4);
        let mut sum = Polynomial::zero(gf(5), 4);
        for (g, h) in w.pairs() {
            sum = &sum + &(g.poly() * h.poly());
        }
        prop_assert_eq!(&sum, f.poly());
    }
}

#[test]
fn interval_over_the_rationals() {
    use smallsub_core::field::Rationals;
    use smallsub_core::poly::parse_polynomial;
    let f = Form::new(parse_polynomial(Rationals, "x1*x2 + x3*x4", Some(4)).unwrap()).unwrap();
    let r = strength_exact(&f, None, &budget()).unwrap();
    // the Jacobian bound meets the trivial witness, no search needed
    assert_eq!(r.exact, Some(ExtNat::Finite(1)));
    assert!(!r.field_caveat);
    let g = Form::new(parse_polynomial(Rationals, "x1^2 + x2^2 + x3^2", Some(3)).unwrap()).unwrap();
    let r = strength_exact(&g, None, &budget()).unwrap();
    assert_eq!((r.lower, r.upper, r.exact), (ExtNat::Finite(1), ExtNat::Finite(2), None));
}
