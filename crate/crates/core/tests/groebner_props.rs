mod common;

use common::*;
use proptest::prelude::*;
use smallsub_core::field::PrimeField;
use smallsub_core::groebner::{
    colon_ideal, free_resolution, intersection, leading_form_ideal, saturation, GroebnerBasis, Ideal,
    MonomialOrder, SubmoduleOfFree,
};
use smallsub_core::poly::{Monomial, Polynomial};
use smallsub_core::ExtNat;

fn ideal(gens: Vec<P>) -> Ideal<PrimeField> {
    let n = gens[0].nvars();
    Ideal::new(*gens[0].field(), n, gens).unwrap()
}

fn arb_homogeneous_ideal(p: u32, n: usize) -> impl Strategy<Value = Vec<P>> {
    prop::collection::vec((1u32..=2).prop_flat_map(move |d| arb_homogeneous(p, n, d)), 1..=3)
        .prop_filter("some nonzero generator", |g| g.iter().any(|f| !f.is_zero()))
}

/// Minimal number of variables meeting the support of every monomial.
fn vertex_cover_height(n: usize, supports: &[u64]) -> u64 {
    (0u64..1 << n)
        .filter(|s| supports.iter().all(|m| m & s != 0))
        .map(|s| s.count_ones() as u64)
        .min()
        .unwrap()
}

fn top(f: &P) -> P {
    f.homogeneous_component(f.total_degree().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn basis_is_closed_and_generators_reduce(gens in arb_homogeneous_ideal(7, 3)) {
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let gb = GroebnerBasis::for_ideal(gf(7), 3, &gens, order, &budget()).unwrap();
            prop_assert!(gb.verify_s_pairs());
            for g in &gens {
                prop_assert!(gb.reduce(g).is_zero());
            }
            let lms = gb.leading_monomials();
            for (i, a) in lms.iter().enumerate() {
                for (j, b) in lms.iter().enumerate() {
                    prop_assert!(i == j || !a.divides(b));
                }
            }
        }
    }

    #[test]
    fn orders_agree_on_membership(gens in arb_homogeneous_ideal(5, 3), a in arb_poly(5, 3, 1), b in arb_poly(5, 3, 1)) {
        let grevlex = GroebnerBasis::for_ideal(gf(5), 3, &gens, MonomialOrder::GrevLex, &budget()).unwrap();
        let lex = GroebnerBasis::for_ideal(gf(5), 3, &gens, MonomialOrder::Lex, &budget()).unwrap();
        let member = &(&a * &gens[0]) + &(&b * &gens[gens.len() - 1]);
        prop_assert!(grevlex.contains(&member) && lex.contains(&member));
        let probe = &member + &Polynomial::var(gf(5), 3, 2).pow(3);
        prop_assert_eq!(grevlex.contains(&probe), lex.contains(&probe));
    }

    #[test]
    fn height_matches_vertex_cover(monos in prop::collection::vec(1u64..16, 1..5)) {
        let n = 4;
        let gens: Vec<P> = monos
            .iter()
            .map(|s| {
                let e = (0..n).map(|i| ((s >> i) & 1) as u32).collect();
                Polynomial::monomial(gf(2), Monomial::from_exponents(e), 1)
            })
            .collect();
        let i = ideal(gens);
        let h = vertex_cover_height(n, &monos);
        prop_assert_eq!(i.height(&budget()).unwrap(), ExtNat::Finite(h));
        prop_assert_eq!(i.dimension(&budget()).unwrap(), n as i64 - h as i64);
    }

    #[test]
    fn height_is_krull_bounded(gens in arb_homogeneous_ideal(5, 4)) {
        let i = ideal(gens.clone());
        let h = i.height(&budget()).unwrap().finite().unwrap();
        prop_assert!(h as usize <= gens.iter().filter(|g| !g.is_zero()).count());
        prop_assert_eq!(h as i64 + i.dimension(&budget()).unwrap(), 4);
    }

    #[test]
    fn restricting_to_a_hyperplane_never_raises_height(
        gens in arb_homogeneous_ideal(5, 4),
        c in prop::collection::vec(0u32..5, 3),
    ) {
        let f = gf(5);
        let mut images: Vec<P> = (0..4).map(|i| Polynomial::var(f, 4, i)).collect();
        images[3] = homogeneous(5, 4, 1, &[c[0], c[1], c[2], 0]);
        let restricted: Vec<P> = gens.iter().map(|g| g.substitute(&images)).collect();
        let before = ideal(gens).height(&budget()).unwrap();
        let after = if restricted.iter().all(P::is_zero) {
            ExtNat::Finite(0)
        } else {
            ideal(restricted).height(&budget()).unwrap()
        };
        prop_assert!(after <= before);
    }

    #[test]
    fn saturation_contains_and_is_idempotent(gens in arb_homogeneous_ideal(5, 3), v in 0usize..3) {
        let i = ideal(gens);
        let x = Polynomial::var(gf(5), 3, v);
        let s = saturation(&i, &x, &budget()).unwrap();
        prop_assert!(s.contains_ideal(&i, &budget()).unwrap());
        let s2 = saturation(&s, &x, &budget()).unwrap();
        prop_assert!(s.equals(&s2, &budget()).unwrap());
        for g in s.generators() {
            let witness = (0..12).any(|k| i.contains(&(&x.pow(k) * g), &budget()).unwrap());
            prop_assert!(witness);
        }
    }

    #[test]
    fn intersection_and_colon_laws(a in arb_homogeneous_ideal(5, 3), b in arb_homogeneous_ideal(5, 3)) {
        let (i, j) = (ideal(a), ideal(b));
        let cap = intersection(&i, &j, &budget()).unwrap();
        prop_assert!(i.contains_ideal(&cap, &budget()).unwrap());
        prop_assert!(j.contains_ideal(&cap, &budget()).unwrap());
        prop_assert!(cap.contains_ideal(&i.product(&j).unwrap(), &budget()).unwrap());

        let colon = colon_ideal(&i, &j, &budget()).unwrap();
        prop_assert!(colon.contains_ideal(&i, &budget()).unwrap());
        prop_assert!(i.contains_ideal(&colon.product(&j).unwrap(), &budget()).unwrap());
        // I : J = (I ∩ J) : J
        let via_cap = colon_ideal(&cap, &j, &budget()).unwrap();
        prop_assert!(colon.equals(&via_cap, &budget()).unwrap());
    }

    #[test]
    fn resolutions_are_complexes(gens in arb_homogeneous_ideal(3, 3)) {
        let m = SubmoduleOfFree::from_ideal(gf(3), 3, &gens).unwrap();
        let res = free_resolution(&m, &budget()).unwrap();
        prop_assert!(res.minimal);
        prop_assert!(res.length() <= 3);
        for w in res.matrices.windows(2) {
            prop_assert!(w[0].mul(&w[1]).unwrap().is_zero());
        }
        // R/I has rank 0, so the alternating sum of ranks vanishes
        let euler: i64 = res.ranks.iter().enumerate().map(|(k, r)| if k % 2 == 0 { *r as i64 } else { -(*r as i64) }).sum();
        prop_assert_eq!(euler, 0);
    }

    #[test]
    fn leading_form_ideal_of_principal(f in arb_sparse(5, 3, 3, 5)) {
        prop_assume!(f.total_degree().is_some_and(|d| d > 0));
        let lf = leading_form_ideal(std::slice::from_ref(&f), &budget()).unwrap();
        prop_assert!(lf.equals(&ideal(vec![top(&f)]), &budget()).unwrap());
    }

    #[test]
    fn leading_forms_of_members_lie_in_leading_ideal(
        gens in prop::collection::vec(arb_sparse(5, 3, 2, 4), 1..=3),
        cofactors in prop::collection::vec(arb_poly(5, 3, 1), 3),
    ) {
        prop_assume!(gens.iter().all(|g| g.total_degree().is_some_and(|d| d > 0)));
        let lf = leading_form_ideal(&gens, &budget()).unwrap();
        let mut h = Polynomial::zero(gf(5), 3);
        for (g, a) in gens.iter().zip(&cofactors) {
            h = &h + &(a * g);
        }
        prop_assume!(!h.is_zero());
        prop_assert!(lf.contains(&top(&h), &budget()).unwrap());
    }
}
