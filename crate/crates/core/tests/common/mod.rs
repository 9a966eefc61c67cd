#![allow(dead_code)]

use proptest::prelude::*;
use smallsub_core::field::{Field, PrimeField};
use smallsub_core::groebner::Budget;
use smallsub_core::poly::{parse_polynomial, Form, Monomial, Polynomial};

pub type P = Polynomial<PrimeField>;

pub fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn budget() -> Budget {
    Budget::default()
}

pub fn poly(p: u32, n: usize, s: &str) -> P {
    parse_polynomial(gf(p), s, Some(n)).unwrap()
}

pub fn polys(p: u32, n: usize, list: &[&str]) -> Vec<P> {
    list.iter().map(|s| poly(p, n, s)).collect()
}

pub fn form(p: u32, n: usize, s: &str) -> Form<PrimeField> {
    Form::new(poly(p, n, s)).unwrap()
}

/// Homogeneous of degree `d` with the given coefficients on the monomials of
/// degree `d` in descending order.
pub fn homogeneous(p: u32, n: usize, d: u32, coeffs: &[u32]) -> P {
    let field = gf(p);
    let terms = Monomial::all_of_degree(n, d)
        .into_iter()
        .zip(coeffs)
        .map(|(m, c)| (m, field.from_i64(*c as i64)));
    Polynomial::from_terms(field, n, terms)
}

pub fn monomial_count(n: usize, d: u32) -> usize {
    Monomial::all_of_degree(n, d).len()
}

/// A random form of degree `d` over `F_p` in `n` variables, possibly zero.
pub fn arb_homogeneous(p: u32, n: usize, d: u32) -> impl Strategy<Value = P> {
    prop::collection::vec(0..p, monomial_count(n, d)).prop_map(move |c| homogeneous(p, n, d, &c))
}

pub fn arb_form(p: u32, n: usize, d: u32) -> impl Strategy<Value = Form<PrimeField>> {
    arb_homogeneous(p, n, d)
        .prop_filter("nonzero", |f| !f.is_zero())
        .prop_map(|f| Form::new(f).unwrap())
}

/// A random polynomial of degree at most `d`, possibly zero.
pub fn arb_poly(p: u32, n: usize, d: u32) -> impl Strategy<Value = P> {
    let sizes: Vec<usize> = (0..=d).map(|e| monomial_count(n, e)).collect();
    let total: usize = sizes.iter().sum();
    prop::collection::vec(0..p, total).prop_map(move |c| {
        let mut f = Polynomial::zero(gf(p), n);
        let mut at = 0;
        for (e, len) in sizes.iter().enumerate() {
            f = &f + &homogeneous(p, n, e as u32, &c[at..at + len]);
            at += len;
        }
        f
    })
}

/// Sparse variant: a handful of random terms.
pub fn arb_sparse(p: u32, n: usize, d: u32, terms: usize) -> impl Strategy<Value = P> {
    prop::collection::vec((prop::collection::vec(0..=d, n), 1..p), 1..=terms).prop_map(move |ts| {
        let field = gf(p);
        let ts = ts.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= d).map(|(e, c)| {
            (Monomial::from_exponents(e), field.from_i64(c as i64))
        });
        Polynomial::from_terms(gf(p), n, ts)
    })
}
