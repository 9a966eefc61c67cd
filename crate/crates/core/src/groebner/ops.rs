use alloc::vec::Vec;

use super::{Budget, GroebnerBasis, Ideal, MonomialOrder};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{homogenize_polynomial, Polynomial};

/// Eliminate the first `block` variables of `gens` (which live in
/// `block + nvars` variables) and return the ideal in the remaining ones.
fn eliminate<F: Field>(field: &F, nvars: usize, block: usize, gens: &[Polynomial<F>], budget: &Budget) -> Result<Ideal<F>> {
    let gb = GroebnerBasis::for_ideal(
        field.clone(),
        nvars + block,
        gens,
        MonomialOrder::Elimination { block },
        budget,
    )?;
    let kept: Vec<Polynomial<F>> = gb
        .polynomials()
        .iter()
        .filter_map(|g| g.restrict_away(0..block))
        .collect();
    Ideal::new(field.clone(), nvars, kept)
}

fn check_same_ring<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<()> {
    if a.nvars() != b.nvars() || a.field() != b.field() {
        return Err(Error::AmbientMismatch);
    }
    Ok(())
}

/// `I ∩ J`, via `t·I + (1 - t)·J` and elimination of `t`.
pub fn intersection<F: Field>(i: &Ideal<F>, j: &Ideal<F>, budget: &Budget) -> Result<Ideal<F>> {
    check_same_ring(i, j)?;
    let (field, n) = (i.field(), i.nvars());
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(field.clone(), n));
    }
    let t = Polynomial::var(field.clone(), n + 1, 0);
    let one_minus_t = &Polynomial::one(field.clone(), n + 1) - &t;
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(&t * &g.embed(n + 1, 1));
    }
    for g in j.generators() {
        gens.push(&one_minus_t * &g.embed(n + 1, 1));
    }
    eliminate(field, n, 1, &gens, budget)
}

/// `I : J = { f : f·J ⊆ I }`. The unit ideal when `J` is zero.
pub fn colon_ideal<F: Field>(i: &Ideal<F>, j: &Ideal<F>, budget: &Budget) -> Result<Ideal<F>> {
    check_same_ring(i, j)?;
    let (field, n) = (i.field(), i.nvars());
    let mut acc: Option<Ideal<F>> = None;
    for g in j.generators() {
        let principal = Ideal::new(field.clone(), n, alloc::vec![g.clone()])?;
        let meet = intersection(i, &principal, budget)?;
        let quotients: Vec<Polynomial<F>> = meet
            .generators()
            .iter()
            .map(|h| h.div_exact(g).expect("element of (g) is divisible by g"))
            .collect();
        let part = Ideal::new(field.clone(), n, quotients)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersection(&prev, &part, budget)?,
        });
    }
    let result = acc.unwrap_or_else(|| Ideal::unit(field.clone(), n));
    // hand back a reduced basis
    let gb = result.groebner(budget)?.clone();
    Ok(Ideal::with_basis(gb))
}

/// `I : f^∞`, via `I + (1 - t·f)` and elimination of `t`.
pub fn saturation<F: Field>(i: &Ideal<F>, f: &Polynomial<F>, budget: &Budget) -> Result<Ideal<F>> {
    let (field, n) = (i.field(), i.nvars());
    if f.nvars() != n || f.field() != field {
        return Err(Error::AmbientMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let t = Polynomial::var(field.clone(), n + 1, 0);
    let mut gens: Vec<Polynomial<F>> = i.generators().iter().map(|g| g.embed(n + 1, 1)).collect();
    gens.push(&Polynomial::one(field.clone(), n + 1) - &(&t * &f.embed(n + 1, 1)));
    eliminate(field, n, 1, &gens, budget)
}

/// The ideal generated by the leading forms (top-degree components) of all
/// elements of the ideal generated by `gens`.
pub fn leading_form_ideal<F: Field>(gens: &[Polynomial<F>], budget: &Budget) -> Result<Ideal<F>> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("no generators given".into()))?;
    let (field, n) = (first.field().clone(), first.nvars());
    if gens.iter().any(|g| g.nvars() != n || *g.field() != field) {
        return Err(Error::AmbientMismatch);
    }
    if gens.iter().all(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    if gens.iter().any(Polynomial::is_unit) {
        return Ok(Ideal::unit(field, n));
    }
    // homogenize, saturate by the new variable, then set it to zero
    let hom: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(homogenize_polynomial)
        .collect();
    let h = Ideal::new(field.clone(), n + 1, hom)?;
    let z = Polynomial::var(field.clone(), n + 1, n);
    let sat = saturation(&h, &z, budget)?;
    let zero = field.zero();
    let forms: Vec<Polynomial<F>> = sat
        .generators()
        .iter()
        .map(|g| {
            g.set_variable(n, &zero)
                .restrict_away(n..n + 1)
                .expect("variable was set to zero")
        })
        .collect();
    Ideal::new(field, n, forms)
}
