//! Collapses and strength of forms.
//!
//! `F` of degree `d` has a `k`-collapse iff it lies in an ideal generated by
//! `k` forms of degrees in `[1, d/2]`: in `F = Σ G_i H_i` one factor of each
//! pair has degree at most `d/2`, and conversely cofactors can be taken
//! homogeneous. The exhaustive search therefore enumerates subspaces of
//! low-degree forms only.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{BudgetLimit, Error, Result};
use crate::extended::ExtNat;
use crate::field::Field;
use crate::groebner::{lift, Budget, GroebnerBasis, Ideal, MonomialOrder};
use crate::matrix::combinations;
use crate::poly::{derivative_space, Form, Monomial, Polynomial};

/// `F = Σ G_i H_i` with every factor of positive degree below `deg F`.
#[derive(Clone, Debug, PartialEq)]
pub struct CollapseWitness<F: Field> {
    target: Form<F>,
    pairs: Vec<(Form<F>, Form<F>)>,
}

impl<F: Field> CollapseWitness<F> {
    /// Checks the identity and the degree conditions.
    pub fn new(target: Form<F>, pairs: Vec<(Form<F>, Form<F>)>) -> Result<Self> {
        let d = target.degree();
        let mut sum = Polynomial::zero(target.field().clone(), target.nvars());
        for (g, h) in &pairs {
            for x in [g, h] {
                if x.degree() >= d || x.nvars() != target.nvars() || x.field() != target.field() {
                    return Err(Error::Precondition(
                        "collapse factors must have positive degree below the target's".into(),
                    ));
                }
            }
            sum = &sum + &(g.poly() * h.poly());
        }
        if &sum != target.poly() {
            return Err(Error::Precondition("collapse pairs do not sum to the target".into()));
        }
        Ok(Self { target, pairs })
    }

    pub fn target(&self) -> &Form<F> {
        &self.target
    }

    pub fn pairs(&self) -> &[(Form<F>, Form<F>)] {
        &self.pairs
    }

    /// Number of pairs.
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    /// All factors, `G_1, H_1, G_2, ...`.
    pub fn factors(&self) -> Vec<Form<F>> {
        self.pairs
            .iter()
            .flat_map(|(g, h)| [g.clone(), h.clone()])
            .collect()
    }
}

/// Strength as an interval `lower ≤ strength ≤ upper`.
#[derive(Clone, Debug)]
pub struct StrengthReport<F: Field> {
    pub lower: ExtNat,
    pub upper: ExtNat,
    pub exact: Option<ExtNat>,
    /// The lower bound rests on an exhaustive search over the prime field and
    /// may fail over extensions.
    pub field_caveat: bool,
    /// Collapse realizing the upper bound.
    pub witness: Option<CollapseWitness<F>>,
    /// `height((F) + 𝒟F)` and the bound `⌈h/2⌉ - 1` it gives, valid over
    /// every extension field.
    pub jacobian_height: Option<ExtNat>,
    pub jacobian_lower: ExtNat,
    /// Largest `k` for which no `k`-collapse exists over the prime field.
    pub searched_k: usize,
    pub complete: bool,
}

/// `⌈h/2⌉ - 1` from `h = height((F) + 𝒟F)`.
pub fn strength_lower_bound<F: Field>(f: &Form<F>, budget: &Budget) -> Result<ExtNat> {
    Ok(jacobian_bound(f, budget)?.1)
}

fn jacobian_bound<F: Field>(f: &Form<F>, budget: &Budget) -> Result<(ExtNat, ExtNat)> {
    let mut gens = derivative_space(f.poly())?;
    gens.push(f.poly().clone());
    let h = Ideal::new(f.field().clone(), f.nvars(), gens)?.height(budget)?;
    let lower = match h {
        ExtNat::Infinite => ExtNat::Infinite,
        ExtNat::Finite(h) => ExtNat::Finite(h.div_ceil(2).saturating_sub(1)),
    };
    Ok((h, lower))
}

/// Collapse grouping the terms of `F` by their first variable; it has at
/// most `N` pairs. `None` for linear forms.
pub fn trivial_witness<F: Field>(f: &Form<F>) -> Option<CollapseWitness<F>> {
    if f.degree() < 2 {
        return None;
    }
    let n = f.nvars();
    let field = f.field().clone();
    let mut groups: Vec<Vec<(Monomial, F::Elem)>> = (0..n).map(|_| Vec::new()).collect();
    for (m, c) in f.poly().terms() {
        let i = (0..n).find(|&i| m.exponent(i) > 0).expect("positive degree");
        let mut e = m.exponents().to_vec();
        e[i] -= 1;
        groups[i].push((Monomial::from_exponents(e), c.clone()));
    }
    let pairs = groups
        .into_iter()
        .enumerate()
        .filter(|(_, t)| !t.is_empty())
        .map(|(i, t)| {
            let g = Form::new(Polynomial::var(field.clone(), n, i)).expect("variable");
            let h = Form::new(Polynomial::from_terms(field.clone(), n, t)).expect("nonzero cofactor");
            (g, h)
        })
        .collect();
    Some(CollapseWitness::new(f.clone(), pairs).expect("grouping is exact"))
}

/// Search for a `k`-collapse over the (finite) coefficient field.
///
/// `Ok(None)` means the enumeration finished and none exists over this field.
pub fn find_collapse<F: Field>(f: &Form<F>, k: usize, budget: &Budget) -> Result<Option<CollapseWitness<F>>> {
    let d = f.degree();
    if d < 2 || k == 0 {
        return Ok(None);
    }
    let elems = f.field().elements().ok_or(Error::InfiniteField)?;
    let n = f.nvars();
    if k >= n {
        return Ok(trivial_witness(f));
    }
    let degrees: Vec<u32> = (1..=d / 2).collect();
    let bases: Vec<Vec<Monomial>> = degrees.iter().map(|&e| Monomial::all_of_degree(n, e)).collect();
    let mut tried = 0u64;
    let mut found: Option<Vec<Polynomial<F>>> = None;
    let mut failure: Option<Error> = None;

    for profile in profiles(k, &bases.iter().map(Vec::len).collect::<Vec<_>>()) {
        let mut acc: Vec<Polynomial<F>> = Vec::with_capacity(k);
        let flow = for_each_profile(f.field(), n, &elems, &bases, &profile, 0, &mut acc, &mut |gens| {
            tried += 1;
            if tried > budget.max_enumeration {
                failure = Some(Error::BudgetExceeded(BudgetLimit::Enumeration(budget.max_enumeration)));
                return ControlFlow::Break(());
            }
            match contains(gens, f.poly(), budget) {
                Ok(true) => {
                    found = Some(gens.to_vec());
                    ControlFlow::Break(())
                }
                Ok(false) => ControlFlow::Continue(()),
                Err(e) => {
                    failure = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        if flow.is_break() {
            break;
        }
    }
    if let Some(e) = failure {
        return Err(e);
    }
    match found {
        None => Ok(None),
        Some(gens) => Ok(Some(witness_from_generators(f, &gens, budget)?)),
    }
}

fn contains<F: Field>(gens: &[Polynomial<F>], f: &Polynomial<F>, budget: &Budget) -> Result<bool> {
    let gb = GroebnerBasis::for_ideal(f.field().clone(), f.nvars(), gens, MonomialOrder::GrevLex, budget)?;
    Ok(gb.contains(f))
}

/// Rebuild `F = Σ G_i H_i` from `F ∈ (G_1..G_k)`.
pub fn witness_from_generators<F: Field>(
    f: &Form<F>,
    gens: &[Polynomial<F>],
    budget: &Budget,
) -> Result<CollapseWitness<F>> {
    let cof = lift(gens, f.poly(), budget)?
        .ok_or_else(|| Error::Precondition("form is not in the ideal of the proposed factors".into()))?;
    let mut pairs = Vec::new();
    for (g, a) in gens.iter().zip(cof) {
        let g = Form::new(g.clone())?;
        let h = a.homogeneous_component(f.degree() - g.degree());
        if !h.is_zero() {
            pairs.push((g, Form::new(h)?));
        }
    }
    CollapseWitness::new(f.clone(), pairs)
}

/// Ways to split `k` generators among the degrees, capped by each piece's
/// dimension; more low-degree generators first.
fn profiles(k: usize, dims: &[usize]) -> Vec<Vec<usize>> {
    fn rec(k: usize, dims: &[usize], i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == dims.len() {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for take in (0..=k.min(dims[i])).rev() {
            cur.push(take);
            rec(k - take, dims, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, dims, 0, &mut Vec::new(), &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn for_each_profile<F: Field>(
    field: &F,
    n: usize,
    elems: &[F::Elem],
    bases: &[Vec<Monomial>],
    profile: &[usize],
    i: usize,
    acc: &mut Vec<Polynomial<F>>,
    visit: &mut dyn FnMut(&[Polynomial<F>]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if i == profile.len() {
        return visit(acc);
    }
    if profile[i] == 0 {
        return for_each_profile(field, n, elems, bases, profile, i + 1, acc, visit);
    }
    let basis = &bases[i];
    for_each_subspace(field, elems, basis.len(), profile[i], &mut |rows| {
        let base = acc.len();
        for row in rows {
            let terms = row
                .iter()
                .zip(basis)
                .filter(|(c, _)| !field.is_zero(c))
                .map(|(c, m)| (m.clone(), c.clone()));
            acc.push(Polynomial::from_terms(field.clone(), n, terms));
        }
        let flow = for_each_profile(field, n, elems, bases, profile, i + 1, acc, visit);
        acc.truncate(base);
        flow
    })
}

/// Every `k`-dimensional subspace of `F^m`, once, as its reduced row echelon
/// basis (pivot columns ascending, pivots equal to one).
pub fn for_each_subspace<F: Field>(
    field: &F,
    elems: &[F::Elem],
    m: usize,
    k: usize,
    visit: &mut dyn FnMut(&[Vec<F::Elem>]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if k > m {
        return ControlFlow::Continue(());
    }
    for pivots in combinations(m, k) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                let pivots = &pivots;
                (p + 1..m).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let mut rows: Vec<Vec<F::Elem>> = (0..k)
            .map(|r| {
                let mut row = vec![field.zero(); m];
                row[pivots[r]] = field.one();
                row
            })
            .collect();
        let mut digits = vec![0usize; free.len()];
        loop {
            for (slot, &(r, c)) in free.iter().enumerate() {
                rows[r][c] = elems[digits[slot]].clone();
            }
            visit(&rows)?;
            // odometer
            let mut j = 0;
            loop {
                if j == digits.len() {
                    break;
                }
                digits[j] += 1;
                if digits[j] < elems.len() {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
            if j == digits.len() {
                break;
            }
        }
    }
    ControlFlow::Continue(())
}

/// Exact strength by exhaustive search where the budget allows, otherwise
/// the best interval. `max_k` caps the collapse sizes searched.
pub fn strength_exact<F: Field>(f: &Form<F>, max_k: Option<usize>, budget: &Budget) -> Result<StrengthReport<F>> {
    if f.is_linear() {
        return Ok(StrengthReport {
            lower: ExtNat::Infinite,
            upper: ExtNat::Infinite,
            exact: Some(ExtNat::Infinite),
            field_caveat: false,
            witness: None,
            jacobian_height: Some(ExtNat::Infinite),
            jacobian_lower: ExtNat::Infinite,
            searched_k: 0,
            complete: true,
        });
    }
    let (jacobian_height, jacobian_lower) = match jacobian_bound(f, budget) {
        Ok((h, l)) => (Some(h), l),
        Err(Error::BudgetExceeded(_)) => (None, ExtNat::Finite(0)),
        Err(e) => return Err(e),
    };
    let trivial = trivial_witness(f).expect("degree at least two");
    let mut report = StrengthReport {
        lower: jacobian_lower,
        upper: ExtNat::Finite(trivial.k() as u64 - 1),
        exact: None,
        field_caveat: false,
        witness: Some(trivial),
        jacobian_height,
        jacobian_lower,
        searched_k: 0,
        complete: false,
    };
    // no j-collapse for j <= lower
    let start = jacobian_lower.finite().expect("finite for d >= 2") as usize + 1;
    let top = report.upper.finite().expect("finite") as usize;
    let finite_field = f.field().elements().is_some();
    let mut j = start;
    while finite_field && j <= top && max_k.is_none_or(|m| j <= m) {
        match find_collapse(f, j, budget) {
            Ok(Some(w)) => {
                report.upper = ExtNat::Finite(j as u64 - 1);
                report.witness = Some(w);
                break;
            }
            Ok(None) => {
                report.searched_k = j;
                report.field_caveat = true;
                report.lower = report.lower.max(ExtNat::Finite(j as u64));
                j += 1;
            }
            Err(Error::BudgetExceeded(_)) => break,
            Err(e) => return Err(e),
        }
    }
    if report.lower >= report.upper {
        report.lower = report.upper;
        report.exact = Some(report.upper);
        report.complete = true;
    }
    Ok(report)
}
