//! Gröbner bases for ideals and submodules of free modules, and the ideal
//! and module operations built on them: dimension and height, intersection,
//! colon, saturation, kernels, syzygies and free resolutions.

mod engine;
mod ideal;
mod module;
mod ops;
mod order;

use alloc::vec::Vec;

pub use engine::GbStats;
pub use ideal::Ideal;
pub use module::{free_resolution, kernel_of_map, lift, projective_dimension, syzygies, FreeResolution, SubmoduleOfFree};
pub use ops::{colon_ideal, intersection, leading_form_ideal, saturation};
pub use order::{MonomialOrder, Position, TermOrder};

use engine::{Engine, Terms};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial};

/// Caps on computations that can blow up. Exceeding any of them is reported
/// as [`Error::BudgetExceeded`], never as an answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Critical pairs reduced in a single Buchberger run.
    pub max_pairs: usize,
    /// Largest S-polynomial degree.
    pub max_degree: u32,
    /// Candidates tried by an exhaustive enumeration.
    pub max_enumeration: u64,
    /// Memoized states of a bound recursion.
    pub max_states: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_pairs: 200_000,
            max_degree: 64,
            max_enumeration: 2_000_000,
            max_states: 2_000_000,
        }
    }
}

/// A reduced Gröbner basis of a submodule of `R^rank` (an ideal when `rank == 1`).
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    nvars: usize,
    rank: usize,
    order: TermOrder,
    elems: Vec<Terms<F>>,
    stats: GbStats,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn compute(
        field: F,
        nvars: usize,
        rank: usize,
        order: TermOrder,
        gens: &[Vec<Polynomial<F>>],
        budget: &Budget,
    ) -> Result<Self> {
        for v in gens {
            if v.len() != rank {
                return Err(Error::Shape(alloc::format!(
                    "vector of length {} in a rank-{rank} module",
                    v.len()
                )));
            }
            if v.iter().any(|p| p.nvars() != nvars || *p.field() != field) {
                return Err(Error::AmbientMismatch);
            }
        }
        let engine = Engine {
            field: &field,
            order,
            rank,
        };
        let packed = gens.iter().map(|v| engine.pack(v)).collect();
        let mut stats = GbStats::default();
        let elems = engine.buchberger(packed, budget, &mut stats)?;
        Ok(Self {
            field,
            nvars,
            rank,
            order,
            elems,
            stats,
        })
    }

    pub fn for_ideal(
        field: F,
        nvars: usize,
        gens: &[Polynomial<F>],
        order: MonomialOrder,
        budget: &Budget,
    ) -> Result<Self> {
        let vecs: Vec<Vec<Polynomial<F>>> = gens.iter().map(|g| alloc::vec![g.clone()]).collect();
        Self::compute(field, nvars, 1, TermOrder::new(order), &vecs, budget)
    }

    fn engine(&self) -> Engine<'_, F> {
        Engine {
            field: &self.field,
            order: self.order,
            rank: self.rank,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn reduce_vector(&self, v: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
        let e = self.engine();
        let basis: Vec<&Terms<F>> = self.elems.iter().collect();
        let r = e.reduce(e.pack(v), &basis);
        e.unpack(&r, self.nvars)
    }

    /// Normal form of `p`; ideals only.
    pub fn reduce(&self, p: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(self.rank, 1, "reduce() is for ideals");
        self.reduce_vector(core::slice::from_ref(p))
            .pop()
            .expect("rank one")
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn contains_vector(&self, v: &[Polynomial<F>]) -> bool {
        self.reduce_vector(v).iter().all(Polynomial::is_zero)
    }

    pub fn vectors(&self) -> Vec<Vec<Polynomial<F>>> {
        let e = self.engine();
        self.elems.iter().map(|v| e.unpack(v, self.nvars)).collect()
    }

    /// Basis polynomials of an ideal.
    pub fn polynomials(&self) -> Vec<Polynomial<F>> {
        assert_eq!(self.rank, 1, "polynomials() is for ideals");
        self.vectors().into_iter().map(|mut v| v.pop().expect("rank one")).collect()
    }

    /// Leading terms as (monomial, component).
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elems
            .iter()
            .map(|v| {
                let (t, _) = v.last().expect("nonzero");
                (t.mono.clone(), t.comp)
            })
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.leading_terms().into_iter().map(|(m, _)| m).collect()
    }

    /// The basis contains a nonzero constant (ideals only).
    pub fn is_unit(&self) -> bool {
        self.rank == 1 && self.leading_monomials().iter().any(Monomial::is_one)
    }

    /// Check Buchberger's criterion: every S-vector reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        let e = self.engine();
        let basis: Vec<&Terms<F>> = self.elems.iter().collect();
        for (i, f) in self.elems.iter().enumerate() {
            for g in &self.elems[i + 1..] {
                let (ltf, ltg) = (&f.last().unwrap().0, &g.last().unwrap().0);
                let Some(lcm) = ltf.lcm(ltg) else { continue };
                let s = e.spoly(f, g, &lcm);
                if !e.reduce(s, &basis).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` (nonempty).
pub fn groebner_basis<F: Field>(
    gens: &[Polynomial<F>],
    order: MonomialOrder,
    budget: &Budget,
) -> Result<Vec<Polynomial<F>>> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("no generators given".into()))?;
    let gb = GroebnerBasis::for_ideal(first.field().clone(), first.nvars(), gens, order, budget)?;
    Ok(gb.polynomials())
}
