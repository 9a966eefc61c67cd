use alloc::boxed::Box;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use super::{Budget, GroebnerBasis, MonomialOrder};
use crate::error::{Error, Result};
use crate::extended::ExtNat;
use crate::field::Field;
use crate::poly::{Monomial, Polynomial};

/// An ideal of `F[x1..xN]` given by generators. The grevlex Gröbner basis is
/// computed on first use and cached.
pub struct Ideal<F: Field> {
    field: F,
    nvars: usize,
    gens: Vec<Polynomial<F>>,
    grevlex: OnceBox<GroebnerBasis<F>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let grevlex = OnceBox::new();
        if let Some(gb) = self.grevlex.get() {
            let _ = grevlex.set(Box::new(gb.clone()));
        }
        Self {
            field: self.field.clone(),
            nvars: self.nvars,
            gens: self.gens.clone(),
            grevlex,
        }
    }
}

impl<F: Field> core::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_list().entries(&self.gens).finish()
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(field: F, nvars: usize, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if gens.iter().any(|g| g.nvars() != nvars || *g.field() != field) {
            return Err(Error::AmbientMismatch);
        }
        Ok(Self {
            field,
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            grevlex: OnceBox::new(),
        })
    }

    /// Ideal generated by a nonempty list of polynomials.
    pub fn from_generators(gens: Vec<Polynomial<F>>) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::Precondition("no generators given".into()))?;
        let (field, nvars) = (first.field().clone(), first.nvars());
        Self::new(field, nvars, gens)
    }

    pub fn zero(field: F, nvars: usize) -> Self {
        Self::new(field, nvars, Vec::new()).expect("no generators")
    }

    pub fn unit(field: F, nvars: usize) -> Self {
        let one = Polynomial::one(field.clone(), nvars);
        Self::new(field, nvars, alloc::vec![one]).expect("same ring")
    }

    pub(crate) fn with_basis(gb: GroebnerBasis<F>) -> Self {
        let ideal = Self {
            field: gb.field().clone(),
            nvars: gb.nvars(),
            gens: gb.polynomials(),
            grevlex: OnceBox::new(),
        };
        if gb.order().monomial == MonomialOrder::GrevLex {
            let _ = ideal.grevlex.set(Box::new(gb));
        }
        ideal
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The cached grevlex Gröbner basis.
    pub fn groebner(&self, budget: &Budget) -> Result<&GroebnerBasis<F>> {
        self.grevlex.get_or_try_init(|| {
            GroebnerBasis::for_ideal(
                self.field.clone(),
                self.nvars,
                &self.gens,
                MonomialOrder::GrevLex,
                budget,
            )
            .map(Box::new)
        })
    }

    pub fn groebner_with(&self, order: MonomialOrder, budget: &Budget) -> Result<GroebnerBasis<F>> {
        GroebnerBasis::for_ideal(self.field.clone(), self.nvars, &self.gens, order, budget)
    }

    pub fn contains(&self, p: &Polynomial<F>, budget: &Budget) -> Result<bool> {
        if p.nvars() != self.nvars || *p.field() != self.field {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.groebner(budget)?.contains(p))
    }

    pub fn contains_ideal(&self, other: &Ideal<F>, budget: &Budget) -> Result<bool> {
        let gb = self.groebner(budget)?;
        Ok(other.gens.iter().all(|g| gb.contains(g)))
    }

    pub fn equals(&self, other: &Ideal<F>, budget: &Budget) -> Result<bool> {
        Ok(self.contains_ideal(other, budget)? && other.contains_ideal(self, budget)?)
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        Ok(self.groebner(budget)?.is_unit())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(self.field.clone(), self.nvars, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Self::new(self.field.clone(), self.nvars, gens)
    }

    /// Krull dimension of `R/I`; `-1` for the unit ideal.
    pub fn dimension(&self, budget: &Budget) -> Result<i64> {
        let gb = self.groebner(budget)?;
        if gb.is_unit() {
            return Ok(-1);
        }
        Ok(independent_set_size(self.nvars, &gb.leading_monomials())? as i64)
    }

    /// `N - dim(R/I)`, infinite for the unit ideal.
    pub fn height(&self, budget: &Budget) -> Result<ExtNat> {
        let d = self.dimension(budget)?;
        Ok(if d < 0 {
            ExtNat::Infinite
        } else {
            ExtNat::Finite(self.nvars as u64 - d as u64)
        })
    }
}

/// Size of a largest set of variables containing the support of no leading
/// monomial; that is the dimension of `R/in(I)`, hence of `R/I`.
fn independent_set_size(nvars: usize, leads: &[Monomial]) -> Result<usize> {
    if nvars > 64 {
        return Err(Error::Precondition("dimension needs at most 64 variables".into()));
    }
    let mut masks: Vec<u64> = leads.iter().map(Monomial::support_mask).collect();
    masks.sort_unstable();
    masks.dedup();
    let mut best = 0usize;
    search(nvars, &masks, 0, 0, 0, &mut best);
    Ok(best)
}

fn search(nvars: usize, masks: &[u64], i: usize, chosen: u64, size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if i == nvars || size + (nvars - i) <= *best {
        return;
    }
    let with = chosen | (1 << i);
    if masks.iter().all(|m| m & !with != 0) {
        search(nvars, masks, i + 1, with, size + 1, best);
    }
    search(nvars, masks, i + 1, chosen, size, best);
}
