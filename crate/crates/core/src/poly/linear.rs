use alloc::vec::Vec;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::field::Field;

/// Reduced row echelon basis of a finite-dimensional space of polynomials,
/// with monomials as coordinates.
#[derive(Clone, Debug)]
pub struct LinearSpan<F: Field> {
    field: F,
    nvars: usize,
    // monic rows with distinct pivots; every row vanishes on every other pivot
    rows: Vec<Polynomial<F>>,
}

impl<F: Field> LinearSpan<F> {
    pub fn new(field: F, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Polynomial<F>] {
        &self.rows
    }

    fn pivot(p: &Polynomial<F>) -> &Monomial {
        &p.leading_term().expect("rows are nonzero").0
    }

    /// Remainder after subtracting the span's component.
    pub fn reduce(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let mut r = p.clone();
        for row in &self.rows {
            let c = r.coefficient(Self::pivot(row));
            if !self.field.is_zero(&c) {
                r = &r - &row.scale(&c);
            }
        }
        r
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p`; returns false when it was already in the span.
    pub fn insert(&mut self, p: &Polynomial<F>) -> bool {
        debug_assert_eq!(p.nvars(), self.nvars);
        let r = self.reduce(p);
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        let pivot = Self::pivot(&r).clone();
        for row in &mut self.rows {
            let c = row.coefficient(&pivot);
            if !self.field.is_zero(&c) {
                *row = &*row - &r.scale(&c);
            }
        }
        self.rows.push(r);
        self.rows.sort_by(|a, b| Self::pivot(b).cmp(Self::pivot(a)));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::parse_polynomial;

    #[test]
    fn detects_dependence() {
        let f = PrimeField::new(3).unwrap();
        let p = |s| parse_polynomial(f, s, Some(3)).unwrap();
        let mut span = LinearSpan::new(f, 3);
        assert!(span.insert(&p("x1 + x2")));
        assert!(span.insert(&p("x1 - x2")));
        assert!(!span.insert(&p("x1")));
        assert!(span.contains(&p("x2")));
        assert!(!span.contains(&p("x3")));
        assert_eq!(span.dim(), 2);
        assert!(!span.insert(&p("0")));
    }
}
