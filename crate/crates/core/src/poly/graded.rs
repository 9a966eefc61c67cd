use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::form::Form;
use super::linear::LinearSpan;
use crate::error::{Error, Result};
use crate::field::Field;

/// Dimensions `(δ_1, ..., δ_d)` of the graded pieces of a space of forms,
/// with trailing zeros stripped.
///
/// Ordered by the entry at the largest index where two sequences differ,
/// which is a well-ordering on normalized sequences.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DimensionSequence(Vec<u64>);

impl DimensionSequence {
    pub fn new(mut entries: Vec<u64>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Self(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Dimension of the degree-`i` piece (`i >= 1`).
    pub fn get(&self, degree: u32) -> u64 {
        if degree == 0 {
            return 0;
        }
        self.0.get(degree as usize - 1).copied().unwrap_or(0)
    }

    /// Total dimension.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Highest degree with a nonzero piece (0 for the empty sequence).
    pub fn max_degree(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl PartialOrd for DimensionSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DimensionSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for i in (0..n).rev() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for DimensionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// A finite-dimensional graded space of forms, stored as a homogeneous basis
/// sorted by degree; the basis of each graded piece is linearly independent.
#[derive(Clone, Debug)]
pub struct GradedSpace<F: Field> {
    field: F,
    nvars: usize,
    basis: Vec<Form<F>>,
}

impl<F: Field> GradedSpace<F> {
    /// Span of the given forms, pruned to a basis. Order within a degree is
    /// the input order of the forms that survive.
    pub fn from_forms(field: F, nvars: usize, forms: Vec<Form<F>>) -> Result<Self> {
        if forms
            .iter()
            .any(|g| g.nvars() != nvars || *g.field() != field)
        {
            return Err(Error::AmbientMismatch);
        }
        let mut degrees: Vec<u32> = forms.iter().map(Form::degree).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut basis = Vec::new();
        for d in degrees {
            let mut span = LinearSpan::new(field.clone(), nvars);
            for g in forms.iter().filter(|g| g.degree() == d) {
                if span.insert(g.poly()) {
                    basis.push(g.clone());
                }
            }
        }
        Ok(Self {
            field,
            nvars,
            basis,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &[Form<F>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Form<F>> {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Basis of the degree-`d` piece.
    pub fn piece(&self, d: u32) -> Vec<&Form<F>> {
        self.basis.iter().filter(|g| g.degree() == d).collect()
    }

    /// Degrees with a nonzero piece, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.basis.iter().map(Form::degree).collect();
        ds.dedup();
        ds
    }

    pub fn dimension_sequence(&self) -> DimensionSequence {
        let top = self.basis.last().map_or(0, Form::degree) as usize;
        let mut entries = alloc::vec![0u64; top];
        for g in &self.basis {
            entries[g.degree() as usize - 1] += 1;
        }
        DimensionSequence::new(entries)
    }

    /// Whether `p` lies in the span of the degree-`d` piece.
    pub fn piece_contains(&self, d: u32, p: &crate::poly::Polynomial<F>) -> bool {
        let mut span = LinearSpan::new(self.field.clone(), self.nvars);
        for g in self.piece(d) {
            span.insert(g.poly());
        }
        span.contains(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::parse_polynomial;

    fn ds(v: &[u64]) -> DimensionSequence {
        DimensionSequence::new(v.to_vec())
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(ds(&[1, 2, 0, 0]), ds(&[1, 2]));
        assert_eq!(ds(&[0, 0]).entries(), &[] as &[u64]);
    }

    #[test]
    fn well_order_examples() {
        assert!(ds(&[5, 0, 1]) < ds(&[2, 1, 1]));
        assert_eq!(ds(&[1, 1]).cmp(&ds(&[1, 1])), Ordering::Equal);
        assert!(ds(&[9]) < ds(&[0, 1]));
        assert!(ds(&[]) < ds(&[1]));
    }

    #[test]
    fn graded_space_prunes_dependent_forms() {
        let f = PrimeField::new(5).unwrap();
        let forms: Vec<Form<_>> = ["x1 + x2", "x1^2", "2*x1 + 2*x2", "x3^3", "x1*x2"]
            .iter()
            .map(|s| Form::new(parse_polynomial(f, s, Some(3)).unwrap()).unwrap())
            .collect();
        let v = GradedSpace::from_forms(f, 3, forms).unwrap();
        assert_eq!(v.dimension_sequence(), ds(&[1, 2, 1]));
        assert_eq!(v.degrees(), alloc::vec![1, 2, 3]);
    }
}
