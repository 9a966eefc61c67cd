use alloc::vec::Vec;
use core::fmt;

use super::linear::LinearSpan;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::PolyMatrix;

/// A nonzero homogeneous polynomial of positive degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Form<F: Field> {
    poly: Polynomial<F>,
    degree: u32,
}

impl<F: Field> Form<F> {
    pub fn new(poly: Polynomial<F>) -> Result<Self> {
        let degree = poly.total_degree().ok_or(Error::ZeroPolynomial)?;
        if !poly.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if degree == 0 {
            return Err(Error::Constant);
        }
        Ok(Self { poly, degree })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &Polynomial<F> {
        &self.poly
    }

    pub fn into_poly(self) -> Polynomial<F> {
        self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn field(&self) -> &F {
        self.poly.field()
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    pub fn monic(&self) -> Self {
        Self {
            poly: self.poly.monic(),
            degree: self.degree,
        }
    }
}

impl<F: Field> fmt::Display for Form<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl<F: Field> fmt::Debug for Form<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form({})", self.poly)
    }
}

/// Formal partial derivative with respect to variable `i` (0-based).
pub fn partial_derivative<F: Field>(f: &Polynomial<F>, i: usize) -> Result<Polynomial<F>> {
    if i >= f.nvars() {
        return Err(Error::VariableOutOfRange {
            index: i,
            nvars: f.nvars(),
        });
    }
    let field = f.field();
    let terms = f.terms().iter().filter_map(|(m, c)| {
        let e = m.exponent(i);
        if e == 0 {
            return None;
        }
        let mut exps = m.exponents().to_vec();
        exps[i] -= 1;
        Some((Monomial::from_exponents(exps), field.mul(c, &field.from_i64(e as i64))))
    });
    Ok(Polynomial::from_terms(field.clone(), f.nvars(), terms))
}

pub fn gradient<F: Field>(f: &Polynomial<F>) -> Vec<Polynomial<F>> {
    (0..f.nvars())
        .map(|i| partial_derivative(f, i).expect("index in range"))
        .collect()
}

/// A linearly independent spanning set of the space of partial derivatives.
pub fn derivative_space<F: Field>(f: &Polynomial<F>) -> Result<Vec<Polynomial<F>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut span = LinearSpan::new(f.field().clone(), f.nvars());
    let mut out = Vec::new();
    for d in gradient(f) {
        if span.insert(&d) {
            out.push(d);
        }
    }
    Ok(out)
}

/// Row `i` is the gradient of form `i`.
pub fn jacobian<F: Field>(forms: &[Form<F>]) -> Result<PolyMatrix<F>> {
    let first = forms
        .first()
        .ok_or_else(|| Error::Precondition("jacobian of an empty list".into()))?;
    if forms
        .iter()
        .any(|g| g.nvars() != first.nvars() || g.field() != first.field())
    {
        return Err(Error::AmbientMismatch);
    }
    PolyMatrix::from_rows(forms.iter().map(|g| gradient(g.poly())).collect())
}

/// Homogenize with a new last variable `x_{N+1}`; the result lives in `N + 1` variables.
pub fn homogenize<F: Field>(f: &Polynomial<F>) -> Result<Form<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Form::new(homogenize_polynomial(f))
}

/// Like [`homogenize`], but accepts zero and constants.
pub fn homogenize_polynomial<F: Field>(f: &Polynomial<F>) -> Polynomial<F> {
    let d = f.total_degree().unwrap_or(0);
    let terms = f.terms().iter().map(|(m, c)| {
        let mut exps = m.exponents().to_vec();
        exps.push(d - m.degree());
        (Monomial::from_exponents(exps), c.clone())
    });
    Polynomial::from_terms(f.field().clone(), f.nvars() + 1, terms)
}

/// Set the last variable to 1 and drop it.
pub fn dehomogenize<F: Field>(f: &Polynomial<F>) -> Polynomial<F> {
    let n = f.nvars();
    assert!(n > 0);
    let terms = f.terms().iter().map(|(m, c)| {
        let exps = m.exponents()[..n - 1].to_vec();
        (Monomial::from_exponents(exps), c.clone())
    });
    Polynomial::from_terms(f.field().clone(), n - 1, terms)
}

/// The top-degree homogeneous component.
pub fn leading_form<F: Field>(f: &Polynomial<F>) -> Result<Form<F>> {
    let d = f.total_degree().ok_or(Error::ZeroPolynomial)?;
    Form::new(f.homogeneous_component(d))
}
