//! Exact sparse multivariate polynomials and grading-aware utilities.

mod form;
mod graded;
mod linear;
mod monomial;
mod parse;
mod polynomial;

pub use form::{
    dehomogenize, homogenize_polynomial, derivative_space, gradient, homogenize, jacobian, leading_form, partial_derivative, Form,
};
pub use graded::{DimensionSequence, GradedSpace};
pub use linear::LinearSpan;
pub use monomial::Monomial;
pub(crate) use monomial::grevlex_range;
pub use parse::{parse_polynomial, parse_polynomials};
pub use polynomial::Polynomial;
