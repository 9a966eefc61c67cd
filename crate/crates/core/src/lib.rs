//! Computations around the strength of homogeneous forms: exact and bounded
//! strength, Jacobian certificates for regular sequences and Serre's `R_η`,
//! descent of a graded space of forms into a small subalgebra generated by a
//! regular sequence, free resolutions, and explicit bound recursions.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod certify;
pub mod descent;
mod error;
mod extended;
pub mod field;
pub mod groebner;
pub mod matrix;
pub mod poly;
pub mod strength;

pub use error::{BudgetLimit, Error, FieldError, ParseError, Result};
pub use extended::{ExtNat, ExtendedHeight};
