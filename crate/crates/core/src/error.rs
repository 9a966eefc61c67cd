use alloc::string::String;
use core::fmt;

use crate::extended::ExtNat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range")]
    ModulusTooLarge(u64),
}

/// Which configured cap was hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetLimit {
    Pairs(usize),
    Degree(u32),
    Enumeration(u64),
    States(u64),
}

impl fmt::Display for BudgetLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BudgetLimit::Pairs(n) => write!(f, "more than {n} critical pairs"),
            BudgetLimit::Degree(d) => write!(f, "S-polynomial degree above {d}"),
            BudgetLimit::Enumeration(n) => write!(f, "more than {n} enumerated candidates"),
            BudgetLimit::States(n) => write!(f, "more than {n} recursion states"),
        }
    }
}

/// Parse failure with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(BudgetLimit),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("constant where a form of positive degree is required")]
    Constant,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("operands live in different polynomial rings")]
    AmbientMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a regular sequence: height {height} for {count} forms")]
    NotRegularSequence { height: ExtNat, count: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("exhaustive search needs a finite coefficient field")]
    InfiniteField,
    #[error("no base threshold for degree {0}")]
    MissingBound(u32),
    #[error("integer overflow evaluating {0}")]
    Overflow(&'static str),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
