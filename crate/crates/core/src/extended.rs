use core::cmp::Ordering;
use core::fmt;

/// A nonnegative integer or `+∞`. Used for ideal heights (the unit ideal has
/// infinite height) and for strengths (linear forms are infinitely strong).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

/// Height of an ideal; infinite exactly for the unit ideal.
pub type ExtendedHeight = ExtNat;

impl ExtNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(n) => Some(n),
            ExtNat::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Infinite)
    }

    /// `self >= rhs` where `rhs` may be negative.
    pub fn at_least(self, rhs: i64) -> bool {
        match self {
            ExtNat::Infinite => true,
            ExtNat::Finite(n) => (n as i128) >= rhs as i128,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        ExtNat::Finite(n)
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtNat::Finite(a), ExtNat::Finite(b)) => a.cmp(b),
            (ExtNat::Finite(_), ExtNat::Infinite) => Ordering::Less,
            (ExtNat::Infinite, ExtNat::Finite(_)) => Ordering::Greater,
            (ExtNat::Infinite, ExtNat::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Infinite => f.write_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_dominates() {
        assert!(ExtNat::Infinite > ExtNat::Finite(u64::MAX));
        assert!(ExtNat::Finite(2) < ExtNat::Finite(3));
        assert!(ExtNat::Finite(0).at_least(-4));
        assert!(!ExtNat::Finite(2).at_least(3));
        assert!(ExtNat::Infinite.at_least(i64::MAX));
    }
}
