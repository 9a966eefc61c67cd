use core::cmp::Ordering;

use crate::poly::{grevlex_range, Monomial};

/// Monomial orders on `x1..xN`, all with `x1 > x2 > ... > xN`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    GrevLex,
    /// Pure lexicographic.
    Lex,
    /// Block order eliminating the first `block` variables: grevlex on
    /// `x1..x_block`, ties broken by grevlex on the rest.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => a.cmp(b),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Elimination { block } => {
                let (ea, eb) = (a.exponents(), b.exponents());
                let k = block.min(ea.len());
                grevlex_range(&ea[..k], &eb[..k]).then_with(|| grevlex_range(&ea[k..], &eb[k..]))
            }
        }
    }
}

/// How module terms `m·e_i` compare across components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Position {
    /// Component first (lower index is larger), then the monomial.
    #[default]
    OverTerm,
    /// Monomial first, then component.
    TermOver,
}

/// Order on module terms; ideals use component 0 only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct TermOrder {
    pub monomial: MonomialOrder,
    pub position: Position,
}

impl TermOrder {
    pub fn new(monomial: MonomialOrder) -> Self {
        Self {
            monomial,
            position: Position::OverTerm,
        }
    }

    pub(crate) fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        let by_comp = b.comp.cmp(&a.comp);
        match self.position {
            Position::OverTerm => by_comp.then_with(|| self.monomial.cmp(&a.mono, &b.mono)),
            Position::TermOver => self.monomial.cmp(&a.mono, &b.mono).then(by_comp),
        }
    }
}

/// `mono · e_comp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub mono: Monomial,
    pub comp: usize,
}

impl Term {
    pub fn divides(&self, other: &Term) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }

    pub fn lcm(&self, other: &Term) -> Option<Term> {
        (self.comp == other.comp).then(|| Term {
            mono: self.mono.lcm(&other.mono),
            comp: self.comp,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_and_elimination() {
        let lex = MonomialOrder::Lex;
        assert_eq!(lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let elim = MonomialOrder::Elimination { block: 1 };
        // any power of x1 beats everything free of x1
        assert_eq!(elim.cmp(&m(&[1, 0, 0]), &m(&[0, 3, 3])), Ordering::Greater);
        assert_eq!(elim.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        let grevlex = MonomialOrder::GrevLex;
        assert_eq!(grevlex.cmp(&m(&[1, 0, 0]), &m(&[0, 3, 3])), Ordering::Less);
    }

    #[test]
    fn position_over_term_prefers_low_components() {
        let o = TermOrder::default();
        let a = Term { mono: m(&[0, 0]), comp: 0 };
        let b = Term { mono: m(&[4, 4]), comp: 1 };
        assert_eq!(o.cmp(&a, &b), Ordering::Greater);
        let top = TermOrder {
            monomial: MonomialOrder::GrevLex,
            position: Position::TermOver,
        };
        assert_eq!(top.cmp(&a, &b), Ordering::Less);
    }
}
