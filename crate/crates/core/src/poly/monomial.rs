use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A power product `x_1^{e_1} ... x_N^{e_N}` with its total degree cached.
///
/// The `Ord` implementation is graded reverse lexicographic with
/// `x1 > x2 > ... > xN`; it is the canonical storage order of
/// [`Polynomial`](super::Polynomial) terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Self { exps, degree }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables that occur (variables beyond 63 are ignored).
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(i, e)| **e > 0 && *i < 64)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    /// Degree in the variables `range`.
    pub fn partial_degree(&self, range: core::ops::Range<usize>) -> u32 {
        self.exps[range].iter().sum()
    }

    /// The monomial in a larger ring: `offset` new variables in front, then
    /// the old ones, then zeros up to `nvars`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[offset..offset + self.exps.len()].copy_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Drop the variables in `range`; `None` if any of them occurs.
    pub fn restrict_away(&self, range: core::ops::Range<usize>) -> Option<Monomial> {
        if self.exps[range.clone()].iter().any(|e| *e > 0) {
            return None;
        }
        let exps: Vec<u32> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(i, _)| !range.contains(i))
            .map(|(_, e)| *e)
            .collect();
        Some(Monomial::from_exponents(exps))
    }

    /// All monomials of degree `d` in `nvars` variables, descending in grevlex.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn fill(exps: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left;
                out.push(Monomial::from_exponents(exps.clone()));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                fill(exps, i + 1, left - e, out);
            }
            exps[i] = 0;
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        fill(&mut vec![0; nvars], 0, d, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    pub(crate) fn set_exponent(&mut self, i: usize, e: u32) {
        self.degree = self.degree - self.exps[i] + e;
        self.exps[i] = e;
    }
}

/// Graded reverse lexicographic comparison restricted to `range`.
pub(crate) fn grevlex_range(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for (x, y) in self.exps.iter().zip(&other.exps).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        // x1 > x2 > x3
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[0, 0, 1]));
        // degree first
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // x1 x3 < x2^2 in grevlex
        assert!(m(&[1, 0, 1]) < m(&[0, 2, 0]));
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 0]));
        assert_eq!(m(&[1, 1, 0]).quotient_of(&a), Some(m(&[1, 0, 0])));
        assert_eq!(b.quotient_of(&a), None);
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 1])));
        assert_eq!(m(&[1, 0, 3]).support_mask(), 0b101);
    }

    #[test]
    fn monomials_of_a_degree() {
        let all = Monomial::all_of_degree(3, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], m(&[2, 0, 0]));
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
    }
}
