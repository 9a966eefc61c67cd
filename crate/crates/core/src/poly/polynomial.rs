use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use crate::field::Field;

/// A sparse polynomial in `x1..xN` with exact coefficients.
///
/// Terms are kept strictly decreasing in graded reverse lexicographic order
/// with no zero coefficients, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.field == other.field && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        let terms = if field.is_zero(&c) {
            Vec::new()
        } else {
            alloc::vec![(Monomial::one(nvars), c)]
        };
        Self {
            field,
            nvars,
            terms,
        }
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let one = field.one();
        Self::constant(field, nvars, one)
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    ///
    /// Panics if `i >= nvars`.
    pub fn var(field: F, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let one = field.one();
        Self {
            field,
            nvars,
            terms: alloc::vec![(Monomial::var(nvars, i), one)],
        }
    }

    pub fn monomial(field: F, m: Monomial, c: F::Elem) -> Self {
        let nvars = m.nvars();
        if field.is_zero(&c) {
            return Self::zero(field, nvars);
        }
        Self {
            field,
            nvars,
            terms: alloc::vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms, combining repeated monomials.
    pub fn from_terms<I>(field: F, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let mut terms: Vec<(Monomial, F::Elem)> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Self {
            field,
            nvars,
            terms: out,
        }
    }

    /// Terms already strictly decreasing with nonzero coefficients.
    pub(crate) fn from_sorted_terms(field: F, nvars: usize, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !field.is_zero(c)));
        Self {
            field,
            nvars,
            terms,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in decreasing grevlex order.
    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        // grevlex is degree-compatible, so the first term has maximal degree
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_degree()
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .cloned()
            .collect();
        Self::from_sorted_terms(self.field.clone(), self.nvars, terms)
    }

    /// Nonzero homogeneous components, highest degree first.
    pub fn homogeneous_components(&self) -> Vec<(u32, Self)> {
        let mut out: Vec<(u32, Self)> = Vec::new();
        for (m, c) in &self.terms {
            match out.last_mut() {
                Some((d, p)) if *d == m.degree() => p.terms.push((m.clone(), c.clone())),
                _ => out.push((
                    m.degree(),
                    Self::from_sorted_terms(self.field.clone(), self.nvars, alloc::vec![(m.clone(), c.clone())]),
                )),
            }
        }
        out
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone(), self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
            .collect();
        Self::from_sorted_terms(self.field.clone(), self.nvars, terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone(), self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| (t.mul(m), self.field.mul(a, c)))
            .collect();
        Self::from_sorted_terms(self.field.clone(), self.nvars, terms)
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone(), self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponent(i) > 0))
            .collect()
    }

    /// Move into a ring with `nvars` variables, old variable `i` becoming `i + offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Self {
        assert!(offset + self.nvars <= nvars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.embed(nvars, offset), c.clone()));
        Self::from_terms(self.field.clone(), nvars, terms)
    }

    /// Drop the variables in `range`, or `None` if any of them occurs.
    pub fn restrict_away(&self, range: core::ops::Range<usize>) -> Option<Self> {
        let nvars = self.nvars - range.len();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.restrict_away(range.clone())?, c.clone()));
        }
        Some(Self::from_terms(self.field.clone(), nvars, terms))
    }

    /// Evaluate with `x_i := images[i]`; all images share one ambient ring.
    pub fn substitute(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target_nvars = images.first().map_or(0, |p| p.nvars);
        let field = self.field.clone();
        let mut acc = Self::zero(field.clone(), target_nvars);
        // cache of powers per variable
        let mut powers: Vec<Vec<Self>> = images
            .iter()
            .map(|p| alloc::vec![Self::one(field.clone(), p.nvars), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut term = Self::constant(field.clone(), target_nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Set variable `i` to the constant `c`, staying in the same ring.
    pub fn set_variable(&self, i: usize, c: &F::Elem) -> Self {
        let terms = self.terms.iter().map(|(m, a)| {
            let e = m.exponent(i);
            let mut m2 = m.clone();
            m2.set_exponent(i, 0);
            (m2, self.field.mul(a, &self.field.pow(c, e as u64)))
        });
        Self::from_terms(self.field.clone(), self.nvars, terms)
    }

    fn check_ambient(&self, other: &Self) {
        assert!(
            self.nvars == other.nvars && self.field == other.field,
            "polynomials from different rings"
        );
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        self.check_ambient(other);
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), if negate { f.neg(cb) } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !f.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate { f.neg(c) } else { c.clone() })),
        );
        Self::from_sorted_terms(f.clone(), self.nvars, out)
    }

    fn product(&self, other: &Self) -> Self {
        self.check_ambient(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone(), self.nvars);
        }
        let f = &self.field;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), f.mul(ca, cb)));
            }
        }
        Self::from_terms(f.clone(), self.nvars, raw)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.check_ambient(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let lc_inv = self.field.inv(lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let q = lm.quotient_of(m)?;
            let qc = self.field.mul(c, &lc_inv);
            rem = &rem - &divisor.mul_term(&q, &qc);
            quot.push((q, qc));
        }
        Some(Self::from_terms(self.field.clone(), self.nvars, quot))
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, false)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, true)
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.product(rhs)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.field.neg(c)))
            .collect();
        Polynomial::from_sorted_terms(self.field.clone(), self.nvars, terms)
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

struct ElemFmt<'a, F: Field>(&'a F, &'a F::Elem);

impl<F: Field> fmt::Display for ElemFmt<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_elem(self.1, f)
    }
}

/// Prints in the text grammar accepted by [`parse_polynomial`](super::parse_polynomial),
/// e.g. `3*x1^2*x2 - x3^3`.
impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = &self.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = field.is_negative(c);
            let abs = if negative { field.neg(c) } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut need_star = false;
            if m.is_one() || !field.is_one(&abs) {
                write!(f, "{}", ElemFmt(field, &abs))?;
                need_star = true;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if need_star {
                    f.write_str("*")?;
                }
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use alloc::string::ToString;

    fn x(i: usize) -> Polynomial<PrimeField> {
        Polynomial::var(PrimeField::new(5).unwrap(), 3, i)
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let a = &x(0) + &x(1);
        let b = &x(0) - &x(1);
        let prod = &a * &b;
        let expect = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(prod, expect);
        assert!((&prod - &expect).is_zero());
        assert_eq!(a.pow(5), &x(0).pow(5) + &x(1).pow(5)); // Frobenius in char 5
    }

    #[test]
    fn display_uses_text_grammar() {
        let f = PrimeField::new(5).unwrap();
        let p = &(&x(0).pow(2) * &x(1)).scale(&3) + &x(2).pow(3).scale(&f.from_i64(-1));
        assert_eq!(p.to_string(), "3*x1^2*x2 + 4*x3^3");
        let q = Rationals;
        let y = Polynomial::var(q, 2, 1);
        let r = &y.scale(&q.from_i64(-2)) + &Polynomial::constant(q, 2, q.from_i64(1));
        assert_eq!(r.to_string(), "-2*x2 + 1");
        assert_eq!(Polynomial::zero(q, 2).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let p = &(&x(0) + &x(1)) * &(&x(0) * &x(2));
        assert_eq!(p.div_exact(&(&x(0) + &x(1))), Some(&x(0) * &x(2)));
        assert_eq!(p.div_exact(&x(1)), None);
    }

    #[test]
    fn substitution_and_components() {
        let p = &(&x(0) * &x(1)) + &x(2);
        let images = [x(0), x(0), Polynomial::one(PrimeField::new(5).unwrap(), 3)];
        let q = p.substitute(&images);
        assert_eq!(q, &x(0).pow(2) + &Polynomial::one(PrimeField::new(5).unwrap(), 3));
        let comps = p.homogeneous_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].0, 2);
        assert!(!p.is_homogeneous());
    }
}
