//! Exact coefficient fields: prime fields with machine residues and the
//! rationals with arbitrary-precision numerators and denominators.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Debug};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::FieldError;

/// A coefficient field. Implementors are small value types carried by every
/// polynomial so that arithmetic never needs an external ring context.
pub trait Field: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Image of the fraction `num / den`; `None` when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    /// Every element of the field in a fixed order (zero first), or `None`
    /// for infinite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Negative in the sense used by the text grammar (print as `- c`).
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn describe(&self) -> String;
}

/// The prime field F_p with residues stored in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Largest accepted modulus; products of two residues must fit in a `u64`.
    pub const MAX_MODULUS: u32 = (1 << 31) - 1;

    pub fn new(p: u32) -> Result<Self, FieldError> {
        if p > Self::MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p as u64));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p as u64));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u32 {
        n.rem_euclid(self.p as i128) as u32
    }

    fn reduce_bigint(&self, n: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        let r = ((n % &p) + &p) % &p;
        r.to_u32().unwrap_or(0)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid over i64
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u32)
    }

    fn from_i64(&self, n: i64) -> u32 {
        self.reduce_i128(n as i128)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<u32> {
        let d = self.reduce_bigint(den);
        let n = self.reduce_bigint(num);
        self.div(&n, &d)
    }

    fn characteristic(&self) -> u64 {
        self.p as u64
    }

    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.p).collect())
    }

    fn fmt_elem(&self, a: &u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }

    fn describe(&self) -> String {
        alloc::format!("p={}", self.p)
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn fmt_elem(&self, a: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if a.is_integer() {
            write!(f, "{}", a.numer())
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())
        }
    }

    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }

    fn describe(&self) -> String {
        String::from("Q")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_and_unit_moduli() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(97).is_ok());
    }

    #[test]
    fn inverses_mod_p() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.from_ratio(&BigInt::from(1), &BigInt::from(2)), Some(4));
        assert_eq!(f.from_ratio(&BigInt::from(1), &BigInt::from(14)), None);
    }

    #[test]
    fn rationals_are_exact() {
        let q = Rationals;
        let a = q.from_ratio(&BigInt::from(1), &BigInt::from(3)).unwrap();
        let s = q.add(&a, &q.add(&a, &a));
        assert!(q.is_one(&s));
    }
}
