//! Explicit strength thresholds and subalgebra-size bounds: the closed forms
//! for quadrics and cubics, the threshold `ηA_i(δ) = ηA(i) + 3(n-1)`, the
//! descent recursion `B(δ)` over dimension sequences and the projective
//! dimension bound `C(m, n, d)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{BudgetLimit, Error, Result};
use crate::groebner::Budget;
use crate::poly::DimensionSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Zero,
    Two,
    Three,
    /// Any other prime.
    Other,
}

impl Characteristic {
    pub fn of(p: u64) -> Self {
        match p {
            0 => Characteristic::Zero,
            2 => Characteristic::Two,
            3 => Characteristic::Three,
            _ => Characteristic::Other,
        }
    }
}

/// Base thresholds `ηA(i)` per degree, for a fixed `η` and characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundTable {
    base: BTreeMap<u32, u64>,
    eta: u64,
    characteristic: Characteristic,
}

impl BoundTable {
    /// Degrees 1 to 3 filled from the closed forms at `n = 1`:
    /// `ηA(1) = 0`, `ηA(2) = ⌈η/2⌉`, `ηA(3) = ℜ(η + 2)`, each raised to at
    /// least `i - 1`.
    pub fn standard(eta: u64, characteristic: Characteristic) -> Result<Self> {
        let mut base = BTreeMap::new();
        base.insert(1, 0);
        base.insert(2, eta.div_ceil(2).max(1));
        base.insert(3, cubic_eta_a(0, 0, 1, eta, characteristic)?[2].max(2));
        Ok(Self {
            base,
            eta,
            characteristic,
        })
    }

    /// Only the degrees listed, validated against `ηA(i) >= i - 1`.
    pub fn custom(eta: u64, characteristic: Characteristic, entries: &[(u32, u64)]) -> Result<Self> {
        let mut t = Self {
            base: BTreeMap::new(),
            eta,
            characteristic,
        };
        for &(i, v) in entries {
            t = t.with_base(i, v)?;
        }
        Ok(t)
    }

    pub fn with_base(mut self, degree: u32, value: u64) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Precondition("degrees start at 1".into()));
        }
        if value + 1 < degree as u64 {
            return Err(Error::Precondition(alloc::format!(
                "base value {value} for degree {degree} is below degree - 1"
            )));
        }
        self.base.insert(degree, value);
        Ok(self)
    }

    pub fn eta(&self) -> u64 {
        self.eta
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn base(&self, degree: u32) -> Result<u64> {
        self.base.get(&degree).copied().ok_or(Error::MissingBound(degree))
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.base.iter().map(|(k, v)| (*k, *v))
    }
}

/// `ηA_i(δ) = ηA(i) + 3(n - 1)` with `n = Σ δ`.
pub fn eta_a_i(delta: &DimensionSequence, i: u32, table: &BoundTable) -> Result<u64> {
    let n = delta.total();
    if n == 0 {
        return Err(Error::Precondition("empty dimension sequence".into()));
    }
    let base = table.base(i)?;
    (n - 1)
        .checked_mul(3)
        .and_then(|x| x.checked_add(base))
        .ok_or(Error::Overflow("eta_A_i"))
}

/// Strength thresholds for an `n`-dimensional space of quadrics: regular
/// sequences need `n - 1`, `R_η` needs `n - 1 + ⌈η/2⌉`.
pub fn quadric_thresholds(n: u64, eta: u64) -> Result<(u64, u64)> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    Ok((n - 1, n - 1 + eta.div_ceil(2)))
}

/// `2^{n+1}(n - 2) + 4`: generators of a regular-sequence subalgebra
/// containing an `n`-dimensional space of quadrics.
pub fn quadric_b(n: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n == 1 {
        // 4·(-1) + 4
        return Ok(0);
    }
    let pow = u32::try_from(n + 1)
        .ok()
        .and_then(|e| 1u128.checked_shl(e).filter(|_| e < 128))
        .ok_or(Error::Overflow("quadric_B"))?;
    pow.checked_mul((n - 2) as u128)
        .and_then(|x| x.checked_add(4))
        .ok_or(Error::Overflow("quadric_B"))
}

/// `ℜ(b)`: `(2b+1)(b-1)`, doubled in characteristic 2, and `2b^2 - b` in
/// characteristic 3.
pub fn frak_r(b: u64, characteristic: Characteristic) -> Result<u64> {
    let b = b as u128;
    let v = match characteristic {
        Characteristic::Three => 2 * b * b - b,
        Characteristic::Two => 2 * (2 * b + 1) * b.saturating_sub(1),
        _ => (2 * b + 1) * b.saturating_sub(1),
    };
    u64::try_from(v).map_err(|_| Error::Overflow("R(b)"))
}

/// Thresholds `(ηA_1, ηA_2, ηA_3)` for a space of forms of degree at most 3
/// with dimension sequence `(n1, n2, n3)`.
pub fn cubic_eta_a(n1: u64, n2: u64, n3: u64, eta: u64, characteristic: Characteristic) -> Result<[u64; 3]> {
    let two_sum = n2
        .checked_add(n3)
        .and_then(|s| s.checked_mul(2))
        .and_then(|s| s.checked_add(eta))
        .ok_or(Error::Overflow("cubic b"))?;
    let b = if n2 != 0 {
        two_sum.checked_add(1).ok_or(Error::Overflow("cubic b"))?
    } else {
        two_sum
    };
    let second = b.div_ceil(2).checked_add(n1).ok_or(Error::Overflow("cubic eta_A"))?;
    let third = frak_r(b, characteristic)?
        .checked_add(n1)
        .ok_or(Error::Overflow("cubic eta_A"))?;
    Ok([0, second, third])
}

/// `Φ(h, d) = ³B(h, d - 1) + 1`, with `³B` supplied by the caller.
pub fn phi(h: u64, d: u32, b3: &dyn Fn(u64, u32) -> Option<u128>) -> Result<u128> {
    if d < 2 {
        return Err(Error::Precondition("phi needs degree at least 2".into()));
    }
    let v = b3(h, d - 1).ok_or(Error::MissingBound(d - 1))?;
    v.checked_add(1).ok_or(Error::Overflow("phi"))
}

/// When the characteristic does not divide `d`, `Φ(h, d) = h` suffices.
pub fn phi_coprime(h: u64, d: u32, characteristic: u64) -> Option<u128> {
    (characteristic == 0 || !(d as u64).is_multiple_of(characteristic)).then_some(h as u128)
}

/// A default `³B(h, e)` for `e <= 2`, composed from the quadric results:
/// `h` for linear spaces, `max(h, 2^{h+1}(h-2)+4)` for quadric spaces. Not a
/// value stated for `R_3`; callers needing it should supply their own.
pub fn default_b3(h: u64, e: u32) -> Option<u128> {
    match (h, e) {
        (0, _) => Some(0),
        (_, 1) => Some(h as u128),
        (_, 2) => quadric_b(h).ok().map(|q| q.max(h as u128)),
        _ => None,
    }
}

/// Memoized descent recursion over dimension sequences. Entries are kept
/// as `u128` since they grow very fast.
pub struct BRecursion<'a> {
    table: &'a BoundTable,
    memo: BTreeMap<Vec<u128>, u128>,
    visited: u64,
    max_states: u64,
}

impl<'a> BRecursion<'a> {
    pub fn new(table: &'a BoundTable, budget: &Budget) -> Self {
        Self {
            table,
            memo: BTreeMap::new(),
            visited: 0,
            max_states: budget.max_states,
        }
    }

    pub fn states(&self) -> usize {
        self.memo.len()
    }

    /// `B(δ) = max(n, max_{δ'} B(δ'))`, `δ'` over all sequences obtained by
    /// lowering some `δ_i` (`i >= 2`, threshold `k = ηA_i(δ) > 0`) by one and
    /// spreading `2k` new forms over degrees `1..i-1` in every possible way.
    pub fn value(&mut self, delta: &DimensionSequence) -> Result<u128> {
        let key: Vec<u128> = delta.entries().iter().map(|&e| e as u128).collect();
        self.value_raw(key)
    }

    fn value_raw(&mut self, mut key: Vec<u128>) -> Result<u128> {
        while key.last() == Some(&0) {
            key.pop();
        }
        if let Some(v) = self.memo.get(&key) {
            return Ok(*v);
        }
        self.visited += 1;
        if self.visited > self.max_states {
            return Err(Error::BudgetExceeded(BudgetLimit::States(self.max_states)));
        }
        let n = key
            .iter()
            .try_fold(0u128, |a, &e| a.checked_add(e))
            .ok_or(Error::Overflow("B"))?;
        let mut best = n;
        for i in 2..=key.len() {
            if key[i - 1] == 0 {
                continue;
            }
            let base_i = self.table.base(i as u32)? as u128;
            let k = (n - 1)
                .checked_mul(3)
                .and_then(|x| x.checked_add(base_i))
                .ok_or(Error::Overflow("eta_A_i"))?;
            if k == 0 {
                continue;
            }
            let spread = k.checked_mul(2).ok_or(Error::Overflow("2·eta_A_i"))?;
            let mut base = key.clone();
            base[i - 1] -= 1;
            let mut err = None;
            for_each_composition(spread, i - 1, &mut |parts| {
                let mut next = base.clone();
                for (j, p) in parts.iter().enumerate() {
                    match next[j].checked_add(*p) {
                        Some(v) => next[j] = v,
                        None => {
                            err = Some(Error::Overflow("B"));
                            return false;
                        }
                    }
                }
                match self.value_raw(next) {
                    Ok(v) => {
                        best = best.max(v);
                        true
                    }
                    Err(e) => {
                        err = Some(e);
                        false
                    }
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        self.memo.insert(key, best);
        Ok(best)
    }
}

/// Visit every weak composition of `total` into `parts` parts; stop early
/// when `visit` returns false.
fn for_each_composition(total: u128, parts: usize, visit: &mut dyn FnMut(&[u128]) -> bool) -> bool {
    fn rec(left: u128, i: usize, cur: &mut Vec<u128>, visit: &mut dyn FnMut(&[u128]) -> bool) -> bool {
        if i + 1 == cur.len() {
            cur[i] = left;
            return visit(cur);
        }
        for take in 0..=left {
            cur[i] = take;
            if !rec(left - take, i + 1, cur, visit) {
                return false;
            }
        }
        true
    }
    if parts == 0 {
        return total != 0 || visit(&[]);
    }
    rec(total, 0, &mut alloc::vec![0; parts], visit)
}

/// `B(δ)` with a fresh memo.
pub fn b_recursion(delta: &DimensionSequence, table: &BoundTable, budget: &Budget) -> Result<u128> {
    BRecursion::new(table, budget).value(delta)
}

/// `C(m, n, d) = max { B(δ) : δ_1 + ... + δ_d = mnd }`.
pub fn stillman_c(m: u64, n: u64, d: u32, table: &BoundTable, budget: &Budget) -> Result<u128> {
    if d == 0 {
        return Err(Error::Precondition("d must be positive".into()));
    }
    let total = m
        .checked_mul(n)
        .and_then(|x| x.checked_mul(d as u64))
        .ok_or(Error::Overflow("mnd"))?;
    let mut rec = BRecursion::new(table, budget);
    let mut best = 0u128;
    let mut err = None;
    for_each_composition(total as u128, d as usize, &mut |parts| match rec.value_raw(parts.to_vec()) {
        Ok(v) => {
            best = best.max(v);
            true
        }
        Err(e) => {
            err = Some(e);
            false
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(best),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[u64]) -> DimensionSequence {
        DimensionSequence::new(v.to_vec())
    }

    #[test]
    fn closed_forms() {
        assert_eq!(quadric_b(2).unwrap(), 4);
        assert_eq!(quadric_b(3).unwrap(), 20);
        assert_eq!(quadric_b(4).unwrap(), 68);
        assert!(matches!(quadric_b(200), Err(Error::Overflow(_))));
        assert_eq!(quadric_thresholds(1, 1).unwrap(), (0, 1));
        assert_eq!(quadric_thresholds(3, 2).unwrap(), (2, 3));
        assert_eq!(quadric_thresholds(2, 3).unwrap(), (1, 3));
        assert_eq!(cubic_eta_a(0, 0, 1, 1, Characteristic::Zero).unwrap(), [0, 2, 14]);
        assert_eq!(cubic_eta_a(0, 0, 1, 1, Characteristic::Three).unwrap(), [0, 2, 15]);
        assert_eq!(cubic_eta_a(0, 1, 1, 1, Characteristic::Zero).unwrap(), [0, 3, 65]);
        assert_eq!(cubic_eta_a(0, 0, 1, 1, Characteristic::Two).unwrap(), [0, 2, 28]);
    }

    #[test]
    fn thresholds_from_table() {
        let t = BoundTable::standard(1, Characteristic::Zero).unwrap();
        assert_eq!(eta_a_i(&ds(&[0, 0, 2]), 3, &t).unwrap(), 17);
        assert_eq!(eta_a_i(&ds(&[5]), 1, &t).unwrap(), 12);
        assert_eq!(eta_a_i(&ds(&[0, 0, 1]), 3, &t).unwrap(), 14);
        assert_eq!(eta_a_i(&ds(&[0, 0, 0, 1]), 4, &t), Err(Error::MissingBound(4)));
        assert!(BoundTable::custom(1, Characteristic::Zero, &[(3, 1)]).is_err());
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(0, 3, &default_b3).unwrap(), 1);
        assert_eq!(phi(3, 3, &default_b3).unwrap(), 21);
        assert_eq!(phi(3, 2, &default_b3).unwrap(), 4);
        assert_eq!(phi(3, 5, &default_b3), Err(Error::MissingBound(4)));
        assert_eq!(phi_coprime(4, 3, 2), Some(4));
        assert_eq!(phi_coprime(4, 4, 2), None);
    }

    #[test]
    fn recursion_examples() {
        let b = Budget::default();
        let t = BoundTable::standard(1, Characteristic::Zero).unwrap();
        assert_eq!(b_recursion(&ds(&[7]), &t, &b).unwrap(), 7);
        let never = BoundTable::custom(1, Characteristic::Zero, &[(1, 0), (2, 1)]).unwrap();
        // one quadric with threshold 1 descends to two linear forms
        assert_eq!(b_recursion(&ds(&[0, 1]), &never, &b).unwrap(), 2);
        // threshold 0 never descends
        let zero = BoundTable {
            base: [(1, 0), (2, 0)].into_iter().collect(),
            eta: 0,
            characteristic: Characteristic::Zero,
        };
        assert_eq!(b_recursion(&ds(&[0, 1]), &zero, &b).unwrap(), 1);
    }

    #[test]
    fn stillman_examples() {
        let b = Budget::default();
        let t = BoundTable::standard(1, Characteristic::Zero).unwrap();
        assert_eq!(stillman_c(1, 1, 1, &t, &b).unwrap(), 1);
        assert_eq!(stillman_c(2, 3, 1, &t, &b).unwrap(), 6);
        let c = stillman_c(1, 2, 2, &t, &b).unwrap();
        let direct = [ds(&[4]), ds(&[3, 1]), ds(&[2, 2]), ds(&[1, 3]), ds(&[0, 4])]
            .iter()
            .map(|d| b_recursion(d, &t, &b).unwrap())
            .max()
            .unwrap();
        assert_eq!(c, direct);
    }

    #[test]
    fn state_cap_is_an_error() {
        let t = BoundTable::standard(1, Characteristic::Zero).unwrap();
        let tiny = Budget {
            max_states: 3,
            ..Budget::default()
        };
        assert!(matches!(
            b_recursion(&ds(&[0, 0, 2]), &t, &tiny),
            Err(Error::BudgetExceeded(BudgetLimit::States(3)))
        ));
    }
}
