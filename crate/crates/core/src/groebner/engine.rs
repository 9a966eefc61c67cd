//! Buchberger's algorithm for submodules of `R^rank`, with the
//! Gebauer–Möller update. Ideals are the `rank == 1` case.
//!
//! Vectors are stored as term lists in *ascending* order so the leading
//! term is the last element.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::order::{Term, TermOrder};
use super::Budget;
use crate::error::{BudgetLimit, Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial};

pub(crate) type Terms<F> = Vec<(Term, <F as Field>::Elem)>;

/// Counters collected while running Buchberger's algorithm.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_considered: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub pairs_pruned: usize,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
}

pub(crate) struct Engine<'a, F: Field> {
    pub field: &'a F,
    pub order: TermOrder,
    pub rank: usize,
}

impl<'a, F: Field> Engine<'a, F> {
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Pack per-component polynomials into one ascending term list.
    pub fn pack(&self, entries: &[Polynomial<F>]) -> Terms<F> {
        let mut out: Terms<F> = entries
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().iter().map(move |(m, c)| {
                    (
                        Term {
                            mono: m.clone(),
                            comp,
                        },
                        c.clone(),
                    )
                })
            })
            .collect();
        out.sort_by(|a, b| self.cmp(&a.0, &b.0));
        out
    }

    pub fn unpack(&self, v: &Terms<F>, nvars: usize) -> Vec<Polynomial<F>> {
        let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = (0..self.rank).map(|_| Vec::new()).collect();
        for (t, c) in v {
            buckets[t.comp].push((t.mono.clone(), c.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(self.field.clone(), nvars, b))
            .collect()
    }

    /// `p - c · m · g` for ascending term lists.
    fn sub_scaled(&self, p: &Terms<F>, c: &F::Elem, m: &Monomial, g: &Terms<F>) -> Terms<F> {
        let f = self.field;
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut gi = g.iter().map(|(t, a)| {
            (
                Term {
                    mono: t.mono.mul(m),
                    comp: t.comp,
                },
                f.mul(a, c),
            )
        });
        let mut pi = p.iter();
        let mut next_g = gi.next();
        let mut next_p = pi.next();
        loop {
            match (&next_p, &next_g) {
                (Some((tp, cp)), Some((tg, cg))) => match self.cmp(tp, tg) {
                    Ordering::Less => {
                        out.push((tp.clone(), cp.clone()));
                        next_p = pi.next();
                    }
                    Ordering::Greater => {
                        out.push((tg.clone(), f.neg(cg)));
                        next_g = gi.next();
                    }
                    Ordering::Equal => {
                        let s = f.sub(cp, cg);
                        if !f.is_zero(&s) {
                            out.push((tp.clone(), s));
                        }
                        next_p = pi.next();
                        next_g = gi.next();
                    }
                },
                (Some((tp, cp)), None) => {
                    out.push((tp.clone(), cp.clone()));
                    next_p = pi.next();
                }
                (None, Some((tg, cg))) => {
                    out.push((tg.clone(), f.neg(cg)));
                    next_g = gi.next();
                }
                (None, None) => break,
            }
        }
        out
    }

    fn make_monic(&self, mut v: Terms<F>) -> Terms<F> {
        if let Some((_, lc)) = v.last() {
            if !self.field.is_one(lc) {
                let inv = self.field.inv(lc).expect("nonzero");
                for (_, c) in v.iter_mut() {
                    *c = self.field.mul(c, &inv);
                }
            }
        }
        v
    }

    fn find_reducer<'b>(&self, t: &Term, basis: &'b [&'b Terms<F>]) -> Option<&'b Terms<F>> {
        basis
            .iter()
            .find(|g| g.last().is_some_and(|(lt, _)| lt.divides(t)))
            .copied()
    }

    /// Normal form of `p` with respect to monic `basis` elements.
    pub fn reduce(&self, mut p: Terms<F>, basis: &[&Terms<F>]) -> Terms<F> {
        let mut rem: Terms<F> = Vec::new();
        while let Some((t, c)) = p.last() {
            match self.find_reducer(t, basis) {
                Some(g) => {
                    let (lt, lc) = g.last().expect("nonzero reducer");
                    let q = lt.mono.quotient_of(&t.mono).expect("divisible");
                    let coef = self.field.div(c, lc).expect("nonzero");
                    p = self.sub_scaled(&p, &coef, &q, g);
                }
                None => rem.push(p.pop().expect("nonempty")),
            }
        }
        rem.reverse();
        rem
    }

    pub fn spoly(&self, f: &Terms<F>, g: &Terms<F>, lcm: &Term) -> Terms<F> {
        let (ltf, _) = f.last().expect("nonzero");
        let (ltg, _) = g.last().expect("nonzero");
        let qf = ltf.mono.quotient_of(&lcm.mono).expect("lcm");
        let qg = ltg.mono.quotient_of(&lcm.mono).expect("lcm");
        // both monic: qf·f - qg·g
        let scaled_f: Terms<F> = f
            .iter()
            .map(|(t, c)| {
                (
                    Term {
                        mono: t.mono.mul(&qf),
                        comp: t.comp,
                    },
                    c.clone(),
                )
            })
            .collect();
        let one = self.field.one();
        self.sub_scaled(&scaled_f, &one, &qg, g)
    }

    /// Reduced Gröbner basis of the submodule generated by `gens`, elements
    /// monic and sorted ascending by leading term.
    pub fn buchberger(&self, gens: Vec<Terms<F>>, budget: &Budget, stats: &mut GbStats) -> Result<Vec<Terms<F>>> {
        let mut polys: Vec<Terms<F>> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        for g in gens {
            let h = {
                let basis: Vec<&Terms<F>> = polys
                    .iter()
                    .zip(&active)
                    .filter(|(_, a)| **a)
                    .map(|(p, _)| p)
                    .collect();
                self.reduce(g, &basis)
            };
            if h.is_empty() {
                continue;
            }
            let h = self.make_monic(h);
            self.update(&mut polys, &mut active, &mut pairs, h, stats);
        }

        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (la, lb) = (&pairs[a].lcm, &pairs[b].lcm);
                    la.mono
                        .degree()
                        .cmp(&lb.mono.degree())
                        .then_with(|| self.cmp(la, lb))
                })
                .expect("nonempty");
            let pair = pairs.swap_remove(best);
            stats.pairs_reduced += 1;
            if stats.pairs_reduced > budget.max_pairs {
                return Err(Error::BudgetExceeded(BudgetLimit::Pairs(budget.max_pairs)));
            }
            if pair.lcm.mono.degree() > budget.max_degree {
                return Err(Error::BudgetExceeded(BudgetLimit::Degree(budget.max_degree)));
            }
            let s = self.spoly(&polys[pair.i], &polys[pair.j], &pair.lcm);
            let h = {
                let basis: Vec<&Terms<F>> = polys
                    .iter()
                    .zip(&active)
                    .filter(|(_, a)| **a)
                    .map(|(p, _)| p)
                    .collect();
                self.reduce(s, &basis)
            };
            if h.is_empty() {
                stats.zero_reductions += 1;
                continue;
            }
            let h = self.make_monic(h);
            self.update(&mut polys, &mut active, &mut pairs, h, stats);
        }

        // interreduce the minimal basis
        let idx: Vec<usize> = (0..polys.len()).filter(|&i| active[i]).collect();
        let mut out: Vec<Terms<F>> = Vec::with_capacity(idx.len());
        for &i in &idx {
            let others: Vec<&Terms<F>> = idx.iter().filter(|&&j| j != i).map(|&j| &polys[j]).collect();
            let mut g = polys[i].clone();
            let lead = g.pop().expect("nonzero");
            let mut tail = self.reduce(g, &others);
            tail.push(lead);
            out.push(tail);
        }
        out.sort_by(|a, b| self.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
        Ok(out)
    }

    fn coprime_applies(&self, a: &Term, b: &Term) -> bool {
        // the product criterion is only valid for ideals
        self.rank == 1 && a.mono.is_coprime(&b.mono)
    }

    fn update(
        &self,
        polys: &mut Vec<Terms<F>>,
        active: &mut Vec<bool>,
        pairs: &mut Vec<Pair>,
        h: Terms<F>,
        stats: &mut GbStats,
    ) {
        let hi = polys.len();
        let lt_h = h.last().expect("nonzero").0.clone();
        polys.push(h);
        active.push(true);
        let lt = |k: usize, polys: &Vec<Terms<F>>| polys[k].last().expect("nonzero").0.clone();

        let candidates: Vec<Pair> = (0..hi)
            .filter(|&g| active[g])
            .filter_map(|g| {
                lt_h.lcm(&lt(g, polys)).map(|lcm| Pair { i: g, j: hi, lcm })
            })
            .collect();
        stats.pairs_considered += candidates.len();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in candidates.iter().enumerate() {
            let coprime = self.coprime_applies(&lt_h, &lt(p.i, polys));
            let dominated = candidates[k + 1..]
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        let before = kept.len();
        kept.retain(|p| !self.coprime_applies(&lt_h, &lt(p.i, polys)));
        stats.pairs_pruned += candidates.len() - before + (before - kept.len());

        // drop old pairs made redundant by h
        let old = pairs.len();
        pairs.retain(|p| {
            let (lt_i, lt_j) = (lt(p.i, polys), lt(p.j, polys));
            let redundant = lt_h.divides(&p.lcm)
                && lt_i.lcm(&lt_h).as_ref() != Some(&p.lcm)
                && lt_h.lcm(&lt_j).as_ref() != Some(&p.lcm);
            !redundant
        });
        stats.pairs_pruned += old - pairs.len();
        pairs.extend(kept);

        for g in 0..hi {
            if active[g] && lt_h.divides(&lt(g, polys)) {
                active[g] = false;
            }
        }
    }
}
