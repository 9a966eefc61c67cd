//! Descent to a small subalgebra: while some element of a graded space of
//! forms has a collapse below the policy's threshold, replace it by the
//! factors of the collapse. Each step lowers the dimension sequence in its
//! well-order, so the loop ends.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{eta_a_i, BoundTable};
use crate::certify::is_regular_sequence;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Budget, GroebnerBasis, MonomialOrder};
use crate::poly::{DimensionSequence, Form, GradedSpace, LinearSpan, Polynomial};
use crate::strength::{find_collapse, for_each_subspace, CollapseWitness};

/// Compare dimension sequences in the descent well-order.
pub fn compare_sequences(a: &DimensionSequence, b: &DimensionSequence) -> Ordering {
    a.cmp(b)
}

/// Strength thresholds `k(δ, i)`: an element of `V_i` with a `k`-collapse
/// is replaced. A threshold of 0 never descends.
#[derive(Clone, Debug)]
pub enum ThresholdPolicy {
    /// Fixed per-degree thresholds; unlisted degrees get 0.
    Constant(BTreeMap<u32, u64>),
    /// `ηA_i(δ) = ηA(i) + 3(n - 1)` from a table.
    EtaA(BoundTable),
    /// Descend on any collapse with at most `max_k` pairs. Every form of
    /// degree at least 2 in `N` variables has an `N`-collapse, so
    /// `max_k >= N` descends all the way to linear forms.
    Maximal { max_k: u64 },
}

impl ThresholdPolicy {
    pub fn uniform(k: u64, degrees: core::ops::RangeInclusive<u32>) -> Self {
        ThresholdPolicy::Constant(degrees.map(|d| (d, k)).collect())
    }

    pub fn threshold(&self, delta: &DimensionSequence, degree: u32) -> Result<u64> {
        if degree < 2 {
            return Ok(0);
        }
        match self {
            ThresholdPolicy::Constant(m) => Ok(m.get(&degree).copied().unwrap_or(0)),
            ThresholdPolicy::EtaA(t) => eta_a_i(delta, degree, t),
            ThresholdPolicy::Maximal { max_k } => Ok(*max_k),
        }
    }
}

/// How a collapsing element was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchRegime {
    /// A basis element of the graded piece.
    Basis,
    /// A seeded random linear combination.
    Random,
    /// Enumeration of all elements of the piece up to scalars.
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct DescentStep<F: Field> {
    pub before: DimensionSequence,
    pub degree: u32,
    pub threshold: u64,
    pub regime: SearchRegime,
    pub witness: CollapseWitness<F>,
    pub after: DimensionSequence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// No element of any piece has a collapse below its threshold.
    NoCollapse,
    /// Some piece was too large to enumerate; only sampled elements were tried.
    SamplesExhausted,
    BudgetExceeded,
    StepLimit,
}

#[derive(Clone, Debug)]
pub struct DescentTrace<F: Field> {
    pub initial: Vec<Form<F>>,
    pub steps: Vec<DescentStep<F>>,
    pub final_generators: Vec<Form<F>>,
    pub final_sequence: DimensionSequence,
    pub stop: StopReason,
    /// Every search ended exhaustively and found nothing.
    pub complete: bool,
    /// Every initial basis form lies in the subalgebra of the output.
    pub membership: Option<bool>,
    pub regular_sequence: Option<bool>,
}

#[derive(Clone, Copy, Debug)]
pub struct DescentOptions {
    pub seed: u64,
    /// Random combinations tried per piece.
    pub random_samples: usize,
    /// Largest number of projective points of a piece to enumerate.
    pub max_projective: u64,
    pub max_steps: usize,
}

impl Default for DescentOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            random_samples: 16,
            max_projective: 2_000,
            max_steps: 1_000,
        }
    }
}

/// Replace `w.target()`, an element of `V_i`, by the factors of `w`.
pub fn descend_step<F: Field>(v: &GradedSpace<F>, i: u32, w: &CollapseWitness<F>) -> Result<GradedSpace<F>> {
    let target = w.target();
    if target.degree() != i || !v.piece_contains(i, target.poly()) {
        return Err(Error::Precondition("witness target is not in the degree-i piece".into()));
    }
    // complete the target to a basis of V_i, then drop it
    let mut span = LinearSpan::new(v.field().clone(), v.nvars());
    span.insert(target.poly());
    let mut forms: Vec<Form<F>> = Vec::new();
    for g in v.basis() {
        if g.degree() != i || span.insert(g.poly()) {
            forms.push(g.clone());
        }
    }
    forms.extend(w.factors());
    GradedSpace::from_forms(v.field().clone(), v.nvars(), forms)
}

enum Search<F: Field> {
    Found(SearchRegime, CollapseWitness<F>),
    None { exhaustive: bool },
}

/// Smallest collapse of `f` with at most `k` pairs.
fn smallest_collapse<F: Field>(f: &Form<F>, k: u64, budget: &Budget) -> Result<Option<CollapseWitness<F>>> {
    let cap = k.min(f.nvars() as u64) as usize;
    for j in 1..=cap {
        if let Some(w) = find_collapse(f, j, budget)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn search_piece<F: Field>(
    v: &GradedSpace<F>,
    i: u32,
    k: u64,
    opts: &DescentOptions,
    rng: &mut ChaCha8Rng,
    budget: &Budget,
) -> Result<Search<F>> {
    let field = v.field();
    let elems = field.elements().ok_or(Error::InfiniteField)?;
    let piece: Vec<Form<F>> = v.piece(i).into_iter().cloned().collect();
    for b in &piece {
        if let Some(w) = smallest_collapse(b, k, budget)? {
            return Ok(Search::Found(SearchRegime::Basis, w));
        }
    }
    if piece.len() < 2 {
        return Ok(Search::None { exhaustive: true });
    }
    let combine = |coeffs: &[F::Elem]| -> Option<Form<F>> {
        let mut acc = Polynomial::zero(field.clone(), v.nvars());
        for (c, b) in coeffs.iter().zip(&piece) {
            acc = &acc + &b.poly().scale(c);
        }
        Form::new(acc).ok()
    };
    let q = elems.len() as u64;
    let points = (0..piece.len() as u32)
        .try_fold(0u64, |acc, e| q.checked_pow(e).and_then(|x| acc.checked_add(x)));
    let exhaustive = points.is_some_and(|p| p <= opts.max_projective);
    if !exhaustive {
        for _ in 0..opts.random_samples {
            let coeffs: Vec<F::Elem> = (0..piece.len())
                .map(|_| elems[rng.gen_range(0..elems.len())].clone())
                .collect();
            if let Some(f) = combine(&coeffs) {
                if let Some(w) = smallest_collapse(&f, k, budget)? {
                    return Ok(Search::Found(SearchRegime::Random, w));
                }
            }
        }
        return Ok(Search::None { exhaustive: false });
    }
    let mut out: Result<Option<CollapseWitness<F>>> = Ok(None);
    let _ = for_each_subspace(field, &elems, piece.len(), 1, &mut |rows| {
        let f = combine(&rows[0]).expect("independent basis");
        match smallest_collapse(&f, k, budget) {
            Ok(None) => ControlFlow::Continue(()),
            Ok(Some(w)) => {
                out = Ok(Some(w));
                ControlFlow::Break(())
            }
            Err(e) => {
                out = Err(e);
                ControlFlow::Break(())
            }
        }
    });
    Ok(match out? {
        Some(w) => Search::Found(SearchRegime::Exhaustive, w),
        None => Search::None { exhaustive: true },
    })
}

/// Run the descent on `v` (over a finite field) and certify the result.
pub fn small_subalgebra<F: Field>(
    v: &GradedSpace<F>,
    policy: &ThresholdPolicy,
    opts: &DescentOptions,
    budget: &Budget,
) -> Result<DescentTrace<F>> {
    if v.is_empty() {
        return Err(Error::Precondition("empty space".into()));
    }
    v.field().elements().ok_or(Error::InfiniteField)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut cur = v.clone();
    let mut steps = Vec::new();
    let stop = 'outer: loop {
        if steps.len() >= opts.max_steps {
            break StopReason::StepLimit;
        }
        let delta = cur.dimension_sequence();
        let mut all_exhaustive = true;
        for i in cur.degrees().into_iter().rev() {
            let k = policy.threshold(&delta, i)?;
            if k == 0 {
                continue;
            }
            match search_piece(&cur, i, k, opts, &mut rng, budget) {
                Ok(Search::Found(regime, witness)) => {
                    let next = descend_step(&cur, i, &witness)?;
                    let after = next.dimension_sequence();
                    assert!(after < delta, "descent must lower the dimension sequence");
                    steps.push(DescentStep {
                        before: delta,
                        degree: i,
                        threshold: k,
                        regime,
                        witness,
                        after,
                    });
                    cur = next;
                    continue 'outer;
                }
                Ok(Search::None { exhaustive }) => all_exhaustive &= exhaustive,
                Err(Error::BudgetExceeded(_)) => break 'outer StopReason::BudgetExceeded,
                Err(e) => return Err(e),
            }
        }
        break if all_exhaustive {
            StopReason::NoCollapse
        } else {
            StopReason::SamplesExhausted
        };
    };
    let final_generators = cur.basis().to_vec();
    let membership = v
        .basis()
        .iter()
        .map(|f| subalgebra_membership(f.poly(), &final_generators, budget))
        .try_fold(true, |acc, r| r.map(|ok| acc && ok))
        .ok();
    let regular_sequence = is_regular_sequence(&final_generators, budget).ok();
    Ok(DescentTrace {
        initial: v.basis().to_vec(),
        steps,
        final_sequence: cur.dimension_sequence(),
        final_generators,
        complete: stop == StopReason::NoCollapse,
        stop,
        membership,
        regular_sequence,
    })
}

/// Whether `f ∈ K[G_1..G_m]`: with tag variables `y_j` and the ideal
/// `(y_j - G_j)`, the normal form of `f` under an order eliminating the `x`
/// variables involves only the `y`.
pub fn subalgebra_membership<F: Field>(f: &Polynomial<F>, gens: &[Form<F>], budget: &Budget) -> Result<bool> {
    let n = f.nvars();
    let m = gens.len();
    if gens.iter().any(|g| g.nvars() != n || g.field() != f.field()) {
        return Err(Error::AmbientMismatch);
    }
    let total = n + m;
    let field = f.field().clone();
    let ideal: Vec<Polynomial<F>> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| &Polynomial::var(field.clone(), total, n + j) - &g.poly().embed(total, 0))
        .collect();
    let gb = GroebnerBasis::for_ideal(field, total, &ideal, MonomialOrder::Elimination { block: n }, budget)?;
    let r = gb.reduce(&f.embed(total, 0));
    Ok(r.terms().iter().all(|(mono, _)| mono.partial_degree(0..n) == 0))
}
