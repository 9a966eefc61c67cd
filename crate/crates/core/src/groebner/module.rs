use alloc::vec::Vec;

use super::{Budget, GroebnerBasis, MonomialOrder, TermOrder};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;

/// Submodule of `R^rank` given by generating vectors.
#[derive(Clone, Debug)]
pub struct SubmoduleOfFree<F: Field> {
    field: F,
    nvars: usize,
    rank: usize,
    gens: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> SubmoduleOfFree<F> {
    /// Zero vectors are dropped.
    pub fn new(field: F, nvars: usize, rank: usize, gens: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        for v in &gens {
            if v.len() != rank {
                return Err(Error::Shape(alloc::format!(
                    "vector of length {} in a rank-{rank} module",
                    v.len()
                )));
            }
            if v.iter().any(|p| p.nvars() != nvars || *p.field() != field) {
                return Err(Error::AmbientMismatch);
            }
        }
        let gens = gens
            .into_iter()
            .filter(|v| v.iter().any(|p| !p.is_zero()))
            .collect();
        Ok(Self {
            field,
            nvars,
            rank,
            gens,
        })
    }

    /// An ideal as a submodule of `R^1`.
    pub fn from_ideal(field: F, nvars: usize, gens: &[Polynomial<F>]) -> Result<Self> {
        Self::new(field, nvars, 1, gens.iter().map(|g| alloc::vec![g.clone()]).collect())
    }

    /// Column span of a matrix.
    pub fn image(m: &PolyMatrix<F>) -> Result<Self> {
        Self::new(m.field().clone(), m.nvars(), m.rows(), m.columns())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<Polynomial<F>>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Gröbner basis, position over term with grevlex.
    pub fn groebner(&self, budget: &Budget) -> Result<GroebnerBasis<F>> {
        GroebnerBasis::compute(
            self.field.clone(),
            self.nvars,
            self.rank,
            TermOrder::new(MonomialOrder::GrevLex),
            &self.gens,
            budget,
        )
    }

    pub fn contains(&self, v: &[Polynomial<F>], budget: &Budget) -> Result<bool> {
        if v.len() != self.rank {
            return Err(Error::Shape("vector length differs from the module rank".into()));
        }
        Ok(self.groebner(budget)?.contains_vector(v))
    }

    /// Every generator homogeneous with respect to the column degree `shifts`.
    pub fn is_graded(&self, shifts: &[i64]) -> bool {
        self.gens.iter().all(|v| vector_degree(v, shifts).is_some())
    }
}

/// Degree of a nonzero vector whose entry `i` is homogeneous of degree
/// `D - shifts[i]` for a common `D`.
fn vector_degree<F: Field>(v: &[Polynomial<F>], shifts: &[i64]) -> Option<i64> {
    let mut deg = None;
    for (p, s) in v.iter().zip(shifts) {
        if p.is_zero() {
            continue;
        }
        if !p.is_homogeneous() {
            return None;
        }
        let d = p.total_degree()? as i64 + s;
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return None,
            _ => {}
        }
    }
    deg
}

/// Kernel of `R^r → R^m / M` given by the `m × r` matrix `q`.
pub fn kernel_of_map<F: Field>(q: &PolyMatrix<F>, m: &SubmoduleOfFree<F>, budget: &Budget) -> Result<SubmoduleOfFree<F>> {
    let (rows, cols) = (q.rows(), q.cols());
    if m.rank() != rows {
        return Err(Error::Shape(alloc::format!(
            "matrix has {rows} rows but the module has rank {}",
            m.rank()
        )));
    }
    if q.nvars() != m.nvars() || q.field() != m.field() {
        return Err(Error::AmbientMismatch);
    }
    let (field, n) = (q.field().clone(), q.nvars());
    let zero = Polynomial::zero(field.clone(), n);
    let one = Polynomial::one(field.clone(), n);
    let mut vecs = Vec::with_capacity(cols + m.generators().len());
    for j in 0..cols {
        let mut v = q.column(j);
        v.extend((0..cols).map(|k| if k == j { one.clone() } else { zero.clone() }));
        vecs.push(v);
    }
    for g in m.generators() {
        let mut v = g.clone();
        v.extend((0..cols).map(|_| zero.clone()));
        vecs.push(v);
    }
    // position over term: elements led in the tail components have zero head
    let gb = GroebnerBasis::compute(
        field.clone(),
        n,
        rows + cols,
        TermOrder::new(MonomialOrder::GrevLex),
        &vecs,
        budget,
    )?;
    let kernel = gb
        .vectors()
        .into_iter()
        .zip(gb.leading_terms())
        .filter(|(_, (_, comp))| *comp >= rows)
        .map(|(v, _)| v[rows..].to_vec())
        .collect();
    SubmoduleOfFree::new(field, n, cols, kernel)
}

/// Syzygies of the generators of `m`, a submodule of `R^{#gens}`.
pub fn syzygies<F: Field>(m: &SubmoduleOfFree<F>, budget: &Budget) -> Result<SubmoduleOfFree<F>> {
    let q = PolyMatrix::from_columns(m.field().clone(), m.nvars(), m.rank(), m.generators())?;
    let zero = SubmoduleOfFree::new(m.field().clone(), m.nvars(), m.rank(), Vec::new())?;
    kernel_of_map(&q, &zero, budget)
}

/// Cofactors `a` with `f = Σ a_i g_i`, or `None` if `f ∉ (g)`.
pub fn lift<F: Field>(gens: &[Polynomial<F>], f: &Polynomial<F>, budget: &Budget) -> Result<Option<Vec<Polynomial<F>>>> {
    let (field, n) = (f.field().clone(), f.nvars());
    if gens.iter().any(|g| g.nvars() != n || *g.field() != field) {
        return Err(Error::AmbientMismatch);
    }
    let k = gens.len();
    let zero = Polynomial::zero(field.clone(), n);
    let one = Polynomial::one(field.clone(), n);
    let vecs: Vec<Vec<Polynomial<F>>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut v = alloc::vec![g.clone()];
            v.extend((0..k).map(|j| if j == i { one.clone() } else { zero.clone() }));
            v
        })
        .collect();
    let gb = GroebnerBasis::compute(field, n, k + 1, TermOrder::new(MonomialOrder::GrevLex), &vecs, budget)?;
    let mut target = alloc::vec![f.clone()];
    target.extend((0..k).map(|_| zero.clone()));
    let r = gb.reduce_vector(&target);
    if !r[0].is_zero() {
        return Ok(None);
    }
    Ok(Some(r[1..].iter().map(|p| -p).collect()))
}

/// A free resolution `0 ← M ← F_0 ← F_1 ← ...`: `matrices[k]` maps
/// `R^{ranks[k+1]}` to `R^{ranks[k]}`; `ranks[0]` is the ambient rank.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    pub matrices: Vec<PolyMatrix<F>>,
    pub ranks: Vec<usize>,
    /// Generator degrees of each free module (graded input only).
    pub shifts: Vec<Vec<i64>>,
    /// Graded input, so the resolution is minimal.
    pub minimal: bool,
}

impl<F: Field> FreeResolution<F> {
    /// Number of nonzero maps.
    pub fn length(&self) -> usize {
        self.matrices.len()
    }
}

/// Drop generators lying in the span of the others; graded input is
/// minimized by degree, which gives a minimal generating set.
fn prune<F: Field>(
    field: &F,
    nvars: usize,
    rank: usize,
    gens: Vec<Vec<Polynomial<F>>>,
    shifts: Option<&[i64]>,
    budget: &Budget,
) -> Result<Vec<Vec<Polynomial<F>>>> {
    let mut order: Vec<(i64, Vec<Polynomial<F>>)> = gens
        .into_iter()
        .map(|v| (shifts.and_then(|s| vector_degree(&v, s)).unwrap_or(0), v))
        .collect();
    order.sort_by_key(|(d, _)| *d);
    let mut kept: Vec<Vec<Polynomial<F>>> = Vec::new();
    let mut gb: Option<GroebnerBasis<F>> = None;
    for (_, v) in order {
        let redundant = gb.as_ref().is_some_and(|g| g.contains_vector(&v));
        if !redundant {
            kept.push(v);
            gb = Some(GroebnerBasis::compute(
                field.clone(),
                nvars,
                rank,
                TermOrder::new(MonomialOrder::GrevLex),
                &kept,
                budget,
            )?);
        }
    }
    if shifts.is_none() {
        // a later generator may make an earlier one redundant
        let mut i = 0;
        while i < kept.len() && kept.len() > 1 {
            let others: Vec<Vec<Polynomial<F>>> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v.clone())
                .collect();
            let g = GroebnerBasis::compute(
                field.clone(),
                nvars,
                rank,
                TermOrder::new(MonomialOrder::GrevLex),
                &others,
                budget,
            )?;
            if g.contains_vector(&kept[i]) {
                kept.remove(i);
            } else {
                i += 1;
            }
        }
    }
    Ok(kept)
}

/// Free resolution of `m` by iterated syzygies. For graded input (all
/// generators homogeneous with every column of degree 0) the result is the
/// minimal graded resolution.
pub fn free_resolution<F: Field>(m: &SubmoduleOfFree<F>, budget: &Budget) -> Result<FreeResolution<F>> {
    let (field, n) = (m.field().clone(), m.nvars());
    let mut shifts = alloc::vec![0i64; m.rank()];
    let graded = m.is_graded(&shifts);
    let mut rank = m.rank();
    let mut gens = prune(&field, n, rank, m.generators().to_vec(), graded.then_some(&shifts[..]), budget)?;
    let mut res = FreeResolution {
        matrices: Vec::new(),
        ranks: alloc::vec![rank],
        shifts: alloc::vec![shifts.clone()],
        minimal: graded,
    };
    while !gens.is_empty() {
        if res.matrices.len() > n + 1 {
            return Err(Error::Precondition(
                "iterated syzygies did not terminate; resolve a graded module instead".into(),
            ));
        }
        let next_shifts: Vec<i64> = gens
            .iter()
            .map(|v| vector_degree(v, &shifts).unwrap_or(0))
            .collect();
        let mat = PolyMatrix::from_columns(field.clone(), n, rank, &gens)?;
        let module = SubmoduleOfFree::new(field.clone(), n, rank, gens)?;
        let syz = syzygies(&module, budget)?;
        rank = mat.cols();
        shifts = next_shifts;
        res.matrices.push(mat);
        res.ranks.push(rank);
        res.shifts.push(shifts.clone());
        gens = prune(
            &field,
            n,
            rank,
            syz.generators().to_vec(),
            graded.then_some(&shifts[..]),
            budget,
        )?;
    }
    Ok(res)
}

/// Projective dimension of `R^rank / M` for graded `M`: the length of the
/// minimal graded free resolution.
pub fn projective_dimension<F: Field>(m: &SubmoduleOfFree<F>, budget: &Budget) -> Result<usize> {
    if !m.is_graded(&alloc::vec![0; m.rank()]) {
        return Err(Error::NotHomogeneous);
    }
    Ok(free_resolution(m, budget)?.length())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::parse_polynomials;

    fn ideal_module<F: Field>(field: F, n: usize, gens: &[&str]) -> SubmoduleOfFree<F> {
        let g = parse_polynomials(field.clone(), gens, Some(n)).unwrap();
        SubmoduleOfFree::from_ideal(field, n, &g).unwrap()
    }

    fn check_complex<F: Field>(r: &FreeResolution<F>) {
        for w in r.matrices.windows(2) {
            assert!(w[0].mul(&w[1]).unwrap().is_zero());
        }
        if r.minimal {
            for m in &r.matrices {
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        assert!(!m.get(i, j).is_unit(), "unit entry in a minimal resolution");
                    }
                }
            }
        }
    }

    #[test]
    fn pdim_examples() {
        let q = Rationals;
        let b = Budget::default();
        let m = ideal_module(q, 2, &["x1^2", "x1*x2"]);
        let r = free_resolution(&m, &b).unwrap();
        assert_eq!(r.ranks, alloc::vec![1, 2, 1]);
        assert_eq!(r.length(), 2);
        check_complex(&r);
        assert_eq!(projective_dimension(&ideal_module(q, 3, &["x1^3 + x2*x3^2"]), &b).unwrap(), 1);
        assert_eq!(projective_dimension(&ideal_module(q, 3, &["0"]), &b).unwrap(), 0);
    }

    #[test]
    fn koszul_ranks() {
        let f = PrimeField::new(101).unwrap();
        let b = Budget::default();
        let m = ideal_module(f, 3, &["x1", "x2", "x3"]);
        let r = free_resolution(&m, &b).unwrap();
        assert_eq!(r.ranks, alloc::vec![1, 3, 3, 1]);
        check_complex(&r);
        let m = ideal_module(f, 4, &["x1^2", "x2^2", "x3^2", "x4^2"]);
        let r = free_resolution(&m, &b).unwrap();
        assert_eq!(r.ranks, alloc::vec![1, 4, 6, 4, 1]);
        check_complex(&r);
    }

    #[test]
    fn redundant_generators_are_pruned() {
        let q = Rationals;
        let b = Budget::default();
        let m = ideal_module(q, 2, &["x1", "x2", "x1 + x2", "x1*x2"]);
        let r = free_resolution(&m, &b).unwrap();
        assert_eq!(r.ranks, alloc::vec![1, 2, 1]);
    }

    #[test]
    fn kernel_and_lift() {
        let q = Rationals;
        let b = Budget::default();
        let g = parse_polynomials(q, &["x1", "x2"], Some(2)).unwrap();
        let f = parse_polynomials(q, &["x1^2 + 3*x1*x2 - x2^3"], Some(2)).unwrap().pop().unwrap();
        let a = lift(&g, &f, &b).unwrap().unwrap();
        assert_eq!(&(&a[0] * &g[0]) + &(&a[1] * &g[1]), f);
        let one = Polynomial::one(q, 2);
        assert!(lift(&g, &one, &b).unwrap().is_none());
        let m = SubmoduleOfFree::from_ideal(q, 2, &g).unwrap();
        let s = syzygies(&m, &b).unwrap();
        assert_eq!(s.generators().len(), 1);
    }

    #[test]
    fn non_graded_needs_homogeneous_input_for_pdim() {
        let q = Rationals;
        let b = Budget::default();
        let m = ideal_module(q, 2, &["x1^2 + x2"]);
        assert_eq!(projective_dimension(&m, &b), Err(Error::NotHomogeneous));
        assert_eq!(free_resolution(&m, &b).unwrap().length(), 1);
    }
}
