//! Regular sequences, Jacobian singular loci and the Serre condition `R_η`,
//! and the maximal-minors height inequality for matrices whose rows are
//! homogeneous of distinct degrees.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::extended::ExtNat;
use crate::field::Field;
use crate::groebner::{kernel_of_map, Budget, Ideal, SubmoduleOfFree};
use crate::matrix::{combinations, PolyMatrix};
use crate::poly::{jacobian, Form, Polynomial};

fn ideal_of<F: Field>(forms: &[Form<F>]) -> Result<Ideal<F>> {
    let first = forms
        .first()
        .ok_or_else(|| Error::Precondition("no forms given".into()))?;
    Ideal::new(
        first.field().clone(),
        first.nvars(),
        forms.iter().map(|f| f.poly().clone()).collect(),
    )
}

/// Homogeneous forms are a regular sequence iff their ideal has height equal
/// to their number.
pub fn is_regular_sequence<F: Field>(forms: &[Form<F>], budget: &Budget) -> Result<bool> {
    let h = ideal_of(forms)?.height(budget)?;
    Ok(h == ExtNat::Finite(forms.len() as u64))
}

/// First Koszul homology of the forms vanishes: every syzygy of `(f_1..f_c)`
/// is a combination of the Koszul relations `f_j e_i - f_i e_j`.
pub fn koszul_h1_vanishes<F: Field>(forms: &[Form<F>], budget: &Budget) -> Result<bool> {
    let first = forms
        .first()
        .ok_or_else(|| Error::Precondition("no forms given".into()))?;
    let (field, n, c) = (first.field().clone(), first.nvars(), forms.len());
    let row: Vec<Polynomial<F>> = forms.iter().map(|f| f.poly().clone()).collect();
    let d1 = PolyMatrix::from_rows(alloc::vec![row])?;
    let zero = SubmoduleOfFree::new(field.clone(), n, 1, Vec::new())?;
    let cycles = kernel_of_map(&d1, &zero, budget)?;
    let z = Polynomial::zero(field.clone(), n);
    let boundaries: Vec<Vec<Polynomial<F>>> = combinations(c, 2)
        .into_iter()
        .map(|ij| {
            let mut v = alloc::vec![z.clone(); c];
            v[ij[0]] = forms[ij[1]].poly().clone();
            v[ij[1]] = -forms[ij[0]].poly();
            v
        })
        .collect();
    let gb = SubmoduleOfFree::new(field, n, c, boundaries)?.groebner(budget)?;
    Ok(cycles.generators().iter().all(|v| gb.contains_vector(v)))
}

/// Codimension of the singular locus of `R/(F_1..F_c)` inside it, from the
/// Jacobian criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLocus {
    /// `height(J) - c`, or `N - c` when `J` is the unit ideal.
    pub codim: u64,
    /// The minors generate the unit ideal together with the forms.
    pub smooth: bool,
    /// `height((F))`, equal to `c`.
    pub forms_height: u64,
    /// `height((F) + I_c(Jacobian))`.
    pub jacobian_height: ExtNat,
}

/// `J = (F) + I_c(∂F/∂x)`; returns `height(J) - c`. Requires a regular sequence.
pub fn singular_locus_codim<F: Field>(forms: &[Form<F>], budget: &Budget) -> Result<SingularLocus> {
    let ideal = ideal_of(forms)?;
    let c = forms.len() as u64;
    let n = ideal.nvars() as u64;
    let h = ideal.height(budget)?;
    if h != ExtNat::Finite(c) {
        return Err(Error::NotRegularSequence {
            height: h,
            count: forms.len(),
        });
    }
    let jac = jacobian(forms)?;
    if jac.cols() < forms.len() {
        return Err(Error::Shape("more forms than variables".into()));
    }
    let minors = minors_ideal(&jac, forms.len())?;
    let j = ideal.sum(&minors)?;
    let jh = j.height(budget)?;
    let (codim, smooth) = match jh {
        ExtNat::Infinite => (n - c, true),
        ExtNat::Finite(v) => (v - c, false),
    };
    Ok(SingularLocus {
        codim,
        smooth,
        forms_height: c,
        jacobian_height: jh,
    })
}

/// Result of the `R_η` check.
#[derive(Clone, Debug)]
pub struct RetaCertificate<F: Field> {
    pub forms: Vec<Form<F>>,
    pub eta: u64,
    pub codim_singular: u64,
    pub smooth: bool,
    /// `codim_singular >= eta + 1`.
    pub pass: bool,
    /// Heights measured, by label.
    pub heights: Vec<(String, ExtNat)>,
    /// Positive characteristic: the Jacobian ideal can only overstate the
    /// singular locus, so `pass` is sound but `fail` may be spurious.
    pub characteristic_caveat: bool,
}

pub fn check_reta<F: Field>(forms: &[Form<F>], eta: u64, budget: &Budget) -> Result<RetaCertificate<F>> {
    let s = singular_locus_codim(forms, budget)?;
    let char_p = forms[0].field().characteristic() != 0;
    Ok(RetaCertificate {
        forms: forms.to_vec(),
        eta,
        codim_singular: s.codim,
        smooth: s.smooth,
        pass: s.codim > eta,
        heights: alloc::vec![
            ("forms".into(), ExtNat::Finite(s.forms_height)),
            ("forms+minors".into(), s.jacobian_height),
        ],
        characteristic_caveat: char_p,
    })
}

/// Ideal of all `t x t` minors.
pub fn minors_ideal<F: Field>(mat: &PolyMatrix<F>, t: usize) -> Result<Ideal<F>> {
    Ideal::new(mat.field().clone(), mat.nvars(), mat.minors(t)?)
}

/// Outcome of the maximal-minors height check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorsCheck {
    /// Row degrees (`None` for zero rows).
    pub row_degrees: Vec<Option<u32>>,
    /// `min` over rows of the height of the ideal of the row's entries.
    pub b: ExtNat,
    /// Number of rows.
    pub h: usize,
    pub minors_height: ExtNat,
    /// `minors_height >= b - h + 1`.
    pub holds: bool,
}

/// For an `h x N` matrix whose rows are homogeneous of mutually distinct
/// degrees, check `height(I_h) >= b - h + 1` with `b` the least height of an
/// ideal generated by one row.
pub fn minors_height_check<F: Field>(mat: &PolyMatrix<F>, budget: &Budget) -> Result<MinorsCheck> {
    let h = mat.rows();
    if h == 0 || h > mat.cols() {
        return Err(Error::Shape("need 1 <= rows <= columns".into()));
    }
    let mut row_degrees = Vec::with_capacity(h);
    for i in 0..h {
        let mut deg = None;
        for p in mat.row(i).iter().filter(|p| !p.is_zero()) {
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            let d = p.total_degree().expect("nonzero");
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::Precondition(alloc::format!("row {i} mixes degrees")));
                }
                _ => {}
            }
        }
        row_degrees.push(deg);
    }
    let present: Vec<u32> = row_degrees.iter().flatten().copied().collect();
    for (k, d) in present.iter().enumerate() {
        if present[k + 1..].contains(d) {
            return Err(Error::Precondition("row degrees must be distinct".into()));
        }
    }
    let mut b = ExtNat::Infinite;
    for i in 0..h {
        let row_ideal = Ideal::new(mat.field().clone(), mat.nvars(), mat.row(i).to_vec())?;
        b = b.min(row_ideal.height(budget)?);
    }
    let minors_height = minors_ideal(mat, h)?.height(budget)?;
    let holds = match b {
        ExtNat::Infinite => minors_height.is_infinite(),
        ExtNat::Finite(b) => minors_height.at_least(b as i64 - h as i64 + 1),
    };
    Ok(MinorsCheck {
        row_degrees,
        b,
        h,
        minors_height,
        holds,
    })
}
