//! Dense matrices with polynomial entries.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;

#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix<F: Field> {
    field: F,
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(field: F, nvars: usize, rows: usize, cols: usize) -> Self {
        let entries = (0..rows * cols)
            .map(|_| Polynomial::zero(field.clone(), nvars))
            .collect();
        Self {
            field,
            nvars,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(field: F, nvars: usize, n: usize) -> Self {
        let mut m = Self::zeros(field.clone(), nvars, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(field.clone(), nvars);
        }
        m
    }

    /// Rows must be nonempty and of equal length.
    pub fn from_rows(rows: Vec<Vec<Polynomial<F>>>) -> Result<Self> {
        let first = rows
            .first()
            .and_then(|r| r.first())
            .ok_or_else(|| Error::Shape("matrix needs at least one entry".into()))?;
        let (field, nvars) = (first.field().clone(), first.nvars());
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        if rows
            .iter()
            .flatten()
            .any(|p| p.nvars() != nvars || *p.field() != field)
        {
            return Err(Error::AmbientMismatch);
        }
        let n = rows.len();
        Ok(Self {
            field,
            nvars,
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Columns must be nonempty and of equal length `rows`.
    pub fn from_columns(field: F, nvars: usize, rows: usize, columns: &[Vec<Polynomial<F>>]) -> Result<Self> {
        let mut m = Self::zeros(field, nvars, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!("column {j} has length {} instead of {rows}", col.len())));
            }
            for (i, p) in col.iter().enumerate() {
                m.entries[i * m.cols + j] = p.clone();
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial<F>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<F>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.field.clone(), self.nvars, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Polynomial::zero(self.field.clone(), self.nvars);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Determinant of the submatrix on the given rows and columns (Laplace expansion).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial<F> {
        debug_assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => Polynomial::one(self.field.clone(), self.nvars),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = Polynomial::zero(self.field.clone(), self.nvars);
                let r0 = rows[0];
                let rest_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let entry = self.get(r0, c);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest_cols: Vec<usize> = cols
                        .iter()
                        .enumerate()
                        .filter(|(kk, _)| *kk != k)
                        .map(|(_, c)| *c)
                        .collect();
                    let sub = entry * &self.minor(rest_rows, &rest_cols);
                    acc = if k % 2 == 0 { &acc + &sub } else { &acc - &sub };
                }
                acc
            }
        }
    }

    /// All `t x t` minors, including zero ones, in lexicographic order of
    /// (row subset, column subset).
    pub fn minors(&self, t: usize) -> Result<Vec<Polynomial<F>>> {
        if t > self.rows.min(self.cols) {
            return Err(Error::Precondition(format!(
                "minor size {t} exceeds min({}, {})",
                self.rows, self.cols
            )));
        }
        let row_sets = combinations(self.rows, t);
        let col_sets = combinations(self.cols, t);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for r in &row_sets {
            for c in &col_sets {
                out.push(self.minor(r, c));
            }
        }
        Ok(out)
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
