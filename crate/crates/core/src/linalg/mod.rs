//! Exact linear algebra: sparse Gaussian elimination, kernels, affine solving
//! and homology dimensions.
//!
//! Elimination is deterministic: rows are consumed in order and a row's pivot
//! is its first nonzero column after reduction by the existing pivots.

mod matrix;

pub use matrix::{dot, Matrix, SparseRow};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
pub(crate) use matrix::axpy;

/// Reduced row echelon form of a row space.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    cols: usize,
    /// Pivot column -> reduced row with a leading one at that column.
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn pivot_row(&self, col: usize) -> Option<&[(usize, F::Elem)]> {
        self.pivots.get(&col).map(Vec::as_slice)
    }

    /// Reduces `row` by the leading terms of existing pivots until its
    /// leading column is free (or the row vanishes).
    fn reduce_leading(&self, f: &F, mut row: SparseRow<F>) -> SparseRow<F> {
        while let Some((lead, coef)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(f, &row, &f.neg(&coef), p),
                None => break,
            }
        }
        row
    }

    /// Fully reduces `row` against every pivot (zero at all pivot columns).
    pub fn reduce(&self, f: &F, row: &[(usize, F::Elem)]) -> SparseRow<F> {
        let mut row = row.to_vec();
        let mut idx = 0;
        while idx < row.len() {
            let (col, coef) = row[idx].clone();
            if let Some(p) = self.pivots.get(&col) {
                row = axpy(f, &row, &f.neg(&coef), p);
                // the entry at `col` is gone; everything before it is untouched
                idx = row.partition_point(|(c, _)| *c < col);
            } else {
                idx += 1;
            }
        }
        row
    }

    /// Inserts a row; returns the new pivot column if the rank grew.
    pub fn insert(&mut self, f: &F, row: SparseRow<F>) -> Option<usize> {
        let row = self.reduce_leading(f, row);
        let (lead, coef) = row.first().cloned()?;
        let inv = f.inv(&coef).expect("nonzero leading coefficient");
        let row: SparseRow<F> = row.into_iter().map(|(c, v)| (c, f.mul(&v, &inv))).collect();
        self.pivots.insert(lead, row);
        Some(lead)
    }

    /// Back-substitution so that every pivot column is zero outside its own row.
    pub fn make_reduced(&mut self, f: &F) {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for (k, &pc) in cols.iter().enumerate() {
            let prow = self.pivots[&pc].clone();
            for &other in &cols[k + 1..] {
                let r = self.pivots.get_mut(&other).expect("pivot");
                if let Ok(i) = r.binary_search_by_key(&pc, |(c, _)| *c) {
                    let coef = r[i].1.clone();
                    *r = axpy(f, r, &f.neg(&coef), &prow);
                }
            }
        }
    }

    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let f = m.field();
        let mut e = Self::new(m.cols());
        for row in m.row_data() {
            e.insert(f, row.clone());
        }
        e.make_reduced(f);
        e
    }

    pub fn from_vectors(f: &F, cols: usize, vectors: &[Vec<F::Elem>]) -> Self {
        let mut e = Self::new(cols);
        for v in vectors {
            e.insert(f, to_sparse(f, v));
        }
        e.make_reduced(f);
        e
    }

    /// The reduced rows as dense vectors, ordered by pivot column.
    pub fn basis(&self, f: &F) -> Vec<Vec<F::Elem>> {
        self.pivots
            .values()
            .map(|r| to_dense(f, self.cols, r))
            .collect()
    }

    pub fn contains(&self, f: &F, v: &[F::Elem]) -> bool {
        self.reduce(f, &to_sparse(f, v)).is_empty()
    }

    /// Basis of the null space of the row space (requires reduced form).
    pub fn null_space(&self, f: &F) -> Vec<Vec<F::Elem>> {
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !self.pivots.contains_key(c)) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (&pc, row) in &self.pivots {
                if let Ok(i) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    v[pc] = f.neg(&row[i].1);
                }
            }
            out.push(v);
        }
        out
    }
}

pub fn to_sparse<F: Field>(f: &F, v: &[F::Elem]) -> SparseRow<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !f.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense<F: Field>(f: &F, len: usize, row: &[(usize, F::Elem)]) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); len];
    for (c, x) in row {
        v[*c] = x.clone();
    }
    v
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    let f = m.field();
    let mut e = Echelon::new(m.cols());
    for row in m.row_data() {
        e.insert(f, row.clone());
    }
    e.rank()
}

/// Basis of `{v : M v = 0}`, one vector per free column in increasing order.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    Echelon::from_matrix(m).null_space(m.field())
}

/// Full solution set of `M x = target`.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution<F: Field> {
    Feasible {
        particular: Vec<F::Elem>,
        kernel: Vec<Vec<F::Elem>>,
    },
    /// `certificate^T M = 0` while `certificate . target = residual != 0`.
    Infeasible {
        certificate: Vec<F::Elem>,
        residual: F::Elem,
    },
}

impl<F: Field> AffineSolution<F> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Self::Feasible { .. })
    }

    pub fn particular(&self) -> Option<&[F::Elem]> {
        match self {
            Self::Feasible { particular, .. } => Some(particular),
            Self::Infeasible { .. } => None,
        }
    }
}

pub fn solve_affine<F: Field>(m: &Matrix<F>, target: &[F::Elem]) -> Result<AffineSolution<F>> {
    if target.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            context: "affine system right-hand side",
            expected: m.rows(),
            found: target.len(),
        });
    }
    let f = m.field();
    let n = m.cols();
    let mut e = Echelon::new(n + 1);
    for (row, t) in m.row_data().iter().zip(target) {
        let mut r = row.clone();
        if !f.is_zero(t) {
            r.push((n, t.clone()));
        }
        e.insert(f, r);
    }
    if e.pivots.contains_key(&n) {
        // inconsistent: some combination of rows reads 0 = nonzero
        let left = kernel_basis(&m.transpose());
        for y in left {
            let residual = dot(f, &y, target);
            if !f.is_zero(&residual) {
                return Ok(AffineSolution::Infeasible {
                    certificate: y,
                    residual,
                });
            }
        }
        unreachable!("an inconsistent system has a separating left null vector");
    }
    e.make_reduced(f);
    let mut particular = vec![f.zero(); n];
    for (&pc, row) in &e.pivots {
        if let Some((c, v)) = row.last() {
            if *c == n {
                particular[pc] = v.clone();
            }
        }
    }
    let mut kernel = Vec::new();
    for free in (0..n).filter(|c| !e.pivots.contains_key(c)) {
        let mut v = vec![f.zero(); n];
        v[free] = f.one();
        for (&pc, row) in &e.pivots {
            if let Ok(i) = row.binary_search_by_key(&free, |(c, _)| *c) {
                v[pc] = f.neg(&row[i].1);
            }
        }
        kernel.push(v);
    }
    Ok(AffineSolution::Feasible { particular, kernel })
}

/// `dim ker(out) - rank(inn)` for a composable pair with `out * inn = 0`.
pub fn homology_dim<F: Field>(out: &Matrix<F>, inn: &Matrix<F>) -> Result<usize> {
    let comp = out.mul(inn)?;
    if !comp.is_zero() {
        return Err(Error::NotAComplex(format!(
            "composite of a {}x{} and a {}x{} map is nonzero",
            out.rows(),
            out.cols(),
            inn.rows(),
            inn.cols()
        )));
    }
    Ok(out.cols() - rank(out) - rank(inn))
}

/// Canonical representatives of `ker(out) / im(inn)`: the kernel basis is
/// reduced modulo the image and the residues are put in reduced echelon form.
pub fn homology_representatives<F: Field>(out: &Matrix<F>, inn: &Matrix<F>) -> Result<Vec<Vec<F::Elem>>> {
    homology_dim(out, inn)?;
    let f = out.field();
    let image = Echelon::from_matrix(&inn.transpose());
    let kernel = kernel_basis(out);
    Ok(quotient_basis(f, &image, &kernel))
}

/// Reduced echelon basis of `span(vectors) + S` modulo `S`, where `S` is the
/// row space of `sub`.
pub fn quotient_basis<F: Field>(f: &F, sub: &Echelon<F>, vectors: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let cols = sub.cols();
    let mut quot = Echelon::new(cols);
    for v in vectors {
        let r = sub.reduce(f, &to_sparse(f, v));
        quot.insert(f, r);
    }
    quot.make_reduced(f);
    quot.basis(f)
}

/// Determinant of a dense square matrix by elimination.
pub fn determinant<F: Field>(f: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    let mut a: Vec<Vec<F::Elem>> = m.to_vec();
    let mut det = f.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !f.is_zero(&a[r][col])) else {
            return f.zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = f.neg(&det);
        }
        let p = a[col][col].clone();
        det = f.mul(&det, &p);
        let pinv = f.inv(&p).expect("nonzero pivot");
        for r in col + 1..n {
            if f.is_zero(&a[r][col]) {
                continue;
            }
            let factor = f.mul(&a[r][col], &pinv);
            let neg = f.neg(&factor);
            let (upper, lower) = a.split_at_mut(r);
            let src = &upper[col];
            for (dst, s) in lower[0][col..].iter_mut().zip(&src[col..]) {
                f.mul_add_assign(dst, &neg, s);
            }
        }
    }
    det
}
