//! Finite-dimensional unital algebras given by structure constants.

mod bimodule;
mod extension;
pub(crate) mod frobenius;

pub use bimodule::{Bimodule, BimoduleViolation};
pub use extension::{extension_unit, hochschild_extension, trivial_extension};
pub use frobenius::{is_symmetric_algebra, trace_forms, FrobeniusOutcome, SymmetrizingForm};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, AffineSolution, Echelon, Matrix};

/// `e_i e_j = sum_k c[i][j][k] e_k`, with a distinguished unit vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F: Field> {
    field: F,
    labels: Vec<String>,
    /// Sparse product of basis elements, indexed by `i * dim + j`.
    table: Vec<Vec<(usize, F::Elem)>>,
    unit: Vec<F::Elem>,
}

/// First failure found by [`Algebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraViolation {
    NonAssociative { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
}

impl fmt::Display for AlgebraViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonAssociative { i, j, k } => {
                write!(f, "(e{i} e{j}) e{k} != e{i} (e{j} e{k})")
            }
            Self::LeftUnit { i } => write!(f, "1 e{i} != e{i}"),
            Self::RightUnit { i } => write!(f, "e{i} 1 != e{i}"),
        }
    }
}

impl<F: Field> Algebra<F> {
    /// `products` lists `(i, j, [(k, c_ijk)])`; unlisted products are zero.
    /// Shapes are checked here; the algebra axioms are checked by [`Algebra::validate`].
    pub fn new(
        field: &F,
        labels: Vec<String>,
        products: impl IntoIterator<Item = (usize, usize, Vec<(usize, F::Elem)>)>,
        unit: Vec<F::Elem>,
    ) -> Result<Self> {
        let n = labels.len();
        if unit.len() != n {
            return Err(Error::DimensionMismatch {
                context: "unit vector",
                expected: n,
                found: unit.len(),
            });
        }
        let mut dense: Vec<Vec<F::Elem>> = vec![vec![field.zero(); n]; n * n];
        for (i, j, terms) in products {
            for (k, c) in terms {
                if i >= n || j >= n || k >= n {
                    return Err(Error::DimensionMismatch {
                        context: "structure constant index",
                        expected: n,
                        found: i.max(j).max(k),
                    });
                }
                field.add_assign(&mut dense[i * n + j][k], &c);
            }
        }
        let table = dense.iter().map(|v| linalg::to_sparse(field, v)).collect();
        Ok(Self {
            field: field.clone(),
            labels,
            table,
            unit,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    /// Sparse expansion of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, F::Elem)] {
        &self.table[i * self.dim() + j]
    }

    /// Coordinate `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> F::Elem {
        let row = self.basis_product(i, j);
        match row.binary_search_by_key(&k, |(c, _)| *c) {
            Ok(p) => row[p].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    fn check_len(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "algebra element",
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, a: &[F::Elem], b: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_vector();
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.basis_product(i, j) {
                    f.mul_add_assign(&mut out[*k], &xy, c);
                }
            }
        }
        out
    }

    /// Sparse expansion of `v e_j` for a dense `v`.
    pub(crate) fn mul_by_basis_right(&self, v: &[F::Elem], j: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_vector();
        for (i, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (k, c) in self.basis_product(i, j) {
                f.mul_add_assign(&mut out[*k], x, c);
            }
        }
        out
    }

    /// Checks associativity on all basis triples and the two unit axioms.
    pub fn validate(&self) -> std::result::Result<(), AlgebraViolation> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let eij = linalg::to_dense(&self.field, n, self.basis_product(i, j));
                for k in 0..n {
                    let left = self.mul_by_basis_right(&eij, k);
                    let ejk = linalg::to_dense(&self.field, n, self.basis_product(j, k));
                    let right = self.mul(&self.basis_vector(i), &ejk);
                    if left != right {
                        return Err(AlgebraViolation::NonAssociative { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            let ei = self.basis_vector(i);
            if self.mul(&self.unit, &ei) != ei {
                return Err(AlgebraViolation::LeftUnit { i });
            }
            if self.mul(&ei, &self.unit) != ei {
                return Err(AlgebraViolation::RightUnit { i });
            }
        }
        Ok(())
    }

    /// Matrix of `x -> c x` (column `j` holds `c e_j`).
    pub fn left_multiplication(&self, c: &[F::Elem]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vec<F::Elem>> = (0..n).map(|j| self.mul_by_basis_right(c, j)).collect();
        Matrix::from_columns(&self.field, n, &cols)
    }

    /// Matrix of the commutator map `c -> (c e_i - e_i c)_i`, stacked over `i`.
    pub(crate) fn commutator_system(&self) -> Matrix<F> {
        let n = self.dim();
        let f = &self.field;
        let mut triplets = Vec::new();
        for i in 0..n {
            for x in 0..n {
                for (k, v) in self.basis_product(x, i) {
                    triplets.push((i * n + k, x, v.clone()));
                }
                for (k, v) in self.basis_product(i, x) {
                    triplets.push((i * n + k, x, f.neg(v)));
                }
            }
        }
        Matrix::from_triplets(f, n * n, n, triplets)
    }

    /// Basis of the center `Z(A)`.
    pub fn center_basis(&self) -> Vec<Vec<F::Elem>> {
        linalg::kernel_basis(&self.commutator_system())
    }

    pub fn is_central(&self, c: &[F::Elem]) -> bool {
        (0..self.dim()).all(|i| {
            let ei = self.basis_vector(i);
            self.mul(c, &ei) == self.mul(&ei, c)
        })
    }

    /// Two-sided inverse, if `c` is a unit.
    pub fn try_invert(&self, c: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if c.len() != self.dim() {
            return None;
        }
        let lc = self.left_multiplication(c);
        match linalg::solve_affine(&lc, &self.unit).ok()? {
            AffineSolution::Feasible { particular, kernel } if kernel.is_empty() => {
                // L_c is bijective, so x c = 1 as well in a finite-dimensional algebra
                debug_assert_eq!(self.mul(&particular, c), self.unit);
                if self.mul(&particular, c) == self.unit {
                    Some(particular)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Reduced echelon basis of `[A, A] = span{ab - ba}`.
    pub fn commutator_subspace(&self) -> Vec<Vec<F::Elem>> {
        let n = self.dim();
        let f = &self.field;
        let mut e = Echelon::new(n);
        for i in 0..n {
            for j in i + 1..n {
                let row = linalg::axpy(f, self.basis_product(i, j), &f.from_i64(-1), self.basis_product(j, i));
                e.insert(f, row);
            }
        }
        e.make_reduced(f);
        e.basis(f)
    }

    /// The regular bimodule `A` acting on itself.
    pub fn regular_bimodule(&self) -> Bimodule<F> {
        Bimodule::regular(self)
    }

    /// The dual bimodule `A*` with `(a f b)(x) = f(b x a)`.
    pub fn dual_bimodule(&self) -> Bimodule<F> {
        Bimodule::dual(self)
    }

    pub fn format_vector(&self, v: &[F::Elem]) -> String {
        format_combination(&self.field, &self.labels, v)
    }
}

/// Human-readable linear combination over the given labels.
pub fn format_combination<F: Field>(f: &F, labels: &[String], v: &[F::Elem]) -> String {
    let mut out = String::new();
    for (x, label) in v.iter().zip(labels) {
        if f.is_zero(x) {
            continue;
        }
        let s = f.format(x);
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push(' ');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
