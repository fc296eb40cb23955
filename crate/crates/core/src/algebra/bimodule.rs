use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, SparseRow};

use super::Algebra;

/// A finite-dimensional bimodule over an algebra of dimension `algebra_dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule<F: Field> {
    field: F,
    algebra_dim: usize,
    labels: Vec<String>,
    /// `e_i . m_x` at index `i * dim + x`.
    left: Vec<SparseRow<F>>,
    /// `m_x . e_i` at index `x * algebra_dim + i`.
    right: Vec<SparseRow<F>>,
}

/// First failure found by [`Bimodule::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BimoduleViolation {
    AlgebraDimension { expected: usize, found: usize },
    LeftAssociativity { i: usize, j: usize, x: usize },
    RightAssociativity { x: usize, i: usize, j: usize },
    Compatibility { i: usize, x: usize, j: usize },
    LeftUnit { x: usize },
    RightUnit { x: usize },
}

impl fmt::Display for BimoduleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AlgebraDimension { expected, found } => {
                write!(f, "acting algebra has dimension {found}, bimodule expects {expected}")
            }
            Self::LeftAssociativity { i, j, x } => write!(f, "(e{i} e{j}) m{x} != e{i} (e{j} m{x})"),
            Self::RightAssociativity { x, i, j } => write!(f, "m{x} (e{i} e{j}) != (m{x} e{i}) e{j}"),
            Self::Compatibility { i, x, j } => write!(f, "(e{i} m{x}) e{j} != e{i} (m{x} e{j})"),
            Self::LeftUnit { x } => write!(f, "1 m{x} != m{x}"),
            Self::RightUnit { x } => write!(f, "m{x} 1 != m{x}"),
        }
    }
}

impl<F: Field> Bimodule<F> {
    /// `left` lists `(i, x, e_i . m_x)` and `right` lists `(x, i, m_x . e_i)`;
    /// unlisted actions are zero.
    pub fn new(
        field: &F,
        algebra_dim: usize,
        labels: Vec<String>,
        left: impl IntoIterator<Item = (usize, usize, Vec<(usize, F::Elem)>)>,
        right: impl IntoIterator<Item = (usize, usize, Vec<(usize, F::Elem)>)>,
    ) -> Result<Self> {
        let m = labels.len();
        let n = algebra_dim;
        let collect = |entries: &mut dyn Iterator<Item = (usize, usize, Vec<(usize, F::Elem)>)>,
                       outer: usize,
                       inner: usize|
         -> Result<Vec<SparseRow<F>>> {
            let mut dense = vec![vec![field.zero(); m]; outer * inner];
            for (a, b, terms) in entries {
                for (k, c) in terms {
                    if a >= outer || b >= inner || k >= m {
                        return Err(Error::DimensionMismatch {
                            context: "bimodule action index",
                            expected: outer.max(inner).max(m),
                            found: a.max(b).max(k),
                        });
                    }
                    field.add_assign(&mut dense[a * inner + b][k], &c);
                }
            }
            Ok(dense.iter().map(|v| linalg::to_sparse(field, v)).collect())
        };
        let left = collect(&mut left.into_iter(), n, m)?;
        let right = collect(&mut right.into_iter(), m, n)?;
        Ok(Self {
            field: field.clone(),
            algebra_dim,
            labels,
            left,
            right,
        })
    }

    /// `A` as a bimodule over itself.
    pub fn regular(a: &Algebra<F>) -> Self {
        let n = a.dim();
        let left = (0..n * n).map(|ix| a.basis_product(ix / n, ix % n).to_vec()).collect();
        let right = (0..n * n).map(|ix| a.basis_product(ix / n, ix % n).to_vec()).collect();
        Self {
            field: a.field().clone(),
            algebra_dim: n,
            labels: a.labels().to_vec(),
            left,
            right,
        }
    }

    /// `A*` on the dual basis: `(e_i . e_x*)(e_j) = e_x*(e_j e_i)` and
    /// `(e_x* . e_i)(e_j) = e_x*(e_i e_j)`.
    pub fn dual(a: &Algebra<F>) -> Self {
        let n = a.dim();
        let f = a.field();
        let mut left = vec![vec![f.zero(); n]; n * n];
        let mut right = vec![vec![f.zero(); n]; n * n];
        for j in 0..n {
            for i in 0..n {
                for (x, c) in a.basis_product(j, i) {
                    left[i * n + x][j] = c.clone();
                }
                for (x, c) in a.basis_product(i, j) {
                    right[x * n + i][j] = c.clone();
                }
            }
        }
        let sparse = |rows: Vec<Vec<F::Elem>>| rows.iter().map(|v| linalg::to_sparse(f, v)).collect();
        Self {
            field: f.clone(),
            algebra_dim: n,
            labels: a.labels().iter().map(|l| format!("{l}*")).collect(),
            left: sparse(left),
            right: sparse(right),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sparse expansion of `e_i . m_x`.
    pub fn left_basis(&self, i: usize, x: usize) -> &[(usize, F::Elem)] {
        &self.left[i * self.dim() + x]
    }

    /// Sparse expansion of `m_x . e_i`.
    pub fn right_basis(&self, x: usize, i: usize) -> &[(usize, F::Elem)] {
        &self.right[x * self.algebra_dim + i]
    }

    /// `a . v` for dense `a` in the algebra and `v` in the module.
    pub fn act_left(&self, a: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, s) in a.iter().enumerate() {
            if f.is_zero(s) {
                continue;
            }
            for (x, t) in v.iter().enumerate() {
                if f.is_zero(t) {
                    continue;
                }
                let st = f.mul(s, t);
                for (k, c) in self.left_basis(i, x) {
                    f.mul_add_assign(&mut out[*k], &st, c);
                }
            }
        }
        out
    }

    /// `v . a` for dense `v` in the module and `a` in the algebra.
    pub fn act_right(&self, v: &[F::Elem], a: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (x, t) in v.iter().enumerate() {
            if f.is_zero(t) {
                continue;
            }
            for (i, s) in a.iter().enumerate() {
                if f.is_zero(s) {
                    continue;
                }
                let ts = f.mul(t, s);
                for (k, c) in self.right_basis(x, i) {
                    f.mul_add_assign(&mut out[*k], &ts, c);
                }
            }
        }
        out
    }

    fn module_basis(&self, x: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[x] = self.field.one();
        v
    }

    /// Checks unitality, both associativities and compatibility of the two
    /// actions on all basis triples.
    pub fn validate(&self, a: &Algebra<F>) -> std::result::Result<(), BimoduleViolation> {
        let n = a.dim();
        if n != self.algebra_dim {
            return Err(BimoduleViolation::AlgebraDimension {
                expected: self.algebra_dim,
                found: n,
            });
        }
        let m = self.dim();
        for x in 0..m {
            let mx = self.module_basis(x);
            if self.act_left(a.unit(), &mx) != mx {
                return Err(BimoduleViolation::LeftUnit { x });
            }
            if self.act_right(&mx, a.unit()) != mx {
                return Err(BimoduleViolation::RightUnit { x });
            }
        }
        for x in 0..m {
            let mx = self.module_basis(x);
            for i in 0..n {
                let ei = a.basis_vector(i);
                let i_mx = self.act_left(&ei, &mx);
                let mx_i = self.act_right(&mx, &ei);
                for j in 0..n {
                    let ej = a.basis_vector(j);
                    let eij = a.mul(&ei, &ej);
                    if self.act_left(&eij, &mx) != self.act_left(&ei, &self.act_left(&ej, &mx)) {
                        return Err(BimoduleViolation::LeftAssociativity { i, j, x });
                    }
                    if self.act_right(&mx, &eij) != self.act_right(&mx_i, &ej) {
                        return Err(BimoduleViolation::RightAssociativity { x, i, j });
                    }
                    if self.act_right(&i_mx, &ej) != self.act_left(&ei, &self.act_right(&mx, &ej)) {
                        return Err(BimoduleViolation::Compatibility { i, x, j });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn format_vector(&self, v: &[F::Elem]) -> String {
        super::format_combination(&self.field, &self.labels, v)
    }
}
