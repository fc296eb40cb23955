use crate::error::Result;
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::pencil::{GridCertificate, LinearPencil, PencilOutcome};

use super::Algebra;

/// A linear form `lambda` on an algebra, meant to satisfy `lambda(xy) = lambda(yx)`
/// with nonsingular Gram matrix `G[i][j] = lambda(e_i e_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetrizingForm<F: Field> {
    pub lambda: Vec<F::Elem>,
}

impl<F: Field> SymmetrizingForm<F> {
    pub fn new(lambda: Vec<F::Elem>) -> Self {
        Self { lambda }
    }

    /// `G[i][j] = lambda(e_i e_j)`.
    pub fn gram(&self, b: &Algebra<F>) -> Vec<Vec<F::Elem>> {
        gram_matrix(b, &self.lambda)
    }

    /// Checks symmetry on all basis pairs and nonsingularity of the Gram matrix.
    pub fn verify(&self, b: &Algebra<F>) -> bool {
        if self.lambda.len() != b.dim() {
            return false;
        }
        let g = self.gram(b);
        let n = b.dim();
        let symmetric = (0..n).all(|i| (0..n).all(|j| g[i][j] == g[j][i]));
        symmetric && linalg::rank(&Matrix::from_dense(b.field(), &g)) == n
    }
}

pub(crate) fn gram_matrix<F: Field>(b: &Algebra<F>, lambda: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    let f = b.field();
    let n = b.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = f.zero();
                    for (k, c) in b.basis_product(i, j) {
                        f.mul_add_assign(&mut acc, c, &lambda[*k]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Result of [`is_symmetric_algebra`].
#[derive(Clone, Debug, PartialEq)]
pub enum FrobeniusOutcome<F: Field> {
    Symmetric(SymmetrizingForm<F>),
    /// Every form vanishing on `[B, B]` has singular Gram matrix.
    NotSymmetric {
        /// Basis of the forms vanishing on `[B, B]`.
        trace_forms: Vec<Vec<F::Elem>>,
        certificate: GridCertificate,
    },
}

impl<F: Field> FrobeniusOutcome<F> {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, Self::Symmetric(_))
    }
}

/// Basis of `{lambda in B* : lambda([B, B]) = 0}`.
pub fn trace_forms<F: Field>(b: &Algebra<F>) -> Vec<Vec<F::Elem>> {
    let commutators = b.commutator_subspace();
    let m = Matrix::from_dense_rows(b.field(), b.dim(), &commutators);
    linalg::kernel_basis(&m)
}

/// Decides whether `B` carries a symmetrizing form.
pub fn is_symmetric_algebra<F: Field>(b: &Algebra<F>) -> Result<FrobeniusOutcome<F>> {
    let f = b.field();
    let forms = trace_forms(b);
    let members = forms.iter().map(|l| gram_matrix(b, l)).collect();
    let pencil = LinearPencil::new(f, b.dim(), members);
    match pencil.decide()? {
        PencilOutcome::Nonsingular { point, .. } => {
            let mut lambda = vec![f.zero(); b.dim()];
            for (t, l) in point.iter().zip(&forms) {
                for (acc, x) in lambda.iter_mut().zip(l) {
                    f.mul_add_assign(acc, t, x);
                }
            }
            let form = SymmetrizingForm::new(lambda);
            debug_assert!(form.verify(b));
            Ok(FrobeniusOutcome::Symmetric(form))
        }
        PencilOutcome::Singular(certificate) => Ok(FrobeniusOutcome::NotSymmetric {
            trace_forms: forms,
            certificate,
        }),
    }
}
