use crate::algebra::Algebra;
use crate::cyclic::{CyclicClass2, LiftOperators};
use crate::complexes::TildeForm;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};

use super::criteria::contraction_pullback;
use super::{ExtensionProblem, Witness};

/// `phi : T -> T*` with `phi(x)(y) = lambda(x y)` for `lambda = (h, c)`,
/// `lambda(a, f) = h(a) + f(c)`. Row `i` holds `phi(t_i)` in the dual basis of
/// `T = A + A*`, i.e. in `T* = A* + A`.
#[derive(Clone, Debug, PartialEq)]
pub struct BimoduleIso<F: Field> {
    pub phi: Matrix<F>,
}

impl<F: Field> BimoduleIso<F> {
    /// Gram matrix of `lambda` on `t`, after checking it is nonsingular and
    /// that `lambda(x' x x'' y) = lambda(x x'' y x')` on all basis quadruples,
    /// which is `phi(x' x x'') = x' phi(x) x''` evaluated at `y`.
    pub fn from_form(t: &Algebra<F>, lambda: &[F::Elem]) -> Result<Self> {
        let f = t.field();
        let n = t.dim();
        if lambda.len() != n {
            return Err(Error::DimensionMismatch {
                context: "form on the extension",
                expected: n,
                found: lambda.len(),
            });
        }
        let eval = |v: &[F::Elem]| linalg::dot(f, v, lambda);
        let rows: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = f.zero();
                        for (k, c) in t.basis_product(i, j) {
                            f.mul_add_assign(&mut acc, c, &lambda[*k]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let phi = Matrix::from_dense(f, &rows);
        if linalg::rank(&phi) != n {
            return Err(Error::Disagreement(format!(
                "bimodule map has rank {} < {n}",
                linalg::rank(&phi)
            )));
        }
        let dense = |i: usize, j: usize| linalg::to_dense(f, n, t.basis_product(i, j));
        for xp in 0..n {
            for x in 0..n {
                let xpx = dense(xp, x);
                for xpp in 0..n {
                    let xpxxpp = t.mul_by_basis_right(&xpx, xpp);
                    let xxpp = dense(x, xpp);
                    for y in 0..n {
                        let left = eval(&t.mul_by_basis_right(&xpxxpp, y));
                        let xxppy = t.mul_by_basis_right(&xxpp, y);
                        let right = eval(&t.mul_by_basis_right(&xxppy, xp));
                        if left != right {
                            return Err(Error::Disagreement(format!(
                                "bimodule identity fails on basis quadruple ({xp}, {x}, {xpp}, {y})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self { phi })
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.phi)
    }
}

/// `lambda = (h, c)` as a form on `T(A, alpha)`.
fn form_of_witness<F: Field>(w: &Witness<F>) -> Vec<F::Elem> {
    let mut lambda = w.h.clone();
    lambda.extend(w.c.iter().cloned());
    lambda
}

/// Verifies the witness, then builds and checks `phi`.
pub fn build_bimodule_iso<F: Field>(p: &ExtensionProblem<F>, w: &Witness<F>) -> Result<BimoduleIso<F>> {
    p.verify_witness(w).map_err(Error::InvalidWitness)?;
    let t = p.extension()?;
    BimoduleIso::from_form(&t, &form_of_witness(w))
}

/// Reads `(c, h)` off a symmetrizing form `lambda = (h, c)` on `T(A, alpha)`.
pub fn witness_from_form<F: Field>(p: &ExtensionProblem<F>, lambda: &[F::Elem]) -> Result<Witness<F>> {
    let n = p.dim();
    if lambda.len() != 2 * n {
        return Err(Error::DimensionMismatch {
            context: "form on the extension",
            expected: 2 * n,
            found: lambda.len(),
        });
    }
    let w = Witness {
        c: lambda[n..].to_vec(),
        h: lambda[..n].to_vec(),
    };
    p.verify_witness(&w).map_err(Error::InvalidWitness)?;
    Ok(w)
}

/// From a condition-(2) witness: `eta = 0`, `beta = i_c^*(alpha~)` and
/// `gamma = h + alpha(1 (x) 1) . c`.
pub fn lift_from_witness<F: Field>(p: &ExtensionProblem<F>, w: &Witness<F>) -> Result<CyclicClass2<F>> {
    p.verify_witness(w).map_err(Error::InvalidWitness)?;
    let f = p.field();
    let beta = contraction_pullback(p).mul_vec(&w.c)?;
    let shift = p.form_times(&p.alpha_unit(), &w.c);
    let gamma = w.h.iter().zip(&shift).map(|(x, y)| f.add(x, y)).collect();
    let class = CyclicClass2 {
        beta: TildeForm::from_values(p.dim(), beta)?,
        gamma,
    };
    let ops = LiftOperators::new(p.algebra(), p.limits())?;
    if !class.verify_with(f, &ops) {
        return Err(Error::Disagreement("lift built from a valid witness is not a cyclic cocycle".into()));
    }
    Ok(class)
}

/// From a lift `B_1^*(i_c^*(alpha~) - b_2^*(eta)) + b_1^*(gamma) = 0`:
/// `h = gamma + B_0^*(eta) - alpha(1 (x) 1) . c`.
pub fn witness_from_lift<F: Field>(
    p: &ExtensionProblem<F>,
    c: &[F::Elem],
    eta: &[F::Elem],
    gamma: &[F::Elem],
) -> Result<Witness<F>> {
    let f = p.field();
    let ops = LiftOperators::new(p.algebra(), p.limits())?;
    let b0 = ops.connes0t.mul_vec(eta)?;
    let shift = p.form_times(&p.alpha_unit(), c);
    let h = gamma
        .iter()
        .zip(&b0)
        .zip(&shift)
        .map(|((g, e), s)| f.sub(&f.add(g, e), s))
        .collect();
    Ok(Witness { c: c.to_vec(), h })
}
