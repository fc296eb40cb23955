//! Connes boundary, the cyclic bicomplex and its total complex, and lifting
//! Hochschild 2-cocycles of `C_*(A)*` to cyclic 2-cocycles.
//!
//! `B_n : A^{(x) n+1} -> A^{(x) n+2}` is `(1 - t) s N` with the signed cyclic
//! operator `t(a_0 .. a_n) = (-1)^n a_n (x) a_0 .. a_{n-1}`, the norm
//! `N = sum_i t^i` and `s(x) = 1 (x) x`. Expanded,
//! `B_n(a) = sum_i (-1)^{ni} (1 (x) a_i .. a_n (x) a_0 .. a_{i-1} + a_i (x) 1 (x) a_{i+1} .. a_{i-1})`.
//! The variant with `-` in front of the second term is available as
//! [`ConnesConvention::Minus`]; it anticommutes with `b` but does not square
//! to zero, so the total complex uses [`ConnesConvention::Standard`].
//!
//! The total complex has `Tot_n = sum_{p >= 0} C_{n-2p}(A)` (column `p`) and
//! `d = b + B` with no sign twist: `b` stays in column `p`, `B` moves column
//! `p` to column `p - 1`.

use crate::algebra::Algebra;
use crate::complexes::{boundary_matrix, build_operator, Limits, TildeForm};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, AffineSolution, Matrix};
use crate::tensor;

/// Short description of the total-complex convention, for reports.
pub const TOTAL_COMPLEX_CONVENTION: &str = "d = b + B on Tot_n = sum_p C_(n-2p), no column sign twist; \
B = (1 - t) s N, whose a_i (x) 1 terms carry the opposite sign to the minus variant; \
the minus variant anticommutes with b but does not square to zero";

/// Sign of the `a_i (x) 1 (x) ...` terms in `B_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ConnesConvention {
    /// `(1 - t) s N`; squares to zero.
    #[default]
    Standard,
    /// `sum_i (-1)^{ni} (1 (x) a_i .. - a_i (x) 1 (x) ..)`.
    Minus,
}

/// Matrix of the Connes boundary `B_n` in the standard convention.
pub fn connes_matrix<F: Field>(a: &Algebra<F>, n: usize, limits: &Limits) -> Result<Matrix<F>> {
    connes_matrix_with(a, n, ConnesConvention::Standard, limits)
}

pub fn connes_matrix_with<F: Field>(
    a: &Algebra<F>,
    n: usize,
    convention: ConnesConvention,
    limits: &Limits,
) -> Result<Matrix<F>> {
    let d = a.dim();
    let f = a.field();
    let rows = limits.chain_dim(d, n + 1, "Connes boundary")?;
    let cols = tensor::power(d, n + 1);
    let unit: Vec<(usize, F::Elem)> = linalg::to_sparse(f, a.unit());
    let second = match convention {
        ConnesConvention::Standard => f.one(),
        ConnesConvention::Minus => f.from_i64(-1),
    };
    let mut t = vec![0; n + 1];
    let mut rot = vec![0; n + 1];
    let mut out = vec![0; n + 2];
    Ok(build_operator(f, rows, cols, |c, buf| {
        tensor::decode_into(d, c, &mut t);
        for i in 0..=n {
            for (k, slot) in rot.iter_mut().enumerate() {
                *slot = t[(i + k) % (n + 1)];
            }
            let sign = f.sign((n * i) % 2 == 1);
            // 1 (x) a_i .. a_{i-1}
            out[1..].copy_from_slice(&rot);
            for (u, uc) in &unit {
                out[0] = *u;
                buf.push((tensor::encode(d, &out), f.mul(&sign, uc)));
            }
            // a_i (x) 1 (x) a_{i+1} .. a_{i-1}
            out[0] = rot[0];
            out[2..].copy_from_slice(&rot[1..]);
            let s2 = f.mul(&sign, &second);
            for (u, uc) in &unit {
                out[1] = *u;
                buf.push((tensor::encode(d, &out), f.mul(&s2, uc)));
            }
        }
    }))
}

/// Dimensions of the columns of `Tot_n`: `p -> dim C_{n-2p}`.
fn total_blocks(d: usize, n: usize) -> Vec<usize> {
    (0..=n / 2).map(|p| tensor::power(d, n - 2 * p + 1)).collect()
}

/// Matrix of `d : Tot_n -> Tot_{n-1}` (`Tot_{-1} = 0`).
pub fn total_differential<F: Field>(a: &Algebra<F>, n: usize, limits: &Limits) -> Result<Matrix<F>> {
    total_differential_with(a, n, ConnesConvention::Standard, limits)
}

pub fn total_differential_with<F: Field>(
    a: &Algebra<F>,
    n: usize,
    convention: ConnesConvention,
    limits: &Limits,
) -> Result<Matrix<F>> {
    let d = a.dim();
    let f = a.field();
    limits.chain_dim(d, n, "cyclic total complex")?;
    let widths = total_blocks(d, n);
    if n == 0 {
        return Ok(Matrix::zeros(f, 0, widths[0]));
    }
    let heights = total_blocks(d, n - 1);
    let mut mats: Vec<Vec<Option<Matrix<F>>>> = vec![vec![None; widths.len()]; heights.len()];
    for p in 0..widths.len() {
        let k = n - 2 * p;
        if k >= 1 {
            mats[p][p] = Some(boundary_matrix(a, k, limits)?);
        }
        if p >= 1 {
            mats[p - 1][p] = Some(connes_matrix_with(a, k, convention, limits)?);
        }
    }
    let blocks: Vec<Vec<Option<&Matrix<F>>>> = mats.iter().map(|r| r.iter().map(Option::as_ref).collect()).collect();
    Matrix::from_blocks(f, &heights, &widths, &blocks)
}

fn check_cyclic_degree(n: usize, limits: &Limits) -> Result<()> {
    let cap = limits.max_degree.saturating_sub(1);
    if n > cap {
        return Err(Error::DegreeCap {
            context: "cyclic (co)homology",
            degree: n,
            cap,
        });
    }
    Ok(())
}

/// `dim HC_n(A)`.
pub fn cyclic_homology<F: Field>(a: &Algebra<F>, n: usize, limits: &Limits) -> Result<usize> {
    check_cyclic_degree(n, limits)?;
    let out = total_differential(a, n, limits)?;
    let inn = total_differential(a, n + 1, limits)?;
    linalg::homology_dim(&out, &inn)
}

/// `dim HC^n(A)`, computed on the dual total complex.
pub fn cyclic_cohomology<F: Field>(a: &Algebra<F>, n: usize, limits: &Limits) -> Result<usize> {
    check_cyclic_degree(n, limits)?;
    let out = total_differential(a, n + 1, limits)?.transpose();
    let inn = total_differential(a, n, limits)?.transpose();
    linalg::homology_dim(&out, &inn)
}

/// A cyclic 2-cocycle `(beta, gamma)` in `(A^{(x) 3})* + A*`.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicClass2<F: Field> {
    pub beta: TildeForm<F>,
    pub gamma: Vec<F::Elem>,
}

/// Dual operators used by the degree-2 lifting problem.
#[derive(Clone, Debug)]
pub(crate) struct LiftOperators<F: Field> {
    /// `b_1^*: A* -> (A^{(x) 2})*`
    pub b1t: Matrix<F>,
    /// `b_2^*: (A^{(x) 2})* -> (A^{(x) 3})*`
    pub b2t: Matrix<F>,
    /// `b_3^*: (A^{(x) 3})* -> (A^{(x) 4})*`
    pub b3t: Matrix<F>,
    /// `B_1^*: (A^{(x) 3})* -> (A^{(x) 2})*`
    pub connes1t: Matrix<F>,
    /// `B_0^*: (A^{(x) 2})* -> A*`
    pub connes0t: Matrix<F>,
}

impl<F: Field> LiftOperators<F> {
    pub fn new(a: &Algebra<F>, limits: &Limits) -> Result<Self> {
        Ok(Self {
            b1t: boundary_matrix(a, 1, limits)?.transpose(),
            b2t: boundary_matrix(a, 2, limits)?.transpose(),
            b3t: boundary_matrix(a, 3, limits)?.transpose(),
            connes1t: connes_matrix(a, 1, limits)?.transpose(),
            connes0t: connes_matrix(a, 0, limits)?.transpose(),
        })
    }
}

impl<F: Field> CyclicClass2<F> {
    /// Checks `b_3^*(beta) = 0` and `B_1^*(beta) + b_1^*(gamma) = 0`.
    pub fn verify(&self, a: &Algebra<F>, limits: &Limits) -> Result<bool> {
        let ops = LiftOperators::new(a, limits)?;
        Ok(self.verify_with(a.field(), &ops))
    }

    pub(crate) fn verify_with(&self, f: &F, ops: &LiftOperators<F>) -> bool {
        let zero = |v: &[F::Elem]| v.iter().all(|x| f.is_zero(x));
        let Ok(cocycle) = ops.b3t.mul_vec(self.beta.values()) else {
            return false;
        };
        let (Ok(x), Ok(y)) = (ops.connes1t.mul_vec(self.beta.values()), ops.b1t.mul_vec(&self.gamma)) else {
            return false;
        };
        let sum: Vec<F::Elem> = x.iter().zip(&y).map(|(p, q)| f.add(p, q)).collect();
        zero(&cocycle) && zero(&sum)
    }
}

/// Outcome of [`lift_along_i2`].
#[derive(Clone, Debug, PartialEq)]
pub enum LiftOutcome<F: Field> {
    Lifted {
        class: CyclicClass2<F>,
        /// The correction `eta` with `class.beta = beta - b_2^*(eta)`.
        eta: Vec<F::Elem>,
    },
    /// `y` with `y M = 0` and `y . target != 0` for the lifting system `M`.
    NoLift { certificate: Vec<F::Elem> },
}

/// Finds `eta`, `gamma` with `B_1^*(beta - b_2^*(eta)) + b_1^*(gamma) = 0`.
pub fn lift_along_i2<F: Field>(a: &Algebra<F>, beta: &TildeForm<F>, limits: &Limits) -> Result<LiftOutcome<F>> {
    if beta.algebra_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            context: "tilde form",
            expected: a.dim(),
            found: beta.algebra_dim(),
        });
    }
    let f = a.field();
    let ops = LiftOperators::new(a, limits)?;
    if ops.b3t.mul_vec(beta.values())?.iter().any(|v| !f.is_zero(v)) {
        return Err(Error::NotADualCocycle);
    }
    let d = a.dim();
    let eta_block = ops.connes1t.mul(&ops.b2t)?.scale(&f.from_i64(-1));
    let system = eta_block.hstack(&ops.b1t)?;
    let target: Vec<F::Elem> = ops.connes1t.mul_vec(beta.values())?.iter().map(|v| f.neg(v)).collect();
    match linalg::solve_affine(&system, &target)? {
        AffineSolution::Feasible { particular, .. } => {
            let (eta, gamma) = particular.split_at(d * d);
            let correction = ops.b2t.mul_vec(eta)?;
            let values = beta.values().iter().zip(&correction).map(|(x, y)| f.sub(x, y)).collect();
            let class = CyclicClass2 {
                beta: TildeForm::from_values(d, values)?,
                gamma: gamma.to_vec(),
            };
            debug_assert!(class.verify_with(f, &ops));
            Ok(LiftOutcome::Lifted {
                class,
                eta: eta.to_vec(),
            })
        }
        AffineSolution::Infeasible { certificate, .. } => Ok(LiftOutcome::NoLift { certificate }),
    }
}
