//! Hochschild chain and cochain complexes of a structure-constant algebra.
//!
//! `C_n(A) = A^{(x) n+1}` with the tensor basis of [`crate::tensor`]; chains are
//! dense coordinate vectors in that basis. `C^n(A, M) = Hom(A^{(x) n}, M)` is
//! stored with the value on basis tensor `t` in coordinates
//! `t * dim M .. (t + 1) * dim M`.

mod cochain;
mod contraction;

pub use cochain::{
    check_cocycle2, coboundary, coboundary_matrix, cocycle_spanning_set, cochain_space_dim, from_tilde, hochschild_cohomology, to_tilde,
    Cochain, TildeForm,
};
pub use contraction::{
    contraction, contraction_identity, contraction_matrix, ContractionCheck, ContractionSigns,
};

use crate::algebra::{Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::tensor;

/// Size limits for complexes built on tensor powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `k` for which `A^{(x) k+1}` (chains) or `A^{(x) k}` (cochains) is built.
    pub max_degree: usize,
    /// Largest basis size of a single chain or cochain group.
    pub max_group_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_degree: 4,
            max_group_dim: 1 << 20,
        }
    }
}

impl Limits {
    /// Dimension of `C_k(A)`, checked against the limits.
    pub fn chain_dim(&self, algebra_dim: usize, k: usize, context: &'static str) -> Result<usize> {
        if k > self.max_degree {
            return Err(Error::DegreeCap {
                context,
                degree: k,
                cap: self.max_degree,
            });
        }
        tensor::checked_power(algebra_dim, k + 1, self.max_group_dim, context)
    }

    /// Dimension of `C^k(A, M)`, checked against the limits.
    pub fn cochain_dim(&self, algebra_dim: usize, module_dim: usize, k: usize, context: &'static str) -> Result<usize> {
        if k > self.max_degree {
            return Err(Error::DegreeCap {
                context,
                degree: k,
                cap: self.max_degree,
            });
        }
        let base = tensor::checked_power(algebra_dim, k, self.max_group_dim, context)?;
        match base.checked_mul(module_dim) {
            Some(v) if v <= self.max_group_dim => Ok(v),
            _ => Err(Error::DegreeCap {
                context,
                degree: k,
                cap: self.max_degree,
            }),
        }
    }
}

/// Dimension and canonical representatives of a (co)homology group.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologyGroup<F: Field> {
    pub degree: usize,
    pub dim: usize,
    /// Reduced echelon basis of cycles complementing the boundaries.
    pub representatives: Vec<Vec<F::Elem>>,
}

/// Builds a matrix column by column: `column(c, out)` pushes `(row, value)`
/// pairs for the image of basis vector `c`; repeated rows are summed.
pub(crate) fn build_operator<F: Field>(
    f: &F,
    rows: usize,
    cols: usize,
    mut column: impl FnMut(usize, &mut Vec<(usize, F::Elem)>),
) -> Matrix<F> {
    let mut triplets = Vec::new();
    let mut buf = Vec::new();
    for c in 0..cols {
        buf.clear();
        column(c, &mut buf);
        triplets.extend(buf.drain(..).map(|(r, v)| (r, c, v)));
    }
    Matrix::from_triplets(f, rows, cols, triplets)
}

/// Matrix of `b_n : A^{(x) n+1} -> A^{(x) n}`,
/// `b_n(a_0 .. a_n) = sum_{i<n} (-1)^i (.. a_i a_{i+1} ..) + (-1)^n a_n a_0 (x) a_1 .. a_{n-1}`.
pub fn boundary_matrix<F: Field>(a: &Algebra<F>, n: usize, limits: &Limits) -> Result<Matrix<F>> {
    if n < 1 {
        return Err(Error::DegreeTooLow {
            context: "Hochschild boundary",
            degree: n,
            min: 1,
        });
    }
    let d = a.dim();
    let f = a.field();
    let cols = limits.chain_dim(d, n, "Hochschild boundary")?;
    let rows = tensor::power(d, n);
    let mut t = vec![0; n + 1];
    let mut out = vec![0; n];
    Ok(build_operator(f, rows, cols, |c, buf| {
        tensor::decode_into(d, c, &mut t);
        for i in 0..n {
            let sign = f.sign(i % 2 == 1);
            for (p, coef) in a.basis_product(t[i], t[i + 1]) {
                out[..i].copy_from_slice(&t[..i]);
                out[i] = *p;
                out[i + 1..].copy_from_slice(&t[i + 2..]);
                buf.push((tensor::encode(d, &out), f.mul(&sign, coef)));
            }
        }
        let sign = f.sign(n % 2 == 1);
        for (p, coef) in a.basis_product(t[n], t[0]) {
            out[0] = *p;
            out[1..].copy_from_slice(&t[1..n]);
            buf.push((tensor::encode(d, &out), f.mul(&sign, coef)));
        }
    }))
}

/// `b_n` for `n >= 1`, and the zero map `A -> 0` for `n = 0`.
pub(crate) fn boundary_or_zero<F: Field>(a: &Algebra<F>, n: usize, limits: &Limits) -> Result<Matrix<F>> {
    if n == 0 {
        Ok(Matrix::zeros(a.field(), 0, a.dim()))
    } else {
        boundary_matrix(a, n, limits)
    }
}

/// `HH_n(A)`: homology of `b_n` and `b_{n+1}`.
pub fn hochschild_homology<F: Field>(a: &Algebra<F>, n: usize, limits: &Limits) -> Result<HomologyGroup<F>> {
    let out = boundary_or_zero(a, n, limits)?;
    let inn = boundary_matrix(a, n + 1, limits)?;
    let representatives = linalg::homology_representatives(&out, &inn)?;
    Ok(HomologyGroup {
        degree: n,
        dim: representatives.len(),
        representatives,
    })
}

/// Matrix of `b_n : M (x) A^{(x) n} -> M (x) A^{(x) n-1}` (`n >= 1`),
/// `b_n(m, a_1 .. a_n) = m a_1 (x) a_2 .. + sum_{0<i<n} (-1)^i (m, .. a_i a_{i+1} ..)
/// + (-1)^n a_n m (x) a_1 .. a_{n-1}`; the index of `m_x (x) t` is `x * dim(A)^n + t`.
/// For the regular bimodule this is [`boundary_matrix`].
pub fn boundary_matrix_with_coefficients<F: Field>(
    a: &Algebra<F>,
    m: &Bimodule<F>,
    n: usize,
    limits: &Limits,
) -> Result<Matrix<F>> {
    if n < 1 {
        return Err(Error::DegreeTooLow {
            context: "Hochschild boundary with coefficients",
            degree: n,
            min: 1,
        });
    }
    cochain::check_module(a, m)?;
    let d = a.dim();
    let f = a.field();
    let cols = limits.cochain_dim(d, m.dim(), n, "Hochschild boundary with coefficients")?;
    let block_in = tensor::power(d, n);
    let block_out = tensor::power(d, n - 1);
    let rows = m.dim() * block_out;
    let mut t = vec![0; n];
    let mut out = vec![0; n - 1];
    Ok(build_operator(f, rows, cols, |c, buf| {
        let x = c / block_in;
        tensor::decode_into(d, c % block_in, &mut t);
        let tail = tensor::encode(d, &t[1..]);
        for (y, coef) in m.right_basis(x, t[0]) {
            buf.push((y * block_out + tail, coef.clone()));
        }
        for i in 1..n {
            let sign = f.sign(i % 2 == 1);
            for (p, coef) in a.basis_product(t[i - 1], t[i]) {
                out[..i - 1].copy_from_slice(&t[..i - 1]);
                out[i - 1] = *p;
                out[i..].copy_from_slice(&t[i + 1..]);
                buf.push((x * block_out + tensor::encode(d, &out), f.mul(&sign, coef)));
            }
        }
        let sign = f.sign(n % 2 == 1);
        let head = tensor::encode(d, &t[..n - 1]);
        for (y, coef) in m.left_basis(t[n - 1], x) {
            buf.push((y * block_out + head, f.mul(&sign, coef)));
        }
    }))
}

/// `H_n(A, M)`.
pub fn hochschild_homology_with_coefficients<F: Field>(
    a: &Algebra<F>,
    m: &Bimodule<F>,
    n: usize,
    limits: &Limits,
) -> Result<HomologyGroup<F>> {
    let out = if n == 0 {
        cochain::check_module(a, m)?;
        Matrix::zeros(a.field(), 0, m.dim())
    } else {
        boundary_matrix_with_coefficients(a, m, n, limits)?
    };
    let inn = boundary_matrix_with_coefficients(a, m, n + 1, limits)?;
    let representatives = linalg::homology_representatives(&out, &inn)?;
    Ok(HomologyGroup {
        degree: n,
        dim: representatives.len(),
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::field::{PrimeField, Rationals};


    #[test]
    fn regular_coefficients_reproduce_boundary() {
        let f = Rationals;
        let l = Limits::default();
        for c in corpus::all(&f) {
            let reg = c.algebra.regular_bimodule();
            for n in 1..=3 {
                assert_eq!(
                    boundary_matrix_with_coefficients(&c.algebra, &reg, n, &l).unwrap(),
                    boundary_matrix(&c.algebra, n, &l).unwrap(),
                    "{} n={n}",
                    c.name
                );
            }
        }
    }

    #[test]
    fn dual_coefficients_are_dual_to_cohomology() {
        // H_n(A, A*) is the dual of HH^n(A, A)
        let f = Rationals;
        let l = Limits::default();
        for c in corpus::standard(&f) {
            let dual = c.algebra.dual_bimodule();
            let reg = c.algebra.regular_bimodule();
            for n in 0..=2 {
                assert_eq!(
                    hochschild_homology_with_coefficients(&c.algebra, &dual, n, &l).unwrap().dim,
                    hochschild_cohomology(&c.algebra, &reg, n, &l).unwrap().dim,
                    "{} n={n}",
                    c.name
                );
            }
        }
    }

    #[test]
    fn b1_is_commutator() {
        let f = Rationals;
        let l = Limits::default();
        assert!(boundary_matrix(&corpus::truncated_polynomial(&f, 3), 1, &l).unwrap().is_zero());
        let m = corpus::matrix_algebra(&f, 2);
        let b1 = boundary_matrix(&m, 1, &l).unwrap();
        assert_eq!(linalg::rank(&b1), 3);
    }

    #[test]
    fn b2_on_units() {
        // b_2(1 (x) 1 (x) 1) = 1 (x) 1 in the ground field
        let f = Rationals;
        let k = corpus::ground_field(&f);
        let b2 = boundary_matrix(&k, 2, &Limits::default()).unwrap();
        assert_eq!(b2.to_dense(), vec![vec![f.one()]]);
        assert!(boundary_matrix(&k, 0, &Limits::default()).is_err());
    }

    #[test]
    fn ground_field_homology() {
        let f = Rationals;
        let k = corpus::ground_field(&f);
        let l = Limits::default();
        assert_eq!(hochschild_homology(&k, 0, &l).unwrap().dim, 1);
        for n in 1..=3 {
            assert_eq!(hochschild_homology(&k, n, &l).unwrap().dim, 0);
        }
    }

    #[test]
    fn dual_numbers_homology() {
        let f = Rationals;
        let a = corpus::dual_numbers(&f);
        let l = Limits::default();
        assert_eq!(hochschild_homology(&a, 0, &l).unwrap().dim, 2);
        assert_eq!(hochschild_homology(&a, 1, &l).unwrap().dim, 1);
        // in characteristic 2 the factor 2x in b_2 vanishes
        let f2 = PrimeField::new(2).unwrap();
        let a2 = corpus::dual_numbers(&f2);
        assert_eq!(hochschild_homology(&a2, 1, &l).unwrap().dim, 2);
    }

    #[test]
    fn matrix_algebra_hh0() {
        let f = Rationals;
        let m = corpus::matrix_algebra(&f, 2);
        assert_eq!(hochschild_homology(&m, 0, &Limits::default()).unwrap().dim, 1);
    }

    #[test]
    fn b_squared_is_zero() {
        let f = Rationals;
        let l = Limits::default();
        for c in corpus::all(&f) {
            for n in 1..=3 {
                let prod = boundary_matrix(&c.algebra, n, &l)
                    .unwrap()
                    .mul(&boundary_matrix(&c.algebra, n + 1, &l).unwrap())
                    .unwrap();
                assert!(prod.is_zero(), "{} n={n}", c.name);
            }
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let f = Rationals;
        let a = corpus::dual_numbers(&f);
        let l = Limits::default();
        assert!(matches!(
            boundary_matrix(&a, 5, &l),
            Err(Error::DegreeCap { degree: 5, cap: 4, .. })
        ));
        let tight = Limits {
            max_degree: 4,
            max_group_dim: 8,
        };
        assert!(boundary_matrix(&a, 3, &tight).is_err());
        assert!(boundary_matrix(&a, 2, &tight).is_ok());
    }
}
