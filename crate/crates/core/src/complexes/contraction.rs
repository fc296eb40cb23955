use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::tensor;

use super::{boundary_matrix, build_operator, coboundary, Cochain, Limits};

/// Matrix of `i_alpha : C_n(A) -> C_{n-m}(A)` for an `m`-cochain `alpha` with
/// values in `A`: `i_alpha(a_0 .. a_n) = a_0 alpha(a_1 .. a_m) (x) a_{m+1} .. a_n`.
pub fn contraction_matrix<F: Field>(
    a: &Algebra<F>,
    alpha: &Cochain<F>,
    n: usize,
    limits: &Limits,
) -> Result<Matrix<F>> {
    let m = alpha.degree();
    alpha.check_against(a, a.dim(), m)?;
    if n < m {
        return Err(Error::DegreeTooLow {
            context: "contraction",
            degree: n,
            min: m,
        });
    }
    let d = a.dim();
    let f = a.field();
    let cols = limits.chain_dim(d, n, "contraction")?;
    let rows = tensor::power(d, n - m + 1);
    let mut t = vec![0; n + 1];
    let mut out = vec![0; n - m + 1];
    Ok(build_operator(f, rows, cols, |c, buf| {
        tensor::decode_into(d, c, &mut t);
        let value = alpha.value(&t[1..=m]);
        out[1..].copy_from_slice(&t[m + 1..]);
        for (x, s) in value.iter().enumerate() {
            if f.is_zero(s) {
                continue;
            }
            for (p, coef) in a.basis_product(t[0], x) {
                out[0] = *p;
                buf.push((tensor::encode(d, &out), f.mul(s, coef)));
            }
        }
    }))
}

/// `i_alpha(x)` for a chain `x` of degree `n`.
pub fn contraction<F: Field>(
    a: &Algebra<F>,
    alpha: &Cochain<F>,
    x: &[F::Elem],
    n: usize,
    limits: &Limits,
) -> Result<Vec<F::Elem>> {
    contraction_matrix(a, alpha, n, limits)?.mul_vec(x)
}

/// Signs in `b i_alpha - eta i_alpha b = eps i_{delta alpha}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContractionSigns {
    pub eta: i8,
    pub eps: i8,
}

impl ContractionSigns {
    /// The identity as written without signs: `eta = eps = 1`.
    pub const VERBATIM: Self = Self { eta: 1, eps: 1 };

    /// Signs for a cochain of degree `m`: `eta = (-1)^m`, `eps = (-1)^(m+1)`.
    pub fn graded(m: usize) -> Self {
        if m.is_multiple_of(2) {
            Self { eta: 1, eps: -1 }
        } else {
            Self { eta: -1, eps: 1 }
        }
    }
}

/// Which sign conventions make the contraction identity hold for one cochain
/// of degree `m` on chains of degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContractionCheck {
    pub m: usize,
    pub n: usize,
    pub verbatim: bool,
    pub graded: bool,
}

/// Compares `b_{n-m} i_alpha` with `i_alpha b_n` and `i_{delta alpha}` as
/// matrices on `C_n(A)`; needs `n >= m + 1`.
pub fn contraction_identity<F: Field>(
    a: &Algebra<F>,
    alpha: &Cochain<F>,
    n: usize,
    limits: &Limits,
) -> Result<ContractionCheck> {
    let m = alpha.degree();
    if n < m + 1 {
        return Err(Error::DegreeTooLow {
            context: "contraction identity",
            degree: n,
            min: m + 1,
        });
    }
    let f = a.field();
    let regular = a.regular_bimodule();
    let delta = coboundary(a, &regular, alpha, limits)?;
    let b_after = boundary_matrix(a, n - m, limits)?.mul(&contraction_matrix(a, alpha, n, limits)?)?;
    let b_before = contraction_matrix(a, alpha, n - 1, limits)?.mul(&boundary_matrix(a, n, limits)?)?;
    let i_delta = contraction_matrix(a, &delta, n, limits)?;
    let holds = |s: ContractionSigns| -> Result<bool> {
        let lhs = b_after.sub(&b_before.scale(&f.from_i64(s.eta as i64)))?;
        Ok(lhs == i_delta.scale(&f.from_i64(s.eps as i64)))
    };
    Ok(ContractionCheck {
        m,
        n,
        verbatim: holds(ContractionSigns::VERBATIM)?,
        graded: holds(ContractionSigns::graded(m))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::field::Rationals;

    #[test]
    fn i_c_multiplies_first_factor() {
        let f = Rationals;
        let l = Limits::default();
        let a = corpus::dual_numbers(&f);
        let x = Cochain::from_values(0, 2, 2, vec![f.zero(), f.one()]).unwrap();
        // i_x(1 (x) x) = x (x) x
        let chain = vec![f.zero(), f.one(), f.zero(), f.zero()];
        assert_eq!(
            contraction(&a, &x, &chain, 1, &l).unwrap(),
            vec![f.zero(), f.zero(), f.zero(), f.one()]
        );
        let one = Cochain::from_values(0, 2, 2, a.unit().to_vec()).unwrap();
        assert_eq!(contraction_matrix(&a, &one, 2, &l).unwrap(), Matrix::identity(&f, 8));
    }

    #[test]
    fn identity_cochain_multiplies_first_two_factors() {
        let f = Rationals;
        let l = Limits::default();
        let a = corpus::matrix_algebra(&f, 2);
        let d = a.dim();
        let mut id = Cochain::zero(&f, 1, d, d);
        for i in 0..d {
            id.value_mut(&[i])[i] = f.one();
        }
        let i_id = contraction_matrix(&a, &id, 2, &l).unwrap();
        for c in 0..d * d * d {
            let t = tensor::decode(d, 3, c);
            let mut expected = vec![f.zero(); d * d];
            for (p, v) in a.basis_product(t[0], t[1]) {
                expected[tensor::encode(d, &[*p, t[2]])] = v.clone();
            }
            let mut e = vec![f.zero(); d * d * d];
            e[c] = f.one();
            assert_eq!(i_id.mul_vec(&e).unwrap(), expected);
        }
        assert!(contraction_matrix(&a, &id, 0, &l).is_err());
    }

    #[test]
    fn sign_conventions_on_matrix_algebra() {
        let f = Rationals;
        let l = Limits::default();
        let a = corpus::matrix_algebra(&f, 2);
        let d = a.dim();
        for m in 0..=2 {
            let len = tensor::power(d, m) * d;
            let values = (0..len).map(|i| f.from_i64((i as i64 * 5 + 3) % 7 - 3)).collect();
            let alpha = Cochain::from_values(m, d, d, values).unwrap();
            let check = contraction_identity(&a, &alpha, m + 1, &l).unwrap();
            assert!(check.graded, "m={m}");
        }
    }

    #[test]
    fn central_contraction_commutes_with_b() {
        let f = Rationals;
        let l = Limits::default();
        let a = corpus::matrix_algebra(&f, 2);
        let c = Cochain::from_values(0, 4, 4, a.unit().iter().map(|v| f.mul(v, &f.from_i64(3))).collect()).unwrap();
        let check = contraction_identity(&a, &c, 2, &l).unwrap();
        assert!(check.verbatim && check.graded);
    }
}
