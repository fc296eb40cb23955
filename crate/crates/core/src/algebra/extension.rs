use crate::complexes::{check_cocycle2, Cochain};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, AffineSolution, Matrix};

use super::{Algebra, Bimodule};

/// `T(A, M, alpha)`: basis `(e_i, 0)` then `(0, m_x)`, with
/// `(a, m)(a', m') = (a a', a m' + m a' + alpha(a (x) a'))`.
pub fn hochschild_extension<F: Field>(a: &Algebra<F>, m: &Bimodule<F>, alpha: &Cochain<F>) -> Result<Algebra<F>> {
    check_cocycle2(a, m, alpha)?;
    let u = extension_unit(a, m, alpha)?;
    Ok(assemble(a, m, alpha, u))
}

/// The trivial extension `T(A) = T(A, A*, 0)`.
pub fn trivial_extension<F: Field>(a: &Algebra<F>) -> Algebra<F> {
    let dual = a.dual_bimodule();
    let alpha = Cochain::zero(a.field(), 2, a.dim(), a.dim());
    let u = vec![a.field().zero(); a.dim()];
    assemble(a, &dual, &alpha, u)
}

fn assemble<F: Field>(a: &Algebra<F>, m: &Bimodule<F>, alpha: &Cochain<F>, u: Vec<F::Elem>) -> Algebra<F> {
    let n = a.dim();
    let md = m.dim();
    let f = a.field();
    let mut labels = a.labels().to_vec();
    labels.extend(m.labels().iter().cloned());
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut terms = a.basis_product(i, j).to_vec();
            for (x, v) in alpha.value(&[i, j]).iter().enumerate() {
                if !f.is_zero(v) {
                    terms.push((n + x, v.clone()));
                }
            }
            products.push((i, j, terms));
        }
        for x in 0..md {
            let left = m.left_basis(i, x).iter().map(|(k, v)| (n + k, v.clone())).collect();
            products.push((i, n + x, left));
            let right = m.right_basis(x, i).iter().map(|(k, v)| (n + k, v.clone())).collect();
            products.push((n + x, i, right));
        }
    }
    let mut unit = a.unit().to_vec();
    unit.extend(u);
    Algebra::new(f, labels, products, unit).expect("indices are in range by construction")
}

/// Solves for `u` with `(1, u)` a two-sided unit of the extension:
/// `u e_j + alpha(1 (x) e_j) = 0` and `e_j u + alpha(e_j (x) 1) = 0` for all `j`.
pub fn extension_unit<F: Field>(a: &Algebra<F>, m: &Bimodule<F>, alpha: &Cochain<F>) -> Result<Vec<F::Elem>> {
    alpha.check_against(a, m.dim(), 2)?;
    let n = a.dim();
    let md = m.dim();
    let f = a.field();
    let unit = a.unit();
    let mut triplets = Vec::new();
    let mut target = Vec::with_capacity(2 * n * md);
    // rows (j, k): coordinate k of u e_j, then of e_j u
    for j in 0..n {
        for x in 0..md {
            for (k, c) in m.right_basis(x, j) {
                triplets.push((j * md + k, x, c.clone()));
            }
            for (k, c) in m.left_basis(j, x) {
                triplets.push((n * md + j * md + k, x, c.clone()));
            }
        }
    }
    let value = |first: bool, j: usize| -> Vec<F::Elem> {
        let mut acc = vec![f.zero(); md];
        for (i, s) in unit.iter().enumerate() {
            if f.is_zero(s) {
                continue;
            }
            let v = if first { alpha.value(&[i, j]) } else { alpha.value(&[j, i]) };
            for (o, w) in acc.iter_mut().zip(v) {
                f.mul_add_assign(o, s, w);
            }
        }
        acc
    };
    for j in 0..n {
        target.extend(value(true, j).iter().map(|v| f.neg(v)));
    }
    for j in 0..n {
        target.extend(value(false, j).iter().map(|v| f.neg(v)));
    }
    let system = Matrix::from_triplets(f, 2 * n * md, md, triplets);
    match linalg::solve_affine(&system, &target)? {
        AffineSolution::Feasible { particular, .. } => Ok(particular),
        AffineSolution::Infeasible { .. } => Err(Error::NoUnit),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{coboundary, Limits};
    use crate::corpus;
    use crate::field::Rationals;

    #[test]
    fn trivial_extension_product() {
        let f = Rationals;
        let a = corpus::dual_numbers(&f);
        let t = trivial_extension(&a);
        assert_eq!(t.dim(), 4);
        assert_eq!(t.validate(), Ok(()));
        assert_eq!(t.labels(), &["1", "x", "1*", "x*"]);
        // (x, 0)(0, x*) = (0, x . x*) = (0, 1*)
        assert_eq!(t.basis_product(1, 3), &[(2, f.one())]);
        let via_cochain =
            hochschild_extension(&a, &a.dual_bimodule(), &Cochain::zero(&f, 2, 2, 2)).unwrap();
        assert_eq!(via_cochain, t);
    }

    #[test]
    fn ground_field_square_zero_extension() {
        let f = Rationals;
        let k = corpus::ground_field(&f);
        let t = hochschild_extension(&k, &k.regular_bimodule(), &Cochain::zero(&f, 2, 1, 1)).unwrap();
        assert_eq!(t.dim(), 2);
        assert_eq!(t.validate(), Ok(()));
        assert!(t.basis_product(1, 1).is_empty());
    }

    #[test]
    fn coboundary_extension_has_nonzero_unit_correction() {
        let f = Rationals;
        let a = corpus::upper_triangular(&f);
        let dual = a.dual_bimodule();
        let g = Cochain::from_values(1, 3, 3, (0..9).map(|i| f.from_i64(i * i - 3)).collect()).unwrap();
        let alpha = coboundary(&a, &dual, &g, &Limits::default()).unwrap();
        let t = hochschild_extension(&a, &dual, &alpha).unwrap();
        assert_eq!(t.validate(), Ok(()));
        // u = -alpha(1 (x) 1)
        let u = extension_unit(&a, &dual, &alpha).unwrap();
        let mut expected = vec![f.zero(); 3];
        for (i, si) in a.unit().iter().enumerate() {
            for (j, sj) in a.unit().iter().enumerate() {
                for (o, v) in expected.iter_mut().zip(alpha.value(&[i, j])) {
                    *o = f.sub(o, &f.mul(&f.mul(si, sj), v));
                }
            }
        }
        assert_eq!(u, expected);
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let f = Rationals;
        let a = corpus::matrix_algebra(&f, 2);
        let alpha = Cochain::from_values(2, 4, 4, (0..64).map(|i| f.from_i64(i % 3)).collect()).unwrap();
        assert!(matches!(
            hochschild_extension(&a, &a.dual_bimodule(), &alpha),
            Err(Error::NotACocycle(..))
        ));
    }
}
