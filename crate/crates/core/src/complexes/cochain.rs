use crate::algebra::{Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::tensor;

use super::{HomologyGroup, Limits};

/// An element of `Hom(A^{(x) n}, M)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<F: Field> {
    degree: usize,
    algebra_dim: usize,
    module_dim: usize,
    values: Vec<F::Elem>,
}

impl<F: Field> Cochain<F> {
    pub fn zero(f: &F, degree: usize, algebra_dim: usize, module_dim: usize) -> Self {
        let len = tensor::power(algebra_dim, degree) * module_dim;
        Self {
            degree,
            algebra_dim,
            module_dim,
            values: vec![f.zero(); len],
        }
    }

    pub fn from_values(degree: usize, algebra_dim: usize, module_dim: usize, values: Vec<F::Elem>) -> Result<Self> {
        let len = tensor::power(algebra_dim, degree) * module_dim;
        if values.len() != len {
            return Err(Error::DimensionMismatch {
                context: "cochain coordinates",
                expected: len,
                found: values.len(),
            });
        }
        Ok(Self {
            degree,
            algebra_dim,
            module_dim,
            values,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn values(&self) -> &[F::Elem] {
        &self.values
    }

    pub fn into_values(self) -> Vec<F::Elem> {
        self.values
    }

    /// Value on the basis tensor `tuple` (length `degree`), as a module vector.
    pub fn value(&self, tuple: &[usize]) -> &[F::Elem] {
        debug_assert_eq!(tuple.len(), self.degree);
        let t = tensor::encode(self.algebra_dim, tuple);
        &self.values[t * self.module_dim..(t + 1) * self.module_dim]
    }

    pub fn value_mut(&mut self, tuple: &[usize]) -> &mut [F::Elem] {
        let t = tensor::encode(self.algebra_dim, tuple);
        &mut self.values[t * self.module_dim..(t + 1) * self.module_dim]
    }

    pub fn add(&self, f: &F, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f.add(a, b)).collect();
        Ok(Self { values, ..self.clone() })
    }

    pub fn scale(&self, f: &F, s: &F::Elem) -> Self {
        Self {
            values: self.values.iter().map(|a| f.mul(s, a)).collect(),
            ..self.clone()
        }
    }

    pub fn is_zero(&self, f: &F) -> bool {
        self.values.iter().all(|v| f.is_zero(v))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if (self.degree, self.algebra_dim, self.module_dim) != (other.degree, other.algebra_dim, other.module_dim) {
            return Err(Error::DimensionMismatch {
                context: "cochain shapes",
                expected: self.values.len(),
                found: other.values.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_against(&self, a: &Algebra<F>, module_dim: usize, degree: usize) -> Result<()> {
        if self.algebra_dim != a.dim() {
            return Err(Error::DimensionMismatch {
                context: "cochain source dimension",
                expected: a.dim(),
                found: self.algebra_dim,
            });
        }
        if self.module_dim != module_dim {
            return Err(Error::DimensionMismatch {
                context: "cochain target dimension",
                expected: module_dim,
                found: self.module_dim,
            });
        }
        if self.degree != degree {
            return Err(Error::DimensionMismatch {
                context: "cochain degree",
                expected: degree,
                found: self.degree,
            });
        }
        Ok(())
    }
}

/// An element of `(A^{(x) 3})*` in the tensor basis, `t(i, j, k)` at index `(i d + j) d + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TildeForm<F: Field> {
    algebra_dim: usize,
    values: Vec<F::Elem>,
}

impl<F: Field> TildeForm<F> {
    pub fn zero(f: &F, algebra_dim: usize) -> Self {
        Self {
            algebra_dim,
            values: vec![f.zero(); tensor::power(algebra_dim, 3)],
        }
    }

    pub fn from_values(algebra_dim: usize, values: Vec<F::Elem>) -> Result<Self> {
        let len = tensor::power(algebra_dim, 3);
        if values.len() != len {
            return Err(Error::DimensionMismatch {
                context: "tilde form coordinates",
                expected: len,
                found: values.len(),
            });
        }
        Ok(Self { algebra_dim, values })
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.values[tensor::encode(self.algebra_dim, &[i, j, k])]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: F::Elem) {
        let ix = tensor::encode(self.algebra_dim, &[i, j, k]);
        self.values[ix] = v;
    }

    pub fn values(&self) -> &[F::Elem] {
        &self.values
    }

    pub fn into_values(self) -> Vec<F::Elem> {
        self.values
    }
}

/// `alpha~(a (x) b (x) c) = alpha(b (x) c)(a)` for `alpha : A (x) A -> A*`.
pub fn to_tilde<F: Field>(alpha: &Cochain<F>) -> Result<TildeForm<F>> {
    let d = alpha.algebra_dim();
    if alpha.degree() != 2 || alpha.module_dim() != d {
        return Err(Error::DimensionMismatch {
            context: "tilde form needs a 2-cochain with values in the dual",
            expected: d,
            found: alpha.module_dim(),
        });
    }
    let mut values = Vec::with_capacity(alpha.values().len());
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                values.push(alpha.value(&[j, k])[i].clone());
            }
        }
    }
    TildeForm::from_values(d, values)
}

/// Inverse of [`to_tilde`].
pub fn from_tilde<F: Field>(t: &TildeForm<F>) -> Cochain<F> {
    let d = t.algebra_dim();
    let mut values = Vec::with_capacity(t.values().len());
    for j in 0..d {
        for k in 0..d {
            for i in 0..d {
                values.push(t.get(i, j, k).clone());
            }
        }
    }
    Cochain::from_values(2, d, d, values).expect("shape preserved")
}

/// Dimension of `C^n(A, M)`.
pub fn cochain_space_dim(algebra_dim: usize, module_dim: usize, n: usize) -> usize {
    tensor::power(algebra_dim, n) * module_dim
}

/// Matrix of `delta^n : Hom(A^{(x) n}, M) -> Hom(A^{(x) n+1}, M)`,
/// `(delta f)(a_1 .. a_{n+1}) = a_1 f(a_2 ..) + sum_i (-1)^i f(.. a_i a_{i+1} ..) + (-1)^{n+1} f(a_1 .. a_n) a_{n+1}`.
pub fn coboundary_matrix<F: Field>(a: &Algebra<F>, m: &Bimodule<F>, n: usize, limits: &Limits) -> Result<Matrix<F>> {
    check_module(a, m)?;
    let d = a.dim();
    let md = m.dim();
    let f = a.field();
    let rows = limits.cochain_dim(d, md, n + 1, "Hochschild coboundary")?;
    let cols = cochain_space_dim(d, md, n);
    // built row-wise: row (s, k) collects the coefficients of every input coordinate
    let mut triplets: Vec<(usize, usize, F::Elem)> = Vec::new();
    let mut s = vec![0; n + 1];
    let mut t = vec![0; n];
    for si in 0..tensor::power(d, n + 1) {
        tensor::decode_into(d, si, &mut s);
        let tail = tensor::encode(d, &s[1..]);
        for y in 0..md {
            for (k, c) in m.left_basis(s[0], y) {
                triplets.push((si * md + k, tail * md + y, c.clone()));
            }
        }
        for i in 1..=n {
            let sign = f.sign(i % 2 == 1);
            for (p, c) in a.basis_product(s[i - 1], s[i]) {
                t[..i - 1].copy_from_slice(&s[..i - 1]);
                t[i - 1] = *p;
                t[i..].copy_from_slice(&s[i + 1..]);
                let ti = tensor::encode(d, &t);
                let v = f.mul(&sign, c);
                for y in 0..md {
                    triplets.push((si * md + y, ti * md + y, v.clone()));
                }
            }
        }
        let sign = f.sign((n + 1) % 2 == 1);
        let head = tensor::encode(d, &s[..n]);
        for y in 0..md {
            for (k, c) in m.right_basis(y, s[n]) {
                triplets.push((si * md + k, head * md + y, f.mul(&sign, c)));
            }
        }
    }
    Ok(Matrix::from_triplets(f, rows, cols, triplets))
}

pub(crate) fn check_module<F: Field>(a: &Algebra<F>, m: &Bimodule<F>) -> Result<()> {
    if m.algebra_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            context: "bimodule over a different algebra",
            expected: a.dim(),
            found: m.algebra_dim(),
        });
    }
    if m.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// `delta(alpha)`.
pub fn coboundary<F: Field>(a: &Algebra<F>, m: &Bimodule<F>, alpha: &Cochain<F>, limits: &Limits) -> Result<Cochain<F>> {
    alpha.check_against(a, m.dim(), alpha.degree())?;
    let delta = coboundary_matrix(a, m, alpha.degree(), limits)?;
    let values = delta.mul_vec(alpha.values())?;
    Cochain::from_values(alpha.degree() + 1, a.dim(), m.dim(), values)
}

/// `HH^n(A, M)`: cohomology of `delta^{n-1}` and `delta^n`.
pub fn hochschild_cohomology<F: Field>(
    a: &Algebra<F>,
    m: &Bimodule<F>,
    n: usize,
    limits: &Limits,
) -> Result<HomologyGroup<F>> {
    let out = coboundary_matrix(a, m, n, limits)?;
    let inn = if n == 0 {
        Matrix::zeros(a.field(), m.dim(), 0)
    } else {
        coboundary_matrix(a, m, n - 1, limits)?
    };
    let representatives = linalg::homology_representatives(&out, &inn)?;
    Ok(HomologyGroup {
        degree: n,
        dim: representatives.len(),
        representatives,
    })
}

/// 2-cocycles `A (x) A -> A*` spanning the cocycle space: `delta(g)` for each
/// basis 1-cochain `g` (zero ones dropped), then representatives of `HH^2(A, A*)`.
pub fn cocycle_spanning_set<F: Field>(a: &Algebra<F>, limits: &Limits) -> Result<Vec<Cochain<F>>> {
    let f = a.field();
    let d = a.dim();
    let dual = a.dual_bimodule();
    let mut out = Vec::new();
    for k in 0..d * d {
        let mut g = Cochain::zero(f, 1, d, d);
        g.value_mut(&[k / d])[k % d] = f.one();
        let alpha = coboundary(a, &dual, &g, limits)?;
        if !alpha.is_zero(f) {
            out.push(alpha);
        }
    }
    for rep in hochschild_cohomology(a, &dual, 2, limits)?.representatives {
        out.push(Cochain::from_values(2, d, d, rep)?);
    }
    Ok(out)
}

/// Evaluates `a alpha(b (x) c) - alpha(ab (x) c) + alpha(a (x) bc) - alpha(a (x) b) c`
/// on all basis triples; reports the first nonzero one.
pub fn check_cocycle2<F: Field>(a: &Algebra<F>, m: &Bimodule<F>, alpha: &Cochain<F>) -> Result<()> {
    check_module(a, m)?;
    alpha.check_against(a, m.dim(), 2)?;
    let d = a.dim();
    let md = m.dim();
    let f = a.field();
    // tight limits are irrelevant here: the cochain already has this size
    let limits = Limits {
        max_degree: 3,
        max_group_dim: usize::MAX,
    };
    let delta = coboundary_matrix(a, m, 2, &limits)?;
    let image = delta.mul_vec(alpha.values())?;
    if let Some(pos) = image.iter().position(|v| !f.is_zero(v)) {
        let t = tensor::decode(d, 3, pos / md);
        return Err(Error::NotACocycle(t[0], t[1], t[2]));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{boundary_matrix, hochschild_homology};
    use crate::corpus;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn delta0_kernels() {
        let f = Rationals;
        let l = Limits::default();
        let m2 = corpus::matrix_algebra(&f, 2);
        let d0 = coboundary_matrix(&m2, &m2.regular_bimodule(), 0, &l).unwrap();
        assert_eq!(linalg::kernel_basis(&d0).len(), 1);
        let d0 = coboundary_matrix(&m2, &m2.dual_bimodule(), 0, &l).unwrap();
        assert_eq!(linalg::kernel_basis(&d0).len(), 1);
    }

    #[test]
    fn delta_squared_is_zero() {
        let f = Rationals;
        let l = Limits::default();
        for c in corpus::all(&f) {
            for m in [c.algebra.regular_bimodule(), c.algebra.dual_bimodule()] {
                for n in 0..=2 {
                    let p = coboundary_matrix(&c.algebra, &m, n + 1, &l)
                        .unwrap()
                        .mul(&coboundary_matrix(&c.algebra, &m, n, &l).unwrap())
                        .unwrap();
                    assert!(p.is_zero(), "{} n={n}", c.name);
                }
            }
        }
    }

    #[test]
    fn cohomology_examples() {
        let f = Rationals;
        let l = Limits::default();
        let m2 = corpus::matrix_algebra(&f, 2);
        assert_eq!(hochschild_cohomology(&m2, &m2.regular_bimodule(), 0, &l).unwrap().dim, 1);
        let k = corpus::ground_field(&f);
        assert_eq!(hochschild_cohomology(&k, &k.regular_bimodule(), 2, &l).unwrap().dim, 0);
    }

    #[test]
    fn dual_cohomology_matches_homology() {
        let l = Limits::default();
        let f5 = PrimeField::new(5).unwrap();
        for c in corpus::all(&f5) {
            for n in 0..=2 {
                let hh = hochschild_homology(&c.algebra, n, &l).unwrap().dim;
                let hc = hochschild_cohomology(&c.algebra, &c.algebra.dual_bimodule(), n, &l).unwrap().dim;
                assert_eq!(hh, hc, "{} n={n}", c.name);
            }
        }
    }

    #[test]
    fn tilde_examples() {
        let f = Rationals;
        let d = 2;
        let mut alpha = Cochain::zero(&f, 2, d, d);
        assert!(to_tilde(&alpha).unwrap().values().iter().all(|v| f.is_zero(v)));
        // alpha(e_1 (x) e_0) = e_1*  gives the single entry t(1, 1, 0)
        alpha.value_mut(&[1, 0])[1] = f.one();
        let t = to_tilde(&alpha).unwrap();
        let nonzero: Vec<usize> = (0..8).filter(|&i| !f.is_zero(&t.values()[i])).collect();
        assert_eq!(nonzero, vec![tensor::encode(d, &[1, 1, 0])]);
        assert_eq!(from_tilde(&t), alpha);
    }

    #[test]
    fn tilde_intertwines_coboundary_and_boundary() {
        // (delta alpha)~ = alpha~ o b_3 for alpha : A (x) A -> A*
        let f = Rationals;
        let l = Limits::default();
        let a = corpus::upper_triangular(&f);
        let dual = a.dual_bimodule();
        let d = a.dim();
        let values = (0..d * d * d).map(|i| f.from_i64((i as i64 * 7 % 5) - 2)).collect();
        let alpha = Cochain::from_values(2, d, d, values).unwrap();
        let delta = coboundary(&a, &dual, &alpha, &l).unwrap();
        let b3 = boundary_matrix(&a, 3, &l).unwrap();
        let pulled = b3.vec_mul(to_tilde(&alpha).unwrap().values()).unwrap();
        // tilde of a 3-cochain: (delta alpha)~(a0, a1, a2, a3) = delta alpha(a1, a2, a3)(a0)
        let mut tilde3 = vec![f.zero(); d * d * d * d];
        for ix in 0..tilde3.len() {
            let t = tensor::decode(d, 4, ix);
            tilde3[ix] = delta.value(&t[1..])[t[0]].clone();
        }
        assert_eq!(pulled, tilde3);
    }

    #[test]
    fn cocycle_check() {
        let f = Rationals;
        let l = Limits::default();
        let m2 = corpus::matrix_algebra(&f, 2);
        let dual = m2.dual_bimodule();
        let zero = Cochain::zero(&f, 2, 4, 4);
        assert_eq!(check_cocycle2(&m2, &dual, &zero), Ok(()));
        let g = Cochain::from_values(1, 4, 4, (0..16).map(|i| f.from_i64(i - 5)).collect()).unwrap();
        let dg = coboundary(&m2, &dual, &g, &l).unwrap();
        assert_eq!(check_cocycle2(&m2, &dual, &dg), Ok(()));
        let dense = Cochain::from_values(2, 4, 4, (0..64).map(|i| f.from_i64(i % 3)).collect()).unwrap();
        assert!(matches!(check_cocycle2(&m2, &dual, &dense), Err(Error::NotACocycle(..))));
        assert!(check_cocycle2(&m2, &dual, &Cochain::zero(&f, 2, 3, 3)).is_err());
    }
}
