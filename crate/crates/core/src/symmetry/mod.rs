//! Deciding whether a Hochschild extension `T(A, alpha) = T(A, A*, alpha)` is a
//! symmetric algebra.
//!
//! Three complete criteria are implemented independently:
//!
//! * `cond1` builds `T(A, alpha)` and searches for a symmetrizing form;
//! * `cond2` searches for a central unit `c` and a form `h` with
//!   `alpha(a (x) b)(c) - alpha(b (x) a)(c) + h(ab - ba) = 0`;
//! * `cond3` searches for a central unit `c` such that `i_c^*(alpha~)` lifts to
//!   a cyclic 2-cocycle.
//!
//! `itagaki` (`cond2` with `h = 0`) and `oty` (`h = 0`, `c = 1`) are sufficient
//! only: a negative outcome is inconclusive.

mod criteria;
mod iso;
mod registry;

pub use criteria::{check_itagaki, check_oty, oracle_condition1, witness_condition2, witness_condition3};
pub use iso::{build_bimodule_iso, lift_from_witness, witness_from_form, witness_from_lift, BimoduleIso};
pub use registry::{decide, Criterion, CriterionRegistry, Decision};

use std::fmt;

use crate::algebra::{hochschild_extension, Algebra, Bimodule};
use crate::complexes::{check_cocycle2, Cochain, Limits};
use crate::cyclic::CyclicClass2;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::pencil::GridCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Symmetric,
    NotSymmetric,
    /// A sufficient-only criterion did not apply.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Symmetric => "symmetric",
            Self::NotSymmetric => "not-symmetric",
            Self::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Cond1,
    Cond2,
    Cond3,
    Itagaki,
    Oty,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Cond1, Method::Cond2, Method::Cond3, Method::Itagaki, Method::Oty];

    pub fn name(self) -> &'static str {
        match self {
            Self::Cond1 => "cond1",
            Self::Cond2 => "cond2",
            Self::Cond3 => "cond3",
            Self::Itagaki => "itagaki",
            Self::Oty => "oty",
        }
    }

    /// Complete criteria decide symmetry; the others are sufficient only.
    pub fn is_complete(self) -> bool {
        matches!(self, Self::Cond1 | Self::Cond2 | Self::Cond3)
    }

    /// Accepts `1`, `2`, `3`, `cond1`.., `itagaki`, `oty`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1" | "cond1" => Ok(Self::Cond1),
            "2" | "cond2" => Ok(Self::Cond2),
            "3" | "cond3" => Ok(Self::Cond3),
            "itagaki" => Ok(Self::Itagaki),
            "oty" => Ok(Self::Oty),
            _ => Err(Error::UnknownCriterion(s.to_string())),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A pair `(c, h)` in `A + A*`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<F: Field> {
    pub c: Vec<F::Elem>,
    pub h: Vec<F::Elem>,
}

/// First failed requirement of a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessViolation {
    Length { expected: usize, found: usize },
    NotCentral { basis: usize },
    NotInvertible,
    Equation { a: usize, b: usize },
}

impl fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Length { expected, found } => write!(f, "witness has length {found}, expected {expected}"),
            Self::NotCentral { basis } => write!(f, "c does not commute with basis element {basis}"),
            Self::NotInvertible => write!(f, "c is not a unit"),
            Self::Equation { a, b } => {
                write!(f, "alpha(a, b)(c) - alpha(b, a)(c) + h(ab - ba) != 0 on basis pair ({a}, {b})")
            }
        }
    }
}

/// Outcome of one criterion.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryCertificate<F: Field> {
    pub method: Method,
    pub verdict: Verdict,
    pub witness: Option<Witness<F>>,
    /// Symmetrizing form on `T(A, alpha)` (cond1 only).
    pub form: Option<Vec<F::Elem>>,
    /// Cyclic lift `(beta, gamma)` of `i_c^*(alpha~)` and the correction `eta` (cond3 only).
    pub lift: Option<(CyclicClass2<F>, Vec<F::Elem>)>,
    /// Negative outcomes: basis of the searched space (central elements `c`,
    /// or trace forms on `T` for cond1).
    pub solution_space: Vec<Vec<F::Elem>>,
    /// Negative outcomes: the determinant evidence.
    pub grid: Option<GridCertificate>,
    /// Negative oty outcome: a basis pair with `alpha(a, b)(1) != alpha(b, a)(1)`.
    pub failing_pair: Option<(usize, usize)>,
}

impl<F: Field> SymmetryCertificate<F> {
    pub(crate) fn positive(method: Method, witness: Witness<F>) -> Self {
        Self {
            method,
            verdict: Verdict::Symmetric,
            witness: Some(witness),
            form: None,
            lift: None,
            solution_space: Vec::new(),
            grid: None,
            failing_pair: None,
        }
    }

    pub(crate) fn negative(method: Method, solution_space: Vec<Vec<F::Elem>>, grid: Option<GridCertificate>) -> Self {
        Self {
            method,
            verdict: if method.is_complete() {
                Verdict::NotSymmetric
            } else {
                Verdict::Inconclusive
            },
            witness: None,
            form: None,
            lift: None,
            solution_space,
            grid,
            failing_pair: None,
        }
    }
}

/// An algebra `A` with a Hochschild 2-cocycle `alpha : A (x) A -> A*`.
#[derive(Clone, Debug)]
pub struct ExtensionProblem<F: Field> {
    algebra: Algebra<F>,
    dual: Bimodule<F>,
    alpha: Cochain<F>,
    limits: Limits,
}

impl<F: Field> ExtensionProblem<F> {
    pub fn new(algebra: Algebra<F>, alpha: Cochain<F>) -> Result<Self> {
        Self::with_limits(algebra, alpha, Limits::default())
    }

    /// Validates the algebra and the cocycle condition.
    pub fn with_limits(algebra: Algebra<F>, alpha: Cochain<F>, limits: Limits) -> Result<Self> {
        algebra.validate().map_err(Error::InvalidAlgebra)?;
        let dual = algebra.dual_bimodule();
        check_cocycle2(&algebra, &dual, &alpha)?;
        Ok(Self {
            algebra,
            dual,
            alpha,
            limits,
        })
    }

    /// `T(A)`, the zero cocycle.
    pub fn trivial(algebra: Algebra<F>) -> Result<Self> {
        let n = algebra.dim();
        let alpha = Cochain::zero(algebra.field(), 2, n, n);
        Self::new(algebra, alpha)
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn dual(&self) -> &Bimodule<F> {
        &self.dual
    }

    pub fn alpha(&self) -> &Cochain<F> {
        &self.alpha
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `T(A, alpha)`.
    pub fn extension(&self) -> Result<Algebra<F>> {
        hochschild_extension(&self.algebra, &self.dual, &self.alpha)
    }

    /// Same algebra with cocycle `alpha + other`.
    pub fn shifted(&self, other: &Cochain<F>) -> Result<Self> {
        Self::with_limits(self.algebra.clone(), self.alpha.add(self.field(), other)?, self.limits)
    }

    /// Basis pairs `(a, b)` with `a < b`, the rows of the condition-(2) system.
    pub(crate) fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }

    /// `Omega[(a, b)][x] = alpha(e_a (x) e_b)(e_x) - alpha(e_b (x) e_a)(e_x)`.
    pub(crate) fn omega_matrix(&self) -> Matrix<F> {
        let f = self.field();
        let n = self.dim();
        let rows: Vec<Vec<F::Elem>> = self
            .pairs()
            .iter()
            .map(|&(a, b)| {
                let ab = self.alpha.value(&[a, b]);
                let ba = self.alpha.value(&[b, a]);
                ab.iter().zip(ba).map(|(x, y)| f.sub(x, y)).collect()
            })
            .collect();
        Matrix::from_dense_rows(f, n, &rows)
    }

    /// `H[(a, b)][y]`: coordinate `y` of `e_a e_b - e_b e_a`.
    pub(crate) fn commutator_matrix(&self) -> Matrix<F> {
        let f = self.field();
        let n = self.dim();
        let a = &self.algebra;
        let rows: Vec<Vec<F::Elem>> = self
            .pairs()
            .iter()
            .map(|&(i, j)| (0..n).map(|y| f.sub(&a.structure_constant(i, j, y), &a.structure_constant(j, i, y))).collect())
            .collect();
        Matrix::from_dense_rows(f, n, &rows)
    }

    /// `alpha(1 (x) 1)` in `A*`.
    pub(crate) fn alpha_unit(&self) -> Vec<F::Elem> {
        let f = self.field();
        let u = self.algebra.unit();
        let mut acc = vec![f.zero(); self.dim()];
        for (i, si) in u.iter().enumerate() {
            for (j, sj) in u.iter().enumerate() {
                if f.is_zero(si) || f.is_zero(sj) {
                    continue;
                }
                let s = f.mul(si, sj);
                for (o, v) in acc.iter_mut().zip(self.alpha.value(&[i, j])) {
                    f.mul_add_assign(o, &s, v);
                }
            }
        }
        acc
    }

    /// `x -> g(c x)` for `g` in `A*`, i.e. the form `g . c`.
    pub(crate) fn form_times(&self, g: &[F::Elem], c: &[F::Elem]) -> Vec<F::Elem> {
        self.dual.act_right(g, c)
    }

    /// Checks that `(c, h)` satisfies condition 2 and `c` is a central unit.
    pub fn verify_witness(&self, w: &Witness<F>) -> std::result::Result<(), WitnessViolation> {
        let n = self.dim();
        let f = self.field();
        for len in [w.c.len(), w.h.len()] {
            if len != n {
                return Err(WitnessViolation::Length { expected: n, found: len });
            }
        }
        for i in 0..n {
            let ei = self.algebra.basis_vector(i);
            if self.algebra.mul(&w.c, &ei) != self.algebra.mul(&ei, &w.c) {
                return Err(WitnessViolation::NotCentral { basis: i });
            }
        }
        if self.algebra.try_invert(&w.c).is_none() {
            return Err(WitnessViolation::NotInvertible);
        }
        let omega = self.omega_matrix().mul_vec(&w.c).expect("length checked");
        let comm = self.commutator_matrix().mul_vec(&w.h).expect("length checked");
        for (k, &(a, b)) in self.pairs().iter().enumerate() {
            if !f.is_zero(&f.add(&omega[k], &comm[k])) {
                return Err(WitnessViolation::Equation { a, b });
            }
        }
        Ok(())
    }
}
