use crate::algebra::{is_symmetric_algebra, FrobeniusOutcome};
use crate::complexes::TildeForm;
use crate::cyclic::{CyclicClass2, LiftOperators};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, AffineSolution, Echelon, Matrix};
use crate::pencil::{GridCertificate, LinearPencil, PencilOutcome};
use crate::tensor;

use super::iso::{witness_from_form, witness_from_lift};
use super::{ExtensionProblem, Method, SymmetryCertificate, Witness};

/// Condition (1): search for a symmetrizing form on `T(A, alpha)`.
pub fn oracle_condition1<F: Field>(p: &ExtensionProblem<F>) -> Result<SymmetryCertificate<F>> {
    let t = p.extension()?;
    match is_symmetric_algebra(&t)? {
        FrobeniusOutcome::Symmetric(form) => {
            let witness = witness_from_form(p, &form.lambda)?;
            let mut cert = SymmetryCertificate::positive(Method::Cond1, witness);
            cert.form = Some(form.lambda);
            Ok(cert)
        }
        FrobeniusOutcome::NotSymmetric {
            trace_forms,
            certificate,
        } => Ok(SymmetryCertificate::negative(Method::Cond1, trace_forms, Some(certificate))),
    }
}

/// A central unit found in a subspace, or evidence that there is none.
pub(crate) enum UnitSearch<F: Field> {
    Found(Vec<F::Elem>),
    None {
        basis: Vec<Vec<F::Elem>>,
        grid: GridCertificate,
    },
}

/// Reduced echelon basis of the span of the `c`-components (first `n`
/// coordinates) of `vectors`.
pub(crate) fn project_to_c<F: Field>(f: &F, n: usize, vectors: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let heads: Vec<Vec<F::Elem>> = vectors.iter().map(|v| v[..n].to_vec()).collect();
    let mut e = Echelon::from_vectors(f, n, &heads);
    e.make_reduced(f);
    e.basis(f)
}

/// Pencil of left-multiplication matrices of a basis of central elements.
pub(crate) fn unit_pencil<F: Field>(p: &ExtensionProblem<F>, basis: &[Vec<F::Elem>]) -> LinearPencil<F> {
    let a = p.algebra();
    let members = basis.iter().map(|c| a.left_multiplication(c).to_dense()).collect();
    LinearPencil::new(p.field(), a.dim(), members)
}

/// Decides whether `span(basis)` contains a unit; returns the first one on the grid.
pub(crate) fn find_unit<F: Field>(p: &ExtensionProblem<F>, basis: Vec<Vec<F::Elem>>) -> Result<UnitSearch<F>> {
    let f = p.field();
    match unit_pencil(p, &basis).decide()? {
        PencilOutcome::Nonsingular { point, .. } => {
            let mut c = vec![f.zero(); p.dim()];
            for (t, v) in point.iter().zip(&basis) {
                for (acc, x) in c.iter_mut().zip(v) {
                    f.mul_add_assign(acc, t, x);
                }
            }
            Ok(UnitSearch::Found(c))
        }
        PencilOutcome::Singular(grid) => Ok(UnitSearch::None { basis, grid }),
    }
}

fn checked<F: Field>(p: &ExtensionProblem<F>, method: Method, witness: Witness<F>) -> Result<SymmetryCertificate<F>> {
    p.verify_witness(&witness).map_err(Error::InvalidWitness)?;
    Ok(SymmetryCertificate::positive(method, witness))
}

fn negate<F: Field>(f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
    v.iter().map(|x| f.neg(x)).collect()
}

/// Condition (2): unknowns `(c, h)`, the displayed equation on basis pairs and
/// centrality of `c`.
pub fn witness_condition2<F: Field>(p: &ExtensionProblem<F>) -> Result<SymmetryCertificate<F>> {
    let f = p.field();
    let n = p.dim();
    let omega = p.omega_matrix();
    let comm = p.commutator_matrix();
    let z = p.algebra().commutator_system();
    let system = Matrix::from_blocks(
        f,
        &[omega.rows(), z.rows()],
        &[n, n],
        &[vec![Some(&omega), Some(&comm)], vec![Some(&z), None]],
    )?;
    let basis = project_to_c(f, n, &linalg::kernel_basis(&system));
    match find_unit(p, basis)? {
        UnitSearch::Found(c) => {
            let target = negate(f, &omega.mul_vec(&c)?);
            let h = match linalg::solve_affine(&comm, &target)? {
                AffineSolution::Feasible { particular, .. } => particular,
                AffineSolution::Infeasible { .. } => {
                    return Err(Error::Disagreement(
                        "condition 2: projected c admits no h".into(),
                    ))
                }
            };
            checked(p, Method::Cond2, Witness { c, h })
        }
        UnitSearch::None { basis, grid } => Ok(SymmetryCertificate::negative(Method::Cond2, basis, Some(grid))),
    }
}

/// Condition (2) with `h = 0`.
pub fn check_itagaki<F: Field>(p: &ExtensionProblem<F>) -> Result<SymmetryCertificate<F>> {
    let f = p.field();
    let n = p.dim();
    let system = p.omega_matrix().vstack(&p.algebra().commutator_system())?;
    let basis = project_to_c(f, n, &linalg::kernel_basis(&system));
    match find_unit(p, basis)? {
        UnitSearch::Found(c) => checked(p, Method::Itagaki, Witness { c, h: vec![f.zero(); n] }),
        UnitSearch::None { basis, grid } => Ok(SymmetryCertificate::negative(Method::Itagaki, basis, Some(grid))),
    }
}

/// Condition (2) with `h = 0` and `c = 1`: `alpha(a (x) b)(1) = alpha(b (x) a)(1)`.
pub fn check_oty<F: Field>(p: &ExtensionProblem<F>) -> Result<SymmetryCertificate<F>> {
    let f = p.field();
    let n = p.dim();
    let values = p.omega_matrix().mul_vec(p.algebra().unit())?;
    match values.iter().position(|v| !f.is_zero(v)) {
        None => checked(
            p,
            Method::Oty,
            Witness {
                c: p.algebra().unit().to_vec(),
                h: vec![f.zero(); n],
            },
        ),
        Some(k) => {
            let mut cert = SymmetryCertificate::negative(Method::Oty, Vec::new(), None);
            cert.failing_pair = Some(p.pairs()[k]);
            Ok(cert)
        }
    }
}

/// `K[(y0, y1, y2)][x] = alpha~(e_{y0} e_x (x) e_{y1} (x) e_{y2})`, so that
/// `K c = i_c^*(alpha~)`.
pub(crate) fn contraction_pullback<F: Field>(p: &ExtensionProblem<F>) -> Matrix<F> {
    let f = p.field();
    let n = p.dim();
    let a = p.algebra();
    let alpha = p.alpha();
    let mut triplets = Vec::new();
    for row in 0..tensor::power(n, 3) {
        let y = tensor::decode(n, 3, row);
        let value = alpha.value(&[y[1], y[2]]);
        for x in 0..n {
            let mut acc = f.zero();
            for (q, c) in a.basis_product(y[0], x) {
                f.mul_add_assign(&mut acc, c, &value[*q]);
            }
            triplets.push((row, x, acc));
        }
    }
    Matrix::from_triplets(f, tensor::power(n, 3), n, triplets)
}

/// Condition (3): unknowns `(c, eta, gamma)` with
/// `B_1^*(i_c^*(alpha~) - b_2^*(eta)) + b_1^*(gamma) = 0` and `c` central.
pub fn witness_condition3<F: Field>(p: &ExtensionProblem<F>) -> Result<SymmetryCertificate<F>> {
    let f = p.field();
    let n = p.dim();
    let ops = LiftOperators::new(p.algebra(), p.limits())?;
    let k = contraction_pullback(p);
    let c_block = ops.connes1t.mul(&k)?;
    let eta_block = ops.connes1t.mul(&ops.b2t)?.scale(&f.from_i64(-1));
    let z = p.algebra().commutator_system();
    let system = Matrix::from_blocks(
        f,
        &[n * n, z.rows()],
        &[n, n * n, n],
        &[vec![Some(&c_block), Some(&eta_block), Some(&ops.b1t)], vec![Some(&z), None, None]],
    )?;
    let basis = project_to_c(f, n, &linalg::kernel_basis(&system));
    match find_unit(p, basis)? {
        UnitSearch::Found(c) => {
            let rest = eta_block.hstack(&ops.b1t)?;
            let target = negate(f, &c_block.mul_vec(&c)?);
            let (eta, gamma) = match linalg::solve_affine(&rest, &target)? {
                AffineSolution::Feasible { particular, .. } => {
                    let (e, g) = particular.split_at(n * n);
                    (e.to_vec(), g.to_vec())
                }
                AffineSolution::Infeasible { .. } => {
                    return Err(Error::Disagreement(
                        "condition 3: projected c admits no (eta, gamma)".into(),
                    ))
                }
            };
            let pulled = k.mul_vec(&c)?;
            let correction = ops.b2t.mul_vec(&eta)?;
            let beta = pulled.iter().zip(&correction).map(|(x, y)| f.sub(x, y)).collect();
            let class = CyclicClass2 {
                beta: TildeForm::from_values(n, beta)?,
                gamma: gamma.clone(),
            };
            if !class.verify_with(f, &ops) {
                return Err(Error::Disagreement("condition 3: lift fails its own equations".into()));
            }
            let witness = witness_from_lift(p, &c, &eta, &gamma)?;
            let mut cert = checked(p, Method::Cond3, witness)?;
            cert.lift = Some((class, eta));
            Ok(cert)
        }
        UnitSearch::None { basis, grid } => Ok(SymmetryCertificate::negative(Method::Cond3, basis, Some(grid))),
    }
}
