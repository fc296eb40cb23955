use hochschild::linalg::{kernel_basis, rank, solve_affine, AffineSolution, Echelon};
use hochschild::{Field, Matrix, PrimeField, Rationals};
use proptest::prelude::*;

fn matrix<F: Field>(f: &F, rows: usize, cols: usize, entries: &[i64]) -> Matrix<F> {
    let dense: Vec<Vec<F::Elem>> = (0..rows)
        .map(|r| (0..cols).map(|c| f.from_i64(entries[(r * cols + c) % entries.len()])).collect())
        .collect();
    Matrix::from_dense_rows(f, cols, &dense)
}

fn check<F: Field>(f: &F, m: &Matrix<F>, target: &[F::Elem]) -> Result<(), TestCaseError> {
    let kernel = kernel_basis(m);
    prop_assert_eq!(rank(m) + kernel.len(), m.cols());
    for v in &kernel {
        prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| f.is_zero(x)));
    }
    match solve_affine(m, target).unwrap() {
        AffineSolution::Feasible { particular, kernel } => {
            prop_assert_eq!(m.mul_vec(&particular).unwrap(), target.to_vec());
            prop_assert_eq!(kernel.len(), m.cols() - rank(m));
        }
        AffineSolution::Infeasible { certificate, residual } => {
            prop_assert!(m.vec_mul(&certificate).unwrap().iter().all(|x| f.is_zero(x)));
            let dot = certificate.iter().zip(target).fold(f.zero(), |acc, (c, t)| f.add(&acc, &f.mul(c, t)));
            prop_assert_eq!(dot, residual.clone());
            prop_assert!(!f.is_zero(&residual));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity_and_solutions_over_q(rows in 1usize..6, cols in 1usize..6, entries in proptest::collection::vec(-3i64..=3, 36), t in proptest::collection::vec(-3i64..=3, 6)) {
        let f = Rationals;
        let m = matrix(&f, rows, cols, &entries);
        let target: Vec<_> = (0..rows).map(|r| f.from_i64(t[r])).collect();
        check(&f, &m, &target)?;
    }

    #[test]
    fn rank_nullity_and_solutions_over_f7(rows in 1usize..6, cols in 1usize..6, entries in proptest::collection::vec(0i64..7, 36), t in proptest::collection::vec(0i64..7, 6)) {
        let f = PrimeField::new(7).unwrap();
        let m = matrix(&f, rows, cols, &entries);
        let target: Vec<_> = (0..rows).map(|r| f.from_i64(t[r])).collect();
        check(&f, &m, &target)?;
    }

    #[test]
    fn echelon_membership(entries in proptest::collection::vec(-2i64..=2, 20), probe in proptest::collection::vec(-2i64..=2, 5)) {
        let f = Rationals;
        let vectors: Vec<Vec<_>> = entries.chunks(5).map(|c| c.iter().map(|&x| f.from_i64(x)).collect()).collect();
        let e = Echelon::from_vectors(&f, 5, &vectors);
        for v in &vectors {
            prop_assert!(e.contains(&f, v));
        }
        let combo: Vec<_> = (0..5)
            .map(|i| vectors.iter().zip(&probe).fold(f.zero(), |acc, (v, &c)| f.add(&acc, &f.mul(&v[i], &f.from_i64(c)))))
            .collect();
        prop_assert!(e.contains(&f, &combo));
        prop_assert_eq!(e.rank(), rank(&Matrix::from_dense_rows(&f, 5, &vectors)));
    }
}
