use hochschild::complexes::{hochschild_cohomology, hochschild_homology};
use hochschild::quiver::{
    bound_quiver_algebra, relative_hochschild_cohomology, relative_hochschild_homology, QuiverPresentation,
};
use hochschild::{corpus, Error, Field, Limits, PrimeField};
use proptest::prelude::*;

fn loop_quiver<F: Field>(f: &F, n: usize) -> QuiverPresentation<F> {
    QuiverPresentation::new(
        f,
        vec!["1".into()],
        vec![("x".into(), 0, 0)],
        vec![vec![(vec![0; n], f.one())]],
    )
    .unwrap()
}

#[test]
fn one_loop_quivers_are_truncated_polynomials() {
    let f = PrimeField::new(7).unwrap();
    for n in 2..=4 {
        let qa = bound_quiver_algebra(&loop_quiver(&f, n)).unwrap();
        let t = corpus::truncated_polynomial(&f, n);
        assert_eq!(qa.algebra.dim(), n);
        for i in 0..n {
            for j in 0..n {
                assert_eq!(qa.algebra.basis_product(i, j), t.basis_product(i, j));
            }
        }
    }
}

#[test]
fn relative_equals_absolute_for_small_quivers() {
    let f = PrimeField::new(5).unwrap();
    let l = Limits::default();
    let a2 = QuiverPresentation::new(&f, vec!["1".into(), "2".into()], vec![("a".into(), 0, 1)], vec![]).unwrap();
    let mut inputs = vec![a2];
    inputs.extend((2..=4).map(|n| loop_quiver(&f, n)));
    for q in inputs {
        let qa = bound_quiver_algebra(&q).unwrap();
        let a = &qa.algebra;
        for n in 0..=2 {
            assert_eq!(relative_hochschild_homology(&qa, n, &l).unwrap(), hochschild_homology(a, n, &l).unwrap().dim);
            assert_eq!(
                relative_hochschild_cohomology(&qa, n, &l).unwrap(),
                hochschild_cohomology(a, &a.dual_bimodule(), n, &l).unwrap().dim
            );
        }
    }
}

#[test]
fn non_admissible_ideals_are_rejected() {
    let f = PrimeField::new(5).unwrap();
    // x^2 - x^3 generates the ideal (x^2) only after inverting 1 - x
    let r = QuiverPresentation::new(
        &f,
        vec!["1".into()],
        vec![("x".into(), 0, 0)],
        vec![vec![(vec![0, 0], f.one()), (vec![0, 0, 0], f.from_i64(-1))]],
    );
    assert!(matches!(r, Err(Error::NotAdmissible(_))));
    // a single arrow relation is not inside the square of the arrow ideal
    let r = QuiverPresentation::new(&f, vec!["1".into()], vec![("x".into(), 0, 0)], vec![vec![(vec![0], f.one())]]);
    assert!(matches!(r, Err(Error::NotAdmissible(_))));
    // a free loop is infinite-dimensional
    let r = QuiverPresentation::new(&f, vec!["1".into()], vec![("x".into(), 0, 0)], vec![]);
    assert!(r.is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn commutative_square_has_dimension_nine(lambda in 1i64..5) {
        let f = PrimeField::new(5).unwrap();
        let q = QuiverPresentation::new(
            &f,
            (1..=4).map(|v| v.to_string()).collect(),
            vec![("a".into(), 0, 1), ("b".into(), 1, 3), ("c".into(), 0, 2), ("d".into(), 2, 3)],
            vec![vec![(vec![0, 1], f.one()), (vec![2, 3], f.from_i64(-lambda))]],
        )
        .unwrap();
        let qa = bound_quiver_algebra(&q).unwrap();
        prop_assert_eq!(qa.algebra.dim(), 9);
        prop_assert!(qa.algebra.validate().is_ok());
        let l = Limits::default();
        prop_assert_eq!(
            relative_hochschild_homology(&qa, 1, &l).unwrap(),
            hochschild_homology(&qa.algebra, 1, &l).unwrap().dim
        );
    }
}
