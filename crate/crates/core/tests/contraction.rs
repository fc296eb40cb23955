use hochschild::complexes::{boundary_matrix, contraction_identity, contraction_matrix};
use hochschild::{corpus, Cochain, Field, Limits, Rationals};
use proptest::prelude::*;

#[test]
fn central_contraction_commutes_with_b() {
    let f = Rationals;
    let l = Limits::default();
    for c in corpus::all(&f) {
        let a = &c.algebra;
        for z in a.center_basis() {
            let cz = Cochain::from_values(0, a.dim(), a.dim(), z).unwrap();
            for n in 1..=4 {
                let lhs = boundary_matrix(a, n, &l).unwrap().mul(&contraction_matrix(a, &cz, n, &l).unwrap()).unwrap();
                let rhs = contraction_matrix(a, &cz, n - 1, &l).unwrap().mul(&boundary_matrix(a, n, &l).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{} n = {n}", c.name);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn graded_contraction_identity(m in 0usize..=2, values in proptest::collection::vec(-3i64..=3, 64), which in 0usize..4) {
        let f = Rationals;
        let l = Limits::default();
        let a = corpus::standard(&f).swap_remove([1, 2, 4, 5][which]).algebra;
        let d = a.dim();
        let len = d.pow(m as u32) * d;
        let alpha = Cochain::from_values(m, d, d, (0..len).map(|k| f.from_i64(values[k % values.len()])).collect()).unwrap();
        let check = contraction_identity(&a, &alpha, m + 1, &l).unwrap();
        prop_assert!(check.graded);
    }
}
