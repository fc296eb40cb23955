//! Small algebras used by tests, examples and the acceptance suite.

use crate::algebra::Algebra;
use crate::field::Field;

#[derive(Clone, Debug)]
pub struct CorpusAlgebra<F: Field> {
    pub name: &'static str,
    pub algebra: Algebra<F>,
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// `k`, basis `{1}`.
pub fn ground_field<F: Field>(f: &F) -> Algebra<F> {
    Algebra::new(f, labels(&["1"]), vec![(0, 0, vec![(0, f.one())])], vec![f.one()]).unwrap()
}

/// `k[x]/(x^n)`, basis `1, x, x^2, ..`.
pub fn truncated_polynomial<F: Field>(f: &F, n: usize) -> Algebra<F> {
    assert!(n >= 1);
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                products.push((i, j, vec![(i + j, f.one())]));
            }
        }
    }
    let mut unit = vec![f.zero(); n];
    unit[0] = f.one();
    Algebra::new(f, names, products, unit).unwrap()
}

/// `k[x]/(x^2)`.
pub fn dual_numbers<F: Field>(f: &F) -> Algebra<F> {
    truncated_polynomial(f, 2)
}

/// Path algebra of `1 -> 2`, basis `e1, e2, a`; paths compose left to right,
/// so `e1 a = a = a e2`.
pub fn path_algebra_a2<F: Field>(f: &F) -> Algebra<F> {
    let one = f.one();
    Algebra::new(
        f,
        labels(&["e1", "e2", "a"]),
        vec![
            (0, 0, vec![(0, one.clone())]),
            (1, 1, vec![(1, one.clone())]),
            (0, 2, vec![(2, one.clone())]),
            (2, 1, vec![(2, one.clone())]),
        ],
        vec![one.clone(), one, f.zero()],
    )
    .unwrap()
}

/// Upper-triangular `2 x 2` matrices, basis `E11, E12, E22`.
pub fn upper_triangular<F: Field>(f: &F) -> Algebra<F> {
    let one = f.one();
    Algebra::new(
        f,
        labels(&["E11", "E12", "E22"]),
        vec![
            (0, 0, vec![(0, one.clone())]),
            (0, 1, vec![(1, one.clone())]),
            (1, 2, vec![(1, one.clone())]),
            (2, 2, vec![(2, one.clone())]),
        ],
        vec![one.clone(), f.zero(), one],
    )
    .unwrap()
}

/// Full matrix algebra `M_n`, basis `E_ij` in row-major order.
pub fn matrix_algebra<F: Field>(f: &F, n: usize) -> Algebra<F> {
    let names = (0..n * n).map(|ix| format!("E{}{}", ix / n + 1, ix % n + 1)).collect();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                // E_ij E_jl = E_il
                products.push((i * n + j, j * n + l, vec![(i * n + l, f.one())]));
            }
        }
    }
    let unit = (0..n * n).map(|ix| if ix / n == ix % n { f.one() } else { f.zero() }).collect();
    Algebra::new(f, names, products, unit).unwrap()
}

/// `k[x, y]/(x, y)^2`, basis `1, x, y`.
pub fn square_zero_plane<F: Field>(f: &F) -> Algebra<F> {
    let one = f.one();
    Algebra::new(
        f,
        labels(&["1", "x", "y"]),
        vec![
            (0, 0, vec![(0, one.clone())]),
            (0, 1, vec![(1, one.clone())]),
            (1, 0, vec![(1, one.clone())]),
            (0, 2, vec![(2, one.clone())]),
            (2, 0, vec![(2, one.clone())]),
        ],
        vec![one, f.zero(), f.zero()],
    )
    .unwrap()
}

/// The six algebras of the equivalence suite.
pub fn standard<F: Field>(f: &F) -> Vec<CorpusAlgebra<F>> {
    vec![
        CorpusAlgebra {
            name: "k",
            algebra: ground_field(f),
        },
        CorpusAlgebra {
            name: "k[x]/(x^2)",
            algebra: dual_numbers(f),
        },
        CorpusAlgebra {
            name: "k[x]/(x^3)",
            algebra: truncated_polynomial(f, 3),
        },
        CorpusAlgebra {
            name: "kA2",
            algebra: path_algebra_a2(f),
        },
        CorpusAlgebra {
            name: "upper triangular 2x2",
            algebra: upper_triangular(f),
        },
        CorpusAlgebra {
            name: "M_2",
            algebra: matrix_algebra(f, 2),
        },
    ]
}

/// [`standard`] together with `k[x, y]/(x, y)^2`.
pub fn all<F: Field>(f: &F) -> Vec<CorpusAlgebra<F>> {
    let mut out = standard(f);
    out.push(CorpusAlgebra {
        name: "k[x,y]/(x,y)^2",
        algebra: square_zero_plane(f),
    });
    out
}
