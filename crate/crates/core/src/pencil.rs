//! Deciding whether a linear family of square matrices contains a nonsingular
//! member.
//!
//! For `M(t) = sum_i t_i M_i` (all `M_i` of size `d x d`) the determinant is a
//! homogeneous polynomial of total degree `d` in the parameters. A polynomial of
//! total degree at most `d` that vanishes on the lattice simplex
//! `{ (s_{k_1}, ..., s_{k_m}) : k_1 + ... + k_m <= d }` built from `d + 1`
//! distinct nodes `s_0, ..., s_d` is identically zero, so evaluating on that
//! set decides the question without randomness. The points are visited in
//! lexicographic order and the first nonsingular one is returned.
//!
//! Prime fields with at most `d` elements do not have enough nodes; the grid
//! is then evaluated in an extension field. When the polynomial is nonzero
//! there, the prime-field points are searched exhaustively, since a nonzero
//! polynomial may still vanish at every point of a small field.

use crate::error::{Error, Result};
use crate::field::{ExtensionField, Field, PrimeField};
use crate::linalg::determinant;

/// Upper bound on the number of points visited by the exhaustive prime-field search.
pub const EXHAUSTIVE_SEARCH_CAP: u128 = 1 << 22;

#[derive(Clone, Debug, PartialEq)]
pub struct LinearPencil<F: Field> {
    field: F,
    size: usize,
    members: Vec<Vec<Vec<F::Elem>>>,
}

/// Summary of a vanishing-determinant certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCertificate {
    /// Number of pencil parameters.
    pub params: usize,
    /// Total degree bound (the matrix size).
    pub degree: usize,
    /// Points evaluated, all with determinant zero.
    pub points: usize,
    /// Degree of the field extension used for the nodes (1 = base field).
    pub extension_degree: usize,
    /// Prime-field points searched after the extension grid found a nonzero
    /// value (0 when the grid alone shows the polynomial is zero).
    pub prime_points: u128,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PencilOutcome<F: Field> {
    /// Coordinates `t` with `det M(t) != 0`.
    Nonsingular { point: Vec<F::Elem>, det: F::Elem },
    /// No member with coordinates in the field is nonsingular.
    Singular(GridCertificate),
}

impl<F: Field> PencilOutcome<F> {
    pub fn is_nonsingular(&self) -> bool {
        matches!(self, Self::Nonsingular { .. })
    }
}

impl<F: Field> LinearPencil<F> {
    pub fn new(field: &F, size: usize, members: Vec<Vec<Vec<F::Elem>>>) -> Self {
        for m in &members {
            assert_eq!(m.len(), size);
            assert!(m.iter().all(|r| r.len() == size));
        }
        Self {
            field: field.clone(),
            size,
            members,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn params(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Vec<Vec<F::Elem>>] {
        &self.members
    }

    /// `sum_i t_i M_i`
    pub fn evaluate(&self, t: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        evaluate_in(&self.field, self.size, &self.members, t)
    }

    pub fn det_at(&self, t: &[F::Elem]) -> F::Elem {
        determinant(&self.field, &self.evaluate(t))
    }

    pub fn decide(&self) -> Result<PencilOutcome<F>> {
        let f = &self.field;
        let d = self.size;
        match f.order() {
            Some(q) if q <= d as u64 => self.decide_small_prime(q),
            _ => {
                let nodes: Vec<F::Elem> = (0..=d as i64).map(|v| f.from_i64(v)).collect();
                let mut points = 0usize;
                for idx in SimplexLattice::new(self.params(), d) {
                    points += 1;
                    let t: Vec<F::Elem> = idx.iter().map(|&k| nodes[k].clone()).collect();
                    let det = self.det_at(&t);
                    if !f.is_zero(&det) {
                        return Ok(PencilOutcome::Nonsingular { point: t, det });
                    }
                }
                Ok(PencilOutcome::Singular(GridCertificate {
                    params: self.params(),
                    degree: d,
                    points,
                    extension_degree: 1,
                    prime_points: 0,
                }))
            }
        }
    }

    fn decide_small_prime(&self, p: u64) -> Result<PencilOutcome<F>> {
        let f = &self.field;
        let d = self.size;
        let base = PrimeField::new(p).expect("field order is prime");
        let ext = ExtensionField::with_more_than(base, d as u64);
        let lifted: Vec<Vec<Vec<Vec<u64>>>> = self
            .members
            .iter()
            .map(|m| {
                m.iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| ext.embed(f.residue(x).expect("prime field residue")))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let nodes: Vec<Vec<u64>> = (0..=d as u64).map(|j| ext.element(j)).collect();
        let mut points = 0usize;
        let mut vanishes = true;
        for idx in SimplexLattice::new(self.params(), d) {
            points += 1;
            let t: Vec<Vec<u64>> = idx.iter().map(|&k| nodes[k].clone()).collect();
            let det = determinant(&ext, &evaluate_in(&ext, d, &lifted, &t));
            if !ext.is_zero(&det) {
                vanishes = false;
                break;
            }
        }
        if vanishes {
            return Ok(PencilOutcome::Singular(GridCertificate {
                params: self.params(),
                degree: d,
                points,
                extension_degree: ext.degree(),
                prime_points: 0,
            }));
        }
        // the polynomial is nonzero; look for a point with prime-field coordinates
        let m = self.params();
        let size = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if size > EXHAUSTIVE_SEARCH_CAP {
            return Err(Error::SearchCap {
                size,
                cap: EXHAUSTIVE_SEARCH_CAP,
            });
        }
        let mut digits = vec![0u64; m];
        loop {
            let t: Vec<F::Elem> = digits.iter().map(|&v| f.from_i64(v as i64)).collect();
            let det = self.det_at(&t);
            if !f.is_zero(&det) {
                return Ok(PencilOutcome::Nonsingular { point: t, det });
            }
            let mut i = m;
            loop {
                if i == 0 {
                    return Ok(PencilOutcome::Singular(GridCertificate {
                        params: m,
                        degree: d,
                        points,
                        extension_degree: ext.degree(),
                        prime_points: size,
                    }));
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// Re-evaluates a vanishing certificate: every grid point must still give
    /// determinant zero.
    pub fn recheck(&self, cert: &GridCertificate) -> bool {
        if cert.params != self.params() || cert.degree != self.size {
            return false;
        }
        match self.decide() {
            Ok(PencilOutcome::Singular(again)) => again == *cert,
            _ => false,
        }
    }
}

fn evaluate_in<E: Field>(f: &E, size: usize, members: &[Vec<Vec<E::Elem>>], t: &[E::Elem]) -> Vec<Vec<E::Elem>> {
    let mut out = vec![vec![f.zero(); size]; size];
    for (m, ti) in members.iter().zip(t) {
        if f.is_zero(ti) {
            continue;
        }
        for (orow, mrow) in out.iter_mut().zip(m) {
            for (o, x) in orow.iter_mut().zip(mrow) {
                if !f.is_zero(x) {
                    f.mul_add_assign(o, ti, x);
                }
            }
        }
    }
    out
}

/// Lexicographic enumeration of `{k in N^m : k_1 + ... + k_m <= d}`.
#[derive(Clone, Debug)]
pub struct SimplexLattice {
    current: Option<Vec<usize>>,
    bound: usize,
}

impl SimplexLattice {
    pub fn new(m: usize, bound: usize) -> Self {
        Self {
            current: Some(vec![0; m]),
            bound,
        }
    }
}

impl Iterator for SimplexLattice {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let mut prefix: Vec<usize> = Vec::with_capacity(next.len() + 1);
        prefix.push(0);
        for v in &next {
            prefix.push(prefix.last().unwrap() + v);
        }
        let mut i = next.len();
        while i > 0 {
            i -= 1;
            if prefix[i] + next[i] < self.bound {
                next[i] += 1;
                for v in &mut next[i + 1..] {
                    *v = 0;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn lattice_is_lexicographic_and_complete() {
        let pts: Vec<Vec<usize>> = SimplexLattice::new(3, 4).collect();
        assert_eq!(pts.len(), binom(7, 3));
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert!(pts.iter().all(|p| p.iter().sum::<usize>() <= 4));
        assert_eq!(SimplexLattice::new(0, 3).count(), 1);
    }

    #[test]
    fn identity_pencil_is_nonsingular() {
        let f = Rationals;
        let id = vec![vec![f.one(), f.zero()], vec![f.zero(), f.one()]];
        let pencil = LinearPencil::new(&f, 2, vec![id]);
        let PencilOutcome::Nonsingular { point, .. } = pencil.decide().unwrap() else {
            panic!()
        };
        assert_eq!(point, vec![f.one()]);
    }

    #[test]
    fn nilpotent_pencil_is_singular() {
        // t1 * E12 + t2 * E13: strictly upper triangular, never invertible
        let f = Rationals;
        let unit = |r: usize, c: usize| {
            let mut m = vec![vec![f.zero(); 3]; 3];
            m[r][c] = f.one();
            m
        };
        let pencil = LinearPencil::new(&f, 3, vec![unit(0, 1), unit(0, 2)]);
        let PencilOutcome::Singular(cert) = pencil.decide().unwrap() else {
            panic!()
        };
        assert_eq!(cert.points, binom(5, 2));
        assert!(pencil.recheck(&cert));
    }

    #[test]
    fn vanishing_on_every_prime_field_point_is_singular() {
        // diag(t1, t2, t1 + t2) over F_2: the nonzero polynomial t1 t2 (t1 + t2)
        // vanishes at every F_2 point
        let f = PrimeField::new(2).unwrap();
        let diag = |a: u64, b: u64, c: u64| {
            vec![
                vec![Fp(a), Fp(0), Fp(0)],
                vec![Fp(0), Fp(b), Fp(0)],
                vec![Fp(0), Fp(0), Fp(c)],
            ]
        };
        let pencil = LinearPencil::new(&f, 3, vec![diag(1, 0, 1), diag(0, 1, 1)]);
        let PencilOutcome::Singular(cert) = pencil.decide().unwrap() else {
            panic!()
        };
        assert_eq!(cert.prime_points, 4);
        assert!(pencil.recheck(&cert));
    }

    #[test]
    fn small_prime_uses_extension_nodes() {
        // det(t1 I_3) = t1^3 over F_2: a 3x3 pencil needs 4 nodes
        let f = PrimeField::new(2).unwrap();
        let id: Vec<Vec<Fp>> = (0..3).map(|i| (0..3).map(|j| Fp((i == j) as u64)).collect()).collect();
        let zero = vec![vec![Fp(0); 3]; 3];
        let pencil = LinearPencil::new(&f, 3, vec![zero.clone(), id]);
        let PencilOutcome::Nonsingular { point, .. } = pencil.decide().unwrap() else {
            panic!()
        };
        assert_eq!(point, vec![Fp(0), Fp(1)]);
        let singular = LinearPencil::new(&f, 3, vec![zero]);
        let PencilOutcome::Singular(cert) = singular.decide().unwrap() else {
            panic!()
        };
        assert_eq!(cert.extension_degree, 2);
    }
}
