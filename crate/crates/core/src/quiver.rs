//! Bound quiver algebras `kQ/I` and their `K`-relative Hochschild complexes,
//! `K = k^{Q_0}`.
//!
//! Paths compose left to right: `pq` is `p` followed by `q`, defined when the
//! target of `p` is the source of `q`. Basis elements of `kQ/I` are path
//! classes labelled `e<vertex>` for trivial paths and by arrow names joined
//! with `.` otherwise.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::Algebra;
use crate::complexes::{Cochain, Limits};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Echelon, Matrix, SparseRow};

/// Longest path length searched for a power of the arrow ideal inside `I`.
pub const PATH_LENGTH_CAP: usize = 12;
/// Largest number of paths enumerated while searching.
pub const PATH_COUNT_CAP: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A trivial path at `source` (no arrows) or a composable arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Self {
            source: vertex,
            target: vertex,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`, if composable.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }
}

/// A linear combination of parallel paths.
pub type Relation<F> = Vec<(Path, <F as Field>::Elem)>;

/// A finite quiver with relations generating an admissible ideal.
#[derive(Clone, Debug)]
pub struct QuiverPresentation<F: Field> {
    field: F,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation<F>>,
    /// Some `N` with every path of length `N` in the ideal.
    nilpotency: usize,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && !s.contains('.') && !s.chars().any(char::is_whitespace)
}

impl<F: Field> QuiverPresentation<F> {
    /// `relations` are lists of `(arrow sequence, coefficient)`. Checks that
    /// paths are composable and parallel, that every term has length at least
    /// 2, and that all paths of some length `N <= PATH_LENGTH_CAP` lie in the
    /// generated ideal.
    pub fn new(
        field: &F,
        vertices: Vec<String>,
        arrows: Vec<(String, usize, usize)>,
        relations: Vec<Vec<(Vec<usize>, F::Elem)>>,
    ) -> Result<Self> {
        Self::with_cap(field, vertices, arrows, relations, PATH_LENGTH_CAP)
    }

    pub fn with_cap(
        field: &F,
        vertices: Vec<String>,
        arrows: Vec<(String, usize, usize)>,
        relations: Vec<Vec<(Vec<usize>, F::Elem)>>,
        cap: usize,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Quiver("quiver has no vertices".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::Quiver(format!("invalid vertex name `{v}`")));
            }
            if vertices[..i].contains(v) {
                return Err(Error::Quiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut checked_arrows: Vec<Arrow> = Vec::with_capacity(arrows.len());
        for (name, source, target) in arrows {
            if !valid_name(&name) {
                return Err(Error::Quiver(format!("invalid arrow name `{name}`")));
            }
            if checked_arrows.iter().any(|a| a.name == name) {
                return Err(Error::Quiver(format!("duplicate arrow `{name}`")));
            }
            if source >= vertices.len() || target >= vertices.len() {
                return Err(Error::Quiver(format!("arrow `{name}` has an unknown endpoint")));
            }
            checked_arrows.push(Arrow { name, source, target });
        }
        let mut q = Self {
            field: field.clone(),
            vertices,
            arrows: checked_arrows,
            relations: Vec::new(),
            nilpotency: 0,
        };
        for (r, terms) in relations.into_iter().enumerate() {
            let mut merged: BTreeMap<Path, F::Elem> = BTreeMap::new();
            for (seq, c) in terms {
                let p = q.path(&seq)?;
                if p.len() < 2 {
                    return Err(Error::NotAdmissible(format!(
                        "relation {} has a term of length {}",
                        r + 1,
                        p.len()
                    )));
                }
                let e = merged.entry(p).or_insert_with(|| field.zero());
                field.add_assign(e, &c);
            }
            let rel: Relation<F> = merged.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
            let Some((first, _)) = rel.first() else {
                continue;
            };
            let (s, t) = (first.source, first.target);
            if rel.iter().any(|(p, _)| p.source != s || p.target != t) {
                return Err(Error::Quiver(format!("relation {} mixes non-parallel paths", r + 1)));
            }
            q.relations.push(rel);
        }
        q.nilpotency = q.find_nilpotency(cap)?;
        Ok(q)
    }

    /// The path through the given arrows; they must be composable and nonempty.
    pub fn path(&self, arrows: &[usize]) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Quiver("empty arrow sequence".into()));
        };
        let a0 = self
            .arrows
            .get(first)
            .ok_or_else(|| Error::Quiver(format!("unknown arrow index {first}")))?;
        let mut p = Path {
            source: a0.source,
            target: a0.target,
            arrows: vec![first],
        };
        for &i in &arrows[1..] {
            let a = self
                .arrows
                .get(i)
                .ok_or_else(|| Error::Quiver(format!("unknown arrow index {i}")))?;
            if a.source != p.target {
                return Err(Error::Quiver(format!(
                    "arrows `{}` and `{}` do not compose",
                    self.arrows[*p.arrows.last().expect("nonempty")].name,
                    a.name
                )));
            }
            p.arrows.push(i);
            p.target = a.target;
        }
        Ok(p)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn label(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e{}", self.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// All paths of length `0..=max_len`, grouped by length; each group in
    /// lexicographic order of arrow sequences.
    fn paths_up_to(&self, max_len: usize) -> Result<Vec<Vec<Path>>> {
        let mut out = vec![(0..self.vertices.len()).map(Path::trivial).collect::<Vec<_>>()];
        let mut total = out[0].len();
        for len in 1..=max_len {
            let mut next = Vec::new();
            if len == 1 {
                next.extend(self.arrows.iter().enumerate().map(|(i, a)| Path {
                    source: a.source,
                    target: a.target,
                    arrows: vec![i],
                }));
            }
            for p in out[len - 1].iter().filter(|_| len > 1) {
                for (i, a) in self.arrows.iter().enumerate() {
                    if p.target != a.source {
                        continue;
                    }
                    let mut arrows = p.arrows.clone();
                    arrows.push(i);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
            total += next.len();
            if total > PATH_COUNT_CAP {
                return Err(Error::Quiver(format!(
                    "path enumeration exceeds {PATH_COUNT_CAP} paths at length {len}"
                )));
            }
            out.push(next);
        }
        Ok(out)
    }

    /// `u r v` for every relation `r` and paths `u`, `v` with
    /// `len(u) + len(v) + len(r) <= budget`, where `len(r)` is the longest
    /// (`full`) or shortest (otherwise) term length. Terms longer than
    /// `keep` are dropped.
    fn ideal_rows(
        &self,
        paths: &[Vec<Path>],
        column: &HashMap<&Path, usize>,
        budget: usize,
        full: bool,
        keep: usize,
    ) -> Vec<SparseRow<F>> {
        let f = &self.field;
        let mut rows = Vec::new();
        for rel in &self.relations {
            let lens = rel.iter().map(|(p, _)| p.len());
            let rl = if full { lens.max() } else { lens.min() }.expect("nonempty relation");
            if rl > budget {
                continue;
            }
            let (s, t) = (rel[0].0.source, rel[0].0.target);
            for u in paths[..=budget - rl].iter().flatten().filter(|u| u.target == s) {
                let room = budget - rl - u.len();
                for v in paths[..=room].iter().flatten().filter(|v| v.source == t) {
                    let mut acc: BTreeMap<usize, F::Elem> = BTreeMap::new();
                    for (p, c) in rel {
                        if u.len() + p.len() + v.len() > keep {
                            continue;
                        }
                        let w = u.compose(p).and_then(|x| x.compose(v)).expect("composable");
                        let e = acc.entry(column[&w]).or_insert_with(|| f.zero());
                        f.add_assign(e, c);
                    }
                    let row: SparseRow<F> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        rows
    }

    /// Smallest `N` such that all length-`N` paths are combinations of
    /// `u r v` of length at most `L`, for the first `L <= cap` where one exists.
    fn find_nilpotency(&self, cap: usize) -> Result<usize> {
        let f = &self.field;
        for l in 1..=cap {
            let paths = self.paths_up_to(l)?;
            let column: HashMap<&Path, usize> = paths.iter().flatten().enumerate().map(|(i, p)| (p, i)).collect();
            let mut e = Echelon::new(column.len());
            for row in self.ideal_rows(&paths, &column, l, true, l) {
                e.insert(f, row);
            }
            for n in 1..=l {
                let all = paths[n]
                    .iter()
                    .all(|p| e.reduce(f, &[(column[p], f.one())]).is_empty());
                if all {
                    return Ok(n);
                }
            }
        }
        Err(Error::NotAdmissible(format!(
            "no power of the arrow ideal up to length {cap} lies in the ideal"
        )))
    }
}

/// `kQ/I` with the path behind each basis element.
#[derive(Clone, Debug)]
pub struct QuiverAlgebra<F: Field> {
    pub algebra: Algebra<F>,
    pub paths: Vec<Path>,
    pub vertex_count: usize,
}

impl<F: Field> QuiverAlgebra<F> {
    /// `(source, target)` of basis element `i`.
    pub fn endpoints(&self, i: usize) -> (usize, usize) {
        (self.paths[i].source, self.paths[i].target)
    }

    /// Basis elements grouped by source vertex, then by target vertex.
    fn by_source(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for (i, p) in self.paths.iter().enumerate() {
            out[p.source].push(i);
        }
        out
    }
}

/// `kQ/I`: paths of length below the nilpotency bound, modulo the ideal;
/// longer terms are eliminated first, so basis paths are the shortest
/// representatives. The basis is ordered by length, then lexicographically.
pub fn bound_quiver_algebra<F: Field>(q: &QuiverPresentation<F>) -> Result<QuiverAlgebra<F>> {
    let f = q.field();
    let n = q.nilpotency();
    let paths = q.paths_up_to(n - 1)?;
    let total: usize = paths.iter().map(Vec::len).sum();
    // longest paths get the lowest columns and become pivots
    let mut column: HashMap<&Path, usize> = HashMap::new();
    let mut next = 0;
    for group in paths.iter().rev() {
        for p in group {
            column.insert(p, next);
            next += 1;
        }
    }
    let mut e = Echelon::new(total);
    for row in q.ideal_rows(&paths, &column, n - 1, false, n - 1) {
        e.insert(f, row);
    }
    e.make_reduced(f);
    let pivots: std::collections::HashSet<usize> = e.pivot_columns().collect();
    let basis: Vec<Path> = paths
        .iter()
        .flatten()
        .filter(|p| !pivots.contains(&column[p]))
        .cloned()
        .collect();
    let basis_index: HashMap<usize, usize> = basis.iter().enumerate().map(|(i, p)| (column[p], i)).collect();
    let normal_form = |p: &Path| -> Vec<(usize, F::Elem)> {
        if p.len() >= n {
            return Vec::new();
        }
        let mut row: Vec<(usize, F::Elem)> = e
            .reduce(f, &[(column[p], f.one())])
            .into_iter()
            .map(|(c, v)| (basis_index[&c], v))
            .collect();
        row.sort_by_key(|(i, _)| *i);
        row
    };
    let mut products = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        for (j, r) in basis.iter().enumerate() {
            if let Some(w) = p.compose(r) {
                let nf = normal_form(&w);
                if !nf.is_empty() {
                    products.push((i, j, nf));
                }
            }
        }
    }
    let unit = basis
        .iter()
        .map(|p| if p.is_trivial() { f.one() } else { f.zero() })
        .collect();
    let labels = basis.iter().map(|p| q.label(p)).collect();
    let algebra = Algebra::new(f, labels, products, unit)?;
    algebra.validate().map_err(Error::InvalidAlgebra)?;
    Ok(QuiverAlgebra {
        algebra,
        paths: basis,
        vertex_count: q.vertices().len(),
    })
}

/// Cyclically composable `(k + 1)`-tuples of basis paths, in lexicographic
/// order: `t(p_i) = s(p_{i+1})` and `t(p_k) = s(p_0)`.
///
/// As chains of degree `k` they span `A (x)_{K^e} A^{(x)_K k}`. As cochains of
/// degree `k` the tuple `(p_1, .., p_k, q)` is the `K^e`-linear map sending
/// `p_1 (x) .. (x) p_k` to `q*` (for `k = 0`, sending `e_{s(q)}` to `q*`).
#[derive(Clone, Debug)]
pub struct RelativeComplexBasis {
    pub degree: usize,
    pub tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl RelativeComplexBasis {
    pub fn new<F: Field>(qa: &QuiverAlgebra<F>, degree: usize, limits: &Limits) -> Result<Self> {
        if degree > limits.max_degree {
            return Err(Error::DegreeCap {
                context: "relative complex",
                degree,
                cap: limits.max_degree,
            });
        }
        let size = relative_group_dim(qa, degree);
        if size > limits.max_group_dim as u128 {
            return Err(Error::DegreeCap {
                context: "relative complex",
                degree,
                cap: limits.max_degree,
            });
        }
        let by_source = qa.by_source();
        let mut tuples = Vec::with_capacity(size as usize);
        let mut current = Vec::with_capacity(degree + 1);
        for p0 in 0..qa.paths.len() {
            current.push(p0);
            extend_tuples(qa, &by_source, degree, &mut current, &mut tuples);
            current.pop();
        }
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Ok(Self { degree, tuples, index })
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }
}

fn extend_tuples<F: Field>(
    qa: &QuiverAlgebra<F>,
    by_source: &[Vec<usize>],
    degree: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *current.last().expect("nonempty");
    if current.len() == degree + 1 {
        if qa.endpoints(last).1 == qa.endpoints(current[0]).0 {
            out.push(current.clone());
        }
        return;
    }
    // basis paths are sorted by index within each source group
    for &next in &by_source[qa.endpoints(last).1] {
        current.push(next);
        extend_tuples(qa, by_source, degree, current, out);
        current.pop();
    }
}

/// Number of cyclically composable `(k + 1)`-tuples: the trace of `M^{k+1}`
/// with `M[v][w]` the number of basis paths from `v` to `w`.
pub fn relative_group_dim<F: Field>(qa: &QuiverAlgebra<F>, degree: usize) -> u128 {
    let v = qa.vertex_count;
    let mut m = vec![vec![0u128; v]; v];
    for p in &qa.paths {
        m[p.source][p.target] += 1;
    }
    let mut power = m.clone();
    for _ in 0..degree {
        let mut next = vec![vec![0u128; v]; v];
        for i in 0..v {
            for k in 0..v {
                if power[i][k] == 0 {
                    continue;
                }
                for j in 0..v {
                    next[i][j] = next[i][j].saturating_add(power[i][k].saturating_mul(m[k][j]));
                }
            }
        }
        power = next;
    }
    (0..v).fold(0u128, |acc, i| acc.saturating_add(power[i][i]))
}

fn lookup(basis: &RelativeComplexBasis, tuple: &[usize]) -> usize {
    basis
        .index_of(tuple)
        .expect("products of composable paths stay composable")
}

/// Relative `b_n : A (x)_{K^e} A^{(x)_K n} -> A (x)_{K^e} A^{(x)_K n-1}`, `n >= 1`,
/// with the same formula as the absolute boundary.
pub fn relative_boundary_matrix<F: Field>(qa: &QuiverAlgebra<F>, n: usize, limits: &Limits) -> Result<Matrix<F>> {
    if n < 1 {
        return Err(Error::DegreeTooLow {
            context: "relative boundary",
            degree: n,
            min: 1,
        });
    }
    let a = &qa.algebra;
    let f = a.field();
    let source = RelativeComplexBasis::new(qa, n, limits)?;
    let target = RelativeComplexBasis::new(qa, n - 1, limits)?;
    let mut triplets = Vec::new();
    let mut out = vec![0; n];
    for (col, t) in source.tuples.iter().enumerate() {
        for i in 0..n {
            let sign = f.sign(i % 2 == 1);
            for (p, c) in a.basis_product(t[i], t[i + 1]) {
                out[..i].copy_from_slice(&t[..i]);
                out[i] = *p;
                out[i + 1..].copy_from_slice(&t[i + 2..]);
                triplets.push((lookup(&target, &out), col, f.mul(&sign, c)));
            }
        }
        let sign = f.sign(n % 2 == 1);
        for (p, c) in a.basis_product(t[n], t[0]) {
            out[0] = *p;
            out[1..].copy_from_slice(&t[1..n]);
            triplets.push((lookup(&target, &out), col, f.mul(&sign, c)));
        }
    }
    Ok(Matrix::from_triplets(f, target.len(), source.len(), triplets))
}

/// Relative `delta^n : Hom_{K^e}(A^{(x)_K n}, A*) -> Hom_{K^e}(A^{(x)_K n+1}, A*)`,
/// `delta f(a_1 .. a_{n+1}) = a_1 f(a_2 ..) + sum_i (-1)^i f(.. a_i a_{i+1} ..)
/// + (-1)^{n+1} f(a_1 .. a_n) a_{n+1}`.
pub fn relative_coboundary_matrix<F: Field>(qa: &QuiverAlgebra<F>, n: usize, limits: &Limits) -> Result<Matrix<F>> {
    let a = &qa.algebra;
    let f = a.field();
    let source = RelativeComplexBasis::new(qa, n, limits)?;
    let target = RelativeComplexBasis::new(qa, n + 1, limits)?;
    let mut triplets = Vec::new();
    let mut col = vec![0; n + 1];
    for (row, s) in target.tuples.iter().enumerate() {
        // s = (a_1, .., a_{n+1}; x)
        let x = s[n + 1];
        // (a_1 . g)(x) = g(x a_1)
        for (y, c) in a.basis_product(x, s[0]) {
            col[..n].copy_from_slice(&s[1..=n]);
            col[n] = *y;
            triplets.push((row, lookup(&source, &col), c.clone()));
        }
        for i in 1..=n {
            let sign = f.sign(i % 2 == 1);
            for (p, c) in a.basis_product(s[i - 1], s[i]) {
                col[..i - 1].copy_from_slice(&s[..i - 1]);
                col[i - 1] = *p;
                col[i..n].copy_from_slice(&s[i + 1..=n]);
                col[n] = x;
                triplets.push((row, lookup(&source, &col), f.mul(&sign, c)));
            }
        }
        // (g . a_{n+1})(x) = g(a_{n+1} x)
        let sign = f.sign((n + 1) % 2 == 1);
        for (y, c) in a.basis_product(s[n], x) {
            col[..n].copy_from_slice(&s[..n]);
            col[n] = *y;
            triplets.push((row, lookup(&source, &col), f.mul(&sign, c)));
        }
    }
    Ok(Matrix::from_triplets(f, target.len(), source.len(), triplets))
}

/// `dim HH_n` from the `K`-relative chain complex.
pub fn relative_hochschild_homology<F: Field>(qa: &QuiverAlgebra<F>, n: usize, limits: &Limits) -> Result<usize> {
    let out = if n == 0 {
        let c0 = RelativeComplexBasis::new(qa, 0, limits)?;
        Matrix::zeros(qa.algebra.field(), 0, c0.len())
    } else {
        relative_boundary_matrix(qa, n, limits)?
    };
    let inn = relative_boundary_matrix(qa, n + 1, limits)?;
    linalg::homology_dim(&out, &inn)
}

/// `dim HH^n(A, A*)` from the `K`-relative cochain complex.
pub fn relative_hochschild_cohomology<F: Field>(qa: &QuiverAlgebra<F>, n: usize, limits: &Limits) -> Result<usize> {
    let out = relative_coboundary_matrix(qa, n, limits)?;
    let inn = if n == 0 {
        Matrix::zeros(qa.algebra.field(), out.cols(), 0)
    } else {
        relative_coboundary_matrix(qa, n - 1, limits)?
    };
    linalg::homology_dim(&out, &inn)
}

/// Basis of the relative `n`-cocycles, in [`RelativeComplexBasis`] coordinates.
pub fn relative_cocycles<F: Field>(qa: &QuiverAlgebra<F>, n: usize, limits: &Limits) -> Result<Vec<Vec<F::Elem>>> {
    Ok(linalg::kernel_basis(&relative_coboundary_matrix(qa, n, limits)?))
}

/// The absolute cochain `A^{(x) n} -> A*` obtained by composing a relative
/// cochain with `A^{(x) n} -> A^{(x)_K n}`: zero on non-composable tuples.
pub fn embed_relative_cochain<F: Field>(
    qa: &QuiverAlgebra<F>,
    n: usize,
    values: &[F::Elem],
    limits: &Limits,
) -> Result<Cochain<F>> {
    let basis = RelativeComplexBasis::new(qa, n, limits)?;
    if values.len() != basis.len() {
        return Err(Error::DimensionMismatch {
            context: "relative cochain",
            expected: basis.len(),
            found: values.len(),
        });
    }
    let f = qa.algebra.field();
    let d = qa.algebra.dim();
    limits.cochain_dim(d, d, n, "embedded relative cochain")?;
    let mut out = Cochain::zero(f, n, d, d);
    for (t, v) in basis.tuples.iter().zip(values) {
        out.value_mut(&t[..n])[t[n]] = v.clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{boundary_matrix, check_cocycle2, coboundary_matrix, hochschild_cohomology, hochschild_homology};
    use crate::corpus;
    use crate::field::{PrimeField, Rationals};

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn loop_quiver<F: Field>(f: &F, power: usize) -> QuiverPresentation<F> {
        QuiverPresentation::new(
            f,
            names(&["1"]),
            vec![("x".into(), 0, 0)],
            vec![vec![(vec![0; power], f.one())]],
        )
        .unwrap()
    }

    fn a2<F: Field>(f: &F) -> QuiverPresentation<F> {
        QuiverPresentation::new(f, names(&["1", "2"]), vec![("a".into(), 0, 1)], vec![]).unwrap()
    }

    #[test]
    fn one_loop_gives_truncated_polynomials() {
        let f = Rationals;
        for n in 2..=4 {
            let q = loop_quiver(&f, n);
            assert_eq!(q.nilpotency(), n);
            let qa = bound_quiver_algebra(&q).unwrap();
            assert_eq!(qa.algebra.dim(), n);
            let expected = corpus::truncated_polynomial(&f, n);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(qa.algebra.basis_product(i, j), expected.basis_product(i, j));
                }
            }
        }
        assert_eq!(bound_quiver_algebra(&loop_quiver(&f, 2)).unwrap().algebra.labels(), &names(&["e1", "x"])[..]);
    }

    #[test]
    fn a2_matches_corpus() {
        let f = Rationals;
        let qa = bound_quiver_algebra(&a2(&f)).unwrap();
        let expected = corpus::path_algebra_a2(&f);
        assert_eq!(qa.algebra.labels(), expected.labels());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(qa.algebra.basis_product(i, j), expected.basis_product(i, j));
            }
        }
        assert_eq!(qa.algebra.unit(), expected.unit());
    }

    #[test]
    fn commutative_square() {
        let f = PrimeField::new(5).unwrap();
        let q = QuiverPresentation::new(
            &f,
            names(&["1", "2", "3", "4"]),
            vec![("a".into(), 0, 1), ("b".into(), 1, 3), ("c".into(), 0, 2), ("d".into(), 2, 3)],
            vec![vec![(vec![0, 1], f.one()), (vec![2, 3], f.from_i64(-1))]],
        )
        .unwrap();
        let qa = bound_quiver_algebra(&q).unwrap();
        assert_eq!(qa.algebra.dim(), 9);
        // a.b is eliminated in favour of c.d
        assert_eq!(&qa.algebra.labels()[4..8], &names(&["a", "b", "c", "d"])[..]);
        let ab = qa.algebra.basis_product(4, 5);
        let cd = qa.algebra.labels().iter().position(|l| l == "c.d").unwrap();
        assert_eq!(ab, &[(cd, f.one())]);
    }

    #[test]
    fn square_zero_two_loops() {
        let f = Rationals;
        let one = f.one();
        let q = QuiverPresentation::new(
            &f,
            names(&["1"]),
            vec![("x".into(), 0, 0), ("y".into(), 0, 0)],
            vec![
                vec![(vec![0, 0], one.clone())],
                vec![(vec![0, 1], one.clone())],
                vec![(vec![1, 0], one.clone())],
                vec![(vec![1, 1], one)],
            ],
        )
        .unwrap();
        let qa = bound_quiver_algebra(&q).unwrap();
        assert_eq!(qa.algebra.labels(), &names(&["e1", "x", "y"])[..]);
        let expected = corpus::square_zero_plane(&f);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(qa.algebra.basis_product(i, j), expected.basis_product(i, j));
            }
        }
    }

    #[test]
    fn exterior_algebra_on_two_loops() {
        let f = Rationals;
        let one = f.one();
        let q = QuiverPresentation::new(
            &f,
            names(&["1"]),
            vec![("x".into(), 0, 0), ("y".into(), 0, 0)],
            vec![
                vec![(vec![0, 0], one.clone())],
                vec![(vec![1, 1], one.clone())],
                vec![(vec![0, 1], one.clone()), (vec![1, 0], one)],
            ],
        )
        .unwrap();
        assert_eq!(q.nilpotency(), 3);
        let qa = bound_quiver_algebra(&q).unwrap();
        assert_eq!(qa.algebra.dim(), 4);
    }

    #[test]
    fn rejects_non_admissible_ideals() {
        let f = Rationals;
        let one = f.one();
        let free_loop = QuiverPresentation::new(&f, names(&["1"]), vec![("x".into(), 0, 0)], vec![]);
        assert!(matches!(free_loop, Err(Error::NotAdmissible(_))));
        // x^2 - x^3 = x^2 (1 - x) contains no power of x
        let unit_factor = QuiverPresentation::new(
            &f,
            names(&["1"]),
            vec![("x".into(), 0, 0)],
            vec![vec![(vec![0, 0], one.clone()), (vec![0, 0, 0], f.from_i64(-1))]],
        );
        assert!(matches!(unit_factor, Err(Error::NotAdmissible(_))));
        let arrow_term = QuiverPresentation::new(
            &f,
            names(&["1"]),
            vec![("x".into(), 0, 0)],
            vec![vec![(vec![0], one.clone())]],
        );
        assert!(matches!(arrow_term, Err(Error::NotAdmissible(_))));
        let not_parallel = QuiverPresentation::new(
            &f,
            names(&["1", "2"]),
            vec![("a".into(), 0, 1), ("b".into(), 1, 0)],
            vec![vec![(vec![0, 1], one.clone()), (vec![1, 0], one.clone())]],
        );
        assert!(matches!(not_parallel, Err(Error::Quiver(_))));
        let not_composable = QuiverPresentation::new(
            &f,
            names(&["1", "2"]),
            vec![("a".into(), 0, 1)],
            vec![vec![(vec![0, 0], one)]],
        );
        assert!(matches!(not_composable, Err(Error::Quiver(_))));
    }

    #[test]
    fn a2_relative_homology() {
        let f = Rationals;
        let l = Limits::default();
        let qa = bound_quiver_algebra(&a2(&f)).unwrap();
        assert_eq!(RelativeComplexBasis::new(&qa, 1, &l).unwrap().len(), 2);
        assert_eq!(relative_group_dim(&qa, 1), 2);
        assert_eq!(relative_hochschild_homology(&qa, 0, &l).unwrap(), 2);
        assert_eq!(relative_hochschild_homology(&qa, 1, &l).unwrap(), 0);
        assert_eq!(relative_hochschild_homology(&qa, 2, &l).unwrap(), 0);
    }

    #[test]
    fn relative_matches_absolute() {
        let f = Rationals;
        let l = Limits::default();
        for qa in [
            bound_quiver_algebra(&a2(&f)).unwrap(),
            bound_quiver_algebra(&loop_quiver(&f, 2)).unwrap(),
            bound_quiver_algebra(&loop_quiver(&f, 3)).unwrap(),
        ] {
            let dual = qa.algebra.dual_bimodule();
            for n in 0..=2 {
                assert_eq!(
                    relative_hochschild_homology(&qa, n, &l).unwrap(),
                    hochschild_homology(&qa.algebra, n, &l).unwrap().dim
                );
                assert_eq!(
                    relative_hochschild_cohomology(&qa, n, &l).unwrap(),
                    hochschild_cohomology(&qa.algebra, &dual, n, &l).unwrap().dim
                );
            }
        }
    }

    #[test]
    fn single_vertex_complexes_coincide() {
        let f = Rationals;
        let l = Limits::default();
        let qa = bound_quiver_algebra(&loop_quiver(&f, 3)).unwrap();
        let dual = qa.algebra.dual_bimodule();
        for n in 1..=3 {
            assert_eq!(relative_boundary_matrix(&qa, n, &l).unwrap(), boundary_matrix(&qa.algebra, n, &l).unwrap());
        }
        for n in 0..=2 {
            assert_eq!(
                relative_coboundary_matrix(&qa, n, &l).unwrap(),
                coboundary_matrix(&qa.algebra, &dual, n, &l).unwrap()
            );
        }
    }

    #[test]
    fn relative_groups_are_smaller_with_several_vertices() {
        let f = Rationals;
        let l = Limits::default();
        let qa = bound_quiver_algebra(&a2(&f)).unwrap();
        for n in 0..=3 {
            let rel = RelativeComplexBasis::new(&qa, n, &l).unwrap().len();
            assert!(rel < 3usize.pow(n as u32 + 1), "degree {n}");
            assert_eq!(rel as u128, relative_group_dim(&qa, n));
        }
    }

    #[test]
    fn relative_cocycles_embed_as_absolute_cocycles() {
        let f = Rationals;
        let l = Limits::default();
        let qa = bound_quiver_algebra(&a2(&f)).unwrap();
        let dual = qa.algebra.dual_bimodule();
        let cocycles = relative_cocycles(&qa, 2, &l).unwrap();
        assert!(!cocycles.is_empty());
        for z in cocycles {
            let alpha = embed_relative_cochain(&qa, 2, &z, &l).unwrap();
            check_cocycle2(&qa.algebra, &dual, &alpha).unwrap();
        }
    }
}
