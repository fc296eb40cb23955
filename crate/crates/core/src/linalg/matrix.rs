use crate::error::{Error, Result};
use crate::field::Field;

/// One sparse row: `(column, value)` pairs sorted by column, values nonzero.
pub type SparseRow<F> = Vec<(usize, <F as Field>::Elem)>;

/// Sparse row-major matrix over an exact field.
#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<SparseRow<F>>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for (i, row) in m.data.iter_mut().enumerate() {
            row.push((i, field.one()));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(
        field: &F,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, F::Elem)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r},{c}) out of bounds");
            if !field.is_zero(&v) {
                buckets[r].push((c, v));
            }
        }
        let data = buckets
            .into_iter()
            .map(|mut b| {
                b.sort_by_key(|(c, _)| *c);
                let mut row: SparseRow<F> = Vec::with_capacity(b.len());
                for (c, v) in b {
                    match row.last_mut() {
                        Some((lc, lv)) if *lc == c => field.add_assign(lv, &v),
                        _ => row.push((c, v)),
                    }
                }
                row.retain(|(_, v)| !field.is_zero(v));
                row
            })
            .collect();
        Self {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_dense(field: &F, dense: &[Vec<F::Elem>]) -> Self {
        Self::from_dense_rows(field, dense.first().map_or(0, Vec::len), dense)
    }

    /// Like [`Matrix::from_dense`] with an explicit column count, so that a
    /// matrix with no rows keeps its width.
    pub fn from_dense_rows(field: &F, cols: usize, dense: &[Vec<F::Elem>]) -> Self {
        let rows = dense.len();
        let data = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged dense matrix");
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !field.is_zero(v))
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect();
        Self {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let triplets = columns.iter().enumerate().flat_map(|(c, col)| {
            assert_eq!(col.len(), rows);
            col.iter()
                .enumerate()
                .map(move |(r, v)| (r, c, v.clone()))
        });
        Self::from_triplets(field, rows, columns.len(), triplets)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn row(&self, r: usize) -> &[(usize, F::Elem)] {
        &self.data[r]
    }
    pub fn row_data(&self) -> &[SparseRow<F>] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> F::Elem {
        match self.data[r].binary_search_by_key(&c, |(cc, _)| *cc) {
            Ok(i) => self.data[r][i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<F::Elem>> {
        let mut out = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                out[r][*c] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut buckets: Vec<SparseRow<F>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                buckets[*c].push((r, v.clone()));
            }
        }
        Self {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data: buckets,
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut acc: Vec<Option<F::Elem>> = vec![None; other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    match &mut acc[*c] {
                        Some(v) => f.mul_add_assign(v, a, b),
                        slot @ None => {
                            *slot = Some(f.mul(a, b));
                            touched.push(*c);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out: SparseRow<F> = Vec::with_capacity(touched.len());
            for c in touched.drain(..) {
                let v = acc[c].take().expect("touched");
                if !f.is_zero(&v) {
                    out.push((c, v));
                }
            }
            data.push(out);
        }
        Ok(Self {
            field: f.clone(),
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix sum",
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let f = &self.field;
        let coef = f.sign(negate);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| axpy(f, a, &coef, b))
            .collect();
        Ok(Self {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(s) {
            return Self::zeros(f, self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, f.mul(v, s))).collect())
            .collect();
        Self {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `self * v` for a dense column vector.
    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                found: v.len(),
            });
        }
        let f = &self.field;
        Ok(self
            .data
            .iter()
            .map(|row| {
                let mut acc = f.zero();
                for (c, a) in row {
                    f.mul_add_assign(&mut acc, a, &v[*c]);
                }
                acc
            })
            .collect())
    }

    /// `v^T * self` for a dense row vector, i.e. the pullback of a linear form.
    pub fn vec_mul(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "vector-matrix product",
                expected: self.rows,
                found: v.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (row, a) in self.data.iter().zip(v) {
            if f.is_zero(a) {
                continue;
            }
            for (c, m) in row {
                f.mul_add_assign(&mut out[*c], a, m);
            }
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "vertical stack",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                context: "horizontal stack",
                expected: self.rows,
                found: other.rows,
            });
        }
        let off = self.cols;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut row = a.clone();
                row.extend(b.iter().map(|(c, v)| (c + off, v.clone())));
                row
            })
            .collect();
        Ok(Self {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    /// Assembles a block matrix. `blocks[i][j]` is `None` for a zero block;
    /// row heights and column widths are given explicitly.
    pub fn from_blocks(
        field: &F,
        heights: &[usize],
        widths: &[usize],
        blocks: &[Vec<Option<&Matrix<F>>>],
    ) -> Result<Self> {
        let rows: usize = heights.iter().sum();
        let cols: usize = widths.iter().sum();
        let mut triplets = Vec::new();
        let mut r0 = 0;
        for (bi, h) in heights.iter().enumerate() {
            let mut c0 = 0;
            for (bj, w) in widths.iter().enumerate() {
                if let Some(Some(block)) = blocks.get(bi).map(|r| r.get(bj).copied().flatten()) {
                    if block.rows != *h || block.cols != *w {
                        return Err(Error::DimensionMismatch {
                            context: "block matrix",
                            expected: h * w,
                            found: block.rows * block.cols,
                        });
                    }
                    if block.field != *field {
                        return Err(Error::FieldMismatch);
                    }
                    for (r, row) in block.data.iter().enumerate() {
                        for (c, v) in row {
                            triplets.push((r0 + r, c0 + c, v.clone()));
                        }
                    }
                }
                c0 += w;
            }
            r0 += h;
        }
        Ok(Self::from_triplets(field, rows, cols, triplets))
    }
}

/// `a + s * b` on sparse rows.
pub(crate) fn axpy<F: Field>(f: &F, a: &[(usize, F::Elem)], s: &F::Elem, b: &[(usize, F::Elem)]) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = f.mul(s, &b[j].1);
            if !f.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            f.mul_add_assign(&mut v, s, &b[j].1);
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Dense dot product.
pub fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        f.mul_add_assign(&mut acc, x, y);
    }
    acc
}
