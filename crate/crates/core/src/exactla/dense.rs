//! Dense vectors, matrices and order-3 tensors.
//!
//! Pairs of indices are flattened row-major: `(i, j) -> i * dim_b + j`.
//! That convention is shared by every module that builds maps on `M ⊗ N`.

use crate::error::{Error, Result};

use super::scalar::{FieldDesc, Scalar};

/// Row-major flattening of a pair index.
#[inline]
pub fn flat2(i: usize, j: usize, dim_b: usize) -> usize {
    i * dim_b + j
}

/// Inverse of [`flat2`].
#[inline]
pub fn split2(k: usize, dim_b: usize) -> (usize, usize) {
    (k / dim_b, k % dim_b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    field: FieldDesc,
    data: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: FieldDesc, n: usize) -> Self {
        Vector { field, data: vec![field.zero(); n] }
    }

    /// The basis vector `e_i`.
    pub fn basis(field: FieldDesc, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n);
        v.data[i] = field.one();
        v
    }

    pub fn from_vec(field: FieldDesc, data: Vec<Scalar>) -> Result<Self> {
        check_field(field, &data)?;
        Ok(Vector { field, data })
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.data[i]
    }

    pub fn set(&mut self, i: usize, s: Scalar) {
        debug_assert_eq!(s.field(), self.field);
        self.data[i] = s;
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            field: self.field,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        if self.len() != other.len() {
            return Err(Error::dims(format!("vector add {} vs {}", self.len(), other.len())));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(Vector { field: self.field, data })
    }

    /// Flattened `u ⊗ v`.
    pub fn tensor(&self, other: &Vector) -> Vector {
        let mut data = Vec::with_capacity(self.len() * other.len());
        for a in &self.data {
            for b in &other.data {
                data.push(a * b);
            }
        }
        Vector { field: self.field, data }
    }

    /// Nonzero coordinates as `(index, value)` pairs.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.data.iter().enumerate().filter(|(_, s)| !s.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldDesc,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldDesc, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldDesc, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldDesc, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dims("ragged matrix rows"));
        }
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        check_field(field, &data)?;
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        debug_assert_eq!(s.field(), self.field);
        self.data[i * self.cols + j] = s;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j { x.is_one() } else { x.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::dims(format!("matrix {}x{} on vector of length {}", self.rows, self.cols, v.len())));
        }
        let mut out = Vector::zeros(self.field, self.rows);
        for (j, x) in v.nonzeros() {
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.data[i] = &out.data[i] + &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// Matrix product, skipping zero entries on both sides.
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "matmul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Nonzero entries of column `j` as `(row, value)`.
    pub fn column_nonzeros(&self, j: usize) -> Vec<(usize, Scalar)> {
        (0..self.rows)
            .filter_map(|i| {
                let x = self.get(i, j);
                (!x.is_zero()).then(|| (i, x.clone()))
            })
            .collect()
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for c in 0..m.cols {
                m.data.swap(pivot * m.cols + c, rank * m.cols + c);
            }
            let inv = m.get(rank, col).inv().expect("nonzero pivot");
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(rank, c));
                    m.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Kronecker product, `(A⊗B)[(i,j)][(k,l)] = A[i][k] * B[j][l]`.
pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(a.field.to_string(), b.field.to_string()));
    }
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = Matrix::zeros(a.field, rows, cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(i, k);
            if x.is_zero() {
                continue;
            }
            for j in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(j, l);
                    if !y.is_zero() {
                        out.set(flat2(i, j, b.rows), flat2(k, l, b.cols), x * y);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Dense order-3 tensor `T[i][j][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: FieldDesc,
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: FieldDesc, d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 { field, dims: [d0, d1, d2], data: vec![field.zero(); d0 * d1 * d2] }
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    #[inline]
    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, s: Scalar) {
        debug_assert_eq!(s.field(), self.field);
        let o = self.offset(i, j, k);
        self.data[o] = s;
    }

    /// Nonzero entries in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = ([usize; 3], &Scalar)> + '_ {
        let [_, d1, d2] = self.dims;
        self.data.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(move |(o, s)| {
            ([o / (d1 * d2), (o / d2) % d1, o % d2], s)
        })
    }

    /// Sparse slices: for each `(i, j)` the nonzero `(k, T[i][j][k])`.
    pub fn fibers(&self) -> Vec<Vec<(usize, Scalar)>> {
        let [d0, d1, _] = self.dims;
        let mut out = vec![Vec::new(); d0 * d1];
        for ([i, j, k], s) in self.nonzeros() {
            out[i * d1 + j].push((k, s.clone()));
        }
        out
    }
}

/// `w[k] = Σ_{i,j} u[i] v[j] T[i][j][k]`: evaluates a bilinear product.
pub fn contract_mul(t: &Tensor3, u: &Vector, v: &Vector) -> Result<Vector> {
    let [d0, d1, d2] = t.dims;
    if u.len() != d0 || v.len() != d1 {
        return Err(Error::dims(format!(
            "contract {}x{}x{} with vectors of length {} and {}",
            d0,
            d1,
            d2,
            u.len(),
            v.len()
        )));
    }
    if u.field != t.field || v.field != t.field {
        return Err(Error::FieldMismatch(t.field.to_string(), u.field.to_string()));
    }
    let mut w = Vector::zeros(t.field, d2);
    for (i, a) in u.nonzeros() {
        for (j, b) in v.nonzeros() {
            let ab = a * b;
            for k in 0..d2 {
                let c = t.get(i, j, k);
                if !c.is_zero() {
                    w.data[k] = &w.data[k] + &(&ab * c);
                }
            }
        }
    }
    Ok(w)
}

fn check_field(field: FieldDesc, data: &[Scalar]) -> Result<()> {
    match data.iter().find(|s| s.field() != field) {
        Some(s) => Err(Error::FieldMismatch(field.to_string(), s.field().to_string())),
        None => Ok(()),
    }
}
