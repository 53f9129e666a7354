//! Dense matrices with exact determinants and Pfaffians.
//!
//! Two determinant routes are provided: [`determinant`] runs rational Gaussian
//! elimination over a [`Field`], and [`determinant_fraction_free`] runs Bareiss'
//! algorithm over any ring with exact division (used for the integer path
//! counting matrices). Pfaffians are computed by skew-symmetric elimination in
//! [`pfaffian`]; [`pfaffian_expansion`] expands along the first row and is kept
//! as an independent check for small dimensions.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// The submatrix keeping the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let all: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &all)
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn from_ints(rows: usize, cols: usize, values: &[i64]) -> Result<Self> {
        Matrix::new(rows, cols, values.iter().map(|&v| T::from_int(v)).collect())
    }

    pub fn neg(&self) -> Self {
        self.map(|v| -v.clone())
    }

    pub fn matmul(&self, other: &Matrix<T>) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let prod = a.clone() * other[(k, c)].clone();
                    let slot = &mut out[(r, c)];
                    *slot = slot.clone() + prod;
                }
            }
        }
        Ok(out)
    }

    /// Assembles a block matrix. Blocks in one block-row must share their row
    /// count and blocks in one block-column their column count.
    pub fn from_blocks(blocks: &[Vec<Matrix<T>>]) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return Ok(Matrix::zeros(0, 0));
        };
        let widths: Vec<usize> = first.iter().map(Matrix::cols).collect();
        for block_row in blocks {
            if block_row.len() != widths.len() {
                return Err(Error::Dimension("block rows of different length".into()));
            }
            let h = block_row[0].rows;
            for (b, &w) in block_row.iter().zip(&widths) {
                if b.rows != h || b.cols != w {
                    return Err(Error::Dimension(format!(
                        "block {}x{} does not fit a {h}x{w} slot",
                        b.rows, b.cols
                    )));
                }
            }
        }
        let total_rows: usize = blocks.iter().map(|br| br[0].rows).sum();
        let total_cols: usize = widths.iter().sum();
        let mut data = Vec::with_capacity(total_rows * total_cols);
        for block_row in blocks {
            for r in 0..block_row[0].rows {
                for b in block_row {
                    data.extend_from_slice(b.row(r));
                }
            }
        }
        Matrix::new(total_rows, total_cols, data)
    }

    /// Horizontal concatenation `(A | B | ...)`.
    pub fn hstack(parts: &[&Matrix<T>]) -> Result<Self> {
        Matrix::from_blocks(&[parts.iter().map(|m| (*m).clone()).collect()])
    }

    /// Block diagonal matrix with zero off-diagonal blocks.
    pub fn block_diag(a: &Matrix<T>, b: &Matrix<T>) -> Self {
        Matrix::from_fn(a.rows + b.rows, a.cols + b.cols, |r, c| {
            if r < a.rows && c < a.cols {
                a[(r, c)].clone()
            } else if r >= a.rows && c >= a.cols {
                b[(r - a.rows, c - a.cols)].clone()
            } else {
                T::zero()
            }
        })
    }
}

fn require_square<T>(m: &Matrix<T>) -> Result<usize> {
    if m.is_square() {
        Ok(m.rows)
    } else {
        Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        })
    }
}

fn choose_pivot<T: Field>(candidates: impl Iterator<Item = (usize, T)>) -> Option<usize> {
    let mut best: Option<(usize, T)> = None;
    for (idx, v) in candidates {
        if v.is_zero() {
            continue;
        }
        if T::EXACT {
            return Some(idx);
        }
        let mag = v.abs();
        if best.as_ref().is_none_or(|(_, b)| mag > *b) {
            best = Some((idx, mag));
        }
    }
    best.map(|(idx, _)| idx)
}

/// Determinant by Gaussian elimination. The empty matrix has determinant 1.
pub fn determinant<T: Field>(m: &Matrix<T>) -> Result<T> {
    let n = require_square(m)?;
    let mut a = m.data.clone();
    let mut det = T::one();
    for k in 0..n {
        let Some(p) = choose_pivot((k..n).map(|r| (r, a[r * n + k].clone()))) else {
            return Ok(T::zero());
        };
        if p != k {
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            det = -det;
        }
        let pivot = a[k * n + k].clone();
        det = det * pivot.clone();
        for r in (k + 1)..n {
            let lead = a[r * n + k].clone();
            if lead.is_zero() {
                continue;
            }
            let factor = lead / pivot.clone();
            for c in (k + 1)..n {
                let v = a[r * n + c].clone() - factor.clone() * a[k * n + c].clone();
                a[r * n + c] = v;
            }
        }
    }
    Ok(det)
}

/// Determinant by Bareiss' fraction-free elimination. Every division is exact,
/// so this works over integer rings as well as fields.
pub fn determinant_fraction_free<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    let n = require_square(m)?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.data.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Ok(T::zero());
            };
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for r in (k + 1)..n {
            for c in (k + 1)..n {
                let v = pivot.clone() * a[r * n + c].clone()
                    - a[r * n + k].clone() * a[k * n + c].clone();
                a[r * n + c] = v / prev.clone();
            }
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// A square matrix verified to be skew-symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix<T>(Matrix<T>);

impl<T: Scalar> SkewMatrix<T> {
    pub fn new(m: Matrix<T>) -> Result<Self> {
        let n = require_square(&m)?;
        for r in 0..n {
            for c in r..n {
                if m[(r, c)] != -m[(c, r)].clone() {
                    return Err(Error::NotSkew { row: r, col: c });
                }
            }
        }
        Ok(SkewMatrix(m))
    }

    /// Builds the skew matrix whose strict upper triangle is produced by `f(i, j)`, `i < j`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in (i + 1)..n {
                let v = f(i, j);
                m[(j, i)] = -v.clone();
                m[(i, j)] = v;
            }
        }
        SkewMatrix(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.0
    }

    /// The principal submatrix on the given indices (any order).
    pub fn principal(&self, idx: &[usize]) -> SkewMatrix<T> {
        SkewMatrix(self.0.submatrix(idx, idx))
    }
}

/// Pfaffian by skew-symmetric elimination.
///
/// Each step pairs row `k` with a pivot partner, multiplies the running product
/// by the 2x2 pivot and replaces the trailing block by its Schur complement,
/// which leaves the Pfaffian of the remainder unchanged. Odd dimension gives 0,
/// the empty matrix gives 1.
pub fn pfaffian<T: Field>(m: &SkewMatrix<T>) -> T {
    let n = m.dim();
    if n % 2 == 1 {
        return T::zero();
    }
    let mut a = m.0.data.clone();
    let mut idx: Vec<usize> = (0..n).collect();
    let mut pf = T::one();
    let at = |a: &Vec<T>, i: usize, j: usize| a[i * n + j].clone();
    while !idx.is_empty() {
        let k = idx[0];
        let Some(pos) = choose_pivot(idx.iter().enumerate().skip(1).map(|(p, &j)| (p, at(&a, k, j))))
        else {
            return T::zero();
        };
        if pos != 1 {
            idx.swap(1, pos);
            pf = -pf;
        }
        let l = idx[1];
        let p = at(&a, k, l);
        pf = pf * p.clone();
        let rest: Vec<usize> = idx[2..].to_vec();
        for (x, &i) in rest.iter().enumerate() {
            for &j in &rest[x + 1..] {
                let corr = (at(&a, l, i) * at(&a, k, j) - at(&a, k, i) * at(&a, l, j)) / p.clone();
                let v = at(&a, i, j) + corr;
                a[j * n + i] = -v.clone();
                a[i * n + j] = v;
            }
        }
        idx = rest;
    }
    pf
}

/// Pfaffian by recursive expansion along the first row. Exponential cost;
/// needs only ring operations.
pub fn pfaffian_expansion<T: Scalar>(m: &SkewMatrix<T>) -> T {
    fn go<T: Scalar>(m: &Matrix<T>, idx: &[usize]) -> T {
        match idx.len() {
            0 => T::one(),
            n if n % 2 == 1 => T::zero(),
            _ => {
                let first = idx[0];
                let mut acc = T::zero();
                for pos in 1..idx.len() {
                    let entry = &m[(first, idx[pos])];
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = idx[1..]
                        .iter()
                        .enumerate()
                        .filter(|&(p, _)| p + 1 != pos)
                        .map(|(_, &i)| i)
                        .collect();
                    let term = entry.clone() * go(m, &rest);
                    acc = if pos % 2 == 1 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }
    let idx: Vec<usize> = (0..m.dim()).collect();
    go(&m.0, &idx)
}

/// Pfaffian of the principal submatrix picked out by the strictly increasing
/// index list `subset`.
pub fn pfaffian_minor<T: Field>(m: &SkewMatrix<T>, subset: &[usize]) -> Result<T> {
    if subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedIndices);
    }
    if let Some(&bad) = subset.iter().find(|&&i| i >= m.dim()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            dim: m.dim(),
        });
    }
    Ok(pfaffian(&m.principal(subset)))
}
