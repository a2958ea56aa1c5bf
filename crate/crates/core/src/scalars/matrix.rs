use std::fmt;
use std::sync::Arc;

use super::{CycloNumber, FieldContext, ScalarError};

/// Dense matrix over a cyclotomic field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ctx: Arc<FieldContext>,
    rows: usize,
    cols: usize,
    entries: Vec<CycloNumber>,
}

impl Matrix {
    pub fn zero(ctx: &Arc<FieldContext>, rows: usize, cols: usize) -> Self {
        Matrix { ctx: ctx.clone(), rows, cols, entries: vec![CycloNumber::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &Arc<FieldContext>, n: usize) -> Self {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            m.entries[i * n + i] = CycloNumber::one(ctx);
        }
        m
    }

    pub fn scalar(ctx: &Arc<FieldContext>, n: usize, value: &CycloNumber) -> Self {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            m.entries[i * n + i] = value.clone();
        }
        m
    }

    pub fn diagonal(ctx: &Arc<FieldContext>, values: &[CycloNumber]) -> Self {
        let n = values.len();
        let mut m = Self::zero(ctx, n, n);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * n + i] = v.clone();
        }
        m
    }

    /// Build from rows; returns `None` if the rows are ragged or empty.
    pub fn from_rows(ctx: &Arc<FieldContext>, rows: Vec<Vec<CycloNumber>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len)?;
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Matrix { ctx: ctx.clone(), rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
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

    pub fn get(&self, i: usize, j: usize) -> &CycloNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloNumber) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycloNumber] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[CycloNumber] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycloNumber::is_zero)
    }

    /// The scalar `c` if the matrix equals `c * Id`.
    pub fn as_scalar(&self) -> Option<CycloNumber> {
        if !self.is_square() {
            return None;
        }
        let c = self.get(0, 0).clone();
        let ok = (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { *self.get(i, j) == c } else { self.get(i, j).is_zero() }));
        ok.then_some(c)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zero(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: &CycloNumber) -> Matrix {
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|a| a * c).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn conj(&self) -> Matrix {
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, entries: self.entries.iter().map(CycloNumber::conj).collect() }
    }

    pub fn embed(&self, target: &Arc<FieldContext>) -> Result<Matrix, ScalarError> {
        let entries = self.entries.iter().map(|e| e.embed(target)).collect::<Result<_, _>>()?;
        Ok(Matrix { ctx: target.clone(), rows: self.rows, cols: self.cols, entries })
    }

    /// Row-reduce a copy; returns (echelon form, rank, determinant sign/scale factor).
    fn eliminate(&self) -> (Matrix, usize, CycloNumber) {
        let mut m = self.clone();
        let mut factor = CycloNumber::one(&self.ctx);
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else { continue };
            if p != rank {
                m.swap_rows(p, rank);
                factor = -factor;
            }
            let inv = m.get(rank, col).inverse().expect("nonzero pivot");
            for r in rank + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col) * &inv;
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&f * m.get(rank, c));
                    m.set(r, c, v);
                }
            }
            rank += 1;
        }
        (m, rank, factor)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1
    }

    pub fn determinant(&self) -> CycloNumber {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let (m, rank, factor) = self.eliminate();
        if rank < self.rows {
            return CycloNumber::zero(&self.ctx);
        }
        (0..self.rows).fold(factor, |acc, i| &acc * m.get(i, i))
    }

    pub fn inverse(&self) -> Result<Matrix, ScalarError> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(&self.ctx, n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(ScalarError::DivisionByZero)?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let piv = a.get(col, col).inverse()?;
            for j in 0..n {
                a.set(col, j, a.get(col, j) * &piv);
                inv.set(col, j, inv.get(col, j) * &piv);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    a.set(r, j, a.get(r, j) - &(&f * a.get(col, j)));
                    inv.set(r, j, inv.get(r, j) - &(&f * inv.get(col, j)));
                }
            }
        }
        Ok(inv)
    }

    pub fn pow(&self, e: i64) -> Result<Matrix, ScalarError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Matrix::identity(&self.ctx, self.rows);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(ctx: &Arc<FieldContext>, v: i64) -> CycloNumber {
        CycloNumber::from_integer(ctx, v)
    }

    #[test]
    fn determinant_and_inverse() {
        let q = FieldContext::rational();
        let m = Matrix::from_rows(&q, vec![vec![int(&q, 2), int(&q, 1)], vec![int(&q, 7), int(&q, 4)]]).unwrap();
        assert_eq!(m.determinant(), int(&q, 1));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let sing = Matrix::from_rows(&q, vec![vec![int(&q, 1), int(&q, 2)], vec![int(&q, 2), int(&q, 4)]]).unwrap();
        assert!(sing.determinant().is_zero());
        assert_eq!(sing.rank(), 1);
        assert!(sing.inverse().is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        let q = FieldContext::rational();
        assert!(Matrix::from_rows(&q, vec![vec![int(&q, 1)], vec![int(&q, 1), int(&q, 2)]]).is_none());
    }
}
