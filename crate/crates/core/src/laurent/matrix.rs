use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use super::{LaurentError, LaurentPoly};
use crate::scalars::{CycloNumber, FieldContext, Matrix, ScalarError};

/// Dense matrix over `F[t, t^-1]`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    ctx: Arc<FieldContext>,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(ctx: &Arc<FieldContext>, rows: usize, cols: usize) -> Self {
        LaurentMatrix { ctx: ctx.clone(), rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(ctx: &Arc<FieldContext>, n: usize) -> Self {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(ctx));
        }
        m
    }

    pub fn diagonal(ctx: &Arc<FieldContext>, values: &[LaurentPoly]) -> Self {
        let n = values.len();
        let mut m = Self::zero(ctx, n, n);
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    /// `t^k * m` for a scalar matrix `m`.
    pub fn monomial(m: &Matrix, k: i64) -> Self {
        let mut out = Self::zero(m.context(), m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, LaurentPoly::monomial(m.get(i, j).clone(), k));
            }
        }
        out
    }

    pub fn from_rows(ctx: &Arc<FieldContext>, rows: Vec<Vec<LaurentPoly>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(LaurentMatrix { ctx: ctx.clone(), rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
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

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    /// Copy `block` into the submatrix whose top-left corner is `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &LaurentMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(row + i, col + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> LaurentMatrix {
        self.select(&(row..row + rows).collect_vec(), &(col..col + cols).collect_vec())
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> LaurentMatrix {
        let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        LaurentMatrix { ctx: self.ctx.clone(), rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn transpose(&self) -> LaurentMatrix {
        let mut out = Self::zero(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zero(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        LaurentMatrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        LaurentMatrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: &LaurentPoly) -> LaurentMatrix {
        let entries = self.entries.iter().map(|a| a * c).collect();
        LaurentMatrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, entries }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<LaurentPoly, LaurentError> {
        if self.rows != self.cols {
            return Err(LaurentError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one(&self.ctx));
        }
        let mut m: Vec<Vec<LaurentPoly>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one(&self.ctx);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                // prefer the pivot of smallest span to keep degrees down
                let Some(p) = (k + 1..n).filter(|&i| !m[i][k].is_zero()).min_by_key(|&i| m[i][k].span()) else {
                    return Ok(LaurentPoly::zero());
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[i][k] = LaurentPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if negate { -&det } else { det })
    }

    /// Normalized gcd of all `k x k` minors; zero when they all vanish.
    pub fn minors_gcd(&self, k: usize) -> Result<LaurentPoly, LaurentError> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(LaurentError::MinorSizeOutOfRange { k, rows: self.rows, cols: self.cols });
        }
        let mut g = LaurentPoly::zero();
        for rows in (0..self.rows).combinations(k) {
            for cols in (0..self.cols).combinations(k) {
                let minor = self.select(&rows, &cols).determinant()?;
                g = g.gcd(&minor);
                if g.is_unit() {
                    return Ok(g);
                }
            }
        }
        Ok(g)
    }

    /// Substitute `t = a` entrywise.
    pub fn specialize(&self, a: &CycloNumber) -> Result<Matrix, LaurentError> {
        let mut out = Matrix::zero(&self.ctx, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).evaluate(a)?);
            }
        }
        Ok(out)
    }

    pub fn embed(&self, target: &Arc<FieldContext>) -> Result<LaurentMatrix, ScalarError> {
        let entries = self.entries.iter().map(|e| e.embed(target)).collect::<Result<_, _>>()?;
        Ok(LaurentMatrix { ctx: target.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<LaurentPoly>> {
        let cols = self.cols;
        let mut it = self.entries.into_iter();
        (0..self.rows).map(|_| it.by_ref().take(cols).collect()).collect()
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = (0..self.cols).map(|j| self.get(i, j).to_string()).join(" | ");
            writeln!(f, "[ {row} ]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<FieldContext> {
        FieldContext::rational()
    }

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_integers(&q(), low, c)
    }

    #[test]
    fn determinant_examples() {
        assert!(LaurentMatrix::identity(&q(), 3).determinant().unwrap().is_one());
        let d = LaurentMatrix::diagonal(&q(), &[p(0, &[-1, 1]), p(0, &[1, 1])]);
        assert_eq!(d.determinant().unwrap(), p(0, &[-1, 0, 1]));
        let m = LaurentMatrix::from_rows(&q(), vec![vec![p(1, &[1]), p(0, &[1])], vec![p(0, &[1]), p(1, &[1])]]).unwrap();
        assert_eq!(m.determinant().unwrap(), p(0, &[-1, 0, 1]));
        assert_eq!(LaurentMatrix::zero(&q(), 2, 3).determinant(), Err(LaurentError::NotSquare(2, 3)));
    }

    #[test]
    fn determinant_needs_pivoting() {
        let m = LaurentMatrix::from_rows(
            &q(),
            vec![
                vec![LaurentPoly::zero(), p(0, &[1]), p(0, &[2])],
                vec![p(-1, &[1]), LaurentPoly::zero(), p(0, &[1])],
                vec![p(0, &[1, 1]), p(0, &[3]), LaurentPoly::zero()],
            ],
        )
        .unwrap();
        // cofactor expansion along the first row
        let expect = &(&p(0, &[-1]) * &(&p(0, &[0]) - &(&p(0, &[1]) * &p(0, &[1, 1])))) + &(&p(0, &[2]) * &p(-1, &[3]));
        assert_eq!(m.determinant().unwrap(), expect);
    }

    #[test]
    fn minors_gcd_examples() {
        assert!(LaurentMatrix::identity(&q(), 2).minors_gcd(2).unwrap().is_one());
        let col = LaurentMatrix::from_rows(&q(), vec![vec![p(0, &[-1, 1])], vec![p(0, &[-1, 0, 1])]]).unwrap();
        assert_eq!(col.minors_gcd(1).unwrap(), p(0, &[-1, 1]));
        assert!(col.minors_gcd(2).is_err());
        assert!(col.minors_gcd(0).is_err());
        assert!(LaurentMatrix::zero(&q(), 2, 2).minors_gcd(1).unwrap().is_zero());
    }

    #[test]
    fn specialize_identity() {
        let q5 = FieldContext::cyclotomic(5).unwrap();
        let id = LaurentMatrix::identity(&q5, 3);
        assert!(id.specialize(&CycloNumber::zeta(&q5)).unwrap().is_identity());
        assert!(id.specialize(&CycloNumber::zero(&q5)).is_err());
    }
}
