use std::fmt;
use std::sync::Arc;

use super::{LaurentMatrix, LaurentPoly};
use crate::scalars::FieldContext;

/// Structure of a finitely generated `F[t, t^-1]`-module.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleShape {
    pub free_rank: usize,
    /// Normalized product of the elementary divisors.
    pub torsion_order: LaurentPoly,
    /// Normalized nonunit divisors, each dividing the next.
    pub elementary_divisors: Vec<LaurentPoly>,
}

impl ModuleShape {
    pub fn new(ctx: &Arc<FieldContext>, free_rank: usize, divisors: &[LaurentPoly]) -> Self {
        let elementary_divisors: Vec<LaurentPoly> = divisors.iter().filter(|d| !d.is_unit()).map(LaurentPoly::normalize).collect();
        let torsion_order = elementary_divisors.iter().fold(LaurentPoly::one(ctx), |acc, d| &acc * d).normalize();
        ModuleShape { free_rank, torsion_order, elementary_divisors }
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.elementary_divisors.is_empty()
    }
}

impl fmt::Debug for ModuleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleShape(free {}, order {}, divisors {:?})", self.free_rank, self.torsion_order, self.elementary_divisors)
    }
}

/// Result of a Smith normal form computation.
///
/// With certificates, `left * M * right` equals the `rows x cols` matrix
/// carrying `divisors` on its diagonal.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    /// Normalized nonzero diagonal entries `d_1 | d_2 | ...` (units included, as 1).
    pub divisors: Vec<LaurentPoly>,
    pub left: Option<LaurentMatrix>,
    pub right: Option<LaurentMatrix>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Cokernel of `M: F^cols -> F^rows` (column vectors).
    pub fn cokernel(&self, ctx: &Arc<FieldContext>) -> ModuleShape {
        ModuleShape::new(ctx, self.rows - self.rank(), &self.divisors)
    }

    pub fn diagonal(&self, ctx: &Arc<FieldContext>) -> LaurentMatrix {
        let mut d = LaurentMatrix::zero(ctx, self.rows, self.cols);
        for (i, v) in self.divisors.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

struct Reducer {
    m: Vec<Vec<LaurentPoly>>,
    left: Option<Vec<Vec<LaurentPoly>>>,
    right: Option<Vec<Vec<LaurentPoly>>>,
    rows: usize,
    cols: usize,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            self.m.swap(a, b);
            if let Some(u) = &mut self.left {
                u.swap(a, b);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for row in &mut self.m {
                row.swap(a, b);
            }
            if let Some(v) = &mut self.right {
                for row in v.iter_mut() {
                    row.swap(a, b);
                }
            }
        }
    }

    /// row[target] -= q * row[source]
    fn row_axpy(&mut self, target: usize, source: usize, q: &LaurentPoly, from_col: usize) {
        for j in from_col..self.cols {
            if !self.m[source][j].is_zero() {
                let v = &self.m[target][j] - &(q * &self.m[source][j]);
                self.m[target][j] = v;
            }
        }
        if let Some(u) = &mut self.left {
            for j in 0..u[source].len() {
                if !u[source][j].is_zero() {
                    let v = &u[target][j] - &(q * &u[source][j]);
                    u[target][j] = v;
                }
            }
        }
    }

    /// col[target] -= q * col[source]
    fn col_axpy(&mut self, target: usize, source: usize, q: &LaurentPoly, from_row: usize) {
        for i in from_row..self.rows {
            if !self.m[i][source].is_zero() {
                let v = &self.m[i][target] - &(q * &self.m[i][source]);
                self.m[i][target] = v;
            }
        }
        if let Some(v) = &mut self.right {
            for row in v.iter_mut() {
                if !row[source].is_zero() {
                    let x = &row[target] - &(q * &row[source]);
                    row[target] = x;
                }
            }
        }
    }

    fn scale_row(&mut self, i: usize, unit: &LaurentPoly) {
        for x in &mut self.m[i] {
            *x = &*x * unit;
        }
        if let Some(u) = &mut self.left {
            for x in &mut u[i] {
                *x = &*x * unit;
            }
        }
    }

    /// Smallest-span nonzero entry of the trailing submatrix, ties broken by position.
    fn pivot_in_submatrix(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if let Some(s) = self.m[i][j].span() {
                    if best.map_or(true, |(bs, _, _)| s < bs) {
                        best = Some((s, i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn pivot_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (self.m[t][t].span().unwrap_or(usize::MAX), t, t);
        for i in t + 1..self.rows {
            if let Some(s) = self.m[i][t].span() {
                if s < best.0 {
                    best = (s, i, t);
                }
            }
        }
        for j in t + 1..self.cols {
            if let Some(s) = self.m[t][j].span() {
                if s < best.0 {
                    best = (s, t, j);
                }
            }
        }
        (best.1, best.2)
    }

    fn run(&mut self) -> Vec<LaurentPoly> {
        let mut divisors = Vec::new();
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((pi, pj)) = self.pivot_in_submatrix(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.rows {
                    if self.m[i][t].is_zero() {
                        continue;
                    }
                    let (q, r) = self.m[i][t].div_rem(&self.m[t][t]).expect("pivot is nonzero");
                    self.row_axpy(i, t, &q, t);
                    clean &= r.is_zero();
                }
                for j in t + 1..self.cols {
                    if self.m[t][j].is_zero() {
                        continue;
                    }
                    let (q, r) = self.m[t][j].div_rem(&self.m[t][t]).expect("pivot is nonzero");
                    self.col_axpy(j, t, &q, t);
                    clean &= r.is_zero();
                }
                if !clean {
                    let (pi, pj) = self.pivot_in_cross(t);
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                if self.m[t][t].is_unit() {
                    break;
                }
                let pivot = self.m[t][t].clone();
                let offending = (t + 1..self.rows).find(|&i| (t + 1..self.cols).any(|j| !pivot.divides(&self.m[i][j])));
                match offending {
                    Some(i) => {
                        let minus_one = -&LaurentPoly::one(pivot.context().unwrap());
                        self.row_axpy(t, i, &minus_one, t);
                    }
                    None => break,
                }
            }
            let unit = self.m[t][t].unit_part().unwrap();
            let inv = LaurentPoly::monomial(unit.leading().unwrap().inverse().unwrap(), -unit.low());
            self.scale_row(t, &inv);
            divisors.push(self.m[t][t].clone());
            t += 1;
        }
        divisors
    }
}

fn identity_rows(ctx: &Arc<FieldContext>, n: usize) -> Vec<Vec<LaurentPoly>> {
    LaurentMatrix::identity(ctx, n).into_rows()
}

fn reduce(m: &LaurentMatrix, certificates: bool) -> SmithForm {
    let ctx = m.context();
    let mut r = Reducer {
        m: m.clone().into_rows(),
        left: certificates.then(|| identity_rows(ctx, m.rows())),
        right: certificates.then(|| identity_rows(ctx, m.cols())),
        rows: m.rows(),
        cols: m.cols(),
    };
    let divisors = r.run();
    SmithForm {
        rows: m.rows(),
        cols: m.cols(),
        divisors,
        left: r.left.map(|u| LaurentMatrix::from_rows(ctx, u).unwrap()),
        right: r.right.map(|v| LaurentMatrix::from_rows(ctx, v).unwrap()),
    }
}

/// Smith normal form over `F[t, t^-1]` with unimodular certificates.
pub fn smith_normal_form(m: &LaurentMatrix) -> SmithForm {
    reduce(m, true)
}

/// Elementary divisors only (no certificates), normalized, including unit divisors as 1.
pub fn elementary_divisors(m: &LaurentMatrix) -> Vec<LaurentPoly> {
    reduce(m, false).divisors
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

    fn check_certificate(m: &LaurentMatrix, s: &SmithForm) {
        let u = s.left.as_ref().unwrap();
        let v = s.right.as_ref().unwrap();
        assert_eq!(u.mul(m).mul(v), s.diagonal(&q()));
        assert!(u.determinant().unwrap().is_unit());
        assert!(v.determinant().unwrap().is_unit());
    }

    #[test]
    fn already_diagonal() {
        let m = LaurentMatrix::diagonal(&q(), &[p(0, &[-1, 1]), p(0, &[-1, 0, 1])]);
        let s = smith_normal_form(&m);
        assert_eq!(s.divisors, vec![p(0, &[-1, 1]), p(0, &[-1, 0, 1])]);
        check_certificate(&m, &s);
    }

    #[test]
    fn zero_matrix() {
        let m = LaurentMatrix::zero(&q(), 2, 3);
        let s = smith_normal_form(&m);
        assert!(s.divisors.is_empty());
        let coker = s.cokernel(&q());
        assert_eq!(coker.free_rank, 2);
        assert!(coker.elementary_divisors.is_empty());
    }

    #[test]
    fn upper_triangular_example() {
        // [[t, 1], [0, t]]: the unit entry becomes the first pivot, then t^2 remains
        let m = LaurentMatrix::from_rows(&q(), vec![vec![p(1, &[1]), p(0, &[1])], vec![LaurentPoly::zero(), p(1, &[1])]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.divisors.len(), 2);
        assert!(s.divisors[0].is_one());
        // t^2 is a unit in the Laurent ring
        assert!(s.divisors[1].is_one());
        check_certificate(&m, &s);

        // same shape with t - 1 in place of t: divisors (1, (t - 1)^2)
        let x = p(0, &[-1, 1]);
        let m = LaurentMatrix::from_rows(&q(), vec![vec![x.clone(), p(0, &[1])], vec![LaurentPoly::zero(), x.clone()]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.divisors, vec![p(0, &[1]), &x * &x]);
        check_certificate(&m, &s);
    }

    #[test]
    fn divisibility_is_enforced() {
        // diag(t - 1, t + 1) has invariant factors 1, t^2 - 1
        let m = LaurentMatrix::diagonal(&q(), &[p(0, &[-1, 1]), p(0, &[1, 1])]);
        let s = smith_normal_form(&m);
        assert_eq!(s.divisors, vec![p(0, &[1]), p(0, &[-1, 0, 1])]);
        check_certificate(&m, &s);
        assert_eq!(s.cokernel(&q()).torsion_order, p(0, &[-1, 0, 1]));
    }
}
