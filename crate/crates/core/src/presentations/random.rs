//! Random valid representations for property tests and randomized suites.

use std::sync::Arc;

use rand::Rng;

use super::{a_odd_representation, hopf_scalar_representation, Letter, PresentationError, Representation, Word};
use crate::scalars::{CycloNumber, FieldContext, Matrix};

/// A random root of unity of the ambient field (including -1).
pub fn root_of_unity<R: Rng>(ctx: &Arc<FieldContext>, rng: &mut R) -> CycloNumber {
    let n = ctx.roots_of_unity_order() as i64;
    let k = rng.gen_range(0..n);
    if ctx.conductor() % 2 == 1 && k % 2 == 1 {
        -CycloNumber::zeta_pow(ctx, k / 2)
    } else {
        CycloNumber::zeta_pow(ctx, if ctx.conductor() % 2 == 1 { k / 2 } else { k })
    }
}

/// Small nonzero-or-zero scalar: an integer in `-2..=2` times a root of unity.
pub fn small_scalar<R: Rng>(ctx: &Arc<FieldContext>, rng: &mut R) -> CycloNumber {
    let c = rng.gen_range(-2..=2i64);
    &CycloNumber::from_integer(ctx, c) * &root_of_unity(ctx, rng)
}

pub fn invertible_matrix<R: Rng>(ctx: &Arc<FieldContext>, r: usize, rng: &mut R) -> Matrix {
    loop {
        let mut m = Matrix::zero(ctx, r, r);
        for i in 0..r {
            for j in 0..r {
                let v = if i == j { &root_of_unity(ctx, rng) + &small_scalar(ctx, rng) } else { small_scalar(ctx, rng) };
                m.set(i, j, v);
            }
        }
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

pub fn diagonal_root_matrix<R: Rng>(ctx: &Arc<FieldContext>, r: usize, rng: &mut R) -> Matrix {
    let d: Vec<CycloNumber> = (0..r).map(|_| root_of_unity(ctx, rng)).collect();
    Matrix::diagonal(ctx, &d)
}

/// Hopf (`d` generator form): `rho(x0) = lambda Id`, random invertible `rho(x_i)`.
pub fn hopf_scalar<R: Rng>(ctx: &Arc<FieldContext>, d: usize, r: usize, rng: &mut R) -> Result<Representation, PresentationError> {
    let lambda = root_of_unity(ctx, rng);
    hopf_scalar_representation(&lambda, (1..d).map(|_| invertible_matrix(ctx, r, rng)).collect())
}

/// Hopf with every matrix diagonal (all commute), entries roots of unity or small integers.
pub fn hopf_diagonal<R: Rng>(ctx: &Arc<FieldContext>, d: usize, r: usize, rng: &mut R) -> Result<Representation, PresentationError> {
    let entry = |rng: &mut R| {
        if rng.gen_bool(0.75) {
            root_of_unity(ctx, rng)
        } else {
            CycloNumber::from_integer(ctx, rng.gen_range(2..=3) * if rng.gen_bool(0.5) { 1 } else { -1 })
        }
    };
    let matrices = (0..d).map(|_| Matrix::diagonal(ctx, &(0..r).map(|_| entry(rng)).collect::<Vec<_>>())).collect();
    Representation::new(ctx, r, matrices)
}

/// Rank-one Hopf representation with values roots of unity.
pub fn hopf_unitary_rank_one<R: Rng>(ctx: &Arc<FieldContext>, d: usize, rng: &mut R) -> Result<Representation, PresentationError> {
    let values: Vec<CycloNumber> = (0..d).map(|_| root_of_unity(ctx, rng)).collect();
    Representation::from_scalars(ctx, &values)
}

/// `A_{2n-1}` representation with `rho(b)` conjugate to a diagonal matrix whose `n`-th power is scalar.
pub fn a_odd<R: Rng>(ctx: &Arc<FieldContext>, n: usize, r: usize, rng: &mut R) -> Result<Representation, PresentationError> {
    let roots: Vec<CycloNumber> = (0..ctx.roots_of_unity_order() as i64)
        .map(|k| CycloNumber::zeta_pow(ctx, k))
        .chain(std::iter::once(-CycloNumber::one(ctx)))
        .filter(|z| z.pow(n as i64).map(|p| p.is_one()).unwrap_or(false))
        .collect();
    let mu = if rng.gen_bool(0.5) { root_of_unity(ctx, rng) } else { CycloNumber::from_integer(ctx, 2) };
    let diag: Vec<CycloNumber> = (0..r).map(|_| &mu * &roots[rng.gen_range(0..roots.len())]).collect();
    let p = invertible_matrix(ctx, r, rng);
    let b = p.mul(&Matrix::diagonal(ctx, &diag)).mul(&p.inverse()?);
    let a0 = invertible_matrix(ctx, r, rng);
    a_odd_representation(n, &a0, &b)
}

/// Random word of length at most `max_len` over `generators` generators.
pub fn word<R: Rng>(generators: usize, max_len: usize, rng: &mut R) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| Letter::new(rng.gen_range(0..generators), rng.gen_bool(0.5))).collect())
}
