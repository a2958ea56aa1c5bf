use std::sync::Arc;

use num_integer::Integer;

use super::{Augmentation, Presentation, PresentationError, Representation, Word};
use crate::scalars::{CycloNumber, FieldContext, Matrix};

fn indexed(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn commutator(a: usize, b: usize) -> Word {
    Word::from_powers(&[(a, 1), (b, 1), (a, -1), (b, -1)])
}

fn require(cond: bool, msg: &str) -> Result<(), PresentationError> {
    if cond {
        Ok(())
    } else {
        Err(PresentationError::InvalidParameter(msg.to_string()))
    }
}

/// Generalized Hopf link group `<x0, ..., x_{d-1} | [x0, x_i]>`.
pub fn hopf_presentation(d: usize) -> Result<Presentation, PresentationError> {
    require(d >= 2, "hopf needs d >= 2")?;
    Presentation::new(indexed("x", d), (1..d).map(|i| commutator(0, i)).collect())
}

/// The `d + 1` generator form `<x0, ..., x_d | x_d ... x_1 x0^-1, [x0, x_i]>`
/// in which `x_1, ..., x_d` are the meridians.
pub fn hopf_full_presentation(d: usize) -> Result<Presentation, PresentationError> {
    require(d >= 2, "hopf needs d >= 2")?;
    let mut product: Word = (1..=d).rev().map(Word::generator).fold(Word::identity(), |acc, w| acc.concat(&w));
    product.push(super::Letter::new(0, true));
    let mut relators = vec![product];
    relators.extend((1..=d).map(|i| commutator(0, i)));
    Presentation::new(indexed("x", d + 1), relators)
}

/// Meridians of the `d` components as words in the `d` generator form: `x_1, ..., x_{d-1}`
/// and the extra meridian `x0 x_1^-1 ... x_{d-1}^-1`.
pub fn hopf_meridian_words(d: usize) -> Vec<Word> {
    let mut out: Vec<Word> = (1..d).map(Word::generator).collect();
    let mut last = Word::generator(0);
    for i in 1..d {
        last.push(super::Letter::new(i, true));
    }
    out.push(last);
    out
}

/// `x0` written as the product of all meridians, `x_d x_{d-1} ... x_1`, unreduced.
pub fn hopf_x0_product(d: usize) -> Word {
    let m = hopf_meridian_words(d);
    m.iter().rev().fold(Word::identity(), |acc, w| acc.concat(w))
}

/// Augmentation of the `d` generator form sending the `i`-th meridian to `weights[i]`.
pub fn hopf_augmentation(weights: &[i64]) -> Result<Augmentation, PresentationError> {
    require(weights.len() >= 2, "hopf needs d >= 2")?;
    let d = weights.len();
    let mut values = vec![weights.iter().sum()];
    values.extend_from_slice(&weights[..d - 1]);
    Ok(Augmentation::new(values))
}

pub fn hopf_full_augmentation(weights: &[i64]) -> Result<Augmentation, PresentationError> {
    require(weights.len() >= 2, "hopf needs d >= 2")?;
    let mut values = vec![weights.iter().sum()];
    values.extend_from_slice(weights);
    Ok(Augmentation::new(values))
}

/// Total linking number: every meridian goes to 1.
pub fn hopf_lk(d: usize) -> Result<Augmentation, PresentationError> {
    hopf_augmentation(&vec![1; d])
}

/// `rho(x0) = lambda Id` and arbitrary invertible `rho(x_i)`.
pub fn hopf_scalar_representation(lambda: &CycloNumber, others: Vec<Matrix>) -> Result<Representation, PresentationError> {
    let ctx = lambda.context().clone();
    let r = others.first().map(Matrix::rows).unwrap_or(1);
    let mut matrices = vec![Matrix::scalar(&ctx, r, lambda)];
    matrices.extend(others);
    Representation::new(&ctx, r, matrices)
}

/// Full form with `rho(x0) = lambda Id`; the last meridian is forced by the product relator.
pub fn hopf_full_scalar_representation(lambda: &CycloNumber, meridians: Vec<Matrix>) -> Result<Representation, PresentationError> {
    let ctx = lambda.context().clone();
    let r = meridians.first().map(Matrix::rows).unwrap_or(1);
    let x0 = Matrix::scalar(&ctx, r, lambda);
    let prod = meridians.iter().rev().fold(Matrix::identity(&ctx, r), |acc, m| acc.mul(m));
    let last = x0.mul(&prod.inverse()?);
    let mut matrices = vec![x0];
    matrices.extend(meridians);
    matrices.push(last);
    Representation::new(&ctx, r, matrices)
}

/// Link group of the `A_{2n-1}` germ `x^2 = y^{2n}`: generators `a0, ..., a_{2n-1}, b`
/// (with `b` for beta), relators ordered as the even chain `b a_{2k+2} b^-1 a_{2k}^-1`,
/// the odd chain `b a_{2k+3} b^-1 a_{2k+1}^-1` and finally `a1 a0 b^-1`.
pub fn a_odd_presentation(n: usize) -> Result<Presentation, PresentationError> {
    require(n >= 1, "a_odd needs n >= 1")?;
    let m = 2 * n;
    let b = m;
    let mut names = indexed("a", m);
    names.push("b".to_string());
    let conj = |i: usize| Word::from_powers(&[(b, 1), ((i + 2) % m, 1), (b, -1), (i, -1)]);
    let mut relators: Vec<Word> = (0..n).map(|k| conj(2 * k)).collect();
    relators.extend((0..n).map(|k| conj(2 * k + 1)));
    relators.push(Word::from_powers(&[(1, 1), (0, 1), (b, -1)]));
    Presentation::new(names, relators)
}

/// Index of the relator `b a1 b^-1 a_{2n-1}^-1`, which is a consequence of the others.
pub fn a_odd_redundant_relator(n: usize) -> usize {
    2 * n - 1
}

/// `a_odd_presentation` without its redundant relator (deficiency 1).
pub fn a_odd_reduced_presentation(n: usize) -> Result<Presentation, PresentationError> {
    Ok(a_odd_presentation(n)?.without_relator(a_odd_redundant_relator(n)))
}

/// Branch weights: even `a_i` to `even`, odd `a_i` to `odd`, `b` to their sum.
pub fn a_odd_augmentation(n: usize, even: i64, odd: i64) -> Augmentation {
    let mut values: Vec<i64> = (0..2 * n).map(|i| if i % 2 == 0 { even } else { odd }).collect();
    values.push(even + odd);
    Augmentation::new(values)
}

/// Representation determined by `rho(a0) = a0` and `rho(b) = b`; valid when `b^n` is central
/// in the group generated by `a0` and `b` (for instance scalar).
pub fn a_odd_representation(n: usize, a0: &Matrix, b: &Matrix) -> Result<Representation, PresentationError> {
    let ctx = a0.context().clone();
    let a1 = b.mul(&a0.inverse()?);
    let b_inv = b.inverse()?;
    let mut matrices = Vec::with_capacity(2 * n + 1);
    let mut left = Matrix::identity(&ctx, a0.rows());
    let mut right = Matrix::identity(&ctx, a0.rows());
    let mut evens = Vec::new();
    let mut odds = Vec::new();
    for _ in 0..n {
        evens.push(left.mul(a0).mul(&right));
        odds.push(left.mul(&a1).mul(&right));
        left = left.mul(&b_inv);
        right = b.mul(&right);
    }
    for k in 0..n {
        matrices.push(evens[k].clone());
        matrices.push(odds[k].clone());
    }
    matrices.push(b.clone());
    Representation::new(&ctx, a0.rows(), matrices)
}

/// `<x, y | x^p y^-q>` for coprime `p, q`.
pub fn torus_germ_presentation(p: u32, q: u32) -> Result<Presentation, PresentationError> {
    require(p >= 1 && q >= 1, "torus germ needs positive p, q")?;
    require(p.gcd(&q) == 1, "torus germ needs coprime p, q")?;
    Presentation::new(vec!["x".into(), "y".into()], vec![Word::from_powers(&[(0, p as i64), (1, -(q as i64))])])
}

/// Meridian weight `n` on the germ `x^p = y^q`: `x` goes to `q n` and `y` to `p n`.
pub fn torus_germ_augmentation(p: u32, q: u32, n: i64) -> Augmentation {
    Augmentation::new(vec![q as i64 * n, p as i64 * n])
}

/// Braid form of the cusp, `<x, y | x y x (y x y)^-1>`; both generators are meridians.
pub fn cusp_presentation() -> Presentation {
    Presentation::new(vec!["x".into(), "y".into()], vec![Word::from_powers(&[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])]).unwrap()
}

/// A local factor of a transversal union.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// Smooth branch: one free generator.
    Line,
    Cusp,
    Torus { p: u32, q: u32 },
}

impl Factor {
    pub fn presentation(self) -> Result<Presentation, PresentationError> {
        match self {
            Factor::Line => Presentation::new(vec!["x".into()], vec![]),
            Factor::Cusp => Ok(cusp_presentation()),
            Factor::Torus { p, q } => torus_germ_presentation(p, q),
        }
    }

    /// Generator values for meridian weight `n`.
    pub fn augmentation(self, n: i64) -> Vec<i64> {
        match self {
            Factor::Line => vec![n],
            Factor::Cusp => vec![n, n],
            Factor::Torus { p, q } => torus_germ_augmentation(p, q, n).values().to_vec(),
        }
    }
}

fn union_names(count: usize) -> Vec<String> {
    const BASE: [&str; 6] = ["x", "y", "z", "w", "u", "v"];
    (0..count).map(|i| BASE.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("g{i}"))).collect()
}

/// Free product of the factors plus every commutator `[g, h]` with `g` and `h`
/// in different factors, ordered by factor pair then by generator.
pub fn transversal_union_presentation(factors: &[Factor]) -> Result<Presentation, PresentationError> {
    require(!factors.is_empty(), "transversal union needs a factor")?;
    let pieces = factors.iter().map(|f| f.presentation()).collect::<Result<Vec<_>, _>>()?;
    let mut offsets = Vec::new();
    let mut total = 0;
    for p in &pieces {
        offsets.push(total);
        total += p.generators();
    }
    let shift = |w: &Word, k: usize| Word::from_letters(w.letters().iter().map(|l| super::Letter::new(l.generator + k, l.inverse)).collect());
    let mut relators = Vec::new();
    for (p, &k) in pieces.iter().zip(&offsets) {
        relators.extend(p.relators().iter().map(|w| shift(w, k)));
    }
    for a in 0..pieces.len() {
        for b in a + 1..pieces.len() {
            for g in offsets[a]..offsets[a] + pieces[a].generators() {
                for h in offsets[b]..offsets[b] + pieces[b].generators() {
                    relators.push(commutator(g, h));
                }
            }
        }
    }
    let names = if pieces.len() == 1 { pieces[0].generator_names().to_vec() } else { union_names(total) };
    Presentation::new(names, relators)
}

pub fn transversal_union_augmentation(factors: &[Factor], weights: &[i64]) -> Augmentation {
    Augmentation::new(factors.iter().zip(weights).flat_map(|(f, &n)| f.augmentation(n)).collect())
}

/// Trivial representation of dimension `r` on `pres`.
pub fn trivial_representation(ctx: &Arc<FieldContext>, r: usize, pres: &Presentation) -> Representation {
    Representation::trivial(ctx, r, pres.generators())
}

/// Names of the available builder families, for listings and diagnostics.
pub const BUILDERS: &[(&str, &str)] = &[
    ("hopf", "d=<n>: generalized Hopf link, generators x0..x{d-1}"),
    ("hopf_full", "d=<n>: Hopf link with all d meridians, generators x0..x{d}"),
    ("a_odd", "n=<n>: A_{2n-1} germ, generators a0..a{2n-1}, b"),
    ("a_odd_reduced", "n=<n>: A_{2n-1} germ without its redundant relator"),
    ("torus", "p=<p> q=<q>: torus germ x^p = y^q"),
    ("cusp", "braid form of the cusp"),
    ("union", "factors=<f,...>: transversal union of line | cusp | torus(p;q)"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{validate, Augmentation};

    #[test]
    fn hopf_shapes() {
        for (d, g, r) in [(2, 2, 1), (3, 3, 2), (5, 5, 4)] {
            let p = hopf_presentation(d).unwrap();
            assert_eq!((p.generators(), p.relators().len()), (g, r));
        }
        assert!(hopf_presentation(1).is_err());
        let full = hopf_full_presentation(3).unwrap();
        assert_eq!(full.to_string(), "< x0, x1, x2, x3 | x3 x2 x1 x0^-1, x0 x1 x0^-1 x1^-1, x0 x2 x0^-1 x2^-1, x0 x3 x0^-1 x3^-1 >");
    }

    #[test]
    fn x0_as_meridian_product() {
        for d in 2..6 {
            assert_eq!(hopf_x0_product(d).reduce(), Word::generator(0));
            let weights: Vec<i64> = (1..=d as i64).collect();
            let eps = hopf_augmentation(&weights).unwrap();
            assert_eq!(eps.evaluate(&hopf_x0_product(d)), weights.iter().sum::<i64>());
        }
    }

    #[test]
    fn a_odd_shape() {
        let p = a_odd_presentation(2).unwrap();
        assert_eq!((p.generators(), p.relators().len()), (5, 5));
        assert_eq!(p.render(&p.relators()[0]), "b a2 b^-1 a0^-1");
        assert_eq!(p.render(&p.relators()[4]), "a1 a0 b^-1");
        let p = a_odd_presentation(3).unwrap();
        assert_eq!((p.generators(), p.relators().len()), (7, 7));
        assert_eq!(p.render(&p.relators()[2]), "b a0 b^-1 a4^-1");
        assert_eq!(p.render(&p.relators()[5]), "b a1 b^-1 a5^-1");
    }

    #[test]
    fn a_odd_representation_is_valid() {
        let q = FieldContext::cyclotomic(4).unwrap();
        let i = CycloNumber::zeta(&q);
        let one = CycloNumber::one(&q);
        let zero = CycloNumber::zero(&q);
        // b = diag(i, -i) has b^2 = -Id, central
        let b = Matrix::diagonal(&q, &[i.clone(), -&i]);
        let a0 = Matrix::from_rows(&q, vec![vec![one.clone(), one.clone()], vec![zero, one]]).unwrap();
        let rho = a_odd_representation(2, &a0, &b).unwrap();
        let p = a_odd_presentation(2).unwrap();
        let report = validate(&p, &a_odd_augmentation(2, 1, 1), &rho).unwrap();
        assert!(report.is_valid(), "{report:?}");
        assert_eq!(report.cokernel_size, Some(1));
    }

    #[test]
    fn torus_and_unions() {
        assert_eq!(torus_germ_presentation(2, 5).unwrap().relators()[0].len(), 7);
        assert!(torus_germ_presentation(2, 4).is_err());
        let eps = torus_germ_augmentation(2, 3, 1);
        assert_eq!(eps.evaluate(&torus_germ_presentation(2, 3).unwrap().relators()[0]), 0);

        let cl = transversal_union_presentation(&[Factor::Cusp, Factor::Line]).unwrap();
        assert_eq!((cl.generators(), cl.relators().len()), (3, 3));
        let tt = transversal_union_presentation(&[Factor::Torus { p: 2, q: 3 }, Factor::Torus { p: 2, q: 5 }]).unwrap();
        assert_eq!(
            tt.to_string(),
            "< x, y, z, w | x^2 y^-3, z^2 w^-5, x z x^-1 z^-1, x w x^-1 w^-1, y z y^-1 z^-1, y w y^-1 w^-1 >"
        );
        let single = transversal_union_presentation(&[Factor::Torus { p: 2, q: 3 }]).unwrap();
        assert_eq!(single, torus_germ_presentation(2, 3).unwrap());
        let eps = transversal_union_augmentation(&[Factor::Torus { p: 2, q: 3 }, Factor::Torus { p: 2, q: 5 }], &[1, 1]);
        assert_eq!(eps, Augmentation::new(vec![3, 2, 5, 2]));
    }
}
