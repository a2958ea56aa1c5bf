//! Finite presentations together with an augmentation `eps: G -> Z` and a
//! representation `rho: G -> GL_r(F)`, Fox calculus, and builders for the
//! presentation families of plane curve complements.

mod builders;
mod fox;
pub mod random;

pub use builders::*;
pub use fox::{fox_derivative, phi_evaluate, phi_generator_minus_identity, phi_word, GroupRingElement};

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::scalars::{FieldContext, Matrix, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed letter `{0}`")]
    BadLetter(String),
    #[error("expected {expected} values, one per generator, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("matrix for `{generator}` should be {expected}x{expected}, found {rows}x{cols}")]
    DimensionMismatch { generator: String, expected: usize, rows: usize, cols: usize },
    #[error("matrix for `{0}` is not invertible")]
    NotInvertible(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid triple: {0}")]
    Invalid(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }
}

/// A word in the generators, stored as written.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![Letter::new(g, false)])
    }

    /// `g^k`, written out letter by letter.
    pub fn power(g: usize, k: i64) -> Self {
        Word(vec![Letter::new(g, k < 0); k.unsigned_abs() as usize])
    }

    /// Build a word from `(generator, exponent)` pairs.
    pub fn from_powers(powers: &[(usize, i64)]) -> Self {
        Word(powers.iter().flat_map(|&(g, k)| Word::power(g, k).0).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// Free reduction.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.generator).max()
    }

    /// Exponent sum of each generator.
    pub fn abelianize(&self, generators: usize) -> Vec<i64> {
        let mut v = vec![0; generators];
        for l in &self.0 {
            v[l.generator] += l.sign();
        }
        v
    }

    /// Parse whitespace-separated letters `name`, `name^-1` or `name^k`.
    pub fn parse(text: &str, names: &[String]) -> Result<Word, PresentationError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => (n, e.parse::<i64>().map_err(|_| PresentationError::BadLetter(token.to_string()))?),
                None => (token, 1),
            };
            let g = names.iter().position(|n| n == name).ok_or_else(|| PresentationError::UnknownGenerator(name.to_string()))?;
            letters.extend(Word::power(g, exp).0);
        }
        Ok(Word(letters))
    }

    /// Render with generator names, collapsing runs into powers.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let k = (j - i) as i64 * l.sign();
            let name = &names[l.generator];
            parts.push(if k == 1 { name.clone() } else { format!("{name}^{k}") });
            i = j;
        }
        parts.join(" ")
    }
}

/// A finite presentation `<generators | relators>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        if generator_names.is_empty() {
            return Err(PresentationError::NoGenerators);
        }
        for (i, n) in generator_names.iter().enumerate() {
            if generator_names[..i].contains(n) {
                return Err(PresentationError::DuplicateGenerator(n.clone()));
            }
        }
        let count = generator_names.len();
        if let Some(index) = relators.iter().filter_map(Word::max_generator).find(|&g| g >= count) {
            return Err(PresentationError::GeneratorOutOfRange { index, count });
        }
        Ok(Presentation { generator_names, relators })
    }

    /// Parse relators given as text in terms of the named generators.
    pub fn parse(generator_names: Vec<String>, relators: &[&str]) -> Result<Self, PresentationError> {
        let words = relators.iter().map(|r| Word::parse(r, &generator_names)).collect::<Result<_, _>>()?;
        Self::new(generator_names, words)
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    pub fn deficiency(&self) -> i64 {
        self.generators() as i64 - self.relators.len() as i64
    }

    /// Euler characteristic of the presentation 2-complex.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.deficiency()
    }

    /// Indices of relators that freely reduce to the empty word.
    pub fn trivial_relators(&self) -> Vec<usize> {
        (0..self.relators.len()).filter(|&i| self.relators[i].reduce().is_empty()).collect()
    }

    pub fn render(&self, w: &Word) -> String {
        w.render(&self.generator_names)
    }

    pub fn without_relator(&self, index: usize) -> Presentation {
        let mut relators = self.relators.clone();
        relators.remove(index);
        Presentation { generator_names: self.generator_names.clone(), relators }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.render(r)).collect();
        write!(f, "< {} | {} >", self.generator_names.join(", "), rels.join(", "))
    }
}

/// A homomorphism to Z given by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation {
    values: Vec<i64>,
}

impl Augmentation {
    pub fn new(values: Vec<i64>) -> Self {
        Augmentation { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, g: usize) -> i64 {
        self.values[g]
    }

    pub fn evaluate(&self, w: &Word) -> i64 {
        w.letters().iter().map(|l| l.sign() * self.values[l.generator]).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Generator of the image `gZ`; 0 when trivial.
    pub fn image_generator(&self) -> u64 {
        self.values.iter().fold(0i64, |g, &v| g.gcd(&v)).unsigned_abs()
    }

    pub fn scaled(&self, k: i64) -> Augmentation {
        Augmentation { values: self.values.iter().map(|v| v * k).collect() }
    }
}

/// A representation given by one invertible matrix per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    ctx: Arc<FieldContext>,
    dimension: usize,
    matrices: Vec<Matrix>,
    inverses: Vec<Matrix>,
}

impl Representation {
    pub fn new(ctx: &Arc<FieldContext>, dimension: usize, matrices: Vec<Matrix>) -> Result<Self, PresentationError> {
        let mut inverses = Vec::with_capacity(matrices.len());
        for (g, m) in matrices.iter().enumerate() {
            if m.rows() != dimension || m.cols() != dimension {
                return Err(PresentationError::DimensionMismatch { generator: format!("#{g}"), expected: dimension, rows: m.rows(), cols: m.cols() });
            }
            if m.context().conductor() != ctx.conductor() {
                return Err(ScalarError::ConductorMismatch(m.context().conductor(), ctx.conductor()).into());
            }
            inverses.push(m.inverse().map_err(|_| PresentationError::NotInvertible(format!("#{g}")))?);
        }
        Ok(Representation { ctx: ctx.clone(), dimension, matrices, inverses })
    }

    pub fn trivial(ctx: &Arc<FieldContext>, dimension: usize, generators: usize) -> Self {
        let id = Matrix::identity(ctx, dimension);
        Representation { ctx: ctx.clone(), dimension, matrices: vec![id.clone(); generators], inverses: vec![id; generators] }
    }

    /// Rank-one representation from scalars.
    pub fn from_scalars(ctx: &Arc<FieldContext>, values: &[crate::scalars::CycloNumber]) -> Result<Self, PresentationError> {
        Self::new(ctx, 1, values.iter().map(|v| Matrix::scalar(ctx, 1, v)).collect())
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn letter(&self, l: Letter) -> &Matrix {
        if l.inverse {
            &self.inverses[l.generator]
        } else {
            &self.matrices[l.generator]
        }
    }

    pub fn evaluate(&self, w: &Word) -> Matrix {
        w.letters().iter().fold(Matrix::identity(&self.ctx, self.dimension), |acc, &l| acc.mul(self.letter(l)))
    }

    pub fn embed(&self, target: &Arc<FieldContext>) -> Result<Self, PresentationError> {
        let matrices = self.matrices.iter().map(|m| m.embed(target)).collect::<Result<_, _>>()?;
        Self::new(target, self.dimension, matrices)
    }
}

/// Outcome of checking a triple `(presentation, eps, rho)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Relators with `eps(r) != 0`.
    pub eps_failures: Vec<usize>,
    /// Relators with `rho(r) != Id`.
    pub rho_failures: Vec<usize>,
    pub nontrivial: bool,
    pub surjective: bool,
    /// Index of `eps` in Z; `None` when `eps` is trivial (infinite cokernel).
    pub cokernel_size: Option<u64>,
    /// `eps` of the first generator.
    pub eps_x0: i64,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.eps_failures.is_empty() && self.rho_failures.is_empty() && self.nontrivial
    }

    pub fn describe(&self, pres: &Presentation) -> String {
        let mut parts = Vec::new();
        for &i in &self.eps_failures {
            parts.push(format!("eps does not vanish on relator {} ({})", i, pres.render(&pres.relators()[i])));
        }
        for &i in &self.rho_failures {
            parts.push(format!("rho is not the identity on relator {} ({})", i, pres.render(&pres.relators()[i])));
        }
        if !self.nontrivial {
            parts.push("eps is trivial".to_string());
        }
        if parts.is_empty() {
            "valid".to_string()
        } else {
            parts.join("; ")
        }
    }
}

fn check_sizes(pres: &Presentation, eps: &Augmentation, rho: &Representation) -> Result<(), PresentationError> {
    if eps.values().len() != pres.generators() {
        return Err(PresentationError::WrongCount { expected: pres.generators(), found: eps.values().len() });
    }
    if rho.generators() != pres.generators() {
        return Err(PresentationError::WrongCount { expected: pres.generators(), found: rho.generators() });
    }
    Ok(())
}

pub fn validate(pres: &Presentation, eps: &Augmentation, rho: &Representation) -> Result<ValidationReport, PresentationError> {
    check_sizes(pres, eps, rho)?;
    let eps_failures = (0..pres.relators().len()).filter(|&i| eps.evaluate(&pres.relators()[i]) != 0).collect();
    let rho_failures = (0..pres.relators().len()).filter(|&i| !rho.evaluate(&pres.relators()[i]).is_identity()).collect();
    let g = eps.image_generator();
    Ok(ValidationReport {
        eps_failures,
        rho_failures,
        nontrivial: g != 0,
        surjective: g == 1,
        cokernel_size: (g != 0).then_some(g),
        eps_x0: eps.value(0),
    })
}

/// A triple that passed validation. Downstream computations accept only this type.
#[derive(Clone, Debug)]
pub struct ValidatedTriple {
    presentation: Presentation,
    augmentation: Augmentation,
    representation: Representation,
    report: ValidationReport,
}

impl ValidatedTriple {
    pub fn new(presentation: Presentation, augmentation: Augmentation, representation: Representation) -> Result<Self, PresentationError> {
        let report = validate(&presentation, &augmentation, &representation)?;
        if !report.is_valid() {
            return Err(PresentationError::Invalid(report.describe(&presentation)));
        }
        Ok(ValidatedTriple { presentation, augmentation, representation, report })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn augmentation(&self) -> &Augmentation {
        &self.augmentation
    }

    pub fn representation(&self) -> &Representation {
        &self.representation
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        self.representation.context()
    }

    pub fn dimension(&self) -> usize {
        self.representation.dimension()
    }

    /// Same triple with one relator dropped.
    pub fn without_relator(&self, index: usize) -> ValidatedTriple {
        ValidatedTriple {
            presentation: self.presentation.without_relator(index),
            augmentation: self.augmentation.clone(),
            representation: self.representation.clone(),
            report: ValidationReport {
                eps_failures: Vec::new(),
                rho_failures: Vec::new(),
                ..self.report.clone()
            },
        }
    }

    pub fn embed(&self, target: &Arc<FieldContext>) -> Result<ValidatedTriple, PresentationError> {
        Ok(ValidatedTriple { representation: self.representation.embed(target)?, ..self.clone() })
    }
}
