//! The twisted chain complex of a presentation 2-complex and its homology over `F[t, t^-1]`.
//!
//! Chains are row vectors. `boundary2` has one block row per relator and one block
//! column per generator, block `(j, i) = Phi(d r_j / d x_i)`; `boundary1` stacks the
//! blocks `Phi(x_i) - Id`. The Fox fundamental identity gives `boundary2 * boundary1 = 0`.

use std::sync::Arc;

use thiserror::Error;

use crate::laurent::{elementary_divisors, LaurentError, LaurentMatrix, LaurentPoly, ModuleShape, RationalFunction};
use crate::presentations::{fox_derivative, phi_evaluate, phi_generator_minus_identity, ValidatedTriple};
use crate::scalars::{CycloNumber, FieldContext};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("boundary composition is nonzero")]
    NonzeroComposition,
    #[error("no generator g with det(Phi(g) - Id) != 0")]
    NoAdmissibleGenerator,
    #[error("generator index {0} out of range")]
    BadGenerator(usize),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[derive(Clone, Debug)]
pub struct TwistedChainComplex {
    ctx: Arc<FieldContext>,
    dimension: usize,
    generators: usize,
    relators: usize,
    boundary1: LaurentMatrix,
    boundary2: LaurentMatrix,
}

impl TwistedChainComplex {
    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> usize {
        self.relators
    }

    pub fn boundary1(&self) -> &LaurentMatrix {
        &self.boundary1
    }

    pub fn boundary2(&self) -> &LaurentMatrix {
        &self.boundary2
    }

    /// Ranks of the free chain modules `C_0, C_1, C_2`.
    pub fn chain_ranks(&self) -> [usize; 3] {
        let r = self.dimension;
        [r, r * self.generators, r * self.relators]
    }

    /// `sum (-1)^i rank C_i = chi * r`.
    pub fn euler_characteristic(&self) -> i64 {
        let [c0, c1, c2] = self.chain_ranks();
        c0 as i64 - c1 as i64 + c2 as i64
    }

    /// Block `(relator, generator)` of `boundary2`.
    pub fn fox_block(&self, relator: usize, generator: usize) -> LaurentMatrix {
        let r = self.dimension;
        self.boundary2.block(relator * r, generator * r, r, r)
    }

    /// `boundary2` with the block column of `generator` removed.
    pub fn delete_generator_column(&self, generator: usize) -> LaurentMatrix {
        let r = self.dimension;
        let cols: Vec<usize> = (0..self.generators * r).filter(|c| c / r != generator).collect();
        let rows: Vec<usize> = (0..self.relators * r).collect();
        self.boundary2.select(&rows, &cols)
    }
}

pub fn build_complex(triple: &ValidatedTriple) -> Result<TwistedChainComplex, HomologyError> {
    let pres = triple.presentation();
    let eps = triple.augmentation();
    let rho = triple.representation();
    let ctx = triple.context().clone();
    let r = triple.dimension();
    let g = pres.generators();
    let n = pres.relators().len();

    let mut boundary1 = LaurentMatrix::zero(&ctx, r * g, r);
    for i in 0..g {
        boundary1.set_block(i * r, 0, &phi_generator_minus_identity(i, eps, rho));
    }
    let mut boundary2 = LaurentMatrix::zero(&ctx, r * n, r * g);
    for (j, rel) in pres.relators().iter().enumerate() {
        for i in 0..g {
            let d = fox_derivative(rel, i);
            if !d.is_zero() {
                boundary2.set_block(j * r, i * r, &phi_evaluate(&d, eps, rho));
            }
        }
    }
    if !boundary2.mul(&boundary1).is_zero() {
        return Err(HomologyError::NonzeroComposition);
    }
    Ok(TwistedChainComplex { ctx, dimension: r, generators: g, relators: n, boundary1, boundary2 })
}

/// Twisted Alexander modules `H_0, H_1, H_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderResult {
    pub modules: [ModuleShape; 3],
    /// All free ranks vanish: the complex is acyclic over the fraction field.
    pub acyclic: bool,
}

impl AlexanderResult {
    /// Normalized order of the torsion part of `H_i`.
    pub fn delta(&self, i: usize) -> &LaurentPoly {
        &self.modules[i].torsion_order
    }

    pub fn free_rank(&self, i: usize) -> usize {
        self.modules[i].free_rank
    }

    pub fn ratio(&self) -> RationalFunction {
        RationalFunction::new(self.delta(1), self.delta(0)).expect("torsion orders are nonzero")
    }
}

pub fn homology(complex: &TwistedChainComplex) -> AlexanderResult {
    let ctx = &complex.ctx;
    let [c0, c1, c2] = complex.chain_ranks();
    let d1 = elementary_divisors(&complex.boundary1);
    let d2 = elementary_divisors(&complex.boundary2);
    let (rank1, rank2) = (d1.len(), d2.len());
    // coker(boundary2) splits as H_1 plus the free module im(boundary1)
    let modules = [
        ModuleShape::new(ctx, c0 - rank1, &d1),
        ModuleShape::new(ctx, c1 - rank1 - rank2, &d2),
        ModuleShape::new(ctx, c2 - rank2, &[]),
    ];
    let acyclic = modules.iter().all(|m| m.free_rank == 0);
    AlexanderResult { modules, acyclic }
}

/// Alexander data of a validated triple in one call.
pub fn alexander(triple: &ValidatedTriple) -> Result<(TwistedChainComplex, AlexanderResult), HomologyError> {
    let complex = build_complex(triple)?;
    let result = homology(&complex);
    Ok((complex, result))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WadaRatio {
    pub generator: usize,
    /// gcd of maximal minors of `boundary2` with the generator's block column removed.
    pub numerator: LaurentPoly,
    /// `det(Phi(g) - Id)`.
    pub denominator: LaurentPoly,
    pub ratio: RationalFunction,
}

fn maximal_minors_gcd(m: &LaurentMatrix) -> Result<LaurentPoly, LaurentError> {
    let k = m.rows().min(m.cols());
    if k == 0 {
        return Ok(LaurentPoly::one(m.context()));
    }
    if m.rows() == m.cols() {
        return Ok(m.determinant()?.normalize());
    }
    let divisors = elementary_divisors(m);
    if divisors.len() < k {
        return Ok(LaurentPoly::zero());
    }
    Ok(divisors.iter().fold(LaurentPoly::one(m.context()), |acc, d| &acc * d).normalize())
}

/// Wada-style ratio using a specific generator.
pub fn wada_ratio_at(complex: &TwistedChainComplex, triple: &ValidatedTriple, generator: usize) -> Result<WadaRatio, HomologyError> {
    if generator >= complex.generators {
        return Err(HomologyError::BadGenerator(generator));
    }
    let denominator = phi_generator_minus_identity(generator, triple.augmentation(), triple.representation()).determinant()?;
    if denominator.is_zero() {
        return Err(HomologyError::NoAdmissibleGenerator);
    }
    let numerator = maximal_minors_gcd(&complex.delete_generator_column(generator))?;
    let ratio = RationalFunction::new(&numerator, &denominator)?;
    Ok(WadaRatio { generator, numerator, denominator: denominator.normalize(), ratio })
}

/// Wada-style ratio using the first admissible generator.
pub fn wada_ratio(complex: &TwistedChainComplex, triple: &ValidatedTriple) -> Result<WadaRatio, HomologyError> {
    for g in 0..complex.generators {
        match wada_ratio_at(complex, triple, g) {
            Err(HomologyError::NoAdmissibleGenerator) => continue,
            other => return other,
        }
    }
    Err(HomologyError::NoAdmissibleGenerator)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub chain_alternating_sum: i64,
    pub homology_alternating_sum: i64,
    /// Set when `H_0` and `H_1` are torsion: whether `rank H_2 = chi * r`.
    pub h2_pinned: Option<bool>,
}

impl EulerReport {
    pub fn consistent(&self) -> bool {
        self.chain_alternating_sum == self.homology_alternating_sum && self.h2_pinned != Some(false)
    }
}

pub fn euler_rank_check(complex: &TwistedChainComplex, result: &AlexanderResult) -> EulerReport {
    let chi_r = complex.euler_characteristic();
    let h = |i: usize| result.free_rank(i) as i64;
    let torsion_low = result.free_rank(0) == 0 && result.free_rank(1) == 0;
    EulerReport {
        chain_alternating_sum: chi_r,
        homology_alternating_sum: h(0) - h(1) + h(2),
        h2_pinned: torsion_low.then(|| h(2) == chi_r),
    }
}

/// Dimensions of `H_i` of the scalar complex obtained by `t = a`.
pub fn specialize_homology(complex: &TwistedChainComplex, a: &CycloNumber) -> Result<[usize; 3], HomologyError> {
    let [c0, c1, c2] = complex.chain_ranks();
    let rank1 = complex.boundary1.specialize(a)?.rank();
    let rank2 = complex.boundary2.specialize(a)?.rank();
    Ok([c0 - rank1, c1 - rank1 - rank2, c2 - rank2])
}
