//! Consequences for plane curve complements: the divisibility bound coming from the
//! link at infinity, the field containing the roots of `Delta_1`, local polynomials
//! of singular points, the alpha term of the torsion equation, and the dimension
//! bound for rank-one local systems.

use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentMatrix, LaurentPoly, RationalFunction};
use crate::presentations::{
    a_odd_augmentation, a_odd_presentation, hopf_augmentation, hopf_presentation, torus_germ_augmentation, torus_germ_presentation, Augmentation,
    Presentation, PresentationError, Representation, ValidatedTriple,
};
use crate::scalars::{lcm, totient, CycloNumber, FieldContext, Matrix};
use crate::twisted_homology::{alexander, specialize_homology, AlexanderResult, HomologyError, TwistedChainComplex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("invalid curve data: {0}")]
    InvalidCurve(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("the bound is zero")]
    ZeroBound,
    #[error("eigenvalues of rho(x0)^-1 are not all roots of unity in Q(zeta_{0})")]
    EigenvaluesOutsideField(u64),
    #[error("det(Id - rho t^eps) vanishes for component {0}")]
    ZeroDeterminant(usize),
    #[error("expected {expected} {what}, found {found}")]
    WrongCount { what: &'static str, expected: usize, found: usize },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// An irreducible component of a plane curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub degree: usize,
    /// Value of the augmentation on a meridian.
    pub weight: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularityType {
    /// `A_{2n-1}`: two smooth branches with tangency of order `n`.
    AOdd(usize),
    /// Ordinary `k`-fold point (`k` transversal smooth branches); a node is `Ordinary(2)`.
    Ordinary(usize),
    /// Irreducible germ `x^p = y^q`.
    Torus { p: u32, q: u32 },
}

impl SingularityType {
    pub fn branches(self) -> usize {
        match self {
            SingularityType::AOdd(_) => 2,
            SingularityType::Ordinary(k) => k,
            SingularityType::Torus { .. } => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Singularity {
    pub kind: SingularityType,
    /// Component of each local branch.
    pub components: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    components: Vec<Component>,
    singularities: Vec<Singularity>,
}

impl CurveData {
    pub fn new(components: Vec<Component>, singularities: Vec<Singularity>) -> Result<Self, ObstructionError> {
        if components.is_empty() {
            return Err(ObstructionError::InvalidCurve("no components".into()));
        }
        if components.iter().any(|c| c.weight <= 0 || c.degree == 0) {
            return Err(ObstructionError::InvalidCurve("degrees and weights must be positive".into()));
        }
        if components.iter().fold(0i64, |g, c| g.gcd(&c.weight)) != 1 {
            return Err(ObstructionError::InvalidCurve("weights must have gcd 1".into()));
        }
        for s in &singularities {
            if s.components.len() != s.kind.branches() || s.components.iter().any(|&c| c >= components.len()) {
                return Err(ObstructionError::InvalidCurve(format!("bad branch data for {:?}", s.kind)));
            }
        }
        Ok(CurveData { components, singularities })
    }

    /// `r` lines of weight 1 in general position.
    pub fn lines(count: usize) -> Self {
        CurveData { components: vec![Component { degree: 1, weight: 1 }; count], singularities: Vec::new() }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn singularities(&self) -> &[Singularity] {
        &self.singularities
    }

    pub fn degree(&self) -> usize {
        self.components.iter().map(|c| c.degree).sum()
    }

    /// Weight of each of the `d` meridians at infinity, component by component.
    pub fn meridian_weights(&self) -> Vec<i64> {
        self.components.iter().flat_map(|c| std::iter::repeat(c.weight).take(c.degree)).collect()
    }

    /// `eps(x0) = sum d_l n_l`.
    pub fn eps_x0(&self) -> i64 {
        self.components.iter().map(|c| c.degree as i64 * c.weight).sum()
    }

    /// Augmentation on the Hopf link at infinity.
    pub fn infinity_augmentation(&self) -> Result<Augmentation, ObstructionError> {
        Ok(hopf_augmentation(&self.meridian_weights())?)
    }
}

/// `det(m t^k - Id)`.
pub fn twisted_det(m: &Matrix, k: i64) -> LaurentPoly {
    let id = LaurentMatrix::identity(m.context(), m.rows());
    LaurentMatrix::monomial(m, k).sub(&id).determinant().expect("square")
}

/// `gcd(det(rho(x0) t^E - Id), det(rho(x_i) t^{n_i} - Id)) * det(rho(x0) t^E - Id)^{d-2}`
/// with `E = sum d_l n_l`, for matrices `rho(x0), ..., rho(x_{d-1})`.
pub fn infinity_bound(curve: &CurveData, rho: &[Matrix]) -> Result<LaurentPoly, ObstructionError> {
    let d = curve.degree();
    if rho.len() != d {
        return Err(ObstructionError::WrongCount { what: "matrices at infinity", expected: d, found: rho.len() });
    }
    for (i, m) in rho.iter().enumerate().skip(1) {
        if rho[0].mul(m) != m.mul(&rho[0]) {
            return Err(ObstructionError::InvalidRepresentation(format!("rho(x{i}) does not commute with rho(x0)")));
        }
    }
    let weights = curve.meridian_weights();
    let top = twisted_det(&rho[0], curve.eps_x0());
    let g = rho.iter().enumerate().skip(1).fold(top.normalize(), |acc, (i, m)| acc.gcd(&twisted_det(m, weights[i - 1])));
    Ok((&g * &top.pow(d as u32 - 2)).normalize())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub delta: LaurentPoly,
    pub bound: LaurentPoly,
    pub divides: bool,
    pub quotient: Option<LaurentPoly>,
    /// `delta / gcd(delta, bound)` when the division fails.
    pub witness: Option<LaurentPoly>,
}

pub fn check_divides(delta: &LaurentPoly, bound: &LaurentPoly) -> Result<DivisibilityReport, ObstructionError> {
    if bound.is_zero() {
        return Err(ObstructionError::ZeroBound);
    }
    let quotient = bound.exact_div(delta).map(|q| q.normalize());
    let witness = match quotient {
        Some(_) => None,
        None => Some(delta.exact_div(&delta.gcd(bound)).expect("gcd divides").normalize()),
    };
    Ok(DivisibilityReport { delta: delta.normalize(), bound: bound.normalize(), divides: quotient.is_some(), quotient, witness })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootFieldReport {
    /// Eigenvalues of `rho(x0)^-1` with multiplicity.
    pub eigenvalues: Vec<CycloNumber>,
    /// Multiplicative orders `k_i` of the eigenvalues.
    pub orders: Vec<u64>,
    /// Conductor of `K = Q(lambda_1, ..., lambda_r)`.
    pub base_conductor: u64,
    /// Conductor of the splitting field `S` of `prod (t^d - lambda_i)`.
    pub splitting_conductor: u64,
    /// `[S : K]`.
    pub degree: u64,
    /// `phi(lcm(d, k_1, ..., k_r)) / phi(lcm(k_1, ..., k_r))`.
    pub formula_degree: u64,
}

/// Exponent `m` with `u = zeta_M^m`, `M = lcm(2, N)`.
fn root_exponent(u: &CycloNumber) -> Option<u64> {
    let ctx = u.context();
    let n = ctx.conductor();
    let m = ctx.roots_of_unity_order();
    (0..m).find(|&k| {
        let v = if n % 2 == 1 && k % 2 == 1 { -CycloNumber::zeta_pow(ctx, ((k + n) / 2) as i64) } else { CycloNumber::zeta_pow(ctx, (if n % 2 == 1 { k / 2 } else { k }) as i64) };
        &v == u
    })
}

fn all_roots_of_unity(ctx: &Arc<FieldContext>) -> Vec<CycloNumber> {
    let mut out: Vec<CycloNumber> = (0..ctx.conductor() as i64).map(|k| CycloNumber::zeta_pow(ctx, k)).collect();
    if ctx.conductor() % 2 == 1 {
        let neg: Vec<CycloNumber> = out.iter().map(|z| -z).collect();
        out.extend(neg);
    }
    out
}

pub fn root_field(rho_x0: &Matrix, d: u64) -> Result<RootFieldReport, ObstructionError> {
    let ctx = rho_x0.context();
    let r = rho_x0.rows();
    let inv = rho_x0.inverse().map_err(|_| ObstructionError::InvalidRepresentation("rho(x0) is singular".into()))?;
    // det(t Id - inv)
    let charpoly = LaurentMatrix::identity(ctx, r).scale(&LaurentPoly::t_pow(ctx, 1)).sub(&LaurentMatrix::monomial(&inv, 0)).determinant()?;
    let mut eigenvalues = Vec::new();
    for u in all_roots_of_unity(ctx) {
        let m = charpoly.root_multiplicity(&u).unwrap_or(0);
        eigenvalues.extend(std::iter::repeat(u).take(m));
    }
    if eigenvalues.len() != r {
        return Err(ObstructionError::EigenvaluesOutsideField(ctx.conductor()));
    }
    let big_m = ctx.roots_of_unity_order();
    let mut orders = Vec::new();
    let mut splitting = d.max(1);
    for u in &eigenvalues {
        let k = u.root_of_unity_order().expect("root of unity");
        orders.push(k);
        // a d-th root of zeta_M^e is zeta_{dM}^e
        let e = root_exponent(u).expect("root of unity of the field");
        let dm = d * big_m;
        splitting = lcm(&[splitting, dm / e.gcd(&dm)]);
    }
    let base = lcm(&orders);
    let degree = totient(splitting) / totient(base);
    let mut with_d = orders.clone();
    with_d.push(d);
    let formula_degree = totient(lcm(&with_d)) / totient(base);
    Ok(RootFieldReport { eigenvalues, orders, base_conductor: base, splitting_conductor: splitting, degree, formula_degree })
}

/// Closed form `phi(lcm(d, k_1, ..., k_r)) / phi(lcm(k_1, ..., k_r))`.
pub fn extension_degree_formula(d: u64, orders: &[u64]) -> u64 {
    let mut with_d = orders.to_vec();
    with_d.push(d);
    totient(lcm(&with_d)) / totient(lcm(orders))
}

/// Split of `delta` into roots of unity inside a given cyclotomic field and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorReport {
    /// Largest factor whose roots are roots of unity of order dividing `lcm(2, conductor)`.
    pub within: LaurentPoly,
    pub remainder: LaurentPoly,
    /// Orders `m` such that the remainder still has a root of order dividing `m`.
    pub stray_orders: Vec<u64>,
}

impl CyclotomicFactorReport {
    pub fn holds(&self) -> bool {
        self.stray_orders.is_empty()
    }
}

fn t_power_mod(m: u64, modulus: &LaurentPoly) -> LaurentPoly {
    let ctx = modulus.context().unwrap();
    let reduce = |p: &LaurentPoly| p.div_rem(modulus).expect("nonzero modulus").1;
    let mut result = LaurentPoly::one(ctx);
    let mut base = reduce(&LaurentPoly::t_pow(ctx, 1));
    let mut e = m;
    while e > 0 {
        if e & 1 == 1 {
            result = reduce(&(&result * &base));
        }
        base = reduce(&(&base * &base));
        e >>= 1;
    }
    result
}

/// Checks that every root of unity among the roots of `delta` has order dividing `lcm(2, conductor)`.
pub fn cyclotomic_factor_check(delta: &LaurentPoly, conductor: u64) -> CyclotomicFactorReport {
    let Some(ctx) = delta.context().cloned() else {
        return CyclotomicFactorReport { within: LaurentPoly::zero(), remainder: LaurentPoly::zero(), stray_orders: Vec::new() };
    };
    let m = lcm(&[2, conductor]);
    let cyc = &LaurentPoly::t_pow(&ctx, m as i64) - &LaurentPoly::one(&ctx);
    let mut within = LaurentPoly::one(&ctx);
    let mut rest = delta.normalize();
    loop {
        let g = rest.gcd(&cyc);
        if g.is_unit() {
            break;
        }
        within = &within * &g;
        rest = rest.exact_div(&g).unwrap().normalize();
    }
    let mut stray_orders = Vec::new();
    let span = rest.span().unwrap_or(0) as u64;
    if span > 0 {
        // a primitive m-th root has degree phi(lcm(N, m)) / phi(N) over Q(zeta_N)
        let n = ctx.conductor();
        let phi_n = totient(n);
        let limit = 2 * (span * phi_n).pow(2) + 2;
        for k in 1..=limit {
            if totient(lcm(&[n, k])) / phi_n > span || m % k == 0 {
                continue;
            }
            let tk = &t_power_mod(k, &rest) - &LaurentPoly::one(&ctx);
            if !rest.gcd(&tk).is_unit() {
                stray_orders.push(k);
            }
        }
    }
    CyclotomicFactorReport { within: within.normalize(), remainder: rest, stray_orders }
}

/// Result of computing a local polynomial at a singular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalPolynomial {
    pub delta0: LaurentPoly,
    pub delta1: LaurentPoly,
    pub ratio: RationalFunction,
    /// `gcd` of the branch weights.
    pub substitution_exponent: i64,
    /// `Delta_1` with all weights 1, under `t -> t^g`.
    pub predicted_delta1: LaurentPoly,
}

impl LocalPolynomial {
    pub fn matches_prediction(&self) -> bool {
        self.delta1 == self.predicted_delta1
    }
}

/// Presentation and augmentation of the link group of a singularity with branch weights.
pub fn local_triple_parts(kind: SingularityType, weights: &[i64]) -> Result<(Presentation, Augmentation), ObstructionError> {
    if weights.len() != kind.branches() {
        return Err(ObstructionError::WrongCount { what: "branch weights", expected: kind.branches(), found: weights.len() });
    }
    Ok(match kind {
        SingularityType::AOdd(n) => (a_odd_presentation(n)?, a_odd_augmentation(n, weights[0], weights[1])),
        SingularityType::Ordinary(k) => (hopf_presentation(k)?, hopf_augmentation(weights)?),
        SingularityType::Torus { p, q } => (torus_germ_presentation(p, q)?, torus_germ_augmentation(p, q, weights[0])),
    })
}

fn local_alexander(kind: SingularityType, weights: &[i64], rho: &Representation) -> Result<(TwistedChainComplex, AlexanderResult), ObstructionError> {
    let (pres, eps) = local_triple_parts(kind, weights)?;
    let triple = ValidatedTriple::new(pres, eps, rho.clone())?;
    Ok(alexander(&triple)?)
}

/// `Delta_1` of the local link group under weighted `eps` and `rho` (trivial rank one when `None`).
pub fn local_polynomial(kind: SingularityType, weights: &[i64], rho: Option<&Representation>) -> Result<LocalPolynomial, ObstructionError> {
    let (pres, _) = local_triple_parts(kind, weights)?;
    let q = FieldContext::rational();
    let trivial = Representation::trivial(&q, 1, pres.generators());
    let rho = rho.unwrap_or(&trivial);
    let (_, result) = local_alexander(kind, weights, rho)?;
    let g = weights.iter().fold(0i64, |g, w| g.gcd(w));
    let (_, unit) = local_alexander(kind, &vec![1; weights.len()], rho)?;
    let predicted = unit.delta(1).substitute_t_power(g)?.normalize();
    Ok(LocalPolynomial {
        delta0: result.delta(0).clone(),
        delta1: result.delta(1).clone(),
        ratio: result.ratio(),
        substitution_exponent: g,
        predicted_delta1: predicted,
    })
}

/// `det(rho(x) t^nx - rho(y) rho(x) t^{nx+ny} - Id) / det(Id - rho(x) t^nx)`, the closed form
/// proposed for the cusp.
pub fn cusp_formula(rho_x: &Matrix, rho_y: &Matrix, nx: i64, ny: i64) -> Result<RationalFunction, ObstructionError> {
    Ok(RationalFunction::new(&cusp_numerator(rho_x, rho_y, nx, ny), &(-&twisted_det(rho_x, nx)).normalize())?)
}

fn cusp_numerator(rho_x: &Matrix, rho_y: &Matrix, nx: i64, ny: i64) -> LaurentPoly {
    let ctx = rho_x.context();
    let r = rho_x.rows();
    let m = LaurentMatrix::monomial(rho_x, nx).sub(&LaurentMatrix::monomial(&rho_y.mul(rho_x), nx + ny)).sub(&LaurentMatrix::identity(ctx, r));
    m.determinant().expect("square")
}

/// `gcd(det(rho(x) t^nx - rho(y) rho(x) t^{nx+ny} - Id), det(rho(z) t^nz - Id))`, the closed
/// form proposed for the cusp with a transversal line.
pub fn cusp_line_formula(rho_x: &Matrix, rho_y: &Matrix, rho_z: &Matrix, n: [i64; 3]) -> LaurentPoly {
    cusp_numerator(rho_x, rho_y, n[0], n[1]).gcd(&twisted_det(rho_z, n[2]))
}

/// Data of one component for the alpha term.
#[derive(Clone, Debug)]
pub struct AlphaComponent {
    pub meridian: Matrix,
    pub eps: i64,
    /// Number of singular points on the component.
    pub singular_points: i64,
    pub euler_characteristic: i64,
}

/// `prod_q det(Id - rho(nu_q) t^eps(nu_q))^{s_q - chi(C_q)}`.
pub fn alpha_term(components: &[AlphaComponent]) -> Result<RationalFunction, ObstructionError> {
    let first = components.first().ok_or(ObstructionError::WrongCount { what: "components", expected: 1, found: 0 })?;
    let one = LaurentPoly::one(first.meridian.context());
    let mut acc = RationalFunction::from_poly(&one);
    for (i, c) in components.iter().enumerate() {
        let det = -&twisted_det(&c.meridian, c.eps);
        if det.is_zero() {
            return Err(ObstructionError::ZeroDeterminant(i));
        }
        acc = acc.mul(&RationalFunction::from_poly(&det).pow(c.singular_points - c.euler_characteristic)?);
    }
    Ok(acc)
}

/// Both sides of `alpha * prod Delta_k = Delta * bar(Delta) * det(phi)`, with `det(phi)`
/// supplied by the caller when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionEquationReport {
    pub lhs: RationalFunction,
    pub delta_bar_delta: LaurentPoly,
    /// `lhs / (Delta bar(Delta))`: the value `det(phi)` would need.
    pub implied_det_phi: RationalFunction,
    /// Agreement up to units and up to bar, when `det(phi)` was supplied.
    pub matches: Option<bool>,
}

pub fn torsion_equation_check(
    alpha: &RationalFunction,
    local: &[RationalFunction],
    delta: &LaurentPoly,
    det_phi: Option<&LaurentPoly>,
) -> Result<TorsionEquationReport, ObstructionError> {
    let lhs = local.iter().fold(alpha.clone(), |acc, l| acc.mul(l));
    let dbd = (delta * &delta.bar()).normalize();
    let implied = lhs.mul(&RationalFunction::from_poly(&dbd).inverse()?);
    let matches = det_phi.map(|phi| {
        let rhs = RationalFunction::from_poly(&(&dbd * phi));
        let bar = |f: &RationalFunction| RationalFunction::new(&f.numerator().bar(), &f.denominator().bar()).unwrap();
        lhs == rhs || lhs == bar(&rhs)
    });
    Ok(TorsionEquationReport { lhs, delta_bar_delta: dbd, implied_det_phi: implied, matches })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionBoundReport {
    /// `dim H_i` of the complex specialized at `t = a`.
    pub dims: [usize; 3],
    /// `N(a, i)`: multiplicity of `(t - a)` in `Delta_i`.
    pub multiplicities: [usize; 3],
    /// `dim H_i >= N(a, i) + N(a, i - 1)` for each `i`.
    pub holds: [bool; 3],
}

impl DimensionBoundReport {
    pub fn all_hold(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }
}

pub fn dimension_bound_check(complex: &TwistedChainComplex, result: &AlexanderResult, a: &CycloNumber) -> Result<DimensionBoundReport, ObstructionError> {
    let dims = specialize_homology(complex, a)?;
    let n = |i: usize| result.delta(i).root_multiplicity(a).unwrap_or(0);
    let multiplicities = [n(0), n(1), n(2)];
    let holds = [dims[0] >= multiplicities[0], dims[1] >= multiplicities[1] + multiplicities[0], dims[2] >= multiplicities[2] + multiplicities[1]];
    Ok(DimensionBoundReport { dims, multiplicities, holds })
}
