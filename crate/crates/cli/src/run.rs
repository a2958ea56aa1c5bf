//! Executing a job and building its report.

use std::fmt::Write as _;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use twisted_alexander::obstructions::{
    alpha_term, check_divides, cyclotomic_factor_check, dimension_bound_check, infinity_bound, local_polynomial, root_field, AlphaComponent, Component,
    CurveData, ObstructionError, SingularityType,
};
use twisted_alexander::presentations::*;
use twisted_alexander::twisted_homology::{alexander, euler_rank_check, wada_ratio, HomologyError};
use twisted_alexander::{FieldContext, Matrix};

use crate::job::{Analysis, BuilderSpec, EpsSpec, Expect, JobSpec, RandomFamily, RhoSpec, RhoValue, Source};

#[derive(Debug, Error)]
pub enum RunError {
    /// The job describes an invalid triple or asks for something it cannot supply.
    #[error("{0}")]
    Input(String),
    /// A core invariant failed.
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<PresentationError> for RunError {
    fn from(e: PresentationError) -> Self {
        RunError::Input(e.to_string())
    }
}

impl From<ObstructionError> for RunError {
    fn from(e: ObstructionError) -> Self {
        match e {
            ObstructionError::Homology(HomologyError::NonzeroComposition) => RunError::Internal(e.to_string()),
            other => RunError::Input(other.to_string()),
        }
    }
}

impl From<HomologyError> for RunError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::NonzeroComposition => RunError::Internal(e.to_string()),
            other => RunError::Input(other.to_string()),
        }
    }
}

/// One line of a report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Job { name: String, field: String, presentation: String, dimension: usize, eps: Vec<i64> },
    Validation { valid: bool, surjective: bool, eps_x0: i64 },
    Module { degree: usize, free_rank: usize, torsion_order: String, elementary_divisors: Vec<String> },
    Ratio { value: String },
    Wada { generator: String, numerator: String, denominator: String, ratio: String, agrees: bool },
    WadaUnavailable { reason: String },
    Euler { chain: i64, homology: i64, h2_pinned: Option<bool> },
    Divisibility { bound: String, divides: bool, quotient: Option<String>, witness: Option<String> },
    RootField { eigenvalues: Vec<String>, orders: Vec<u64>, base_conductor: u64, splitting_conductor: u64, degree: u64, formula_degree: u64 },
    CyclotomicFactors { inside: String, remainder: String, stray_orders: Vec<u64> },
    Alpha { value: String },
    Specialize { point: String, dims: [usize; 3], multiplicities: [usize; 3], holds: [bool; 3] },
    Local { kind: String, weights: Vec<i64>, delta0: String, delta1: String, ratio: String, predicted_delta1: String, matches_prediction: bool },
    Check { name: String, passed: bool, detail: String },
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn checks(&self) -> impl Iterator<Item = (&str, bool, &str)> {
        self.records.iter().filter_map(|r| match r {
            Record::Check { name, passed, detail } => Some((name.as_str(), *passed, detail.as_str())),
            _ => None,
        })
    }

    pub fn passed(&self) -> bool {
        self.checks().all(|(_, p, _)| p)
    }

    pub fn ratio(&self) -> Option<&str> {
        self.records.iter().find_map(|r| match r {
            Record::Ratio { value } => Some(value.as_str()),
            _ => None,
        })
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.records.push(Record::Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            writeln!(out, "{}", serde_json::to_string(r).expect("serializable")).unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let line = match r {
                Record::Job { name, field, presentation, dimension, eps } => {
                    format!("job {name}\nfield {field}\npresentation {presentation}\nrank {dimension}\neps {eps:?}")
                }
                Record::Validation { valid, surjective, eps_x0 } => format!("valid {valid} (eps surjective {surjective}, eps(x0) = {eps_x0})"),
                Record::Module { degree, free_rank, torsion_order, elementary_divisors } => {
                    format!("H{degree}: free rank {free_rank}, delta{degree} = {torsion_order}, divisors [{}]", elementary_divisors.join(", "))
                }
                Record::Ratio { value } => format!("delta1 / delta0 = {value}"),
                Record::Wada { generator, ratio, agrees, .. } => format!("wada ratio (deleting {generator}) = {ratio}, agrees {agrees}"),
                Record::WadaUnavailable { reason } => format!("wada ratio unavailable: {reason}"),
                Record::Euler { chain, homology, h2_pinned } => format!("euler chain {chain}, homology {homology}, h2 pinned {h2_pinned:?}"),
                Record::Divisibility { bound, divides, quotient, witness } => {
                    let tail = match (quotient, witness) {
                        (Some(q), _) => format!(", quotient {q}"),
                        (_, Some(w)) => format!(", witness {w}"),
                        _ => String::new(),
                    };
                    format!("bound at infinity {bound}, divides {divides}{tail}")
                }
                Record::RootField { eigenvalues, orders, base_conductor, splitting_conductor, degree, formula_degree } => format!(
                    "root field: eigenvalues [{}] of orders {orders:?}, K conductor {base_conductor}, S conductor {splitting_conductor}, [S:K] = {degree} (closed form {formula_degree})",
                    eigenvalues.join(", ")
                ),
                Record::CyclotomicFactors { inside, remainder, stray_orders } => {
                    format!("cyclotomic part {inside}, remainder {remainder}, stray orders {stray_orders:?}")
                }
                Record::Alpha { value } => format!("alpha = {value}"),
                Record::Specialize { point, dims, multiplicities, holds } => format!("at t = {point}: dims {dims:?}, N {multiplicities:?}, bound holds {holds:?}"),
                Record::Local { kind, weights, delta0, delta1, ratio, predicted_delta1, matches_prediction } => format!(
                    "local {kind} weights {weights:?}: delta0 = {delta0}, delta1 = {delta1}, ratio = {ratio}, substitution gives {predicted_delta1} (match {matches_prediction})"
                ),
                Record::Check { name, passed, detail } => format!("check {name}: {} {detail}", if *passed { "ok" } else { "FAILED" }),
            };
            writeln!(out, "{}", line.trim_end()).unwrap();
        }
        out
    }
}

pub fn source_presentation(source: &Source) -> Result<Presentation, PresentationError> {
    match source {
        Source::Builder(b) => match b {
            BuilderSpec::Hopf(d) => hopf_presentation(*d),
            BuilderSpec::HopfFull(d) => hopf_full_presentation(*d),
            BuilderSpec::AOdd(n) => a_odd_presentation(*n),
            BuilderSpec::AOddReduced(n) => a_odd_reduced_presentation(*n),
            BuilderSpec::Torus(p, q) => torus_germ_presentation(*p, *q),
            BuilderSpec::Cusp => Ok(cusp_presentation()),
            BuilderSpec::Union(f) => transversal_union_presentation(f),
        },
        Source::Inline { generators, relators } => Presentation::new(generators.clone(), relators.clone()),
    }
}

fn branch_count(b: &BuilderSpec) -> usize {
    match b {
        BuilderSpec::Hopf(d) | BuilderSpec::HopfFull(d) => *d,
        BuilderSpec::AOdd(_) | BuilderSpec::AOddReduced(_) => 2,
        BuilderSpec::Torus(..) | BuilderSpec::Cusp => 1,
        BuilderSpec::Union(f) => f.len(),
    }
}

fn builder_augmentation(b: &BuilderSpec, weights: &[i64]) -> Result<Augmentation, RunError> {
    if weights.len() != branch_count(b) {
        return Err(RunError::Input(format!("expected {} branch weights, got {}", branch_count(b), weights.len())));
    }
    Ok(match b {
        BuilderSpec::Hopf(_) => hopf_augmentation(weights)?,
        BuilderSpec::HopfFull(_) => hopf_full_augmentation(weights)?,
        BuilderSpec::AOdd(n) | BuilderSpec::AOddReduced(n) => a_odd_augmentation(*n, weights[0], weights[1]),
        BuilderSpec::Torus(p, q) => torus_germ_augmentation(*p, *q, weights[0]),
        BuilderSpec::Cusp => Augmentation::new(vec![weights[0]; 2]),
        BuilderSpec::Union(f) => transversal_union_augmentation(f, weights),
    })
}

fn augmentation(spec: &JobSpec, pres: &Presentation) -> Result<Augmentation, RunError> {
    match (&spec.eps, &spec.source) {
        (EpsSpec::Lk, Source::Builder(b)) => builder_augmentation(b, &vec![1; branch_count(b)]),
        (EpsSpec::Lk, Source::Inline { .. }) => Ok(Augmentation::new(vec![1; pres.generators()])),
        (EpsSpec::Weights(w), Source::Builder(b)) => builder_augmentation(b, w),
        (EpsSpec::Weights(_), Source::Inline { .. }) => Err(RunError::Input("eps weights= needs a builder; give per-generator values".into())),
        (EpsSpec::Values(values), _) => {
            let mut out = vec![None; pres.generators()];
            for (name, v) in values {
                let g = pres.generator_index(name).ok_or_else(|| RunError::Input(format!("eps: unknown generator `{name}`")))?;
                out[g] = Some(*v);
            }
            match out.iter().position(Option::is_none) {
                Some(g) => Err(RunError::Input(format!("eps: no value for `{}`", pres.generator_names()[g]))),
                None => Ok(Augmentation::new(out.into_iter().flatten().collect())),
            }
        }
    }
}

fn representation(spec: &JobSpec, ctx: &Arc<FieldContext>, pres: &Presentation, seed: u64) -> Result<Representation, RunError> {
    match &spec.rho {
        RhoSpec::Random { family, rank } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let Source::Builder(b) = &spec.source else {
                return Err(RunError::Input("random rho needs a hopf or a_odd builder".into()));
            };
            Ok(match (b, family) {
                (BuilderSpec::Hopf(d), RandomFamily::Scalar) => random::hopf_scalar(ctx, *d, *rank, &mut rng)?,
                (BuilderSpec::Hopf(d), RandomFamily::Diagonal) => random::hopf_diagonal(ctx, *d, *rank, &mut rng)?,
                (BuilderSpec::Hopf(d), RandomFamily::Unitary) if *rank == 1 => random::hopf_unitary_rank_one(ctx, *d, &mut rng)?,
                (BuilderSpec::AOdd(n) | BuilderSpec::AOddReduced(n), RandomFamily::Scalar) => random::a_odd(ctx, *n, *rank, &mut rng)?,
                _ => return Err(RunError::Input("random rho supports hopf (scalar, diagonal, unitary with rank 1) and a_odd (scalar)".into())),
            })
        }
        RhoSpec::Explicit(entries) => {
            let dim = spec
                .dimension
                .or_else(|| {
                    entries.iter().find_map(|(_, v)| match v {
                        RhoValue::Matrix(m) => Some(m.rows()),
                        RhoValue::Scalar(_) => None,
                    })
                })
                .unwrap_or(1);
            let mut matrices = vec![None; pres.generators()];
            for (name, v) in entries {
                let g = pres.generator_index(name).ok_or_else(|| RunError::Input(format!("rho: unknown generator `{name}`")))?;
                let m = match v {
                    RhoValue::Scalar(c) => Matrix::scalar(ctx, dim, c),
                    RhoValue::Matrix(m) if m.rows() == dim => m.clone(),
                    RhoValue::Matrix(m) => return Err(RunError::Input(format!("rho {name}: {}x{} matrix, expected rank {dim}", m.rows(), m.cols()))),
                };
                matrices[g] = Some(m);
            }
            let matrices = matrices.into_iter().map(|m| m.unwrap_or_else(|| Matrix::identity(ctx, dim))).collect();
            Ok(Representation::new(ctx, dim, matrices)?)
        }
    }
}

/// Curve data and matrices at infinity, from explicit lines or the Hopf builder.
fn infinity_data(spec: &JobSpec, triple: &ValidatedTriple) -> Result<(CurveData, Vec<Matrix>), RunError> {
    let rho = triple.representation();
    let eps = triple.augmentation();
    match (&spec.curve, &spec.infinity, &spec.source) {
        (Some(parts), Some(words), _) => {
            let curve = CurveData::new(parts.iter().map(|&(degree, weight)| Component { degree, weight }).collect(), Vec::new())?;
            Ok((curve, words.iter().map(|w| rho.evaluate(w)).collect()))
        }
        (None, None, Source::Builder(BuilderSpec::Hopf(d))) => {
            let weights: Vec<i64> = hopf_meridian_words(*d).iter().map(|w| eps.evaluate(w)).collect();
            let curve = CurveData::new(weights.iter().map(|&weight| Component { degree: 1, weight }).collect(), Vec::new())?;
            Ok((curve, (0..*d).map(|g| rho.matrix(g).clone()).collect()))
        }
        _ => Err(RunError::Input("this analysis needs `curve` and `infinity` lines (implicit only for the hopf builder)".into())),
    }
}

fn singularity_name(kind: SingularityType) -> String {
    match kind {
        SingularityType::Ordinary(2) => "node".into(),
        SingularityType::Ordinary(k) => format!("ordinary k={k}"),
        SingularityType::AOdd(n) => format!("a_odd n={n}"),
        SingularityType::Torus { p, q } => format!("torus p={p} q={q}"),
    }
}

/// Run a job. `seed` drives `rho random`.
pub fn run_job(spec: &JobSpec, seed: u64) -> Result<Report, RunError> {
    let ctx = spec.field.context();
    let pres = source_presentation(&spec.source)?;
    let eps = augmentation(spec, &pres)?;
    let rho = representation(spec, &ctx, &pres, seed)?;
    let validation = validate(&pres, &eps, &rho)?;
    if !validation.is_valid() {
        return Err(RunError::Input(format!("invalid triple: {}", validation.describe(&pres))));
    }
    let triple = ValidatedTriple::new(pres.clone(), eps.clone(), rho)?;
    let names = pres.generator_names();
    let mut report = Report::default();
    report.records.push(Record::Job {
        name: spec.name.clone().unwrap_or_else(|| "unnamed".into()),
        field: if ctx.is_rational() { "Q".into() } else { format!("Q(zeta_{})", ctx.conductor()) },
        presentation: pres.to_string(),
        dimension: triple.representation().dimension(),
        eps: eps.values().to_vec(),
    });
    report.records.push(Record::Validation { valid: true, surjective: validation.surjective, eps_x0: validation.eps_x0 });

    let (complex, result) = alexander(&triple)?;
    for (i, m) in result.modules.iter().enumerate() {
        report.records.push(Record::Module {
            degree: i,
            free_rank: m.free_rank,
            torsion_order: m.torsion_order.to_string(),
            elementary_divisors: m.elementary_divisors.iter().map(|d| d.to_string()).collect(),
        });
    }
    let torsion_low = result.free_rank(0) == 0 && result.free_rank(1) == 0;
    let ratio = result.ratio();
    report.records.push(Record::Ratio { value: ratio.to_string() });

    match wada_ratio(&complex, &triple) {
        Ok(w) => {
            // the ratio only equals the homology ratio when H_0 and H_1 are torsion
            let agrees = w.ratio == ratio;
            report.records.push(Record::Wada {
                generator: names[w.generator].clone(),
                numerator: w.numerator.to_string(),
                denominator: w.denominator.to_string(),
                ratio: w.ratio.to_string(),
                agrees,
            });
            if pres.deficiency() == 1 && torsion_low {
                report.check("wada", agrees, format!("{} vs {}", w.ratio, ratio));
            }
        }
        Err(e) => report.records.push(Record::WadaUnavailable { reason: e.to_string() }),
    }

    if spec.analyses.contains(&Analysis::Euler) {
        let e = euler_rank_check(&complex, &result);
        report.records.push(Record::Euler { chain: e.chain_alternating_sum, homology: e.homology_alternating_sum, h2_pinned: e.h2_pinned });
        report.check("euler", e.consistent(), format!("chi * r = {}", e.chain_alternating_sum));
    }

    let mut divides = None;
    if spec.analyses.contains(&Analysis::Divisibility) {
        let (curve, matrices) = infinity_data(spec, &triple)?;
        let bound = infinity_bound(&curve, &matrices)?;
        let d = check_divides(result.delta(1), &bound)?;
        divides = Some(d.divides);
        report.records.push(Record::Divisibility {
            bound: d.bound.to_string(),
            divides: d.divides,
            quotient: d.quotient.map(|q| q.to_string()),
            witness: d.witness.as_ref().map(|w| w.to_string()),
        });
        if !spec.expects.iter().any(|e| matches!(e, Expect::Divides(_))) {
            report.check("divisibility", d.divides, format!("delta1 = {}", result.delta(1)));
        }
    }

    if spec.analyses.contains(&Analysis::RootField) {
        let (curve, matrices) = infinity_data(spec, &triple)?;
        match root_field(&matrices[0], curve.degree() as u64) {
            Ok(rf) => {
                let cyc = cyclotomic_factor_check(result.delta(1), rf.splitting_conductor);
                report.records.push(Record::RootField {
                    eigenvalues: rf.eigenvalues.iter().map(|e| e.to_string()).collect(),
                    orders: rf.orders.clone(),
                    base_conductor: rf.base_conductor,
                    splitting_conductor: rf.splitting_conductor,
                    degree: rf.degree,
                    formula_degree: rf.formula_degree,
                });
                report.records.push(Record::CyclotomicFactors {
                    inside: cyc.within.to_string(),
                    remainder: cyc.remainder.to_string(),
                    stray_orders: cyc.stray_orders.clone(),
                });
                report.check("root-field", cyc.holds(), format!("S conductor {}", rf.splitting_conductor));
            }
            Err(ObstructionError::EigenvaluesOutsideField(n)) => {
                report.check("root-field", true, format!("symbolic only: eigenvalues of rho(x0)^-1 are not roots of unity in Q(zeta_{n})"));
            }
            Err(e) => return Err(e.into()),
        }
    }

    if spec.analyses.contains(&Analysis::Alpha) {
        if spec.components.is_empty() {
            return Err(RunError::Input("alpha needs component lines".into()));
        }
        let mut comps = Vec::new();
        for c in &spec.components {
            let g = pres.generator_index(&c.generator).ok_or_else(|| RunError::Input(format!("component: unknown generator `{}`", c.generator)))?;
            comps.push(AlphaComponent {
                meridian: triple.representation().matrix(g).clone(),
                eps: eps.values()[g],
                singular_points: c.singular_points,
                euler_characteristic: c.euler_characteristic,
            });
        }
        report.records.push(Record::Alpha { value: alpha_term(&comps)?.to_string() });
    }

    for a in &spec.specialize {
        let b = dimension_bound_check(&complex, &result, a)?;
        report.records.push(Record::Specialize { point: a.to_string(), dims: b.dims, multiplicities: b.multiplicities, holds: b.holds });
        report.check(format!("specialize {a}"), b.all_hold(), format!("dims {:?} vs N {:?}", b.dims, b.multiplicities));
    }

    for l in &spec.locals {
        let lp = local_polynomial(l.kind, &l.weights, None)?;
        report.records.push(Record::Local {
            kind: singularity_name(l.kind),
            weights: l.weights.clone(),
            delta0: lp.delta0.to_string(),
            delta1: lp.delta1.to_string(),
            ratio: lp.ratio.to_string(),
            predicted_delta1: lp.predicted_delta1.to_string(),
            matches_prediction: lp.matches_prediction(),
        });
        // the substitution rule is only claimed for equal weights
        if l.weights.iter().all(|&w| w == l.weights[0]) {
            report.check(format!("local {} substitution", singularity_name(l.kind)), lp.matches_prediction(), lp.delta1.to_string());
        }
    }

    for e in &spec.expects {
        match e {
            Expect::Delta(i, p) => {
                let got = result.delta(*i);
                report.check(format!("expect delta{i}"), got == &p.normalize(), format!("got {got}, expected {p}"));
            }
            Expect::Ratio(r) => report.check("expect ratio", &ratio == r, format!("got {ratio}, expected {r}")),
            Expect::Free(f) => {
                let got = [result.free_rank(0), result.free_rank(1), result.free_rank(2)];
                report.check("expect free", &got == f, format!("got {got:?}, expected {f:?}"));
            }
            Expect::Divides(want) => match divides {
                Some(d) => report.check("expect divides", d == *want, format!("got {d}, expected {want}")),
                None => return Err(RunError::Input("expect divides needs `analyze divisibility`".into())),
            },
        }
    }
    Ok(report)
}
