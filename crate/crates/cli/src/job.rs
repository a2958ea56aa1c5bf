//! Line-oriented job files.
//!
//! ```text
//! # two lines through the origin, twisted
//! name node
//! field cyclotomic 12
//! builder hopf d=2
//! eps lk
//! rho x1 = [[z^3]]
//! analyze delta wada divisibility
//! specialize 1 z^3
//! expect ratio = 1
//! ```
//!
//! Directives are one per line; `#` starts a comment. `field` must precede any
//! line containing scalars and `generators` must precede `relator`. The full
//! grammar is described in the README.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use thiserror::Error;
use twisted_alexander::expr::{parse_poly, parse_scalar, ExprError};
use twisted_alexander::obstructions::SingularityType;
use twisted_alexander::presentations::{Factor, Word, BUILDERS};
use twisted_alexander::{CycloNumber, FieldContext, LaurentPoly, Matrix, RationalFunction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct JobError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Cyclotomic(u64),
}

impl FieldSpec {
    pub fn context(self) -> Arc<FieldContext> {
        match self {
            FieldSpec::Rational => FieldContext::rational(),
            FieldSpec::Cyclotomic(n) => FieldContext::cyclotomic(n).expect("checked at parse time"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuilderSpec {
    Hopf(usize),
    HopfFull(usize),
    AOdd(usize),
    AOddReduced(usize),
    Torus(u32, u32),
    Cusp,
    Union(Vec<Factor>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builder(BuilderSpec),
    Inline { generators: Vec<String>, relators: Vec<Word> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpsSpec {
    /// Every meridian to 1.
    Lk,
    /// Builder branch weights.
    Weights(Vec<i64>),
    /// Value per generator name.
    Values(Vec<(String, i64)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoValue {
    /// Multiple of the identity.
    Scalar(CycloNumber),
    Matrix(Matrix),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomFamily {
    Scalar,
    Diagonal,
    Unitary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoSpec {
    Explicit(Vec<(String, RhoValue)>),
    /// Drawn with the run seed; supported for `hopf` and `a_odd` builders.
    Random { family: RandomFamily, rank: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Analysis {
    Delta,
    Wada,
    Euler,
    Divisibility,
    RootField,
    Alpha,
}

impl Analysis {
    const ALL: [(Analysis, &'static str); 6] = [
        (Analysis::Delta, "delta"),
        (Analysis::Wada, "wada"),
        (Analysis::Euler, "euler"),
        (Analysis::Divisibility, "divisibility"),
        (Analysis::RootField, "root-field"),
        (Analysis::Alpha, "alpha"),
    ];

    pub fn name(self) -> &'static str {
        Self::ALL.iter().find(|(a, _)| *a == self).unwrap().1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSpec {
    pub kind: SingularityType,
    pub weights: Vec<i64>,
}

/// A component for the alpha term, identified by its meridian generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSpec {
    pub generator: String,
    pub singular_points: i64,
    pub euler_characteristic: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expect {
    Delta(usize, LaurentPoly),
    Ratio(RationalFunction),
    Free([usize; 3]),
    Divides(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub name: Option<String>,
    pub field: FieldSpec,
    pub source: Source,
    pub eps: EpsSpec,
    pub dimension: Option<usize>,
    pub rho: RhoSpec,
    pub analyses: Vec<Analysis>,
    pub specialize: Vec<CycloNumber>,
    pub locals: Vec<LocalSpec>,
    pub components: Vec<ComponentSpec>,
    /// `(degree, weight)` per component of the curve.
    pub curve: Option<Vec<(usize, i64)>>,
    /// Words for `x0, ..., x_{d-1}` at infinity.
    pub infinity: Option<Vec<Word>>,
    pub expects: Vec<Expect>,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn err<T>(&self, column: usize, message: impl Into<String>) -> Result<T, JobError> {
        Err(JobError { line: self.number, column, message: message.into() })
    }

    /// 1-based column of `part`, a subslice of the line.
    fn column_of(&self, part: &str) -> usize {
        (part.as_ptr() as usize).saturating_sub(self.text.as_ptr() as usize) + 1
    }

    fn expr_err<T>(&self, part: &str, e: ExprError) -> Result<T, JobError> {
        self.err(self.column_of(part) + e.column - 1, e.message)
    }
}

fn key_values<'a>(line: &Line<'a>, tokens: &[&'a str]) -> Result<Vec<(&'a str, &'a str)>, JobError> {
    tokens
        .iter()
        .map(|t| match t.split_once('=') {
            Some((k, v)) => Ok((k, v)),
            None => line.err(line.column_of(t), format!("expected key=value, found `{t}`")),
        })
        .collect()
}

fn number<T: std::str::FromStr>(line: &Line, text: &str) -> Result<T, JobError> {
    text.trim().parse().or_else(|_| line.err(line.column_of(text), format!("expected a number, found `{text}`")))
}

fn int_list(line: &Line, text: &str) -> Result<Vec<i64>, JobError> {
    text.split(',').map(|s| number(line, s)).collect()
}

fn param<'a>(line: &Line, params: &[(&'a str, &'a str)], key: &str) -> Result<&'a str, JobError> {
    match params.iter().find(|(k, _)| *k == key) {
        Some((_, v)) => Ok(v),
        None => line.err(1, format!("missing parameter `{key}`")),
    }
}

fn parse_factor(line: &Line, text: &str) -> Result<Factor, JobError> {
    match text {
        "line" => Ok(Factor::Line),
        "cusp" => Ok(Factor::Cusp),
        _ => {
            let inner = text.strip_prefix("torus(").and_then(|s| s.strip_suffix(')'));
            match inner.and_then(|s| s.split_once(';')) {
                Some((p, q)) => Ok(Factor::Torus { p: number(line, p)?, q: number(line, q)? }),
                None => line.err(line.column_of(text), format!("unknown factor `{text}`, expected line, cusp or torus(p;q)")),
            }
        }
    }
}

fn parse_builder(line: &Line, tokens: &[&str]) -> Result<BuilderSpec, JobError> {
    let Some((&name, rest)) = tokens.split_first() else {
        return line.err(1, "builder needs a name");
    };
    let params = key_values(line, rest)?;
    let n = |key: &str| -> Result<usize, JobError> { number(line, param(line, &params, key)?) };
    Ok(match name {
        "hopf" => BuilderSpec::Hopf(n("d")?),
        "hopf_full" => BuilderSpec::HopfFull(n("d")?),
        "a_odd" => BuilderSpec::AOdd(n("n")?),
        "a_odd_reduced" => BuilderSpec::AOddReduced(n("n")?),
        "torus" => BuilderSpec::Torus(n("p")? as u32, n("q")? as u32),
        "cusp" => BuilderSpec::Cusp,
        "union" => BuilderSpec::Union(param(line, &params, "factors")?.split(',').map(|f| parse_factor(line, f)).collect::<Result<_, _>>()?),
        _ => {
            let known: Vec<&str> = BUILDERS.iter().map(|(n, _)| *n).collect();
            return line.err(line.column_of(name), format!("unknown builder `{name}`; available: {}", known.join(", ")));
        }
    })
}

fn parse_singularity(line: &Line, tokens: &[&str]) -> Result<LocalSpec, JobError> {
    let Some((&name, rest)) = tokens.split_first() else {
        return line.err(1, "local needs a singularity type");
    };
    let params = key_values(line, rest)?;
    let n = |key: &str| -> Result<usize, JobError> { number(line, param(line, &params, key)?) };
    let kind = match name {
        "node" => SingularityType::Ordinary(2),
        "ordinary" => SingularityType::Ordinary(n("k")?),
        "a_odd" => SingularityType::AOdd(n("n")?),
        "torus" => SingularityType::Torus { p: n("p")? as u32, q: n("q")? as u32 },
        "cusp" => SingularityType::Torus { p: 2, q: 3 },
        _ => return line.err(line.column_of(name), format!("unsupported singularity `{name}`; expected node, ordinary, a_odd, torus or cusp")),
    };
    let weights = match params.iter().find(|(k, _)| *k == "weights") {
        Some((_, v)) => int_list(line, v)?,
        None => vec![1; kind.branches()],
    };
    if weights.len() != kind.branches() {
        return line.err(1, format!("{name} has {} branches, got {} weights", kind.branches(), weights.len()));
    }
    Ok(LocalSpec { kind, weights })
}

fn parse_matrix(line: &Line, ctx: &Arc<FieldContext>, generator: &str, text: &str) -> Result<Matrix, JobError> {
    let inner = match text.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        Some(s) => s,
        None => return line.err(line.column_of(text), format!("rho {generator}: expected [[...], ...]")),
    };
    let mut rows: Vec<Vec<CycloNumber>> = Vec::new();
    let mut rest = inner;
    loop {
        rest = rest.trim_start().trim_start_matches(',').trim_start();
        if rest.is_empty() {
            break;
        }
        let Some(body) = rest.strip_prefix('[') else {
            return line.err(line.column_of(rest), format!("rho {generator}: expected `[`"));
        };
        let Some(end) = body.find(']') else {
            return line.err(line.column_of(rest), format!("rho {generator}: unclosed row"));
        };
        let row = body[..end].split(',').map(|e| parse_scalar(ctx, e).or_else(|err| line.expr_err(e, err))).collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return line.err(line.column_of(rest), format!("rho {generator}: row {} has {} entries, expected {}", rows.len() + 1, row.len(), first.len()));
            }
        }
        rows.push(row);
        rest = &body[end + 1..];
    }
    if rows.is_empty() || rows.len() != rows[0].len() {
        return line.err(line.column_of(text), format!("rho {generator}: matrix must be square and nonempty"));
    }
    Ok(Matrix::from_rows(ctx, rows).expect("rectangular"))
}

fn parse_ratio(line: &Line, ctx: &Arc<FieldContext>, text: &str) -> Result<RationalFunction, JobError> {
    let poly = |s: &str| parse_poly(ctx, s).or_else(|e| line.expr_err(s, e));
    // `(num) / (den)`, with the slash outside every parenthesis
    let mut depth = 0i32;
    let mut split = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 && text[..i].trim_end().ends_with(')') => split = Some(i),
            _ => {}
        }
    }
    match split {
        Some(i) => {
            let (n, d) = (poly(&text[..i])?, poly(&text[i + 1..])?);
            RationalFunction::new(&n, &d).or_else(|e| line.err(line.column_of(text), e.to_string()))
        }
        None => Ok(RationalFunction::from_poly(&poly(text)?)),
    }
}

pub fn parse_job(text: &str) -> Result<JobSpec, JobError> {
    let mut name = None;
    let mut field: Option<FieldSpec> = None;
    let mut source: Option<Source> = None;
    let mut eps = EpsSpec::Lk;
    let mut dimension = None;
    let mut explicit: Vec<(String, RhoValue)> = Vec::new();
    let mut random = None;
    let mut analyses = Vec::new();
    let mut specialize = Vec::new();
    let mut locals = Vec::new();
    let mut components = Vec::new();
    let mut curve = None;
    let mut infinity_text: Option<(usize, String)> = None;
    let mut expects = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap();
        let line = Line { number: i + 1, text: raw };
        last_line = i + 1;
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else { continue };
        let after_keyword = body.trim_start()[keyword.len()..].trim();
        let ctx = || field.unwrap_or(FieldSpec::Rational).context();
        match keyword {
            "name" => name = Some(after_keyword.to_string()),
            "field" => {
                field = Some(match args {
                    ["rational"] => FieldSpec::Rational,
                    ["cyclotomic", n] => {
                        let n: u64 = number(&line, n)?;
                        if FieldContext::cyclotomic(n).is_err() {
                            return line.err(line.column_of(args[1]), format!("unsupported conductor {n}"));
                        }
                        FieldSpec::Cyclotomic(n)
                    }
                    _ => return line.err(1, "expected `field rational` or `field cyclotomic <n>`"),
                })
            }
            "builder" => {
                if source.is_some() {
                    return line.err(1, "presentation already given");
                }
                source = Some(Source::Builder(parse_builder(&line, args)?));
            }
            "generators" => {
                if source.is_some() {
                    return line.err(1, "presentation already given");
                }
                if args.is_empty() {
                    return line.err(1, "no generators");
                }
                source = Some(Source::Inline { generators: args.iter().map(|s| s.to_string()).collect(), relators: Vec::new() });
            }
            "relator" => match &mut source {
                Some(Source::Inline { generators, relators }) => {
                    let w = Word::parse(after_keyword, generators).or_else(|e| line.err(line.column_of(after_keyword), e.to_string()))?;
                    relators.push(w);
                }
                _ => return line.err(1, "relator needs a preceding generators line"),
            },
            "eps" => {
                eps = match args {
                    ["lk"] => EpsSpec::Lk,
                    [w] if w.starts_with("weights=") => EpsSpec::Weights(int_list(&line, &w["weights=".len()..])?),
                    _ => EpsSpec::Values(key_values(&line, args)?.into_iter().map(|(k, v)| Ok((k.to_string(), number(&line, v)?))).collect::<Result<_, JobError>>()?),
                }
            }
            "dim" => dimension = Some(number(&line, after_keyword)?),
            "rho" => {
                if args.first() == Some(&"random") {
                    let params = key_values(&line, &args[1..])?;
                    let family = match params.iter().find(|(k, _)| *k == "family").map(|(_, v)| *v).unwrap_or("scalar") {
                        "scalar" => RandomFamily::Scalar,
                        "diagonal" => RandomFamily::Diagonal,
                        "unitary" => RandomFamily::Unitary,
                        other => return line.err(line.column_of(other), format!("unknown family `{other}`; expected scalar, diagonal or unitary")),
                    };
                    let rank = match params.iter().find(|(k, _)| *k == "rank") {
                        Some((_, v)) => number(&line, v)?,
                        None => 1,
                    };
                    random = Some(RhoSpec::Random { family, rank });
                } else {
                    let Some((generator, value)) = after_keyword.split_once('=') else {
                        return line.err(1, "expected `rho <generator> = <matrix>`");
                    };
                    let generator = generator.trim().to_string();
                    let value = value.trim();
                    let v = if value.starts_with('[') {
                        RhoValue::Matrix(parse_matrix(&line, &ctx(), &generator, value)?)
                    } else {
                        RhoValue::Scalar(parse_scalar(&ctx(), value).or_else(|e| line.expr_err(value, e))?)
                    };
                    explicit.push((generator, v));
                }
            }
            "analyze" => {
                for a in args {
                    match Analysis::ALL.iter().find(|(_, n)| n == a) {
                        Some((x, _)) if !analyses.contains(x) => analyses.push(*x),
                        Some(_) => {}
                        None => return line.err(line.column_of(a), format!("unknown analysis `{a}`")),
                    }
                }
            }
            "specialize" => {
                for a in args {
                    let v = parse_scalar(&ctx(), a).or_else(|e| line.expr_err(a, e))?;
                    if v.is_zero() {
                        return line.err(line.column_of(a), "specialization point must be nonzero");
                    }
                    specialize.push(v);
                }
            }
            "local" => locals.push(parse_singularity(&line, args)?),
            "component" => {
                let params = key_values(&line, args)?;
                components.push(ComponentSpec {
                    generator: param(&line, &params, "gen")?.to_string(),
                    singular_points: number(&line, param(&line, &params, "s")?)?,
                    euler_characteristic: number(&line, param(&line, &params, "chi")?)?,
                });
            }
            "curve" => {
                let mut parts = Vec::new();
                for a in args {
                    match a.split_once(':') {
                        Some((d, w)) => parts.push((number(&line, d)?, number(&line, w)?)),
                        None => return line.err(line.column_of(a), "expected <degree>:<weight>"),
                    }
                }
                curve = Some(parts);
            }
            "infinity" => infinity_text = Some((i + 1, after_keyword.to_string())),
            "expect" => {
                let Some((what, value)) = after_keyword.split_once('=') else {
                    return line.err(1, "expected `expect <quantity> = <value>`");
                };
                let value = value.trim();
                expects.push(match what.trim() {
                    "delta0" => Expect::Delta(0, parse_poly(&ctx(), value).or_else(|e| line.expr_err(value, e))?),
                    "delta1" => Expect::Delta(1, parse_poly(&ctx(), value).or_else(|e| line.expr_err(value, e))?),
                    "delta2" => Expect::Delta(2, parse_poly(&ctx(), value).or_else(|e| line.expr_err(value, e))?),
                    "ratio" => Expect::Ratio(parse_ratio(&line, &ctx(), value)?),
                    "free" => {
                        let v: Vec<usize> = value.split_whitespace().map(|s| number(&line, s)).collect::<Result<_, _>>()?;
                        match v.as_slice() {
                            [a, b, c] => Expect::Free([*a, *b, *c]),
                            _ => return line.err(line.column_of(value), "expected three free ranks"),
                        }
                    }
                    "divides" => Expect::Divides(match value {
                        "true" => true,
                        "false" => false,
                        _ => return line.err(line.column_of(value), "expected true or false"),
                    }),
                    other => return line.err(1, format!("unknown quantity `{other}`")),
                });
            }
            other => return line.err(line.column_of(other), format!("unknown directive `{other}`")),
        }
    }

    let Some(source) = source else {
        return Err(JobError { line: last_line.max(1), column: 1, message: "no presentation: add a builder or generators line".into() });
    };
    // infinity words may name builder generators, which are only known once the source is fixed
    let infinity = match infinity_text {
        None => None,
        Some((number, text)) => {
            let names = source_generator_names(&source).map_err(|message| JobError { line: number, column: 1, message })?;
            let words = text
                .split(';')
                .map(|w| Word::parse(w.trim(), &names).map_err(|e| JobError { line: number, column: 1, message: e.to_string() }))
                .collect::<Result<Vec<_>, _>>()?;
            Some(words)
        }
    };
    let rho = match random {
        Some(r) if !explicit.is_empty() => {
            let _ = r;
            return Err(JobError { line: last_line, column: 1, message: "random and explicit rho lines cannot be mixed".into() });
        }
        Some(r) => r,
        None => RhoSpec::Explicit(explicit),
    };
    Ok(JobSpec {
        name,
        field: field.unwrap_or(FieldSpec::Rational),
        source,
        eps,
        dimension,
        rho,
        analyses,
        specialize,
        locals,
        components,
        curve,
        infinity,
        expects,
    })
}

/// Generator names of the presentation a source describes.
pub fn source_generator_names(source: &Source) -> Result<Vec<String>, String> {
    Ok(crate::run::source_presentation(source).map_err(|e| e.to_string())?.generator_names().to_vec())
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn factor_text(f: &Factor) -> String {
    match f {
        Factor::Line => "line".into(),
        Factor::Cusp => "cusp".into(),
        Factor::Torus { p, q } => format!("torus({p};{q})"),
    }
}

fn singularity_text(l: &LocalSpec) -> String {
    let head = match l.kind {
        SingularityType::Ordinary(k) => format!("ordinary k={k}"),
        SingularityType::AOdd(n) => format!("a_odd n={n}"),
        SingularityType::Torus { p, q } => format!("torus p={p} q={q}"),
    };
    format!("{head} weights={}", join(&l.weights, ","))
}

/// Canonical text of a job; `parse_job` of the result equals `spec`.
pub fn serialize_job(spec: &JobSpec) -> String {
    let mut out = String::new();
    if let Some(name) = &spec.name {
        writeln!(out, "name {name}").unwrap();
    }
    match spec.field {
        FieldSpec::Rational => writeln!(out, "field rational").unwrap(),
        FieldSpec::Cyclotomic(n) => writeln!(out, "field cyclotomic {n}").unwrap(),
    }
    match &spec.source {
        Source::Builder(b) => {
            let text = match b {
                BuilderSpec::Hopf(d) => format!("hopf d={d}"),
                BuilderSpec::HopfFull(d) => format!("hopf_full d={d}"),
                BuilderSpec::AOdd(n) => format!("a_odd n={n}"),
                BuilderSpec::AOddReduced(n) => format!("a_odd_reduced n={n}"),
                BuilderSpec::Torus(p, q) => format!("torus p={p} q={q}"),
                BuilderSpec::Cusp => "cusp".into(),
                BuilderSpec::Union(f) => format!("union factors={}", f.iter().map(factor_text).collect::<Vec<_>>().join(",")),
            };
            writeln!(out, "builder {text}").unwrap();
        }
        Source::Inline { generators, relators } => {
            writeln!(out, "generators {}", generators.join(" ")).unwrap();
            for r in relators {
                writeln!(out, "relator {}", r.render(generators)).unwrap();
            }
        }
    }
    match &spec.eps {
        EpsSpec::Lk => writeln!(out, "eps lk").unwrap(),
        EpsSpec::Weights(w) => writeln!(out, "eps weights={}", join(w, ",")).unwrap(),
        EpsSpec::Values(v) => writeln!(out, "eps {}", v.iter().map(|(k, n)| format!("{k}={n}")).collect::<Vec<_>>().join(" ")).unwrap(),
    }
    if let Some(d) = spec.dimension {
        writeln!(out, "dim {d}").unwrap();
    }
    match &spec.rho {
        RhoSpec::Explicit(entries) => {
            for (g, v) in entries {
                match v {
                    RhoValue::Scalar(c) => writeln!(out, "rho {g} = {c}").unwrap(),
                    RhoValue::Matrix(m) => writeln!(out, "rho {g} = {m}").unwrap(),
                }
            }
        }
        RhoSpec::Random { family, rank } => {
            let f = match family {
                RandomFamily::Scalar => "scalar",
                RandomFamily::Diagonal => "diagonal",
                RandomFamily::Unitary => "unitary",
            };
            writeln!(out, "rho random family={f} rank={rank}").unwrap();
        }
    }
    if !spec.analyses.is_empty() {
        writeln!(out, "analyze {}", spec.analyses.iter().map(|a| a.name()).collect::<Vec<_>>().join(" ")).unwrap();
    }
    if !spec.specialize.is_empty() {
        // points are whitespace separated, so drop the spaces inside each
        writeln!(out, "specialize {}", spec.specialize.iter().map(|a| a.to_string().replace(' ', "")).collect::<Vec<_>>().join(" ")).unwrap();
    }
    for l in &spec.locals {
        writeln!(out, "local {}", singularity_text(l)).unwrap();
    }
    for c in &spec.components {
        writeln!(out, "component gen={} s={} chi={}", c.generator, c.singular_points, c.euler_characteristic).unwrap();
    }
    if let Some(parts) = &spec.curve {
        writeln!(out, "curve {}", parts.iter().map(|(d, w)| format!("{d}:{w}")).collect::<Vec<_>>().join(" ")).unwrap();
    }
    if let Some(words) = &spec.infinity {
        let names = source_generator_names(&spec.source).unwrap_or_default();
        writeln!(out, "infinity {}", words.iter().map(|w| w.render(&names)).collect::<Vec<_>>().join("; ")).unwrap();
    }
    for e in &spec.expects {
        match e {
            Expect::Delta(i, p) => writeln!(out, "expect delta{i} = {p}").unwrap(),
            Expect::Ratio(r) => writeln!(out, "expect ratio = {r}").unwrap(),
            Expect::Free(f) => writeln!(out, "expect free = {} {} {}", f[0], f[1], f[2]).unwrap(),
            Expect::Divides(b) => writeln!(out, "expect divides = {b}").unwrap(),
        }
    }
    out
}
