//! Laurent polynomials over `Q(zeta_n)` and the PID algebra built on them.

mod matrix;
mod rational_function;
mod smith;

pub use matrix::LaurentMatrix;
pub use rational_function::RationalFunction;
pub use smith::{elementary_divisors, smith_normal_form, ModuleShape, SmithForm};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::scalars::{CycloNumber, FieldContext, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("evaluation at t = 0 is undefined for Laurent polynomials")]
    EvaluateAtZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorSizeOutOfRange { k: usize, rows: usize, cols: usize },
    #[error("substitution exponent must be positive")]
    NonPositiveExponent,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// An element of `F[t, t^-1]`: `sum_i coeffs[i] * t^(low + i)`.
///
/// The zero polynomial has no coefficients; otherwise the first and last
/// coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<CycloNumber>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one(ctx: &Arc<FieldContext>) -> Self {
        Self::constant(CycloNumber::one(ctx))
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: CycloNumber, exponent: i64) -> Self {
        Self::from_coeffs(exponent, vec![c])
    }

    /// `t^k`.
    pub fn t_pow(ctx: &Arc<FieldContext>, k: i64) -> Self {
        Self::monomial(CycloNumber::one(ctx), k)
    }

    /// `t - a`.
    pub fn linear(a: &CycloNumber) -> Self {
        Self::from_coeffs(0, vec![-a, CycloNumber::one(a.context())])
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<CycloNumber>) -> Self {
        LaurentPoly { low, coeffs }.trimmed()
    }

    /// Integer coefficients, lowest exponent `low`.
    pub fn from_integers(ctx: &Arc<FieldContext>, low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| CycloNumber::from_integer(ctx, c)).collect())
    }

    fn trimmed(mut self) -> Self {
        let first = self.coeffs.iter().position(|c| !c.is_zero());
        match first {
            None => Self::zero(),
            Some(f) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                self.coeffs.drain(..f);
                self.low += f as i64;
                self
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Units of `F[t, t^-1]` are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn context(&self) -> Option<&Arc<FieldContext>> {
        self.coeffs.first().map(CycloNumber::context)
    }

    /// Lowest exponent (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent; `None` for zero.
    pub fn high(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Top exponent minus bottom exponent, the Euclidean norm of the Laurent ring.
    pub fn span(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> Option<&CycloNumber> {
        let idx = exponent - self.low;
        if idx < 0 {
            return None;
        }
        self.coeffs.get(idx as usize)
    }

    pub fn leading(&self) -> Option<&CycloNumber> {
        self.coeffs.last()
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let Some(ctx) = self.context() else {
            return if e == 0 { panic!("0^0 has no field context") } else { Self::zero() };
        };
        let mut acc = Self::one(ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Canonical representative of the unit class: lowest exponent 0, monic in the top term.
    pub fn normalize(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let inv = lead.inverse().expect("leading coefficient is nonzero");
                LaurentPoly { low: 0, coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    /// The unit `u` with `self = u * self.normalize()`.
    pub fn unit_part(&self) -> Option<Self> {
        self.leading().map(|lead| Self::monomial(lead.clone(), self.low))
    }

    pub fn is_associate(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// Euclidean division for the span norm: `self = q * divisor + r`, `span(r) < span(divisor)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = divisor.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - db;
        let mut quot = vec![CycloNumber::zero(divisor.coeffs[0].context()); qlen];
        for k in (0..qlen).rev() {
            if rem[k + db].is_zero() {
                continue;
            }
            let c = &rem[k + db] * &inv;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &(&c * d);
                }
            }
            quot[k] = c;
        }
        rem.truncate(db);
        let q = Self::from_coeffs(self.low - divisor.low, quot);
        let r = Self::from_coeffs(self.low, rem);
        Ok((q, r))
    }

    /// `Some(q)` with `self = q * divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.exact_div(self).is_some()
    }

    /// Normalized greatest common divisor; `gcd(p, 0) = normalize(p)`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.normalize();
        let mut b = other.normalize();
        while !b.is_zero() {
            if b.is_unit() {
                return b.normalize();
            }
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.normalize();
        }
        a
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        (self * &other.exact_div(&g).expect("gcd divides")).normalize()
    }

    /// `p(t^n)`.
    pub fn substitute_t_power(&self, n: i64) -> Result<Self, LaurentError> {
        if n < 1 {
            return Err(LaurentError::NonPositiveExponent);
        }
        let Some(ctx) = self.context() else { return Ok(Self::zero()) };
        let n_us = n as usize;
        let mut coeffs = vec![CycloNumber::zero(ctx); (self.coeffs.len() - 1) * n_us + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * n_us] = c.clone();
        }
        Ok(Self::from_coeffs(self.low * n, coeffs))
    }

    /// Conjugate the coefficients and send `t -> t^-1`.
    pub fn bar(&self) -> Self {
        match self.high() {
            None => Self::zero(),
            Some(high) => LaurentPoly { low: -high, coeffs: self.coeffs.iter().rev().map(CycloNumber::conj).collect() },
        }
    }

    /// Evaluate at `t = a`.
    pub fn evaluate(&self, a: &CycloNumber) -> Result<CycloNumber, LaurentError> {
        if a.is_zero() {
            return Err(LaurentError::EvaluateAtZero);
        }
        if let Some(ctx) = self.context() {
            if ctx.conductor() != a.conductor() {
                return Err(ScalarError::ConductorMismatch(ctx.conductor(), a.conductor()).into());
            }
        }
        let mut acc = CycloNumber::zero(a.context());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + c;
        }
        Ok(&acc * &a.pow(self.low)?)
    }

    /// Power of `(t - a)` dividing the polynomial; `None` for the zero polynomial.
    pub fn root_multiplicity(&self, a: &CycloNumber) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = Self::linear(a);
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            m += 1;
        }
        Some(m)
    }

    pub fn embed(&self, target: &Arc<FieldContext>) -> Result<Self, ScalarError> {
        let coeffs = self.coeffs.iter().map(|c| c.embed(target)).collect::<Result<_, _>>()?;
        Ok(LaurentPoly { low: self.low, coeffs })
    }

    /// Degree-wise conversion of an ordinary polynomial with integer coefficients.
    pub fn from_bigints(ctx: &Arc<FieldContext>, coeffs: &[num_bigint::BigInt]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|c| CycloNumber::from_rational(ctx, &crate::scalars::Rational::from_integer(c.clone())))
            .collect();
        Self::from_coeffs(0, coeffs)
    }
}

fn exponent_suffix(e: i64) -> String {
    match e {
        1 => "t".to_string(),
        _ => format!("t^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let (neg, body) = if c.is_monomial() {
                let s = c.to_string();
                match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                }
            } else if e == 0 {
                (false, c.to_string())
            } else {
                (false, format!("({c})"))
            };
            let term = match (e, body.as_str()) {
                (0, _) => body.clone(),
                (_, "1") => exponent_suffix(e),
                _ => format!("{body}*{}", exponent_suffix(e)),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => write!(f, "{term}")?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().unwrap().max(rhs.high().unwrap());
        let ctx = self.coeffs[0].context();
        let mut coeffs = vec![CycloNumber::zero(ctx); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] = c.clone();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let ctx = self.coeffs[0].context();
        let mut coeffs = vec![CycloNumber::zero(ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

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
    fn normalize_examples() {
        // 3t^2 - 3t -> t - 1
        assert_eq!(p(1, &[-3, 3]).normalize(), p(0, &[-1, 1]));
        assert!(LaurentPoly::zero().normalize().is_zero());
        // -t^-1 + 1 -> t - 1
        assert_eq!(p(-1, &[-1, 1]).normalize(), p(0, &[-1, 1]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(0, &[-1, 0, 1]).gcd(&p(0, &[-1, 0, 0, 1])), p(0, &[-1, 1]));
        let x = p(-2, &[4, 0, 2]);
        assert_eq!(x.gcd(&LaurentPoly::zero()), x.normalize());
        // Euclid by hand: t^6 - 1 = t^2 (t^4 - 1) + (t^2 - 1); t^4 - 1 = (t^2 + 1)(t^2 - 1)
        assert_eq!(p(0, &[-1, 0, 0, 0, 1]).gcd(&p(0, &[-1, 0, 0, 0, 0, 0, 1])), p(0, &[-1, 0, 1]));
    }

    #[test]
    fn substitution_and_bar() {
        assert_eq!(p(0, &[-1, 1]).substitute_t_power(2).unwrap(), p(0, &[-1, 0, 1]));
        let f = p(-1, &[2, 0, 5]);
        assert_eq!(f.substitute_t_power(1).unwrap(), f);
        assert_eq!(p(0, &[1, 1, 1]).substitute_t_power(3).unwrap(), p(0, &[1, 0, 0, 1, 0, 0, 1]));
        assert!(f.substitute_t_power(0).is_err());

        let bar = p(0, &[-1, 1]).bar();
        assert_eq!(bar, p(-1, &[1, -1]));
        assert_eq!(bar.normalize(), p(0, &[-1, 1]));

        let q4 = FieldContext::cyclotomic(4).unwrap();
        let i = CycloNumber::zeta(&q4);
        assert_eq!(LaurentPoly::monomial(i.clone(), 1).bar(), LaurentPoly::monomial(-&i, -1));
    }

    #[test]
    fn evaluation() {
        let q4 = FieldContext::cyclotomic(4).unwrap();
        let f = LaurentPoly::from_integers(&q4, 0, &[-1, 0, 1]);
        assert!(f.evaluate(&CycloNumber::one(&q4)).unwrap().is_zero());
        assert_eq!(f.evaluate(&CycloNumber::zeta(&q4)).unwrap(), CycloNumber::from_integer(&q4, -2));
        assert_eq!(f.evaluate(&CycloNumber::zero(&q4)), Err(LaurentError::EvaluateAtZero));
        let g = LaurentPoly::from_integers(&q4, -2, &[3]);
        let two = CycloNumber::from_integer(&q4, 2);
        assert_eq!(g.evaluate(&two).unwrap().as_rational().unwrap(), crate::scalars::Rational::new(3.into(), 4.into()));
    }

    #[test]
    fn division_with_remainder() {
        let a = p(-1, &[1, 0, 3, 1]);
        let b = p(2, &[1, 1]);
        let (qq, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&qq * &b) + &r, a);
        assert!(r.span().map_or(true, |s| s < b.span().unwrap()));
        assert_eq!(a.div_rem(&LaurentPoly::zero()), Err(LaurentError::DivisionByZero));
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p(0, &[-1, 2, 0, 1]).to_string(), "-1 + 2*t + t^3");
        assert_eq!(p(-1, &[-1, 1]).to_string(), "-t^-1 + 1");
        let q4 = FieldContext::cyclotomic(4).unwrap();
        let c = &CycloNumber::one(&q4) + &CycloNumber::zeta(&q4);
        let f = LaurentPoly::from_coeffs(0, vec![c.clone(), c]);
        assert_eq!(f.to_string(), "1 + z + (1 + z)*t");
    }

    #[test]
    fn root_multiplicity_counts() {
        let one = CycloNumber::one(&q());
        let f = &p(0, &[-1, 1]) * &p(0, &[-1, 0, 0, 1]);
        assert_eq!(f.root_multiplicity(&one), Some(2));
        assert_eq!(f.root_multiplicity(&CycloNumber::from_integer(&q(), 2)), Some(0));
    }
}
