//! Exact scalars: rationals and elements of cyclotomic fields `Q(zeta_n)`.
//!
//! A cyclotomic number is stored in the power basis `1, z, ..., z^(phi(n)-1)`
//! of `Q[z]/Phi_n(z)` as integer numerators over one shared positive
//! denominator. The rational field is the conductor-1 context.

mod matrix;

pub use matrix::Matrix;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("field mismatch: Q(zeta_{0}) vs Q(zeta_{1})")]
    ConductorMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor must be a positive integer")]
    ZeroConductor,
    #[error("Q(zeta_{from}) does not embed into Q(zeta_{to})")]
    NotEmbeddable { from: u64, to: u64 },
}

/// Euler's totient function. `totient(0)` is defined as 0.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Least common multiple of a list; the empty list has lcm 1.
pub fn lcm(values: &[u64]) -> u64 {
    values.iter().fold(1u64, |acc, &v| if v == 0 { 0 } else { acc.lcm(&v) })
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The cyclotomic polynomial `Phi_n` as integer coefficients, lowest degree first.
///
/// Computed by exact division of `t^n - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial requires n >= 1");
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        poly = monic_exact_div(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn monic_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Shared data for one cyclotomic field `Q(zeta_n)`.
#[derive(Debug)]
pub struct FieldContext {
    conductor: u64,
    modulus: Vec<BigInt>,
    // zeta^m in the power basis for m in 0..conductor
    powers: Vec<Vec<BigInt>>,
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for FieldContext {}

impl FieldContext {
    pub fn rational() -> Arc<FieldContext> {
        Self::build(1)
    }

    pub fn cyclotomic(conductor: u64) -> Result<Arc<FieldContext>, ScalarError> {
        if conductor == 0 {
            return Err(ScalarError::ZeroConductor);
        }
        Ok(Self::build(conductor))
    }

    fn build(conductor: u64) -> Arc<FieldContext> {
        let modulus = cyclotomic_polynomial(conductor);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(conductor as usize);
        let mut current = vec![BigInt::zero(); phi];
        current[0] = BigInt::one();
        for _ in 0..conductor {
            powers.push(current.clone());
            // multiply by z and reduce with the monic modulus
            let top = current[phi - 1].clone();
            for i in (1..phi).rev() {
                current[i] = current[i - 1].clone();
            }
            current[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..phi {
                    current[i] -= &top * &modulus[i];
                }
            }
        }
        Arc::new(FieldContext { conductor, modulus, powers })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Degree of the field over `Q`, i.e. `phi(conductor)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Order of the group of roots of unity contained in the field.
    pub fn roots_of_unity_order(&self) -> u64 {
        lcm(&[2, self.conductor])
    }
}

/// An element of `Q(zeta_n)`.
#[derive(Clone)]
pub struct CycloNumber {
    ctx: Arc<FieldContext>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNumber {
    pub fn zero(ctx: &Arc<FieldContext>) -> Self {
        CycloNumber { ctx: ctx.clone(), num: vec![BigInt::zero(); ctx.degree()], den: BigInt::one() }
    }

    pub fn one(ctx: &Arc<FieldContext>) -> Self {
        Self::from_integer(ctx, 1)
    }

    pub fn from_integer(ctx: &Arc<FieldContext>, value: i64) -> Self {
        let mut x = Self::zero(ctx);
        x.num[0] = BigInt::from(value);
        x
    }

    pub fn from_rational(ctx: &Arc<FieldContext>, q: &Rational) -> Self {
        let mut x = Self::zero(ctx);
        x.num[0] = q.numer().clone();
        x.den = q.denom().clone();
        x
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(ctx: &Arc<FieldContext>, k: i64) -> Self {
        let n = ctx.conductor as i64;
        let idx = k.rem_euclid(n) as usize;
        CycloNumber { ctx: ctx.clone(), num: ctx.powers[idx].clone(), den: BigInt::one() }
    }

    pub fn zeta(ctx: &Arc<FieldContext>) -> Self {
        Self::zeta_pow(ctx, 1)
    }

    /// Build from power-basis coordinates. Missing trailing coordinates are zero;
    /// coordinates past `phi(n) - 1` are reduced through `z^n = 1`.
    pub fn from_coords(ctx: &Arc<FieldContext>, coords: &[Rational]) -> Self {
        let mut acc = Self::zero(ctx);
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += &(Self::zeta_pow(ctx, k as i64) * &Self::from_rational(ctx, c));
        }
        acc
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn conductor(&self) -> u64 {
        self.ctx.conductor
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.num.iter().map(|n| Rational::new(n.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the number lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), ScalarError> {
        if self.ctx.conductor == other.ctx.conductor {
            Ok(())
        } else {
            Err(ScalarError::ConductorMismatch(self.ctx.conductor, other.ctx.conductor))
        }
    }

    fn reduce(mut self) -> Self {
        if self.is_zero() {
            self.den = BigInt::one();
            return self;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(n);
        }
        if !g.is_one() {
            for n in &mut self.num {
                *n /= &g;
            }
            self.den /= &g;
        }
        self
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        let num = if self.den == other.den {
            self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect()
        } else {
            self.num.iter().zip(&other.num).map(|(a, b)| a * &other.den + b * &self.den).collect()
        };
        let den = if self.den == other.den { self.den.clone() } else { &self.den * &other.den };
        Ok(CycloNumber { ctx: self.ctx.clone(), num, den }.reduce())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        let phi = self.ctx.degree();
        if phi == 1 {
            let num = vec![&self.num[0] * &other.num[0]];
            let den = &self.den * &other.den;
            return Ok(CycloNumber { ctx: self.ctx.clone(), num, den }.reduce());
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let n = self.ctx.conductor as usize;
        let mut num: Vec<BigInt> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in num.iter_mut().zip(&self.ctx.powers[k % n]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        let den = &self.den * &other.den;
        Ok(CycloNumber { ctx: self.ctx.clone(), num, den }.reduce())
    }

    /// Apply the field automorphism `zeta -> zeta^k` (`gcd(k, n) = 1`).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.ctx.conductor as i64;
        debug_assert_eq!(k.rem_euclid(n).gcd(&n).max(1), 1);
        let mut num = vec![BigInt::zero(); self.ctx.degree()];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = (i as i64 * k).rem_euclid(n) as usize;
            for (o, p) in num.iter_mut().zip(&self.ctx.powers[idx]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        CycloNumber { ctx: self.ctx.clone(), num, den: self.den.clone() }.reduce()
    }

    /// Complex conjugation, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse via the product of the nontrivial Galois conjugates.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.ctx.conductor as i64;
        let mut cofactor = CycloNumber::one(&self.ctx);
        for k in 2..n {
            if k.gcd(&n) == 1 {
                cofactor = &cofactor * &self.galois(k);
            }
        }
        let norm = (self * &cofactor).as_rational().expect("field norm is rational");
        let inv_norm = CycloNumber::from_rational(&self.ctx, &norm.recip());
        Ok(&cofactor * &inv_norm)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        Ok(self * &other.inverse()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycloNumber::one(&self.ctx);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Multiplicative order if the number is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let l = self.ctx.roots_of_unity_order();
        if !self.pow(l as i64).ok()?.is_one() {
            return None;
        }
        divisors(l).into_iter().find(|&m| self.pow(m as i64).map(|p| p.is_one()).unwrap_or(false))
    }

    /// Map into a field whose conductor is a multiple of ours, `zeta_n -> zeta_N^(N/n)`.
    pub fn embed(&self, target: &Arc<FieldContext>) -> Result<Self, ScalarError> {
        let (n, big) = (self.ctx.conductor, target.conductor);
        if big % n != 0 {
            return Err(ScalarError::NotEmbeddable { from: n, to: big });
        }
        let step = (big / n) as i64;
        let mut acc = CycloNumber::zero(target);
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = CycloNumber::zeta_pow(target, i as i64 * step);
            for x in &mut term.num {
                *x *= c;
            }
            acc += &term;
        }
        acc.den = &acc.den * &self.den;
        Ok(acc.reduce())
    }

    fn term_strings(&self) -> Vec<(bool, String)> {
        let mut out = Vec::new();
        for (k, n) in self.num.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let q = Rational::new(n.clone(), self.den.clone());
            let neg = q.is_negative();
            let a = q.abs();
            let body = match (k, a.is_one()) {
                (0, _) => a.to_string(),
                (1, true) => "z".to_string(),
                (1, false) => format!("{a}*z"),
                (_, true) => format!("z^{k}"),
                (_, false) => format!("{a}*z^{k}"),
            };
            out.push((neg, body));
        }
        out
    }

    /// True when the printed form is a single signed term.
    pub fn is_monomial(&self) -> bool {
        self.num.iter().filter(|n| !n.is_zero()).count() <= 1
    }
}

fn join_terms(terms: &[(bool, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(body);
    }
    s
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(&self.term_strings()))
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.ctx.conductor)
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.conductor == other.ctx.conductor && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycloNumber {}

impl Hash for CycloNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.conductor.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber { ctx: self.ctx.clone(), num: self.num.iter().map(|n| -n).collect(), den: self.den.clone() }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(mut self) -> CycloNumber {
        for n in &mut self.num {
            *n = -std::mem::take(n);
        }
        self
    }
}

// Operator forms panic on mixed fields; use the `checked_*` methods to get an error instead.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycloNumber> for CycloNumber {
    fn sub_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycloNumber> for CycloNumber {
    fn mul_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_is_t_n_minus_one() {
        // prod_{d | n} Phi_d = t^n - 1
        for n in 1..=30u64 {
            let mut prod = ints(&[1]);
            for d in divisors(n) {
                let f = cyclotomic_polynomial(d);
                assert_eq!(f.len() as u64 - 1, totient(d));
                let mut next = vec![BigInt::zero(); prod.len() + f.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in f.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = next;
            }
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[n as usize] = BigInt::one();
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn totient_and_lcm() {
        assert_eq!(totient(12), 4);
        assert_eq!(totient(1), 1);
        assert_eq!(totient(60), 16);
        assert_eq!(lcm(&[4, 6]), 12);
        assert_eq!(lcm(&[]), 1);
    }

    #[test]
    fn zeta_arithmetic() {
        let q4 = FieldContext::cyclotomic(4).unwrap();
        let i = CycloNumber::zeta(&q4);
        assert_eq!(&i * &i, CycloNumber::from_integer(&q4, -1));
        let a = CycloNumber::from_coords(&q4, &[Rational::from_integer(3.into()), Rational::new(1.into(), 2.into())]);
        assert_eq!(&CycloNumber::one(&q4) * &a, a);

        let q3 = FieldContext::cyclotomic(3).unwrap();
        let w = CycloNumber::zeta(&q3);
        assert!((&w * &(&w * &w)).is_one());
    }

    #[test]
    fn inverses() {
        let q5 = FieldContext::cyclotomic(5).unwrap();
        let z = CycloNumber::zeta(&q5);
        assert_eq!(z.inverse().unwrap(), CycloNumber::zeta_pow(&q5, 4));
        let two = CycloNumber::from_integer(&q5, 2);
        assert_eq!(two.inverse().unwrap().as_rational().unwrap(), Rational::new(1.into(), 2.into()));

        // (1 + i)^-1 = (1 - i)/2, from solving a*x = 1 in the basis {1, i}
        let q4 = FieldContext::cyclotomic(4).unwrap();
        let i = CycloNumber::zeta(&q4);
        let one = CycloNumber::one(&q4);
        let half = CycloNumber::from_rational(&q4, &Rational::new(1.into(), 2.into()));
        assert_eq!((&one + &i).inverse().unwrap(), &(&one - &i) * &half);
        assert_eq!(CycloNumber::zero(&q4).inverse(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn conjugation() {
        let q4 = FieldContext::cyclotomic(4).unwrap();
        let i = CycloNumber::zeta(&q4);
        assert_eq!(i.conj(), -&i);
        let r = CycloNumber::from_rational(&q4, &Rational::new(3.into(), 5.into()));
        assert_eq!(r.conj(), r);
        let q3 = FieldContext::cyclotomic(3).unwrap();
        let one = CycloNumber::one(&q3);
        let w = CycloNumber::zeta(&q3);
        assert_eq!((&one + &w).conj(), &one + &CycloNumber::zeta_pow(&q3, 2));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = CycloNumber::one(&FieldContext::cyclotomic(3).unwrap());
        let b = CycloNumber::one(&FieldContext::cyclotomic(4).unwrap());
        assert_eq!(a.checked_mul(&b), Err(ScalarError::ConductorMismatch(3, 4)));
        assert!(FieldContext::cyclotomic(0).is_err());
    }

    #[test]
    fn root_of_unity_orders() {
        let q12 = FieldContext::cyclotomic(12).unwrap();
        for k in 0..12 {
            let u = CycloNumber::zeta_pow(&q12, k);
            let expect = 12 / (k as u64).gcd(&12);
            assert_eq!(u.root_of_unity_order(), Some(expect));
            assert!(u.pow(12).unwrap().is_one());
        }
        let q3 = FieldContext::cyclotomic(3).unwrap();
        // -zeta_3 has order 6 inside Q(zeta_3)
        assert_eq!((-CycloNumber::zeta(&q3)).root_of_unity_order(), Some(6));
        assert_eq!(CycloNumber::from_integer(&q3, 2).root_of_unity_order(), None);
    }

    #[test]
    fn embedding_respects_zeta() {
        let q4 = FieldContext::cyclotomic(4).unwrap();
        let q12 = FieldContext::cyclotomic(12).unwrap();
        let i = CycloNumber::zeta(&q4);
        let img = i.embed(&q12).unwrap();
        assert_eq!(img, CycloNumber::zeta_pow(&q12, 3));
        assert!(i.embed(&FieldContext::cyclotomic(6).unwrap()).is_err());
    }

    #[test]
    fn display_grammar() {
        let q12 = FieldContext::cyclotomic(12).unwrap();
        let half = Rational::new(1.into(), 2.into());
        let x = CycloNumber::from_coords(
            &q12,
            &[half, Rational::zero(), Rational::from_integer(3.into()), Rational::from_integer((-1).into())],
        );
        assert_eq!(x.to_string(), "1/2 + 3*z^2 - z^3");
        assert_eq!(CycloNumber::zero(&q12).to_string(), "0");
    }
}
