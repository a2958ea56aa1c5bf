use std::fmt;

use super::{LaurentError, LaurentPoly};

/// A quotient of Laurent polynomials, kept reduced and normalized up to units.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl RationalFunction {
    pub fn new(numerator: &LaurentPoly, denominator: &LaurentPoly) -> Result<Self, LaurentError> {
        if denominator.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if numerator.is_zero() {
            let ctx = denominator.context().unwrap();
            return Ok(RationalFunction { numerator: LaurentPoly::zero(), denominator: LaurentPoly::one(ctx) });
        }
        let g = numerator.gcd(denominator);
        let num = numerator.exact_div(&g).expect("gcd divides").normalize();
        let den = denominator.exact_div(&g).expect("gcd divides").normalize();
        Ok(RationalFunction { numerator: num, denominator: den })
    }

    pub fn from_poly(p: &LaurentPoly) -> Self {
        let ctx = p.context().cloned().unwrap_or_else(crate::scalars::FieldContext::rational);
        Self::new(p, &LaurentPoly::one(&ctx)).unwrap()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    /// The polynomial value when the division is exact.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.denominator.is_one().then_some(&self.numerator)
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.numerator.is_one() && self.denominator.is_one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&(&self.numerator * &other.numerator), &(&self.denominator * &other.denominator)).unwrap()
    }

    pub fn inverse(&self) -> Result<Self, LaurentError> {
        Self::new(&self.denominator, &self.numerator)
    }

    pub fn pow(&self, e: i64) -> Result<Self, LaurentError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let n = e.unsigned_abs() as u32;
        Self::new(&base.numerator.pow(n), &base.denominator.pow(n))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
