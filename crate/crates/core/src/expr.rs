//! Text syntax for scalars and Laurent polynomials, e.g. `1/2 + 3*z^2 - z^5` or
//! `(1 + z)*t^-1 - 2`. `z` is the chosen root of unity of the field and `t` the
//! Laurent variable. Negative powers are allowed on units only.

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::scalars::{CycloNumber, FieldContext, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("column {column}: {message}")]
pub struct ExprError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

struct Parser<'a> {
    ctx: &'a Arc<FieldContext>,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError { column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect::<String>().parse().unwrap())
    }

    fn integer(&mut self) -> Result<i64, ExprError> {
        let neg = self.eat('-');
        match self.digits() {
            Some(d) => {
                let v: i64 = d.try_into().or_else(|_| self.error("exponent too large"))?;
                Ok(if neg { -v } else { v })
            }
            None => self.error("expected an integer exponent"),
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly, ExprError> {
        let mut acc = if self.eat('-') { -&self.term()? } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ExprError> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<LaurentPoly, ExprError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.integer()?;
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        if !base.is_unit() {
            return self.error("negative power of a non-unit");
        }
        let c = base.leading().unwrap().inverse().unwrap();
        let inv = LaurentPoly::monomial(c, -base.low());
        Ok(inv.pow(e.unsigned_abs() as u32))
    }

    fn atom(&mut self) -> Result<LaurentPoly, ExprError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            Some('t') => {
                self.pos += 1;
                Ok(LaurentPoly::t_pow(self.ctx, 1))
            }
            Some('z') => {
                if self.ctx.is_rational() {
                    return self.error("`z` needs a cyclotomic field");
                }
                self.pos += 1;
                Ok(LaurentPoly::constant(CycloNumber::zeta(self.ctx)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits().unwrap();
                let den = if self.peek() == Some('/') {
                    self.pos += 1;
                    match self.digits() {
                        Some(d) if d != BigInt::from(0) => d,
                        Some(_) => return self.error("zero denominator"),
                        None => return self.error("expected a denominator"),
                    }
                } else {
                    BigInt::from(1)
                };
                Ok(LaurentPoly::constant(CycloNumber::from_rational(self.ctx, &Rational::new(num, den))))
            }
            Some(c) => self.error(format!("unexpected `{c}`")),
            None => self.error("unexpected end of input"),
        }
    }
}

/// Parse a Laurent polynomial over `ctx`.
pub fn parse_poly(ctx: &Arc<FieldContext>, text: &str) -> Result<LaurentPoly, ExprError> {
    let mut p = Parser { ctx, chars: text.chars().collect(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.error("trailing input");
    }
    Ok(v)
}

/// Parse a scalar of `ctx`.
pub fn parse_scalar(ctx: &Arc<FieldContext>, text: &str) -> Result<CycloNumber, ExprError> {
    let p = parse_poly(ctx, text)?;
    if p.is_zero() {
        return Ok(CycloNumber::zero(ctx));
    }
    if p.low() != 0 || p.coeffs().len() != 1 {
        return Err(ExprError { column: 1, message: format!("`{text}` is not a scalar") });
    }
    Ok(p.coeffs()[0].clone())
}
