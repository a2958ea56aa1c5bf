use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{Augmentation, Letter, Representation, Word};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::scalars::{CycloNumber, Matrix, Rational};

/// Element of the rational group ring of a free group: a finite sum of
/// freely reduced words with nonzero coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, Rational>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(&Word::identity())
    }

    pub fn from_word(w: &Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, Rational::one());
        e
    }

    pub fn add_term(&mut self, w: &Word, c: Rational) {
        let key = w.reduce();
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(&u.concat(v), a * b);
            }
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let body = if w.is_empty() { String::new() } else { w.render(names) };
            match (mag.is_one(), body.is_empty()) {
                (true, true) => s.push('1'),
                (true, false) => s.push_str(&body),
                (false, true) => s.push_str(&mag.to_string()),
                (false, false) => s.push_str(&format!("{mag}*{body}")),
            }
        }
        s
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.terms.keys().filter_map(Word::max_generator).max().unwrap_or(0)).map(|g| format!("g{g}")).collect();
        write!(f, "{}", self.render(&names))
    }
}

/// Fox derivative `dw/dx_g`, computed on the word as written.
pub fn fox_derivative(w: &Word, g: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        if l.generator == g {
            if l.inverse {
                out.add_term(&prefix.concat(&Word::from_letters(vec![l])), -Rational::one());
            } else {
                out.add_term(&prefix, Rational::one());
            }
        }
        prefix.push(l);
    }
    out
}

/// `Phi(w) = t^eps(w) rho(w)`.
pub fn phi_word(w: &Word, eps: &Augmentation, rho: &Representation) -> LaurentMatrix {
    LaurentMatrix::monomial(&rho.evaluate(w), eps.evaluate(w))
}

/// The ring map `F[G] -> M_r(F[t, t^-1])` extending `Phi` linearly.
pub fn phi_evaluate(e: &GroupRingElement, eps: &Augmentation, rho: &Representation) -> LaurentMatrix {
    let ctx = rho.context();
    let r = rho.dimension();
    // collect scalar matrices per power of t before building polynomials
    let mut by_exponent: BTreeMap<i64, Matrix> = BTreeMap::new();
    for (w, c) in e.terms() {
        let m = rho.evaluate(w).scale(&CycloNumber::from_rational(ctx, c));
        let k = eps.evaluate(w);
        let slot = by_exponent.entry(k).or_insert_with(|| Matrix::zero(ctx, r, r));
        *slot = slot.add(&m);
    }
    let mut out = LaurentMatrix::zero(ctx, r, r);
    for i in 0..r {
        for j in 0..r {
            let mut p = LaurentPoly::zero();
            for (&k, m) in &by_exponent {
                if !m.get(i, j).is_zero() {
                    p = &p + &LaurentPoly::monomial(m.get(i, j).clone(), k);
                }
            }
            out.set(i, j, p);
        }
    }
    out
}

/// `Phi(x_g) - Id` as a Laurent matrix.
pub fn phi_generator_minus_identity(g: usize, eps: &Augmentation, rho: &Representation) -> LaurentMatrix {
    let w = Word::from_letters(vec![Letter::new(g, false)]);
    phi_word(&w, eps, rho).sub(&LaurentMatrix::identity(rho.context(), rho.dimension()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldContext;

    fn names() -> Vec<String> {
        vec!["x0".into(), "x1".into()]
    }

    #[test]
    fn axioms() {
        let x = Word::generator(0);
        assert_eq!(fox_derivative(&x, 0), GroupRingElement::one());
        assert!(fox_derivative(&x, 1).is_zero());
        let xi = Word::power(0, -1);
        assert_eq!(fox_derivative(&xi, 0).render(&names()), "-x0^-1");
    }

    #[test]
    fn commutator_derivative() {
        let w = Word::parse("x0 x1 x0^-1 x1^-1", &names()).unwrap();
        let d0 = fox_derivative(&w, 0);
        let mut expect = GroupRingElement::one();
        expect.add_term(&Word::parse("x0 x1 x0^-1", &names()).unwrap(), -Rational::one());
        assert_eq!(d0, expect);
        let d1 = fox_derivative(&w, 1);
        let mut expect = GroupRingElement::from_word(&Word::generator(0));
        expect.add_term(&w, -Rational::one());
        assert_eq!(d1, expect);
    }

    #[test]
    fn reduction_invariance() {
        let n = names();
        let w = Word::parse("x0 x1 x1^-1 x0 x1^-1 x0^-1 x0", &n).unwrap();
        for g in 0..2 {
            assert_eq!(fox_derivative(&w, g), fox_derivative(&w.reduce(), g));
        }
    }

    #[test]
    fn phi_of_rank_one_letter() {
        let q = FieldContext::cyclotomic(3).unwrap();
        let z = CycloNumber::zeta(&q);
        let rho = Representation::from_scalars(&q, &[z.clone(), CycloNumber::one(&q)]).unwrap();
        let eps = Augmentation::new(vec![1, 0]);
        let m = phi_word(&Word::generator(0), &eps, &rho);
        assert_eq!(m.get(0, 0), &LaurentPoly::monomial(z.clone(), 1));
        let mut e = GroupRingElement::one();
        e.add_term(&Word::generator(0), -Rational::one());
        let expect = &LaurentPoly::one(&q) - &LaurentPoly::monomial(z, 1);
        assert_eq!(phi_evaluate(&e, &eps, &rho).get(0, 0), &expect);
    }
}
