//! Laurent polynomials in the Hirzebruch variable `y` with rational
//! coefficients.
//!
//! Terms are stored sparsely, keyed by exponent in a `BTreeMap`, so every
//! traversal is in ascending exponent order. Zero coefficients are never
//! stored; the zero polynomial is the empty map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{rat_int, Rational};
use super::KernelError;

#[derive(Debug, Clone, PartialEq, Eq, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The variable `y` itself.
    pub fn variable() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn constant_int(c: i64) -> Self {
        Self::constant(rat_int(c))
    }

    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `(-y)^p`, the building block of every spectrum specialization.
    pub fn neg_y_power(p: i64) -> Self {
        let coeff = if p % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        Self::monomial(p, coeff)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns `(exp, coeff)` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(i64, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    fn insert_add(&mut self, exp: i64, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `y^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Substitutes `y -> 1/y`.
    pub fn substitute_inverse(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (-e, v.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        result
    }

    /// Evaluates at `y = y0`. Terms with negative exponents make `y0 = 0` a
    /// pole, reported as an error rather than a panic.
    pub fn eval(&self, y0: &Rational) -> Result<Rational, KernelError> {
        let mut total = Rational::zero();
        for (exp, coeff) in &self.terms {
            if *exp < 0 && y0.is_zero() {
                return Err(KernelError::PoleAtZero { exponent: *exp });
            }
            total += coeff * pow_i64(y0, *exp);
        }
        Ok(total)
    }
}

/// `base^exp` for a nonzero base when `exp < 0`.
fn pow_i64(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mut result = Rational::one();
    let mut b = if exp > 0 { base.clone() } else { base.recip() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    result
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, coeff) in &rhs.terms {
            out.insert_add(*exp, coeff);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, coeff) in &rhs.terms {
            out.insert_add(*exp, &-coeff.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_add(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($op:ident, $method:ident) => {
        impl $op for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $op<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, coeff) in &self.terms {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match exp {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if *exp == 1 {
                        f.write_str("y")?;
                    } else {
                        write!(f, "y^{exp}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
