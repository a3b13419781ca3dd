//! Finite integer combinations of rational powers of a variable `t`.
//!
//! This is the group ring Z[Q]: exponents are reduced rationals, coefficients
//! are integers. Multiplication is convolution of exponents. Division is
//! supported only when exact; a nonzero remainder is an error, never a
//! truncation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::KernelError;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FracPoly {
    terms: BTreeMap<Rational, i64>,
}

impl FracPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `t^0`, the multiplicative identity.
    pub fn one() -> Self {
        Self::monomial(Rational::zero(), 1)
    }

    pub fn monomial(exp: Rational, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &Rational) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &i64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<&Rational> {
        self.terms.keys().next()
    }

    pub fn max_exp(&self) -> Option<&Rational> {
        self.terms.keys().next_back()
    }

    /// Sum of all coefficients, i.e. the evaluation at `t = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiplies by `t^delta`.
    pub fn shift_exponents(&self, delta: &Rational) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + delta, *c))
                .collect(),
        }
    }

    fn insert_add(&mut self, exp: Rational, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    /// Exact division. Returns the quotient when `self = q * divisor` has a
    /// solution with integer coefficients; any nonzero remainder or
    /// non-integer quotient coefficient is an error.
    pub fn exact_div(&self, divisor: &FracPoly) -> Result<FracPoly, KernelError> {
        if divisor.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(FracPoly::zero());
        }
        let (lead_exp, lead_coeff) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), Rational::from_integer((*c).into())))
            .expect("divisor is nonzero");

        // An exact quotient q of self = q * divisor has
        // min_exp(q) = min_exp(self) - min_exp(divisor); quotient exponents
        // below that bound prove the division inexact.
        let q_min = self.min_exp().expect("self is nonzero")
            - divisor.min_exp().expect("divisor is nonzero");

        // Long division from the top. Each step cancels the current leading
        // term, so the remainder's top exponent strictly decreases on the
        // lattice (1/L)Z spanned by the operands; the loop terminates once
        // it crosses q_min + lead_exp.
        let mut remainder: BTreeMap<Rational, Rational> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), Rational::from_integer((*c).into())))
            .collect();
        let mut quotient: BTreeMap<Rational, Rational> = BTreeMap::new();

        while let Some((top_exp, top_coeff)) = remainder
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            let q_exp = &top_exp - &lead_exp;
            if q_exp < q_min {
                break;
            }
            let q_coeff = &top_coeff / &lead_coeff;
            for (d_exp, d_coeff) in divisor.terms.iter() {
                let e = &q_exp + d_exp;
                let delta = &q_coeff * Rational::from_integer((*d_coeff).into());
                let entry = remainder.entry(e.clone()).or_insert_with(Rational::zero);
                *entry -= delta;
                if entry.is_zero() {
                    remainder.remove(&e);
                }
            }
            quotient.insert(q_exp, q_coeff);
        }

        if !remainder.is_empty() {
            let rem = FracPolyRational(&remainder);
            return Err(KernelError::DivisionNotExact {
                remainder: rem.to_string(),
            });
        }
        let mut out = FracPoly::zero();
        for (exp, coeff) in quotient {
            if !coeff.is_integer() {
                return Err(KernelError::DivisionNotExact {
                    remainder: format!("quotient coefficient {coeff} at t^{exp}"),
                });
            }
            let c: i64 = i64::try_from(coeff.to_integer()).map_err(|_| {
                KernelError::DivisionNotExact {
                    remainder: format!("quotient coefficient overflow at t^{exp}"),
                }
            })?;
            out.insert_add(exp, c);
        }
        Ok(out)
    }
}

/// Rational-coefficient intermediate, shown in division error messages.
struct FracPolyRational<'a>(&'a BTreeMap<Rational, Rational>);

impl fmt::Display for FracPolyRational<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (exp, coeff) in self.0 {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({coeff})*t^({exp})")?;
        }
        Ok(())
    }
}

impl Add for &FracPoly {
    type Output = FracPoly;

    fn add(self, rhs: &FracPoly) -> FracPoly {
        let mut out = self.clone();
        for (exp, coeff) in &rhs.terms {
            out.insert_add(exp.clone(), *coeff);
        }
        out
    }
}

impl Sub for &FracPoly {
    type Output = FracPoly;

    fn sub(self, rhs: &FracPoly) -> FracPoly {
        let mut out = self.clone();
        for (exp, coeff) in &rhs.terms {
            out.insert_add(exp.clone(), -coeff);
        }
        out
    }
}

impl Mul for &FracPoly {
    type Output = FracPoly;

    fn mul(self, rhs: &FracPoly) -> FracPoly {
        let mut out = FracPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_add(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &FracPoly {
    type Output = FracPoly;

    fn neg(self) -> FracPoly {
        FracPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($op:ident, $method:ident) => {
        impl $op for FracPoly {
            type Output = FracPoly;
            fn $method(self, rhs: FracPoly) -> FracPoly {
                (&self).$method(&rhs)
            }
        }
        impl $op<&FracPoly> for FracPoly {
            type Output = FracPoly;
            fn $method(self, rhs: &FracPoly) -> FracPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for FracPoly {
    type Output = FracPoly;

    fn neg(self) -> FracPoly {
        -&self
    }
}

impl fmt::Display for FracPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, coeff) in &self.terms {
            let mag = coeff.abs();
            if first {
                if *coeff < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else if *coeff < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if exp.is_zero() {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            if exp.is_integer() {
                if exp.is_one() {
                    f.write_str("t")?;
                } else {
                    write!(f, "t^{exp}")?;
                }
            } else {
                write!(f, "t^({exp})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{rat, rat_int};

    fn fp(terms: &[(i64, i64, i64)]) -> FracPoly {
        terms.iter().fold(FracPoly::zero(), |acc, (n, d, c)| {
            &acc + &FracPoly::monomial(rat(*n, *d), *c)
        })
    }

    #[test]
    fn convolution_hand_checked() {
        // (t^(1/2) + t^(3/2)) * (t^(1/3) + t^(2/3))
        //   = t^(5/6) + t^(7/6) + t^(11/6) + t^(13/6)
        let a = fp(&[(1, 2, 1), (3, 2, 1)]);
        let b = fp(&[(1, 3, 1), (2, 3, 1)]);
        assert_eq!(
            &a * &b,
            fp(&[(5, 6, 1), (7, 6, 1), (11, 6, 1), (13, 6, 1)])
        );
    }

    #[test]
    fn convolution_merges_colliding_exponents() {
        // (t^(1/2) + t^(1/3)) * (t^(1/2) + t^(2/3)) has the collision
        // 1/2 + 2/3 = 1/3 + 5/6; no such pair here, but 1/2+1/2 = 1/3+2/3.
        let a = fp(&[(1, 2, 1), (1, 3, 1)]);
        let b = fp(&[(1, 2, 1), (2, 3, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.coeff(&rat_int(1)), 2);
        assert_eq!(prod.num_terms(), 3);
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = fp(&[(1, 2, 1), (3, 2, -2)]);
        let b = fp(&[(1, 3, 3), (0, 1, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
    }

    #[test]
    fn inexact_division_is_an_error() {
        // (1 - s^3)/(1 - s^2) at s = t has remainder.
        let num = fp(&[(0, 1, 1), (3, 1, -1)]);
        let den = fp(&[(0, 1, 1), (2, 1, -1)]);
        assert!(matches!(
            num.exact_div(&den),
            Err(KernelError::DivisionNotExact { .. })
        ));
        assert_eq!(
            num.exact_div(&FracPoly::zero()),
            Err(KernelError::DivisionByZero)
        );
    }

    #[test]
    fn geometric_quotient() {
        // (1 - t^(5/2)) / (1 - t^(1/2)) = 1 + t^(1/2) + t + t^(3/2) + t^2
        let num = fp(&[(0, 1, 1), (5, 2, -1)]);
        let den = fp(&[(0, 1, 1), (1, 2, -1)]);
        assert_eq!(
            num.exact_div(&den).unwrap(),
            fp(&[(0, 1, 1), (1, 2, 1), (1, 1, 1), (3, 2, 1), (2, 1, 1)])
        );
    }

    #[test]
    fn eval_at_one_counts_mass() {
        let a = fp(&[(5, 6, 2), (7, 6, 3), (0, 1, -1)]);
        assert_eq!(a.eval_at_one(), 4);
        assert_eq!(FracPoly::zero().eval_at_one(), 0);
    }

    #[test]
    fn display_canonical() {
        assert_eq!(FracPoly::zero().to_string(), "0");
        assert_eq!(fp(&[(5, 6, 1), (7, 6, 1)]).to_string(), "t^(5/6) + t^(7/6)");
        assert_eq!(fp(&[(0, 1, 3), (1, 1, -1), (2, 1, 2)]).to_string(), "3 - t + 2*t^2");
        assert_eq!(fp(&[(3, 2, 1)]).to_string(), "t^(3/2)");
        assert_eq!(fp(&[(1, 1, 1)]).to_string(), "t");
    }

    mod axioms {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = FracPoly> {
            prop::collection::vec(((-3i64..4), (1i64..5), (-9i64..10)), 0..5)
                .prop_map(|v| fp(&v))
        }

        proptest! {
            #[test]
            fn mul_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }

            #[test]
            fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn product_divides_exactly(a in arb_poly(), b in arb_poly()) {
                prop_assume!(!b.is_zero());
                prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
            }
        }
    }
}
