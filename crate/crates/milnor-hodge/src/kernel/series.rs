//! Truncated formal power series with Laurent-polynomial coefficients.
//!
//! A `TruncatedSeries` holds coefficients of `x^0 .. x^N` for some fixed
//! truncation order `N`; every ring operation truncates back to that window.
//! The series variable is written `x` here and stands for a Chern root.

use num_traits::One;

use super::laurent::LaurentPoly;
use super::rational::{rat_int, Rational};
use super::KernelError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn constant(c: LaurentPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Builds a series from explicit coefficients; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least x^0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`; `k` must not exceed the truncation order.
    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, LaurentPoly::zero());
        Self { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        Self { coeffs }
    }

    /// Product, truncated at the shorter operand's order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self { coeffs }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut result = Self::constant(LaurentPoly::one(), self.order());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        result
    }

    /// Multiplicative inverse. The constant coefficient must be a single
    /// Laurent monomial `c*y^e`; those are exactly the units available here.
    pub fn invert(&self) -> Result<Self, KernelError> {
        let lead = &self.coeffs[0];
        let (exp, coeff) = lead.as_monomial().ok_or_else(|| KernelError::NotInvertible {
            leading: lead.to_string(),
        })?;
        let lead_inv = LaurentPoly::monomial(-exp, coeff.recip());
        let order = self.order();
        let mut inv = vec![LaurentPoly::zero(); order + 1];
        inv[0] = lead_inv.clone();
        for n in 1..=order {
            let mut acc = LaurentPoly::zero();
            for j in 1..=n {
                acc = &acc + &(&self.coeffs[j] * &inv[n - j]);
            }
            inv[n] = -&(&lead_inv * &acc);
        }
        Ok(Self { coeffs: inv })
    }

    /// Substitutes `x -> c*x`: the coefficient of `x^k` picks up `c^k`.
    pub fn scale_variable(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let scaled = a.scale(&power);
                power *= c;
                scaled
            })
            .collect();
        Self { coeffs }
    }
}

/// The normalized power series
///
/// ```text
/// Q_y(x) = x*(1+y)/(1 - exp(-x*(1+y))) - x*y
/// ```
///
/// truncated at `order`. Its specializations are the classical genera:
/// `y = 0` gives the Todd series `x/(1 - exp(-x))`, `y = 1` gives
/// `x/tanh(x)`, and `y = -1` gives `1 + x`.
pub fn q_y_series(order: usize) -> TruncatedSeries {
    // (1 - exp(-u))/u = sum_{k>=0} (-1)^k u^k/(k+1)!
    let mut factorial = Rational::one();
    let mut denom = Vec::with_capacity(order + 1);
    for k in 0..=order {
        factorial *= rat_int(k as i64 + 1);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        denom.push(LaurentPoly::constant(rat_int(sign) / &factorial));
    }
    let base = TruncatedSeries::from_coeffs(denom)
        .invert()
        .expect("constant coefficient is 1");

    // Substitute u = x*(1+y), then subtract x*y.
    let one_plus_y = &LaurentPoly::one() + &LaurentPoly::variable();
    let mut power = LaurentPoly::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        coeffs.push(base.coeff(k) * &power);
        if k < order {
            power = &power * &one_plus_y;
        }
    }
    if order >= 1 {
        coeffs[1] = &coeffs[1] - &LaurentPoly::variable();
    }
    TruncatedSeries::from_coeffs(coeffs)
}
