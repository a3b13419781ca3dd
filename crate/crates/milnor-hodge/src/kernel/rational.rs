//! Arbitrary-precision rational numbers.
//!
//! `Rational` is kept in lowest terms with a positive denominator; both
//! invariants are maintained by `num_rational::Ratio` on construction.

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// Builds `num/den`. Panics if `den == 0`; intended for literals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(r, rat(-2, 3));
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn integer_shortcut() {
        assert_eq!(rat_int(7), rat(7, 1));
        assert!(rat_int(7).is_integer());
    }
}
