//! Exact arithmetic kernel: rationals, Laurent polynomials in `y`,
//! polynomials with rational exponents in `t`, and truncated power series.
//!
//! Everything here is immutable-value arithmetic over arbitrary-precision
//! rationals. No floating point is used anywhere in the crate.

mod fracpoly;
mod laurent;
mod rational;
mod series;

pub use fracpoly::FracPoly;
pub use laurent::LaurentPoly;
pub use rational::{rat, rat_int, Rational};
pub use series::{q_y_series, TruncatedSeries};

/// Errors raised by kernel arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact: remainder {remainder}")]
    DivisionNotExact { remainder: String },
    #[error("pole at y = 0: term with exponent {exponent} cannot be evaluated")]
    PoleAtZero { exponent: i64 },
    #[error("series has no multiplicative inverse: leading coefficient {leading} is not a monomial")]
    NotInvertible { leading: String },
}
