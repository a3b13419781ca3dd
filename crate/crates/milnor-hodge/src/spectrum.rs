//! Hodge spectra of isolated hypersurface singularities.
//!
//! The spectrum of a germ `f: (C^m, 0) -> (C, 0)` with an isolated critical
//! point is recorded as an integer combination of rational powers of `t`:
//! the exponent `b` of each monomial `t^b` is a spectral number, its
//! coefficient the multiplicity. Multiplicities are positive, the support
//! lies in the open interval `(0, m)`, the total mass is the Milnor number,
//! and the support is symmetric about `m/2`.
//!
//! Spectra form a monoid under the Thom-Sebastiani product (join of
//! singularities on disjoint variables), whose identity is the unit
//! spectrum `t^0` in zero variables.

use num_traits::{One, Signed};

use crate::kernel::{FracPoly, KernelError, Rational};

/// Errors raised while building spectra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectrumError {
    #[error("exponent {value} is not a valid power: each variable needs exponent >= 2")]
    ExponentTooSmall { value: u32 },
    #[error("weight {value} is outside the admissible interval (0, 1/2]")]
    WeightOutOfRange { value: String },
    #[error("weights do not describe an isolated quasi-homogeneous singularity: {detail}")]
    NotQuasiHomogeneous { detail: String },
    #[error("invalid spectrum: {reason}")]
    InvalidSpectrum { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    poly: FracPoly,
    num_vars: u32,
}

impl Spectrum {
    /// The Thom-Sebastiani identity: `t^0` in zero variables.
    pub fn unit() -> Self {
        Self {
            poly: FracPoly::one(),
            num_vars: 0,
        }
    }

    /// Wraps explicit spectrum data, enforcing the spectrum invariants:
    /// positive multiplicities and support inside `(0, num_vars)`. In zero
    /// variables only the unit spectrum and the zero spectrum exist.
    pub fn from_parts(poly: FracPoly, num_vars: u32) -> Result<Self, SpectrumError> {
        if num_vars == 0 {
            if !poly.is_zero() && poly != FracPoly::one() {
                return Err(SpectrumError::InvalidSpectrum {
                    reason: "in zero variables only 0 and t^0 are spectra".into(),
                });
            }
            return Ok(Self { poly, num_vars });
        }
        let upper = Rational::from_integer(num_vars.into());
        for (exp, coeff) in poly.terms() {
            if *coeff <= 0 {
                return Err(SpectrumError::InvalidSpectrum {
                    reason: format!("multiplicity {coeff} at t^({exp}) is not positive"),
                });
            }
            if !exp.is_positive() || *exp >= upper {
                return Err(SpectrumError::InvalidSpectrum {
                    reason: format!(
                        "spectral number {exp} lies outside the open interval (0, {num_vars})"
                    ),
                });
            }
        }
        Ok(Self { poly, num_vars })
    }

    pub fn poly(&self) -> &FracPoly {
        &self.poly
    }

    /// Number of ambient variables `m` of the defining germ.
    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    /// Milnor number: the total multiplicity mass.
    pub fn milnor_number(&self) -> i64 {
        self.poly.eval_at_one()
    }

    /// Whether the multiplicities are symmetric about `num_vars / 2`.
    pub fn is_symmetric(&self) -> bool {
        let m = Rational::from_integer(self.num_vars.into());
        self.poly
            .terms()
            .all(|(exp, coeff)| self.poly.coeff(&(&m - exp)) == *coeff)
    }
}

/// Spectrum of the Brieskorn-Pham germ `x_1^{w_1} + ... + x_m^{w_m}`:
/// the product over `j` of `sum_{i=1}^{w_j - 1} t^{i/w_j}`.
pub fn brieskorn_pham(exponents: &[u32]) -> Result<Spectrum, SpectrumError> {
    let mut poly = FracPoly::one();
    for &w in exponents {
        if w < 2 {
            return Err(SpectrumError::ExponentTooSmall { value: w });
        }
        let mut factor = FracPoly::zero();
        for i in 1..w {
            factor = &factor
                + &FracPoly::monomial(
                    Rational::new(i.into(), w.into()),
                    1,
                );
        }
        poly = &poly * &factor;
    }
    Ok(Spectrum {
        poly,
        num_vars: exponents.len() as u32,
    })
}

/// Spectrum of an isolated quasi-homogeneous singularity with the given
/// weights, each in `(0, 1/2]`:
///
/// ```text
/// hsp(f) = prod_j (t^{w_j} - t) / (1 - t^{w_j})
/// ```
///
/// The product of numerators is divided by one denominator factor at a
/// time; when the total quotient is a genuine polynomial each intermediate
/// division is exact as well, so the factor order does not matter. Weights
/// for which the division leaves a remainder do not describe an isolated
/// singularity and are rejected.
pub fn quasi_homogeneous(weights: &[Rational]) -> Result<Spectrum, SpectrumError> {
    let half = Rational::new(1.into(), 2.into());
    let mut numerator = FracPoly::one();
    for w in weights {
        if !w.is_positive() || *w > half {
            return Err(SpectrumError::WeightOutOfRange {
                value: w.to_string(),
            });
        }
        let factor = &FracPoly::monomial(w.clone(), 1) - &FracPoly::monomial(Rational::one(), 1);
        numerator = &numerator * &factor;
    }
    let mut poly = numerator;
    for w in weights {
        let denom = &FracPoly::one() - &FracPoly::monomial(w.clone(), 1);
        poly = poly.exact_div(&denom).map_err(|e| match e {
            KernelError::DivisionNotExact { remainder } => SpectrumError::NotQuasiHomogeneous {
                detail: format!("division by 1 - t^({w}) leaves remainder {remainder}"),
            },
            other => SpectrumError::NotQuasiHomogeneous {
                detail: other.to_string(),
            },
        })?;
    }
    let spectrum = Spectrum::from_parts(poly, weights.len() as u32);
    spectrum.map_err(|e| SpectrumError::NotQuasiHomogeneous {
        detail: e.to_string(),
    })
}

/// Thom-Sebastiani product: the spectrum of `f(x) + g(y)` on disjoint
/// variables is the convolution product of the factor spectra.
pub fn thom_sebastiani(a: &Spectrum, b: &Spectrum) -> Spectrum {
    Spectrum {
        poly: &a.poly * &b.poly,
        num_vars: a.num_vars + b.num_vars,
    }
}

/// Suspension: adds one squared variable, i.e. the Thom-Sebastiani product
/// with the `A_1` germ `x^2`.
pub fn suspension(a: &Spectrum) -> Spectrum {
    let a1 = brieskorn_pham(&[2]).expect("exponent 2 is admissible");
    thom_sebastiani(a, &a1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn fp(terms: &[(i64, i64, i64)]) -> FracPoly {
        terms.iter().fold(FracPoly::zero(), |acc, (n, d, c)| {
            &acc + &FracPoly::monomial(rat(*n, *d), *c)
        })
    }

    #[test]
    fn single_variable_powers() {
        assert_eq!(brieskorn_pham(&[2]).unwrap().poly(), &fp(&[(1, 2, 1)]));
        assert_eq!(
            brieskorn_pham(&[4]).unwrap().poly(),
            &fp(&[(1, 4, 1), (2, 4, 1), (3, 4, 1)])
        );
        assert!(matches!(
            brieskorn_pham(&[3, 1]),
            Err(SpectrumError::ExponentTooSmall { value: 1 })
        ));
    }

    #[test]
    fn cusp_spectrum() {
        let cusp = brieskorn_pham(&[3, 2]).unwrap();
        assert_eq!(cusp.poly(), &fp(&[(5, 6, 1), (7, 6, 1)]));
        assert_eq!(cusp.poly().to_string(), "t^(5/6) + t^(7/6)");
        assert_eq!(cusp.milnor_number(), 2);
        assert!(cusp.is_symmetric());
    }

    #[test]
    fn ordinary_node_in_any_dimension() {
        // x^2 + y^2 + z^2: single spectral number 3/2.
        let node = brieskorn_pham(&[2, 2, 2]).unwrap();
        assert_eq!(node.poly(), &fp(&[(3, 2, 1)]));
        assert_eq!(node.milnor_number(), 1);
    }

    #[test]
    fn e8_spectrum() {
        let e8 = brieskorn_pham(&[3, 5, 2]).unwrap();
        assert_eq!(e8.milnor_number(), 8);
        assert_eq!(e8.num_vars(), 3);
        assert!(e8.is_symmetric());
        // Spectral numbers (unit multiplicity): {31,37,41,43,47,49,53,59}/30.
        for n in [31, 37, 41, 43, 47, 49, 53, 59] {
            assert_eq!(e8.poly().coeff(&rat(n, 30)), 1, "missing {n}/30");
        }
    }

    #[test]
    fn quasi_homogeneous_matches_brieskorn_pham() {
        // Weights 1/w recover the Brieskorn-Pham formula.
        let qh = quasi_homogeneous(&[rat(1, 3), rat(1, 2)]).unwrap();
        assert_eq!(qh, brieskorn_pham(&[3, 2]).unwrap());
        let qh2 = quasi_homogeneous(&[rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(qh2, brieskorn_pham(&[2, 2]).unwrap());
    }

    #[test]
    fn e7_spectrum_from_weights() {
        // x^3 + x*y^3 with weights (1/3, 2/9). The spectral numbers match
        // the exponent form of the E_7 root system: (e + 9)/18 for
        // e in {1, 5, 7, 9, 11, 13, 17}.
        let e7 = quasi_homogeneous(&[rat(1, 3), rat(2, 9)]).unwrap();
        assert_eq!(e7.milnor_number(), 7);
        assert!(e7.is_symmetric());
        let expected = fp(&[
            (10, 18, 1),
            (14, 18, 1),
            (16, 18, 1),
            (1, 1, 1),
            (20, 18, 1),
            (22, 18, 1),
            (26, 18, 1),
        ]);
        assert_eq!(e7.poly(), &expected);
    }

    #[test]
    fn non_isolated_weights_are_rejected() {
        assert!(matches!(
            quasi_homogeneous(&[rat(1, 2), rat(2, 5)]),
            Err(SpectrumError::NotQuasiHomogeneous { .. })
        ));
        assert!(matches!(
            quasi_homogeneous(&[rat(2, 3)]),
            Err(SpectrumError::WeightOutOfRange { .. })
        ));
        assert!(matches!(
            quasi_homogeneous(&[rat(0, 1)]),
            Err(SpectrumError::WeightOutOfRange { .. })
        ));
        assert!(matches!(
            quasi_homogeneous(&[rat(-1, 3)]),
            Err(SpectrumError::WeightOutOfRange { .. })
        ));
    }

    #[test]
    fn thom_sebastiani_factors_brieskorn_pham() {
        let a = brieskorn_pham(&[3]).unwrap();
        let b = brieskorn_pham(&[2]).unwrap();
        assert_eq!(thom_sebastiani(&a, &b), brieskorn_pham(&[3, 2]).unwrap());
        // The unit spectrum is the identity.
        assert_eq!(thom_sebastiani(&a, &Spectrum::unit()), a);
        assert_eq!(thom_sebastiani(&Spectrum::unit(), &a), a);
    }

    #[test]
    fn suspension_adds_a_square() {
        let cusp = brieskorn_pham(&[3, 2]).unwrap();
        assert_eq!(suspension(&cusp), brieskorn_pham(&[3, 2, 2]).unwrap());
        assert_eq!(suspension(&Spectrum::unit()), brieskorn_pham(&[2]).unwrap());
    }

    #[test]
    fn explicit_spectra_are_validated() {
        let ok = Spectrum::from_parts(fp(&[(5, 6, 1), (7, 6, 1)]), 2).unwrap();
        assert_eq!(ok, brieskorn_pham(&[3, 2]).unwrap());
        assert!(Spectrum::from_parts(fp(&[(1, 2, -1)]), 2).is_err());
        assert!(Spectrum::from_parts(fp(&[(0, 1, 1)]), 2).is_err());
        assert!(Spectrum::from_parts(fp(&[(2, 1, 1)]), 2).is_err());
        assert!(Spectrum::from_parts(fp(&[(5, 2, 1)]), 2).is_err());
        assert!(Spectrum::from_parts(fp(&[(1, 2, 1)]), 0).is_err());
        assert_eq!(
            Spectrum::from_parts(FracPoly::one(), 0).unwrap(),
            Spectrum::unit()
        );
        assert!(Spectrum::from_parts(FracPoly::zero(), 3).is_ok());
    }

    #[test]
    fn random_brieskorn_pham_mass_and_symmetry() {
        let mut rng = StdRng::seed_from_u64(0x5bec);
        for _ in 0..25 {
            let m = rng.random_range(1..=5);
            let exponents: Vec<u32> = (0..m).map(|_| rng.random_range(2..=8)).collect();
            let s = brieskorn_pham(&exponents).unwrap();
            let mass: i64 = exponents.iter().map(|w| i64::from(w - 1)).product();
            assert_eq!(s.milnor_number(), mass);
            assert!(s.is_symmetric());
        }
    }

    #[test]
    fn milnor_number_of_unit_and_zero() {
        assert_eq!(Spectrum::unit().milnor_number(), 1);
        assert_eq!(
            Spectrum::from_parts(FracPoly::zero(), 2).unwrap().milnor_number(),
            0
        );
    }
}
