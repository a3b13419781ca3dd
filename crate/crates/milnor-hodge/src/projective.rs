//! Degree-level chi_y invariants of projective hypersurfaces.
//!
//! For a degree-d hypersurface in P^{n+1} the chi_y genus of the smooth
//! generic fiber is extracted from the virtual tangent bundle: it is the
//! coefficient of h^{n+1} in d*h * Q_y(h)^{n+2} / Q_y(d*h), an exact
//! computation in truncated series over Laurent polynomials. Since Q_y is a
//! unit series (constant term 1), the quotient is taken by inverting
//! Q_y(d*h) directly and shifting by one power of h.
//!
//! A hypersurface with isolated singularities loses
//! `reduced_total_chi` of each singular point from the smooth value, which
//! gives both chi_y of the singular hypersurface and the degree of its
//! Milnor-Hirzebruch class.

use crate::invariants::reduced_total_chi;
use crate::kernel::{q_y_series, rat_int, LaurentPoly};
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProjectiveError {
    #[error("degree must be at least 1, got {degree}")]
    InvalidDegree { degree: u32 },
    #[error(
        "singularity {name} has a spectrum in {found} variables; \
         a point on an {dim}-dimensional hypersurface needs {expected}"
    )]
    DimensionMismatch {
        name: String,
        dim: u32,
        expected: u32,
        found: u32,
    },
}

/// A degree-d hypersurface in P^{n+1} with isolated singularities given by
/// their spectra. Each spectrum lives in n+1 variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveHypersurface {
    degree: u32,
    dim: u32,
    singularities: Vec<(String, Spectrum)>,
}

impl ProjectiveHypersurface {
    pub fn new(
        degree: u32,
        dim: u32,
        singularities: Vec<(String, Spectrum)>,
    ) -> Result<Self, ProjectiveError> {
        if degree == 0 {
            return Err(ProjectiveError::InvalidDegree { degree });
        }
        for (name, sp) in &singularities {
            if sp.num_vars() != dim + 1 {
                return Err(ProjectiveError::DimensionMismatch {
                    name: name.clone(),
                    dim,
                    expected: dim + 1,
                    found: sp.num_vars(),
                });
            }
        }
        Ok(Self {
            degree,
            dim,
            singularities,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn singularities(&self) -> &[(String, Spectrum)] {
        &self.singularities
    }
}

/// chi_y of the smooth degree-d hypersurface in P^{n+1}.
///
/// Always a polynomial in y of degree at most n.
pub fn chi_y_virtual(d: u32, n: u32) -> LaurentPoly {
    chi_y_virtual_with_order(d, n, n as usize + 2)
}

/// Same extraction with a caller-chosen series order. Any order of at
/// least n+2 gives the identical answer; the parameter exists so that the
/// independence can be demonstrated.
pub fn chi_y_virtual_with_order(d: u32, n: u32, order: usize) -> LaurentPoly {
    assert!(d >= 1, "degree must be at least 1");
    assert!(
        order >= n as usize + 2,
        "series order {order} cannot reach the coefficient of h^{}",
        n + 1
    );
    let q = q_y_series(order);
    let numerator = q.pow(n + 2);
    let denominator_inverse = q
        .scale_variable(&rat_int(i64::from(d)))
        .invert()
        .expect("Q_y has constant term 1");
    let product = numerator.mul(&denominator_inverse);
    product.coeff(n as usize).scale(&rat_int(i64::from(d)))
}

/// chi_y of the singular hypersurface itself:
/// the smooth value minus the reduced total chi_y of every singular point.
pub fn chi_y_singular(h: &ProjectiveHypersurface) -> LaurentPoly {
    &chi_y_virtual(h.degree, h.dim) - &point_defect_sum(h)
}

/// Degree of the Milnor-Hirzebruch class: the total defect
/// `chi_y(X_t) - chi_y(X)`, computed as the sum of the per-point
/// contributions and reconciled against the virtual class.
pub fn degree_mt(h: &ProjectiveHypersurface) -> LaurentPoly {
    let sum = point_defect_sum(h);
    let reconciled = &chi_y_virtual(h.degree, h.dim) - &chi_y_singular(h);
    assert_eq!(reconciled, sum, "degree defect must reconcile with the virtual class");
    sum
}

fn point_defect_sum(h: &ProjectiveHypersurface) -> LaurentPoly {
    h.singularities.iter().fold(LaurentPoly::zero(), |acc, (_, sp)| {
        let chi = reduced_total_chi(sp).expect("spectra validated to n+1 >= 1 variables");
        &acc + &chi.value
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use crate::spectrum::brieskorn_pham;
    use num_traits::Zero;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        terms.iter().fold(LaurentPoly::zero(), |acc, (e, c)| {
            &acc + &LaurentPoly::monomial(*e, rat_int(*c))
        })
    }

    // chi(X) for smooth X of degree d in P^{n+1}, from the Euler sequence:
    // c(TX) = (1+h)^{n+2}/(1+dh), integrated as d times the h^n coefficient.
    fn euler_smooth(d: i64, n: i64) -> i64 {
        let mut total = 0i64;
        for j in 0..=n {
            total += binom(n + 2, j) * pow_i(-d, n - j);
        }
        d * total
    }

    fn binom(n: i64, k: i64) -> i64 {
        if k < 0 || k > n {
            return 0;
        }
        let mut acc = 1i64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    fn pow_i(base: i64, exp: i64) -> i64 {
        (0..exp).fold(1, |acc, _| acc * base)
    }

    #[test]
    fn virtual_chi_goldens() {
        assert_eq!(chi_y_virtual(1, 2), lp(&[(0, 1), (1, -1), (2, 1)]));
        assert_eq!(chi_y_virtual(4, 2), lp(&[(0, 2), (1, -20), (2, 2)]));
        assert!(chi_y_virtual(3, 1).is_zero());
        // P^1 as the degree-1 hypersurface in P^2.
        assert_eq!(chi_y_virtual(1, 1), lp(&[(0, 1), (1, -1)]));
        // A point: degree-d hypersurface in P^1 is d points, chi_y = d.
        assert_eq!(chi_y_virtual(3, 0), lp(&[(0, 3)]));
    }

    #[test]
    fn virtual_chi_euler_specialization_table() {
        for d in 1..=5 {
            for n in 0..=3 {
                let chi = chi_y_virtual(d as u32, n as u32);
                let at = chi.eval(&rat_int(-1)).unwrap();
                assert_eq!(at, rat_int(euler_smooth(d, n)), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn virtual_chi_arithmetic_genus_at_zero() {
        // chi(O_X) = 1 - chi(O_{P^{n+1}}(-d)): 0 for the cubic curve, 2
        // for the quartic surface.
        assert!(chi_y_virtual(3, 1).eval(&rat_int(0)).unwrap().is_zero());
        assert_eq!(chi_y_virtual(4, 2).eval(&rat_int(0)).unwrap(), rat_int(2));
        // Plane curve of degree d: chi(O) = 1 - (d-1)(d-2)/2.
        for d in 1..=6i64 {
            let expected = 1 - (d - 1) * (d - 2) / 2;
            assert_eq!(
                chi_y_virtual(d as u32, 1).eval(&rat_int(0)).unwrap(),
                rat_int(expected),
                "d={d}"
            );
        }
    }

    #[test]
    fn virtual_chi_signature_of_k3() {
        assert_eq!(
            chi_y_virtual(4, 2).eval(&rat_int(1)).unwrap(),
            rat_int(-16)
        );
    }

    #[test]
    fn virtual_chi_is_palindromic() {
        // chi_y = (-y)^n chi_{1/y}: coefficient c_p equals (-1)^n c_{n-p}.
        for d in 1..=6u32 {
            for n in 0..=4u32 {
                let chi = chi_y_virtual(d, n);
                assert!(chi.min_exp().unwrap_or(0) >= 0);
                assert!(chi.max_exp().unwrap_or(0) <= i64::from(n));
                let sign = if n % 2 == 0 { 1 } else { -1 };
                for p in 0..=i64::from(n) {
                    assert_eq!(
                        chi.coeff(p),
                        chi.coeff(i64::from(n) - p) * rat(sign, 1),
                        "d={d} n={n} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn virtual_chi_order_independence() {
        for extra in 0..3usize {
            assert_eq!(
                chi_y_virtual_with_order(4, 2, 4 + extra),
                chi_y_virtual(4, 2)
            );
        }
    }

    #[test]
    fn nodal_and_cuspidal_cubics() {
        let node = brieskorn_pham(&[2, 2]).unwrap();
        let h = ProjectiveHypersurface::new(3, 1, vec![("p".into(), node)]).unwrap();
        assert_eq!(chi_y_singular(&h), lp(&[(1, -1)]));
        assert_eq!(degree_mt(&h), lp(&[(1, 1)]));

        let cusp = brieskorn_pham(&[3, 2]).unwrap();
        let h = ProjectiveHypersurface::new(3, 1, vec![("p".into(), cusp)]).unwrap();
        assert_eq!(chi_y_singular(&h), lp(&[(0, 1), (1, -1)]));
    }

    #[test]
    fn smooth_case_reduces_to_virtual() {
        let h = ProjectiveHypersurface::new(4, 2, vec![]).unwrap();
        assert_eq!(chi_y_singular(&h), chi_y_virtual(4, 2));
        assert!(degree_mt(&h).is_zero());
    }

    #[test]
    fn quintic_surface_with_one_node() {
        let node = brieskorn_pham(&[2, 2, 2]).unwrap();
        let h = ProjectiveHypersurface::new(5, 2, vec![("p".into(), node)]).unwrap();
        let mt = degree_mt(&h);
        assert_eq!(mt, lp(&[(1, -1)]));
        // Euler defect chi(X_t) - chi(X) = (-1)^n mu at y = -1.
        assert_eq!(mt.eval(&rat_int(-1)).unwrap(), rat_int(1));
    }

    #[test]
    fn euler_defect_is_sum_of_milnor_numbers() {
        // Curve case: each point contributes (-1)^1 mu.
        let e8 = brieskorn_pham(&[3, 5]).unwrap();
        let cusp = brieskorn_pham(&[3, 2]).unwrap();
        let mu = e8.milnor_number() + cusp.milnor_number();
        let h = ProjectiveHypersurface::new(
            6,
            1,
            vec![("a".into(), e8), ("b".into(), cusp)],
        )
        .unwrap();
        let defect = degree_mt(&h).eval(&rat_int(-1)).unwrap();
        assert_eq!(defect, rat_int(-mu));
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            ProjectiveHypersurface::new(0, 1, vec![]),
            Err(ProjectiveError::InvalidDegree { .. })
        ));
        let surface_node = brieskorn_pham(&[2, 2, 2]).unwrap();
        assert!(matches!(
            ProjectiveHypersurface::new(3, 1, vec![("p".into(), surface_node)]),
            Err(ProjectiveError::DimensionMismatch { .. })
        ));
    }
}
