//! Hodge-theoretic invariants of the Milnor fiber: chi_y specializations,
//! mixed Hodge number tables, the Steenbrink signature, and the Du Bois
//! vanishing test.
//!
//! A spectrum monomial `t^b` decomposes as `b = a + p` with fractional part
//! `a` in `[0,1)` and Hodge level `p = floor(b)`. The chi_y specialization
//! keeps `(-y)^p` per unit of multiplicity; the Hodge table records where
//! the class sits in the mixed Hodge structure of `H^n(F)` for `F` the
//! Milnor fiber and `n + 1` the number of variables.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::kernel::{LaurentPoly, Rational};
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("operation needs a spectrum in at least one variable")]
    NeedsVariables,
    #[error("invalid Hodge table: {reason}")]
    InvalidTable { reason: String },
}

/// What a chi_y-polynomial is a chi_y of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiKind {
    /// Reduced middle cohomology of a Milnor fiber.
    ReducedMiddle,
    /// Reduced total cohomology, i.e. `(-1)^n` times the middle one for an
    /// isolated singularity in `n + 1` variables.
    ReducedTotal,
    /// Full cohomology: the reduced total plus the class of a point.
    Total,
    /// Intersection cohomology of a cone on a link.
    IhCone,
}

impl ChiKind {
    pub fn label(self) -> &'static str {
        match self {
            ChiKind::ReducedMiddle => "reduced_middle",
            ChiKind::ReducedTotal => "reduced_total",
            ChiKind::Total => "total",
            ChiKind::IhCone => "ih_cone",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiClass {
    pub value: LaurentPoly,
    pub kind: ChiKind,
}

fn floor_i64(x: &Rational) -> i64 {
    x.floor()
        .to_integer()
        .to_i64()
        .expect("spectral exponents are small")
}

/// chi_y of the reduced middle cohomology: each spectrum monomial `t^b`
/// contributes its multiplicity times `(-y)^{floor(b)}`.
pub fn chi_y_of_spectrum(a: &Spectrum) -> ChiClass {
    let mut value = LaurentPoly::zero();
    for (exp, coeff) in a.poly().terms() {
        let p = floor_i64(exp);
        value = &value + &LaurentPoly::neg_y_power(p).scale(&crate::kernel::rat_int(*coeff));
    }
    ChiClass {
        value,
        kind: ChiKind::ReducedMiddle,
    }
}

/// chi_y of the reduced total cohomology of the Milnor fiber: for an
/// isolated singularity in `m = n + 1` variables the fiber is
/// `(n-1)`-connected, so this is `(-1)^n` times the middle chi_y.
pub fn reduced_total_chi(a: &Spectrum) -> Result<ChiClass, InvariantError> {
    if a.num_vars() == 0 {
        return Err(InvariantError::NeedsVariables);
    }
    let n = i64::from(a.num_vars()) - 1;
    let middle = chi_y_of_spectrum(a).value;
    let value = if n % 2 == 0 { middle } else { -&middle };
    Ok(ChiClass {
        value,
        kind: ChiKind::ReducedTotal,
    })
}

/// chi_y of the full cohomology of the Milnor fiber: reduced total plus 1
/// for the `H^0` class.
pub fn total_chi(a: &Spectrum) -> Result<ChiClass, InvariantError> {
    let reduced = reduced_total_chi(a)?;
    Ok(ChiClass {
        value: &reduced.value + &LaurentPoly::one(),
        kind: ChiKind::Total,
    })
}

/// One mixed Hodge number: `dim` is the dimension of
/// `Gr^p_F Gr^W_weight` on the relevant eigenspace part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HodgeEntry {
    pub p: i64,
    pub q: i64,
    pub weight: i64,
    pub unipotent: bool,
    pub dim: i64,
}

/// Mixed Hodge numbers of the middle Milnor fiber cohomology `H^n(F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeTable {
    n: i64,
    entries: Vec<HodgeEntry>,
}

impl HodgeTable {
    /// Validates and canonically orders a table. Required: positive
    /// dimensions, `p + q = weight`, no duplicate `(p, q, weight,
    /// unipotent)` positions, and conjugation symmetry
    /// `h^{p,q} = h^{q,p}` within each weight and monodromy part.
    pub fn new(n: i64, mut entries: Vec<HodgeEntry>) -> Result<Self, InvariantError> {
        entries.sort();
        for e in &entries {
            if e.dim <= 0 {
                return Err(InvariantError::InvalidTable {
                    reason: format!("entry ({}, {}) has non-positive dimension {}", e.p, e.q, e.dim),
                });
            }
            if e.p + e.q != e.weight {
                return Err(InvariantError::InvalidTable {
                    reason: format!(
                        "entry ({}, {}) declares weight {}, expected p + q",
                        e.p, e.q, e.weight
                    ),
                });
            }
        }
        for w in entries.windows(2) {
            if (w[0].p, w[0].q, w[0].weight, w[0].unipotent)
                == (w[1].p, w[1].q, w[1].weight, w[1].unipotent)
            {
                return Err(InvariantError::InvalidTable {
                    reason: format!("duplicate entry at ({}, {})", w[0].p, w[0].q),
                });
            }
        }
        for e in &entries {
            let mirror = entries.iter().find(|m| {
                m.p == e.q && m.q == e.p && m.weight == e.weight && m.unipotent == e.unipotent
            });
            if mirror.map(|m| m.dim) != Some(e.dim) {
                return Err(InvariantError::InvalidTable {
                    reason: format!(
                        "conjugation symmetry fails at ({}, {}): no matching ({}, {}) of dimension {}",
                        e.p, e.q, e.q, e.p, e.dim
                    ),
                });
            }
        }
        Ok(Self { n, entries })
    }

    /// Cohomological degree `n`, i.e. the dimension of the hypersurface.
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn entries(&self) -> &[HodgeEntry] {
        &self.entries
    }

    pub fn total_dim(&self) -> i64 {
        self.entries.iter().map(|e| e.dim).sum()
    }

    /// Total dimension at a Hodge position, all weights and parts merged.
    pub fn dim_at(&self, p: i64, q: i64) -> i64 {
        self.entries
            .iter()
            .filter(|e| e.p == p && e.q == q)
            .map(|e| e.dim)
            .sum()
    }

    /// chi_y of the table, `sum (-y)^p dim`.
    pub fn chi_y(&self) -> LaurentPoly {
        let mut value = LaurentPoly::zero();
        for e in &self.entries {
            value = &value + &LaurentPoly::neg_y_power(e.p).scale(&crate::kernel::rat_int(e.dim));
        }
        value
    }
}

/// Mixed Hodge table of `H^n(F)` read off the spectrum. A non-integer
/// spectral number `b` lands in position `(floor(b), n - floor(b))` of
/// weight `n` on the non-unipotent part; an integer one lands in
/// `(b, n + 1 - b)` of weight `n + 1` on the unipotent part.
pub fn hodge_table(a: &Spectrum) -> Result<HodgeTable, InvariantError> {
    if a.num_vars() == 0 {
        return Err(InvariantError::NeedsVariables);
    }
    let n = i64::from(a.num_vars()) - 1;
    let mut dims: BTreeMap<(i64, i64, i64, bool), i64> = BTreeMap::new();
    for (exp, coeff) in a.poly().terms() {
        let p = floor_i64(exp);
        let key = if exp.is_integer() {
            (p, n + 1 - p, n + 1, true)
        } else {
            (p, n - p, n, false)
        };
        *dims.entry(key).or_insert(0) += coeff;
    }
    let entries = dims
        .into_iter()
        .map(|((p, q, weight, unipotent), dim)| HodgeEntry {
            p,
            q,
            weight,
            unipotent,
            dim,
        })
        .collect();
    HodgeTable::new(n, entries)
}

/// Signature of the Milnor fiber via Steenbrink's formula
///
/// ```text
/// sigma = sum_{p+q=n} (-1)^p ( h^{p,q} + 2 sum_{i>=1} (-1)^i h^{p+i,q+i} )
/// ```
///
/// for `n` even; for odd `n` the signature of the `2n`-manifold `F`
/// vanishes identically.
pub fn steenbrink_signature(table: &HodgeTable) -> i64 {
    let n = table.n();
    if n.rem_euclid(2) == 1 {
        return 0;
    }
    let mut dims: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for e in table.entries() {
        *dims.entry((e.p, e.q)).or_insert(0) += e.dim;
    }
    let max_p = dims.keys().map(|(p, _)| *p).max().unwrap_or(0);
    let min_p = dims.keys().map(|(p, _)| *p).min().unwrap_or(0);
    let mut sigma = 0;
    for p in min_p..=max_p {
        let q = n - p;
        let mut inner = dims.get(&(p, q)).copied().unwrap_or(0);
        let mut i = 1;
        while p + i <= max_p {
            let sign = if i % 2 == 0 { 2 } else { -2 };
            inner += sign * dims.get(&(p + i, q + i)).copied().unwrap_or(0);
            i += 1;
        }
        sigma += if p.rem_euclid(2) == 0 { inner } else { -inner };
    }
    sigma
}

/// chi_y of the reduced middle cohomology evaluated at `y = 1`.
pub fn chi_one(a: &Spectrum) -> i64 {
    chi_y_of_spectrum(a)
        .value
        .eval(&crate::kernel::rat_int(1))
        .expect("no pole away from zero")
        .to_integer()
        .to_i64()
        .expect("chi_1 is a small integer")
}

/// Comparison of the two candidate local signatures. When the hypersurface
/// is a rational homology manifold near the singular point the two agree;
/// `agrees = false` witnesses an obstruction to that hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhmSignatureCheck {
    pub chi_one: i64,
    pub signature: i64,
    pub agrees: bool,
}

pub fn rhm_signature_check(a: &Spectrum) -> Result<RhmSignatureCheck, InvariantError> {
    let table = hodge_table(a)?;
    let signature = steenbrink_signature(&table);
    let chi = chi_one(a);
    Ok(RhmSignatureCheck {
        chi_one: chi,
        signature,
        agrees: chi == signature,
    })
}

/// Whether `Gr^0_F H^n(F) = 0`, i.e. no spectral number lies in `(0, 1)`.
/// For an isolated hypersurface singularity this is equivalent to the germ
/// being Du Bois.
pub fn du_bois_vanishing(a: &Spectrum) -> bool {
    let one = Rational::from_integer(1.into());
    a.poly().terms().all(|(exp, _)| *exp >= one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, rat_int};
    use crate::spectrum::{brieskorn_pham, quasi_homogeneous};

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        terms.iter().fold(LaurentPoly::zero(), |acc, (e, c)| {
            &acc + &LaurentPoly::monomial(*e, rat_int(*c))
        })
    }

    #[test]
    fn chi_y_golden_values() {
        // Cusp: t^(5/6) + t^(7/6) -> 1 - y.
        let cusp = brieskorn_pham(&[3, 2]).unwrap();
        assert_eq!(chi_y_of_spectrum(&cusp).value, lp(&[(0, 1), (1, -1)]));
        // Node on a curve: t^1 -> -y; the reduced total flips the sign.
        let node = brieskorn_pham(&[2, 2]).unwrap();
        assert_eq!(chi_y_of_spectrum(&node).value, lp(&[(1, -1)]));
        assert_eq!(reduced_total_chi(&node).unwrap().value, lp(&[(1, 1)]));
        // E_8: all eight spectral numbers lie in (1, 2).
        let e8 = brieskorn_pham(&[3, 5, 2]).unwrap();
        assert_eq!(chi_y_of_spectrum(&e8).value, lp(&[(1, -8)]));
        assert_eq!(reduced_total_chi(&e8).unwrap().value, lp(&[(1, -8)]));
        assert_eq!(total_chi(&e8).unwrap().value, lp(&[(0, 1), (1, -8)]));
    }

    #[test]
    fn chi_y_at_minus_one_is_milnor_number() {
        for exps in [vec![2u32], vec![3, 2], vec![3, 5, 2], vec![4, 4, 3, 2]] {
            let s = brieskorn_pham(&exps).unwrap();
            let chi = chi_y_of_spectrum(&s).value.eval(&rat_int(-1)).unwrap();
            assert_eq!(chi, rat_int(s.milnor_number()));
        }
    }

    #[test]
    fn reduced_total_requires_variables() {
        assert_eq!(
            reduced_total_chi(&Spectrum::unit()),
            Err(InvariantError::NeedsVariables)
        );
    }

    #[test]
    fn hodge_table_of_e12() {
        // x^7 + y^3 + z^2: mu = 12, spectral numbers k/42.
        let e12 = brieskorn_pham(&[7, 3, 2]).unwrap();
        let table = hodge_table(&e12).unwrap();
        assert_eq!(table.n(), 2);
        assert_eq!(table.total_dim(), 12);
        assert_eq!(table.dim_at(0, 2), 1);
        assert_eq!(table.dim_at(1, 1), 10);
        assert_eq!(table.dim_at(2, 0), 1);
        assert!(table.entries().iter().all(|e| !e.unipotent && e.weight == 2));
        assert_eq!(table.chi_y(), chi_y_of_spectrum(&e12).value);
    }

    #[test]
    fn hodge_table_of_node_is_unipotent() {
        let node = brieskorn_pham(&[2, 2]).unwrap();
        let table = hodge_table(&node).unwrap();
        assert_eq!(
            table.entries(),
            &[HodgeEntry {
                p: 1,
                q: 1,
                weight: 2,
                unipotent: true,
                dim: 1
            }]
        );
    }

    #[test]
    fn signature_golden_set() {
        // A_1 surface: x^2 + y^2 + z^2.
        let a1 = brieskorn_pham(&[2, 2, 2]).unwrap();
        assert_eq!(steenbrink_signature(&hodge_table(&a1).unwrap()), -1);
        // E_8: x^3 + y^5 + z^2.
        let e8 = brieskorn_pham(&[3, 5, 2]).unwrap();
        assert_eq!(steenbrink_signature(&hodge_table(&e8).unwrap()), -8);
        // E_12: x^7 + y^3 + z^2.
        let e12 = brieskorn_pham(&[7, 3, 2]).unwrap();
        assert_eq!(steenbrink_signature(&hodge_table(&e12).unwrap()), -8);
        // A_2 surface: x^3 + y^2 + z^2.
        let a2 = brieskorn_pham(&[3, 2, 2]).unwrap();
        assert_eq!(steenbrink_signature(&hodge_table(&a2).unwrap()), -2);
    }

    #[test]
    fn signature_vanishes_in_odd_dimension() {
        let node = brieskorn_pham(&[2, 2]).unwrap();
        assert_eq!(steenbrink_signature(&hodge_table(&node).unwrap()), 0);
        let e8_curve = brieskorn_pham(&[3, 5]).unwrap();
        assert_eq!(steenbrink_signature(&hodge_table(&e8_curve).unwrap()), 0);
    }

    #[test]
    fn weight_corrections_enter_the_signature() {
        // A hand-made table with an h^{2,2} class of weight 4 above the
        // middle weight 2: sigma = -(3 + 2*(-1)*1) = -1.
        let table = HodgeTable::new(
            2,
            vec![
                HodgeEntry { p: 1, q: 1, weight: 2, unipotent: false, dim: 3 },
                HodgeEntry { p: 2, q: 2, weight: 4, unipotent: true, dim: 1 },
            ],
        )
        .unwrap();
        assert_eq!(steenbrink_signature(&table), -1);
    }

    #[test]
    fn table_validation_rejects_bad_data() {
        let bad_weight = HodgeTable::new(
            2,
            vec![HodgeEntry { p: 1, q: 1, weight: 3, unipotent: false, dim: 1 }],
        );
        assert!(matches!(bad_weight, Err(InvariantError::InvalidTable { .. })));

        let asymmetric = HodgeTable::new(
            2,
            vec![HodgeEntry { p: 0, q: 2, weight: 2, unipotent: false, dim: 1 }],
        );
        assert!(matches!(asymmetric, Err(InvariantError::InvalidTable { .. })));

        let unequal = HodgeTable::new(
            2,
            vec![
                HodgeEntry { p: 0, q: 2, weight: 2, unipotent: false, dim: 2 },
                HodgeEntry { p: 2, q: 0, weight: 2, unipotent: false, dim: 1 },
            ],
        );
        assert!(matches!(unequal, Err(InvariantError::InvalidTable { .. })));

        let zero_dim = HodgeTable::new(
            2,
            vec![HodgeEntry { p: 1, q: 1, weight: 2, unipotent: false, dim: 0 }],
        );
        assert!(matches!(zero_dim, Err(InvariantError::InvalidTable { .. })));

        let duplicate = HodgeTable::new(
            2,
            vec![
                HodgeEntry { p: 1, q: 1, weight: 2, unipotent: false, dim: 1 },
                HodgeEntry { p: 1, q: 1, weight: 2, unipotent: false, dim: 1 },
            ],
        );
        assert!(matches!(duplicate, Err(InvariantError::InvalidTable { .. })));
    }

    #[test]
    fn rhm_check_golden() {
        // The node is not a rational homology manifold point of its curve:
        // sigma = 0 in odd dimension but chi_1 = -1.
        let node = brieskorn_pham(&[2, 2]).unwrap();
        let check = rhm_signature_check(&node).unwrap();
        assert_eq!(check.chi_one, -1);
        assert_eq!(check.signature, 0);
        assert!(!check.agrees);

        let e8 = brieskorn_pham(&[3, 5, 2]).unwrap();
        let check = rhm_signature_check(&e8).unwrap();
        assert_eq!(check.chi_one, -8);
        assert_eq!(check.signature, -8);
        assert!(check.agrees);
    }

    #[test]
    fn du_bois_golden() {
        let node = brieskorn_pham(&[2, 2]).unwrap();
        assert!(du_bois_vanishing(&node));
        let a1_surface = brieskorn_pham(&[2, 2, 2]).unwrap();
        assert!(du_bois_vanishing(&a1_surface));
        let cusp = brieskorn_pham(&[3, 2]).unwrap();
        assert!(!du_bois_vanishing(&cusp));
        // Quasi-homogeneous E_7 has spectral numbers below 1 as well.
        let e7 = quasi_homogeneous(&[rat(1, 3), rat(2, 9)]).unwrap();
        assert!(!du_bois_vanishing(&e7));
    }

    #[test]
    fn chi_kind_labels() {
        assert_eq!(ChiKind::ReducedMiddle.label(), "reduced_middle");
        assert_eq!(ChiKind::IhCone.label(), "ih_cone");
    }
}
