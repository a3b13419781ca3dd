//! JSON wire format.
//!
//! Every number that can be a rational is carried as a `{"num", "den"}`
//! pair. Both parts are plain JSON integers whenever they fit in an i64 and
//! decimal strings otherwise, so values round-trip bit-exactly at any size.
//! Wire types mirror the core types one-to-one; `to_core` validates, so a
//! parsed wire value is not yet a checked value.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::kernel::{FracPoly, LaurentPoly, Rational};
use crate::projective::{ProjectiveError, ProjectiveHypersurface};
use crate::spectrum::{brieskorn_pham, quasi_homogeneous, Spectrum, SpectrumError};
use crate::strata::{StrataError, Stratification, StratifiedClass, Stratum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemaError {
    #[error("invalid integer literal {text:?}")]
    BadInteger { text: String },
    #[error("denominator must be nonzero")]
    ZeroDenominator,
}

/// Structural errors keep exit-code category 3; everything else is a
/// violated mathematical precondition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WireError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
}

impl WireError {
    pub fn is_schema(&self) -> bool {
        matches!(self, WireError::Schema(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn to_bigint(&self) -> Result<num_bigint::BigInt, SchemaError> {
        match self {
            IntRepr::Small(v) => Ok(num_bigint::BigInt::from(*v)),
            IntRepr::Big(text) => text
                .parse()
                .map_err(|_| SchemaError::BadInteger { text: text.clone() }),
        }
    }

    fn from_bigint(v: &num_bigint::BigInt) -> Self {
        match v.to_i64() {
            Some(small) => IntRepr::Small(small),
            None => IntRepr::Big(v.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalRepr {
    pub num: IntRepr,
    pub den: IntRepr,
}

impl RationalRepr {
    pub fn to_rational(&self) -> Result<Rational, SchemaError> {
        let num = self.num.to_bigint()?;
        let den = self.den.to_bigint()?;
        if num_traits::Zero::is_zero(&den) {
            return Err(SchemaError::ZeroDenominator);
        }
        Ok(Rational::new(num, den))
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self {
            num: IntRepr::from_bigint(r.numer()),
            den: IntRepr::from_bigint(r.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumTermWire {
    pub exponent: RationalRepr,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumWire {
    pub terms: Vec<SpectrumTermWire>,
    pub num_vars: u32,
}

impl SpectrumWire {
    pub fn to_core(&self) -> Result<Spectrum, WireError> {
        let mut poly = FracPoly::zero();
        for term in &self.terms {
            let exp = term.exponent.to_rational()?;
            poly = &poly + &FracPoly::monomial(exp, term.coeff);
        }
        Ok(Spectrum::from_parts(poly, self.num_vars)?)
    }

    pub fn from_core(sp: &Spectrum) -> Self {
        Self {
            terms: sp
                .poly()
                .terms()
                .map(|(exp, coeff)| SpectrumTermWire {
                    exponent: RationalRepr::from_rational(exp),
                    coeff: *coeff,
                })
                .collect(),
            num_vars: sp.num_vars(),
        }
    }
}

/// A singularity given by Brieskorn-Pham exponents, quasi-homogeneous
/// weights, or an explicit spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SingularityInput {
    BrieskornPham { brieskorn_pham: Vec<u32> },
    QuasiHomogeneous { quasi_homogeneous: Vec<RationalRepr> },
    Explicit { explicit_spectrum: SpectrumWire },
}

impl SingularityInput {
    pub fn to_core(&self) -> Result<Spectrum, WireError> {
        match self {
            SingularityInput::BrieskornPham { brieskorn_pham: w } => {
                Ok(brieskorn_pham(w)?)
            }
            SingularityInput::QuasiHomogeneous { quasi_homogeneous: w } => {
                let weights: Vec<Rational> = w
                    .iter()
                    .map(|r| r.to_rational())
                    .collect::<Result<_, _>>()?;
                Ok(quasi_homogeneous(&weights)?)
            }
            SingularityInput::Explicit { explicit_spectrum } => explicit_spectrum.to_core(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaurentTermWire {
    pub exponent: i64,
    pub coeff: RationalRepr,
}

pub fn laurent_to_wire(p: &LaurentPoly) -> Vec<LaurentTermWire> {
    p.terms()
        .map(|(exp, coeff)| LaurentTermWire {
            exponent: *exp,
            coeff: RationalRepr::from_rational(coeff),
        })
        .collect()
}

pub fn laurent_from_wire(terms: &[LaurentTermWire]) -> Result<LaurentPoly, SchemaError> {
    let mut out = LaurentPoly::zero();
    for t in terms {
        out = &out + &LaurentPoly::monomial(t.exponent, t.coeff.to_rational()?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassTermWire {
    pub symbol: String,
    pub coeff: Vec<LaurentTermWire>,
}

pub fn class_to_wire(c: &StratifiedClass) -> Vec<ClassTermWire> {
    c.terms()
        .map(|(symbol, coeff)| ClassTermWire {
            symbol: symbol.clone(),
            coeff: laurent_to_wire(coeff),
        })
        .collect()
}

pub fn class_from_wire(terms: &[ClassTermWire]) -> Result<StratifiedClass, SchemaError> {
    let mut out = StratifiedClass::zero();
    for t in terms {
        let coeff = laurent_from_wire(&t.coeff)?;
        out = &out + &StratifiedClass::monomial(t.symbol.clone(), coeff);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumWire {
    pub name: String,
    pub dim: i64,
    pub is_singular: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_closure: Option<Vec<ClassTermWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_boundary: Option<Vec<ClassTermWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub it_closure: Option<Vec<ClassTermWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor: Option<SingularityInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_reduced_total: Option<Vec<LaurentTermWire>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ih_cone_link_chi: BTreeMap<String, Vec<LaurentTermWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ih_cone_link_in_x: Option<Vec<LaurentTermWire>>,
}

impl StratumWire {
    pub fn to_core(&self) -> Result<Stratum, WireError> {
        let mut s = Stratum::new(self.name.clone(), self.dim, self.is_singular);
        if let Some(w) = &self.t_closure {
            s.t_closure = Some(class_from_wire(w)?);
        }
        if let Some(w) = &self.t_boundary {
            s.t_boundary = Some(class_from_wire(w)?);
        }
        if let Some(w) = &self.it_closure {
            s.it_closure = Some(class_from_wire(w)?);
        }
        if let Some(m) = &self.milnor {
            s.milnor_spectrum = Some(m.to_core()?);
        }
        if let Some(w) = &self.chi_reduced_total {
            s.chi_reduced_total = Some(laurent_from_wire(w)?);
        }
        for (lower, w) in &self.ih_cone_link_chi {
            s.ih_cone_link_chi
                .insert(lower.clone(), laurent_from_wire(w)?);
        }
        if let Some(w) = &self.ih_cone_link_in_x {
            s.ih_cone_link_in_x = Some(laurent_from_wire(w)?);
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratificationWire {
    pub hypersurface_dim: i64,
    #[serde(default = "default_true")]
    pub monodromy_trivial: bool,
    pub strata: Vec<StratumWire>,
    #[serde(default)]
    pub order: Vec<(String, String)>,
}

fn default_true() -> bool {
    true
}

impl StratificationWire {
    pub fn to_core(&self) -> Result<Stratification, WireError> {
        let strata: Vec<Stratum> = self
            .strata
            .iter()
            .map(|w| w.to_core())
            .collect::<Result<_, _>>()?;
        Ok(Stratification::new(
            self.hypersurface_dim,
            self.monodromy_trivial,
            strata,
            &self.order,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedSingularity {
    pub name: String,
    pub singularity: SingularityInput,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MitPointWire {
    pub name: String,
    pub singularity: SingularityInput,
    pub ih_cone_link_chi: Vec<LaurentTermWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmoothLocusWire {
    pub transversal: SingularityInput,
    pub hypersurface_dim: i64,
    pub locus_dim: i64,
    pub t_sigma: Vec<ClassTermWire>,
}

/// Input of the `milnor-class` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MilnorClassInput {
    Isolated { isolated: Vec<NamedSingularity> },
    SmoothLocus { smooth_locus: SmoothLocusWire },
    MitIsolated { mit_isolated: Vec<MitPointWire> },
}

/// Input of the `projective --sing` file: the singular points.
pub type ProjectiveSingularities = Vec<NamedSingularity>;

pub fn projective_from_parts(
    degree: u32,
    dim: u32,
    sing: &ProjectiveSingularities,
) -> Result<ProjectiveHypersurface, WireError> {
    let points: Vec<(String, Spectrum)> = sing
        .iter()
        .map(|p| Ok::<_, WireError>((p.name.clone(), p.singularity.to_core()?)))
        .collect::<Result<_, _>>()?;
    Ok(ProjectiveHypersurface::new(degree, dim, points)?)
}
