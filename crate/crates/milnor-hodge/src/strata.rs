//! Milnor-Hirzebruch class formulas over a stratified hypersurface.
//!
//! Classes live in the free module over opaque stratum-closure symbols with
//! Laurent-polynomial coefficients in `y`. The characteristic class data of
//! closures (`T_y`, `IT_y`) and the cone-link intersection chi_y values are
//! user-supplied; this module evaluates the weighted-sum and inductive
//! correction formulas exactly, it does not compute link geometry.
//!
//! All evaluation assumes trivial monodromy along strata (simply-connected
//! strata); inputs declaring nontrivial monodromy are refused.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Sub};

use crate::invariants::reduced_total_chi;
use crate::kernel::{KernelError, LaurentPoly, Rational};
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrataError {
    #[error("duplicate stratum name {name}")]
    DuplicateStratum { name: String },
    #[error("unknown stratum {name} in order relation")]
    UnknownStratum { name: String },
    #[error("order pair ({lower}, {upper}) is invalid: {reason}")]
    InvalidOrder {
        lower: String,
        upper: String,
        reason: String,
    },
    #[error(
        "stratum {name} has dimension {dim} in a hypersurface of dimension {ambient}, \
         which contradicts its singular-stratum flag"
    )]
    InconsistentFlag { name: String, dim: i64, ambient: i64 },
    #[error("singular stratum {name} carries neither a Milnor spectrum nor explicit chi_y data")]
    MissingMilnorData { name: String },
    #[error("stratum {name}: transversal spectrum has {found} variables, expected {expected}")]
    TransversalDimension {
        name: String,
        expected: i64,
        found: u32,
    },
    #[error("stratification declares nontrivial monodromy; evaluation is defined only for trivial monodromy")]
    NontrivialMonodromy,
    #[error("stratum {name} is missing T-class data ({which})")]
    MissingTClass { name: String, which: &'static str },
    #[error("stratum {name} is missing its IT_closure class")]
    MissingItClass { name: String },
    #[error("missing cone-link chi_y data for the pair {lower} < {upper}")]
    MissingLinkData { lower: String, upper: String },
    #[error("stratum {name} is missing the cone-link chi_y value of its link in the hypersurface")]
    MissingLinkInX { name: String },
    #[error("point {name} has a spectrum in {found} variables, expected {expected}")]
    MismatchedNumVars {
        name: String,
        expected: u32,
        found: u32,
    },
    #[error("invalid point {name}: {reason}")]
    InvalidPoint { name: String, reason: String },
    #[error("smooth-locus dimensions are inconsistent: {reason}")]
    DimensionMismatch { reason: String },
    #[error("{what} must be nonzero")]
    EmptySupport { what: &'static str },
    #[error("evaluation order is not a linear extension of the poset: {reason}")]
    NotLinearExtension { reason: String },
}

/// A formal sum of stratum-closure symbols weighted by Laurent polynomials
/// in `y`. Symbols are opaque; equal name means equal class.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StratifiedClass {
    terms: BTreeMap<String, LaurentPoly>,
}

impl StratifiedClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(symbol: impl Into<String>, coeff: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(symbol.into(), coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, symbol: &str) -> LaurentPoly {
        self.terms.get(symbol).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&String, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(s, p)| (s.clone(), p * c))
                .collect(),
        }
    }

    /// Evaluates every coefficient at `y = y0`.
    pub fn eval(&self, y0: &Rational) -> Result<BTreeMap<String, Rational>, KernelError> {
        self.terms
            .iter()
            .map(|(s, p)| Ok((s.clone(), p.eval(y0)?)))
            .collect()
    }

    fn insert_add(&mut self, symbol: &str, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(symbol.to_string()) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
        }
    }
}

impl Add for &StratifiedClass {
    type Output = StratifiedClass;

    fn add(self, rhs: &StratifiedClass) -> StratifiedClass {
        let mut out = self.clone();
        for (s, p) in &rhs.terms {
            out.insert_add(s, p);
        }
        out
    }
}

impl Sub for &StratifiedClass {
    type Output = StratifiedClass;

    fn sub(self, rhs: &StratifiedClass) -> StratifiedClass {
        let mut out = self.clone();
        for (s, p) in &rhs.terms {
            out.insert_add(s, &-p);
        }
        out
    }
}

impl Add for StratifiedClass {
    type Output = StratifiedClass;
    fn add(self, rhs: StratifiedClass) -> StratifiedClass {
        &self + &rhs
    }
}

impl Sub for StratifiedClass {
    type Output = StratifiedClass;
    fn sub(self, rhs: StratifiedClass) -> StratifiedClass {
        &self - &rhs
    }
}

impl fmt::Display for StratifiedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (symbol, poly) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if poly == &LaurentPoly::one() {
                write!(f, "[{symbol}]")?;
                continue;
            }
            let rendered = poly.to_string();
            if poly.num_terms() == 1 && !rendered.starts_with('-') {
                write!(f, "{rendered}*[{symbol}]")?;
            } else {
                write!(f, "({rendered})*[{symbol}]")?;
            }
        }
        Ok(())
    }
}

/// One stratum record. Class data fields are optional: each evaluation
/// formula demands only what it actually consumes and reports the missing
/// field by stratum name otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub name: String,
    pub dim: i64,
    pub is_singular: bool,
    /// `T_y` of the closure of the stratum.
    pub t_closure: Option<StratifiedClass>,
    /// `T_y` of the boundary (closure minus the stratum).
    pub t_boundary: Option<StratifiedClass>,
    /// `IT_y` of the closure.
    pub it_closure: Option<StratifiedClass>,
    /// Spectrum of the transversal Milnor fiber at a point of the stratum.
    pub milnor_spectrum: Option<Spectrum>,
    /// chi_y of the reduced total Milnor fiber cohomology. Consulted only
    /// when no spectrum is supplied.
    pub chi_reduced_total: Option<LaurentPoly>,
    /// Intersection chi_y of the open cone on the link of W in the closure
    /// of this stratum, keyed by the name of the smaller stratum W.
    pub ih_cone_link_chi: BTreeMap<String, LaurentPoly>,
    /// Intersection chi_y of the open cone on the link of this stratum in
    /// the full hypersurface.
    pub ih_cone_link_in_x: Option<LaurentPoly>,
}

impl Stratum {
    /// A bare stratum with no class data attached.
    pub fn new(name: impl Into<String>, dim: i64, is_singular: bool) -> Self {
        Self {
            name: name.into(),
            dim,
            is_singular,
            t_closure: None,
            t_boundary: None,
            it_closure: None,
            milnor_spectrum: None,
            chi_reduced_total: None,
            ih_cone_link_chi: BTreeMap::new(),
            ih_cone_link_in_x: None,
        }
    }
}

/// A Whitney stratification of an `n`-dimensional hypersurface, with the
/// partial order `W < V  iff  W` lies in the closure of `V` minus `V`,
/// supplied explicitly and stored transitively closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratification {
    hypersurface_dim: i64,
    monodromy_trivial: bool,
    strata: Vec<Stratum>,
    index: BTreeMap<String, usize>,
    below: Vec<BTreeSet<usize>>,
}

impl Stratification {
    /// Validates the stratum records and the order relation.
    ///
    /// Order pairs must be strictly dimension-increasing, which makes the
    /// relation a strict poset. Singular strata must have dimension below
    /// the hypersurface dimension, regular strata exactly equal to it, and
    /// every singular stratum must carry Milnor data (a spectrum of the
    /// matching transversal dimension, or an explicit chi_y polynomial).
    pub fn new(
        hypersurface_dim: i64,
        monodromy_trivial: bool,
        strata: Vec<Stratum>,
        order: &[(String, String)],
    ) -> Result<Self, StrataError> {
        let n = hypersurface_dim;
        let mut index = BTreeMap::new();
        for (i, s) in strata.iter().enumerate() {
            if index.insert(s.name.clone(), i).is_some() {
                return Err(StrataError::DuplicateStratum {
                    name: s.name.clone(),
                });
            }
            let consistent = if s.is_singular {
                s.dim >= 0 && s.dim < n
            } else {
                s.dim == n
            };
            if !consistent {
                return Err(StrataError::InconsistentFlag {
                    name: s.name.clone(),
                    dim: s.dim,
                    ambient: n,
                });
            }
            if s.is_singular {
                match &s.milnor_spectrum {
                    Some(sp) => {
                        let expected = n - s.dim + 1;
                        if i64::from(sp.num_vars()) != expected {
                            return Err(StrataError::TransversalDimension {
                                name: s.name.clone(),
                                expected,
                                found: sp.num_vars(),
                            });
                        }
                    }
                    None => {
                        if s.chi_reduced_total.is_none() {
                            return Err(StrataError::MissingMilnorData {
                                name: s.name.clone(),
                            });
                        }
                    }
                }
            }
        }

        let mut direct: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); strata.len()];
        for (lower, upper) in order {
            let li = *index
                .get(lower)
                .ok_or_else(|| StrataError::UnknownStratum { name: lower.clone() })?;
            let ui = *index
                .get(upper)
                .ok_or_else(|| StrataError::UnknownStratum { name: upper.clone() })?;
            if strata[li].dim >= strata[ui].dim {
                return Err(StrataError::InvalidOrder {
                    lower: lower.clone(),
                    upper: upper.clone(),
                    reason: format!(
                        "dimension must strictly increase ({} vs {})",
                        strata[li].dim, strata[ui].dim
                    ),
                });
            }
            direct[ui].insert(li);
        }

        // Transitive closure: edges strictly increase dimension, so
        // processing strata by ascending dimension sees every lower
        // stratum's closure before it is consumed.
        let mut by_dim: Vec<usize> = (0..strata.len()).collect();
        by_dim.sort_by_key(|&i| (strata[i].dim, strata[i].name.clone()));
        let mut below: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); strata.len()];
        for &v in &by_dim {
            let mut closed = BTreeSet::new();
            for &w in &direct[v] {
                closed.insert(w);
                closed.extend(below[w].iter().copied());
            }
            below[v] = closed;
        }

        Ok(Self {
            hypersurface_dim,
            monodromy_trivial,
            strata,
            index,
            below,
        })
    }

    pub fn hypersurface_dim(&self) -> i64 {
        self.hypersurface_dim
    }

    pub fn monodromy_trivial(&self) -> bool {
        self.monodromy_trivial
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum(&self, name: &str) -> Option<&Stratum> {
        self.index.get(name).map(|&i| &self.strata[i])
    }

    /// Whether `lower < upper` in the transitively closed order.
    pub fn less_than(&self, lower: &str, upper: &str) -> bool {
        match (self.index.get(lower), self.index.get(upper)) {
            (Some(&l), Some(&u)) => self.below[u].contains(&l),
            _ => false,
        }
    }

    /// Singular strata sorted by ascending dimension, ties by name: a
    /// canonical linear extension of the poset.
    pub fn default_linear_extension(&self) -> Vec<String> {
        let mut names: Vec<&Stratum> =
            self.strata.iter().filter(|s| s.is_singular).collect();
        names.sort_by_key(|s| (s.dim, s.name.clone()));
        names.into_iter().map(|s| s.name.clone()).collect()
    }

    fn refuse_nontrivial_monodromy(&self) -> Result<(), StrataError> {
        if self.monodromy_trivial {
            Ok(())
        } else {
            Err(StrataError::NontrivialMonodromy)
        }
    }

    /// chi_y of the reduced total cohomology of the transversal Milnor
    /// fiber of a singular stratum.
    fn chi_reduced_total_of(&self, s: &Stratum) -> Result<LaurentPoly, StrataError> {
        if let Some(sp) = &s.milnor_spectrum {
            let chi = reduced_total_chi(sp).map_err(|e| StrataError::InvalidPoint {
                name: s.name.clone(),
                reason: e.to_string(),
            })?;
            return Ok(chi.value);
        }
        s.chi_reduced_total
            .clone()
            .ok_or_else(|| StrataError::MissingMilnorData {
                name: s.name.clone(),
            })
    }
}

/// Degree-zero Milnor-Hirzebruch class of a hypersurface with isolated
/// singularities: the sum over singular points of
/// `(-1)^n chi_y([reduced middle cohomology of the Milnor fiber])` times
/// the point class.
pub fn mt_class_isolated(points: &[(String, Spectrum)]) -> Result<StratifiedClass, StrataError> {
    let mut out = StratifiedClass::zero();
    let mut expected: Option<u32> = None;
    for (name, sp) in points {
        match expected {
            None => expected = Some(sp.num_vars()),
            Some(m) if m != sp.num_vars() => {
                return Err(StrataError::MismatchedNumVars {
                    name: name.clone(),
                    expected: m,
                    found: sp.num_vars(),
                });
            }
            _ => {}
        }
        let chi = reduced_total_chi(sp).map_err(|e| StrataError::InvalidPoint {
            name: name.clone(),
            reason: e.to_string(),
        })?;
        out = &out + &StratifiedClass::monomial(name.clone(), chi.value);
    }
    Ok(out)
}

/// Milnor-Hirzebruch class of a hypersurface whose singular locus is a
/// single smooth closed simply-connected stratum of dimension `r` inside an
/// `n`-dimensional hypersurface:
/// `(-1)^{n-r} chi_y([H^{n-r}(transversal Milnor fiber)]) * T_sigma`.
pub fn mt_class_smooth_locus(
    transversal: &Spectrum,
    n: i64,
    r: i64,
    t_sigma: &StratifiedClass,
) -> Result<StratifiedClass, StrataError> {
    if r < 0 || r >= n {
        return Err(StrataError::DimensionMismatch {
            reason: format!("singular locus dimension {r} must satisfy 0 <= r < n = {n}"),
        });
    }
    if i64::from(transversal.num_vars()) != n - r + 1 {
        return Err(StrataError::DimensionMismatch {
            reason: format!(
                "transversal spectrum has {} variables, expected n - r + 1 = {}",
                transversal.num_vars(),
                n - r + 1
            ),
        });
    }
    if t_sigma.is_zero() {
        return Err(StrataError::EmptySupport { what: "T_sigma" });
    }
    let chi = crate::invariants::chi_y_of_spectrum(transversal).value;
    let signed = if (n - r) % 2 == 0 { chi } else { -&chi };
    Ok(t_sigma.scale(&signed))
}

/// Milnor-Hirzebruch class as the weighted sum over singular strata
/// `sum_V (T_y(closure V) - T_y(boundary V)) * chi_y([reduced total])`.
pub fn mt_class_stratified(s: &Stratification) -> Result<StratifiedClass, StrataError> {
    s.refuse_nontrivial_monodromy()?;
    let mut out = StratifiedClass::zero();
    for st in s.strata().iter().filter(|st| st.is_singular) {
        let t_cl = st.t_closure.as_ref().ok_or(StrataError::MissingTClass {
            name: st.name.clone(),
            which: "T_closure",
        })?;
        let t_bd = st.t_boundary.as_ref().ok_or(StrataError::MissingTClass {
            name: st.name.clone(),
            which: "T_boundary",
        })?;
        let chi = s.chi_reduced_total_of(st)?;
        out = &out + &(t_cl - t_bd).scale(&chi);
    }
    Ok(out)
}

/// The inductively corrected `IT_y` classes
/// `IThat(V) = IT_y(closure V) - sum_{W < V} IThat(W) * Ichi_y(cone link of W in closure V)`,
/// evaluated over all singular strata in the canonical linear extension.
pub fn it_hat_classes(
    s: &Stratification,
) -> Result<BTreeMap<String, StratifiedClass>, StrataError> {
    let order = s.default_linear_extension();
    it_hat_in_sequence(s, &order)
}

/// Same recursion following a caller-chosen linear extension of the poset;
/// the result does not depend on the extension.
pub fn it_hat_classes_with_order(
    s: &Stratification,
    order: &[String],
) -> Result<BTreeMap<String, StratifiedClass>, StrataError> {
    let canonical: BTreeSet<String> = s.default_linear_extension().into_iter().collect();
    let supplied: BTreeSet<String> = order.iter().cloned().collect();
    if supplied.len() != order.len() || canonical != supplied {
        return Err(StrataError::NotLinearExtension {
            reason: "order must list every singular stratum exactly once".into(),
        });
    }
    let position: BTreeMap<&String, usize> =
        order.iter().enumerate().map(|(i, n)| (n, i)).collect();
    for upper in order {
        let ui = s.index[upper.as_str()];
        for &wi in &s.below[ui] {
            let wname = &s.strata[wi].name;
            if position[wname] >= position[upper] {
                return Err(StrataError::NotLinearExtension {
                    reason: format!("{wname} < {upper} but {wname} is listed later"),
                });
            }
        }
    }
    it_hat_in_sequence(s, order)
}

fn it_hat_in_sequence(
    s: &Stratification,
    order: &[String],
) -> Result<BTreeMap<String, StratifiedClass>, StrataError> {
    s.refuse_nontrivial_monodromy()?;
    let mut hats: BTreeMap<String, StratifiedClass> = BTreeMap::new();
    for name in order {
        let vi = s.index[name.as_str()];
        let st = &s.strata[vi];
        let mut acc = st
            .it_closure
            .clone()
            .ok_or_else(|| StrataError::MissingItClass { name: name.clone() })?;
        for &wi in &s.below[vi] {
            let wname = &s.strata[wi].name;
            let chi = st.ih_cone_link_chi.get(wname).ok_or_else(|| {
                StrataError::MissingLinkData {
                    lower: wname.clone(),
                    upper: name.clone(),
                }
            })?;
            acc = &acc - &hats[wname].scale(chi);
        }
        hats.insert(name.clone(), acc);
    }
    Ok(hats)
}

/// Milnor-Hirzebruch class as the intersection-corrected sum
/// `sum_V IThat(V) * chi_y([reduced total])`.
pub fn mt_class_stratified_ic(s: &Stratification) -> Result<StratifiedClass, StrataError> {
    let hats = it_hat_classes(s)?;
    let mut out = StratifiedClass::zero();
    for st in s.strata().iter().filter(|st| st.is_singular) {
        let chi = s.chi_reduced_total_of(st)?;
        out = &out + &hats[&st.name].scale(&chi);
    }
    Ok(out)
}

/// The difference `T_y(X) - IT_y(X)` expressed through the singular strata:
/// `sum_V IThat(V) * (1 - Ichi_y(cone link of V in X))`.
pub fn t_minus_it_class(s: &Stratification) -> Result<StratifiedClass, StrataError> {
    let hats = it_hat_classes(s)?;
    let one = LaurentPoly::one();
    let mut out = StratifiedClass::zero();
    for st in s.strata().iter().filter(|st| st.is_singular) {
        let link = st
            .ih_cone_link_in_x
            .as_ref()
            .ok_or_else(|| StrataError::MissingLinkInX {
                name: st.name.clone(),
            })?;
        out = &out + &hats[&st.name].scale(&(&one - link));
    }
    Ok(out)
}

/// Degree-zero intersection Milnor-Hirzebruch class for isolated
/// singularities: at each point,
/// `chi_y([H^*(F_x)]) - Ichi_y(cone link of x in X)`.
pub fn mit_class_isolated(
    points: &[(String, Spectrum, LaurentPoly)],
) -> Result<StratifiedClass, StrataError> {
    let mut out = StratifiedClass::zero();
    let mut expected: Option<u32> = None;
    for (name, sp, ih_chi) in points {
        match expected {
            None => expected = Some(sp.num_vars()),
            Some(m) if m != sp.num_vars() => {
                return Err(StrataError::MismatchedNumVars {
                    name: name.clone(),
                    expected: m,
                    found: sp.num_vars(),
                });
            }
            _ => {}
        }
        let total = crate::invariants::total_chi(sp).map_err(|e| StrataError::InvalidPoint {
            name: name.clone(),
            reason: e.to_string(),
        })?;
        out = &out + &StratifiedClass::monomial(name.clone(), &total.value - ih_chi);
    }
    Ok(out)
}

/// Intersection Milnor-Hirzebruch class as the T-weighted sum
/// `sum_V (T_y(closure) - T_y(boundary)) * (chi_y([H^*(F_v)]) - Ichi_y(cone link of V in X))`.
pub fn mit_class_stratified(s: &Stratification) -> Result<StratifiedClass, StrataError> {
    s.refuse_nontrivial_monodromy()?;
    let one = LaurentPoly::one();
    let mut out = StratifiedClass::zero();
    for st in s.strata().iter().filter(|st| st.is_singular) {
        let t_cl = st.t_closure.as_ref().ok_or(StrataError::MissingTClass {
            name: st.name.clone(),
            which: "T_closure",
        })?;
        let t_bd = st.t_boundary.as_ref().ok_or(StrataError::MissingTClass {
            name: st.name.clone(),
            which: "T_boundary",
        })?;
        let link = st
            .ih_cone_link_in_x
            .as_ref()
            .ok_or_else(|| StrataError::MissingLinkInX {
                name: st.name.clone(),
            })?;
        let total = &(&one + &s.chi_reduced_total_of(st)?) - link;
        out = &out + &(t_cl - t_bd).scale(&total);
    }
    Ok(out)
}

/// Intersection Milnor-Hirzebruch class with `IThat` weights:
/// `sum_V IThat(V) * (chi_y([H^*(F_v)]) - Ichi_y(cone link of V in X))`.
pub fn mit_class_stratified_ic(s: &Stratification) -> Result<StratifiedClass, StrataError> {
    let hats = it_hat_classes(s)?;
    let one = LaurentPoly::one();
    let mut out = StratifiedClass::zero();
    for st in s.strata().iter().filter(|st| st.is_singular) {
        let link = st
            .ih_cone_link_in_x
            .as_ref()
            .ok_or_else(|| StrataError::MissingLinkInX {
                name: st.name.clone(),
            })?;
        let total = &(&one + &s.chi_reduced_total_of(st)?) - link;
        out = &out + &hats[&st.name].scale(&total);
    }
    Ok(out)
}

/// The two-sided check of the Moebius-type inversion: reconstructs every
/// `IT_y(closure V)` from the hat classes as
/// `sum_{W <= V} IThat(W) * Ichi_y(cone link)`, with the convention that
/// the cone link of `V` in its own closure contributes 1.
pub fn moebius_identity_holds(s: &Stratification) -> Result<bool, StrataError> {
    let hats = it_hat_classes(s)?;
    for st in s.strata().iter().filter(|st| st.is_singular) {
        let vi = s.index[st.name.as_str()];
        let mut acc = hats[&st.name].clone();
        for &wi in &s.below[vi] {
            let wname = &s.strata[wi].name;
            let chi = st.ih_cone_link_chi.get(wname).ok_or_else(|| {
                StrataError::MissingLinkData {
                    lower: wname.clone(),
                    upper: st.name.clone(),
                }
            })?;
            acc = &acc + &hats[wname].scale(chi);
        }
        let declared = st
            .it_closure
            .clone()
            .ok_or_else(|| StrataError::MissingItClass {
                name: st.name.clone(),
            })?;
        if acc != declared {
            return Ok(false);
        }
    }
    Ok(true)
}
