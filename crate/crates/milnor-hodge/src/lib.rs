//! Exact invariants of complex hypersurface singularities.
//!
//! The crate computes Hodge spectra of isolated hypersurface singularities,
//! their chi_y specializations, signatures and Hodge tables of the Milnor
//! fiber, degree-zero Milnor and intersection Milnor classes of stratified
//! hypersurfaces, and virtual chi_y invariants of projective hypersurfaces.
//! All arithmetic is exact, over arbitrary-precision rationals.
//!
//! The library is a set of pure functions over immutable values; nothing
//! here holds interior mutability, so all types can be shared freely across
//! threads.

pub mod cli;
pub mod invariants;
pub mod kernel;
pub mod projective;
pub mod schema;
pub mod spectrum;
pub mod strata;
pub mod verify;

pub use invariants::{ChiClass, ChiKind, HodgeEntry, HodgeTable};
pub use kernel::{FracPoly, LaurentPoly, Rational, TruncatedSeries};
pub use projective::ProjectiveHypersurface;
pub use spectrum::Spectrum;
pub use strata::{StratifiedClass, Stratification, Stratum};
