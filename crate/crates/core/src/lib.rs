//! Exact computations with strata of meromorphic quadratic differentials.
//!
//! A stratum `Q(k_1, ..., k_n)` is described by its [`SingularityPattern`]:
//! the orders of the zeros (`k >= 1`), simple poles (`k = -1`) and marked
//! points (`k = 0`) of the differential. This crate provides
//!
//! * numerical invariants of strata (genus, dimension, emptiness) and the
//!   connected-component classification ([`strata`]);
//! * combinatorial types of ramified coverings, the induced maps between
//!   strata, and an exhaustive search for dimension-preserving coverings
//!   ([`covering`]);
//! * explicit half-translation surfaces glued from polygons, with cone
//!   angles, genus, holonomy and branched double covers ([`flat`]).
//!
//! The integer-valued parts of the crate work with `i64` orders. Flat
//! surfaces are generic over the coordinate type through [`Scalar`]; the
//! aliases below fix the two instantiations used in practice.

pub mod covering;
pub mod error;
pub mod flat;
pub mod pattern;
pub mod scalar;
pub mod strata;

pub use error::{CoveringError, PatternError, StrataError, SurfaceError};
pub use pattern::SingularityPattern;
pub use scalar::Scalar;
pub use strata::{ComponentReport, Stratum};

/// Exact rational coordinates, the default for surfaces read from files.
pub type Rational = num_rational::BigRational;

/// Machine-word rational coordinates.
pub type SmallRational = num_rational::Ratio<i64>;

/// A flat surface with exact rational edge vectors.
pub type Surface = flat::FlatSurface<Rational>;

/// A flat surface with floating point edge vectors.
pub type SurfaceF64 = flat::FlatSurface<f64>;
