//! Exact arithmetic for monomial fractional ideals of numerical semigroup
//! rings `k[[t^{a₁},…,t^{aₙ}]]`, with trace and reflexivity tests and
//! exhaustive theorem checks over small semigroups.
//!
//! A monomial ideal is determined by its value set `v(I) = {r : t^r ∈ I}`,
//! so everything here reduces to arithmetic on cofinite integer sets.
//!
//! ```
//! use semitrace::{NumericalSemigroup, ValueIdeal};
//!
//! let ring = NumericalSemigroup::new(&[7, 8, 9, 11]).unwrap();
//! let i = ValueIdeal::from_exponents(&ring, &[8, 9, 21]).unwrap();
//! assert!(i.is_reflexive());
//! assert!(!i.trace_ideal().is_reflexive());
//! ```

pub mod error;
pub mod ideal;
pub mod report;
pub mod semigroup;
pub mod trace;
pub mod valueset;
pub mod verifier;

pub use error::{Error, Result};
pub use ideal::ValueIdeal;
pub use report::{IdealReport, ProfileReport, SemigroupReport};
pub use semigroup::{
    enumerate_semigroups, enumerate_semigroups_with, parse_exponents, Limits, NumericalSemigroup,
    SemigroupTree,
};
pub use trace::{ExtensionRing, IdealProfile, PartialTrace};
pub use valueset::ValueSet;
