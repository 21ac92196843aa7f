//! Oriented Steiner triple systems and their induced product algebra.
//!
//! A Steiner triple system on n points carries, for each of the two cyclic
//! orders on each triple, an anticommutative bilinear product on R^n. This
//! crate provides:
//!
//! - [`design`]: systems, orientations, validation, enumeration, builtins,
//!   and text/JSON forms;
//! - [`group`]: automorphism groups, orbit classification of orientations,
//!   isomorphism testing, and finite-group fingerprints;
//! - [`algebra`]: the induced product over exact rationals, companion
//!   matrices, zero-divisors, and cross-product axiom checks by full
//!   symbolic expansion;
//! - [`dynamics`]: floating-point analysis of the iterated left-product map,
//!   rank plateaus, and the skew-symmetric spectral form.

pub mod algebra;
pub mod design;
pub mod dynamics;
mod error;
pub mod group;
pub mod sampling;

pub use error::{Error, Result};
