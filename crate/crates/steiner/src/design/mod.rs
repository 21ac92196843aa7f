//! Steiner triple systems, their orientations, and serialization.

pub mod builtin;
mod enumerate;
pub mod parse;
mod system;
mod triple;

pub use builtin::{builtin_model, builtin_names, reference_models, BuiltinModel};
pub use enumerate::{
    enumerate_orientations, enumerate_orientations_capped, orientation_from_mask, Orientations,
    DEFAULT_MAX_TRIPLES,
};
pub use system::{validate_sts, OrientationFunction, OrientedSts, SteinerTripleSystem};
pub use triple::{canonical_rotation, OrientedTriple, Point, Triple};
