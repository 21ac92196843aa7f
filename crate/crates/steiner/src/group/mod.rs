//! Automorphism groups and the orbit classification of orientations.

mod aut;
mod classify;
#[allow(clippy::module_inception)]
mod group;
mod perm;
mod profile;

pub use aut::{apply, oriented_aut_group, permutes_triples, sts_aut_group, AutOptions};
pub use classify::{
    are_isomorphic, are_isomorphic_in, classify_orientations, is_reflexive, reverse_orientation,
    ClassificationReport, ClassifyOptions, OrientationClass,
};
pub use group::{are_conjugate_subgroups, PermutationGroup};
pub use perm::Permutation;
pub use profile::{profile_group, SubgroupProfile};
