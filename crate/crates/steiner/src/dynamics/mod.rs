//! Floating-point dynamics of the iterated left-product map L_w.

mod iterate;
mod spectral;
mod verify;

pub use iterate::{
    float_companion, iterate_l, rank_growth, rank_growth_float, IterationTrace, RankGrowth,
};
pub use spectral::{decompose, skew_block_diagonalize, SkewSpectrum, SpectralDecomposition};

/// Euclidean norm of a float vector.
pub fn vector_norm(v: &[f64]) -> f64 {
    spectral::norm(v)
}

/// Frobenius norm of a float matrix.
pub fn frobenius_norm(m: &[Vec<f64>]) -> f64 {
    spectral::frobenius(m)
}
pub use verify::{verify_thmdyn, ThmdynCheck, ThmdynReport};

/// Tolerances for the float paths. All relative to the Frobenius norm of
/// the matrix (or the norm of the vector) they gate, and overridable from
/// the command line.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    pub skew: f64,
    pub orth: f64,
    pub block: f64,
    pub cluster: f64,
    pub zero: f64,
    pub rank: f64,
    pub limit: f64,
    pub cycle: f64,
    pub cesaro: f64,
    pub subspace: f64,
}

impl Default for Tolerances {
    fn default() -> Tolerances {
        Tolerances {
            skew: 1e-10,
            orth: 1e-10,
            block: 1e-10,
            cluster: 1e-8,
            zero: 1e-9,
            rank: 1e-8,
            limit: 1e-8,
            cycle: 1e-8,
            cesaro: 1e-6,
            subspace: 1e-7,
        }
    }
}
