use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The point count is not admissible for a Steiner triple system.
    #[error("bad order: n = {0} is not congruent to 1 or 3 mod 6 (or n < 3)")]
    BadOrder(usize),
    /// Some pair of points appears in no triple.
    #[error("pair {{{0},{1}}} is not covered by any triple")]
    PairUncovered(u32, u32),
    /// Some pair of points appears in more than one triple.
    #[error("pair {{{0},{1}}} is covered by more than one triple")]
    PairDoubleCovered(u32, u32),
    /// A triple with repeated or out-of-range points.
    #[error("malformed triple [{0},{1},{2}]")]
    MalformedTriple(u32, u32, u32),
    /// Orientation enumeration would exceed the configured cap.
    #[error("too many triples: {count} > cap {max} (2^{count} orientations)")]
    TooManyTriples { count: usize, max: usize },
    /// Unrecognized builtin model name.
    #[error("unknown model: {0}")]
    UnknownModel(String),
    /// Text or JSON input that does not match the grammar.
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    /// Automorphism search disabled or over the configured caps.
    #[error("degree too large: n = {n} exceeds cap {max}")]
    DegreeTooLarge { n: usize, max: usize },
    /// Permutation degree does not match the structure acted on.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    /// Vector or matrix dimensions do not match.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    /// An operation that requires a nonzero vector received zero.
    #[error("zero vector")]
    ZeroVector,
    /// Float input with NaN or infinite entries.
    #[error("non-finite entries in float input")]
    NonFinite,
    /// Conjugacy test invoked on element sets that are not subgroups of the ambient group.
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    /// Input matrix fails the skew-symmetry tolerance.
    #[error("matrix is not skew-symmetric (relative deviation {0:.3e})")]
    NotSkewSymmetric(f64),
    /// Eigenvalue clustering is ambiguous at the configured tolerance.
    #[error("degenerate spectrum: cluster separation {0:.3e} is ambiguous")]
    DegenerateSpectrum(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
