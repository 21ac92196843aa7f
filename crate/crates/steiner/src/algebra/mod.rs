//! The exact-arithmetic product algebra on R^S.
//!
//! Scalars are exact rationals throughout this module: the algebraic claims
//! are identities over Q, and exactness removes tolerance questions from
//! rank, kernel and zero-divisor logic. Floating arithmetic lives only in
//! the `dynamics` module.

mod axioms;
mod companion;
pub mod linalg;
pub mod poly;
mod product;
pub mod symbolic;
mod tables;
mod vector;

pub use axioms::{check_cross_axioms, CrossAxiomReport, NormIdentity};
pub use companion::{companion_matrix, is_zero_divisor, CompanionMatrix, ZeroDivisorReport};
pub use product::{
    orthogonality_defect, product_table, product_via_trace, steiner_product, ProductTable,
    SignedBasis,
};
pub use tables::{multiplication_table_check, DivisionTable};
pub use vector::{
    format_rational, inner_product, lift_automorphism, parse_vector, rational_to_f64, DesignVector,
    Scalar,
};
