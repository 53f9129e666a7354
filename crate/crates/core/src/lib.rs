//! Exact enumeration of rhombus tilings of punctured hexagons, and exact
//! verification of the Schur function and Pfaffian identities that count them.
//!
//! The arithmetic is generic over [`scalar::Scalar`] / [`scalar::Field`], so
//! the same routines run on `f32`/`f64` and on exact big rationals. Counts are
//! always returned as [`ExactInt`].

pub mod boxcount;
pub mod combinat;
pub mod error;
pub mod matrix;
pub mod msf;
pub mod partition;
pub mod sampling;
pub mod scalar;
pub mod symfun;
pub mod tiling;

/// Arbitrary-precision integer used for exact counts.
pub type ExactInt = num_bigint::BigInt;
/// Exact rational in lowest terms.
pub type ExactRational = num_rational::BigRational;
/// Dense matrix over exact rationals.
pub type ExactMatrix = matrix::Matrix<ExactRational>;
/// Skew-symmetric matrix over exact rationals.
pub type ExactSkewMatrix = matrix::SkewMatrix<ExactRational>;
/// Evaluation point with exact rational coordinates.
pub type ExactPoint = symfun::EvalPoint<ExactRational>;
/// Dense matrix over `f64`.
pub type FloatMatrix = matrix::Matrix<f64>;

pub use boxcount::{macmahon_box, theorem1_count, theorem4_count, BoxDims};
pub use error::{Error, Result};
pub use matrix::{determinant, pfaffian, pfaffian_minor, Matrix, SkewMatrix};
pub use partition::Partition;
pub use symfun::{schur_bidet, schur_nk, EvalPoint};
pub use tiling::{count_via_path_determinants, enumerate_tilings, PuncturedHexagon};
