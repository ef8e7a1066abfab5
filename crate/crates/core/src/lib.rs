//! Exact-arithmetic library for linear and spin characters of the symmetric
//! groups.
//!
//! The crate computes irreducible characters χ^λ(π) and spin characters
//! X^ξ(π), their Kerov–Olshanski normalizations Ch_π and Ch^spin_π, Schur
//! and Schur P/Q-functions in the power-sum basis, coloring counts and the
//! linear/spin Stanley character formulas, polygon-gluing map enumeration,
//! and an exhaustive verification harness for the identities connecting all
//! of the above. Every numeric path uses arbitrary-precision integers or
//! rationals; results are exact.

pub mod characters;
pub mod combinat;
pub mod error;
pub mod maps;
pub mod stanley;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
