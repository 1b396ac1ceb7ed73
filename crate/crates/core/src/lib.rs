//! Exact invariants of superelliptic jacobians `J(C)` for curves
//! `C: y^q = f(x)` with `q = p^r` coprime to `n = deg f`.
//!
//! Everything is computed with exact rational arithmetic. The modules
//! cover the differential basis and eigenvalue spectrum of the order-`q`
//! automorphism, the cyclotomic decomposition of the jacobian and the
//! predicted endomorphism algebras, the CM obstructions, Galois
//! classification of cubics and quartics, j-invariants, the permutation
//! heart module, and the two-chart projective model.

pub mod algebra;
pub mod cm_obstruction;
pub mod curve_model;
pub mod decomposition;
pub mod differentials;
pub mod elliptic;
pub mod error;
pub mod galois;
pub mod heart;
pub mod verify;

pub use error::{Error, Result};
