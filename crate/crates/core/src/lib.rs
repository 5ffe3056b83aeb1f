//! Tensors as adjoint operators in graded extensions of sl(n) by exterior powers.
//!
//! Rank profiles, trace powers, characteristic polynomials and Jordan data of
//! `ad_T = [T, .]` are orbit invariants of `T`; this crate computes them exactly
//! over Q or modulo a prime.

pub mod algebra;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod profiles;
pub mod tensor_io;

pub use error::{Error, Result};
