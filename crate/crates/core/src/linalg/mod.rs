//! Exact scalars, matrices, block matrices and polynomials.

pub mod block;
pub mod charpoly;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use block::{pow_ranks, BlockLayout, BlockMatrix, PowerRow, PowerSweep, Terminal};
pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME, GAUSSIAN_PRIME};
pub use matrix::Matrix;
pub use poly::{discriminant, factor_small, Factorization, Poly, RootClass};
pub use scalar::Coeff;
