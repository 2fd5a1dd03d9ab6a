//! Exact counting of knot mosaics.
//!
//! A knot `(m,n)`-mosaic is an `m x n` grid of the eleven mosaic tiles whose
//! neighbors agree on every shared edge and which has no connection point on
//! the outer boundary. This crate counts them with state matrices, either
//! densely ([`transfer::count_dense`]) or by a matrix-free operator
//! ([`xfree::count_matrixfree`]), and cross-checks both against brute-force
//! enumeration ([`oracle`]).
//!
//! The algebra is generic over any [`Natural`] scalar. The aliases below fix
//! it to arbitrary-precision integers, which is what every count beyond the
//! smallest sizes needs.

pub mod error;
pub mod matrix;
pub mod mosaic;
pub mod oracle;
pub mod render;
pub mod scalar;
pub mod state;
pub mod tile;
pub mod transfer;
pub mod xfree;

use num_bigint::BigUint;

pub use error::{BudgetExceeded, Error, Result};
pub use matrix::{MatrixKind, StateMatrix};
pub use mosaic::Mosaic;
pub use oracle::{EnumBudget, Tally};
pub use scalar::Natural;
pub use state::BoundaryState;
pub use tile::{ConnectionSide, Sides, Tile};
pub use transfer::SplitPair;
pub use xfree::{CountVector, OpCounts};

/// Exact count carrier.
pub type Count = BigUint;
pub type BigStateMatrix = StateMatrix<BigUint>;
pub type BigSplitPair = SplitPair<BigUint>;
pub type BigCountVector = CountVector<BigUint>;

/// Number of knot `(m,n)`-mosaics via the dense engine.
pub fn count_dense(m: usize, n: usize) -> Result<Count> {
    transfer::count_dense(m, n)
}

/// Number of knot `(m,n)`-mosaics via the matrix-free engine.
pub fn count_matrixfree(m: usize, n: usize) -> Result<Count> {
    xfree::count_matrixfree(m, n)
}
