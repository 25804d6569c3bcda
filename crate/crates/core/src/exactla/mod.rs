//! Exact integer and rational linear algebra.
//!
//! Row-vector convention: vectors are rows, matrices act on the right.

mod matrix;
mod normal_form;
mod ratmat;

pub use matrix::{dot, ivec, IntMatrix};
pub use normal_form::{
    hnf, kernel_basis, row_lattice_basis, saturate, saturation_index, snf, sublattice_index,
    SnfResult,
};
pub use ratmat::{rat, rvec, RatMatrix};

use crate::error::{Error, Result};

/// Rational coordinates `C` with `C·basis = rows`. Errors when some row is
/// outside the rational span of `basis`. `basis` rows must be independent.
pub fn rational_coords(rows: &IntMatrix, basis: &IntMatrix) -> Result<RatMatrix> {
    if basis.rows() == 0 {
        if rows.is_zero() {
            return Ok(RatMatrix::zeros(rows.rows(), 0));
        }
        return Err(Error::Dimension("vector outside the span".into()));
    }
    let b = RatMatrix::from_int(basis);
    let bt = b.transpose();
    let gram_inv = b
        .mul(&bt)
        .inverse()
        .ok_or(Error::DependentRows)?;
    let c = RatMatrix::from_int(rows).mul(&bt).mul(&gram_inv);
    if c.mul(&b) != RatMatrix::from_int(rows) {
        return Err(Error::Dimension("vector outside the span".into()));
    }
    Ok(c)
}

/// Integer coordinates `C` with `C·basis = rows`; errors unless they exist.
pub fn solve_rows_in_basis(rows: &IntMatrix, basis: &IntMatrix) -> Result<IntMatrix> {
    rational_coords(rows, basis)?
        .to_int()
        .ok_or_else(|| Error::Dimension("vector not in the integer span".into()))
}
