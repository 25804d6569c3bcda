//! Exact lattice toolkit: integral quadratic forms, root systems, Eisenstein
//! lattices, 1-cusp classification and Kulikov Picard lattices.

pub mod error;
pub mod exactla;
pub mod lattice;
pub mod roots;
pub mod eisenstein;
pub mod cusps;
pub mod kulikov;
pub mod expr;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
