use thiserror::Error;

/// Errors raised by the lattice toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rows are linearly dependent; not a sublattice basis")]
    DependentRows,
    #[error("degenerate form: radical has rank {radical_rank}")]
    Degenerate { radical_rank: usize },
    #[error("form is not definite")]
    Indefinite,
    #[error("rescale factor must be nonzero")]
    ZeroRescale,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("lattice is not {p}-elementary")]
    NotElementary { p: u32 },
    #[error("sublattice is not isotropic")]
    NotIsotropic,
    #[error("sublattice is not saturated; saturate it first")]
    NotSaturated,
    #[error("invalid glue: {0}")]
    InvalidGlue(String),
    #[error("matrix is not an isometry: pairing ({i},{j}) changes from {before} to {after}")]
    NotIsometry {
        i: usize,
        j: usize,
        before: String,
        after: String,
    },
    #[error("isometry order exceeds {bound}")]
    OrderTooLarge { bound: u32 },
    #[error("isometry has a nonzero fixed vector")]
    FixedVector,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
