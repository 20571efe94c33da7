use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("division by zero in field arithmetic")]
    DivisionByZero,

    #[error("2cos(pi/{m}) does not lie in the field of order parameter {l}")]
    NotEmbeddable { m: u32, l: u32 },

    #[error("group did not close within the element bound {bound}")]
    BoundExceeded { bound: usize },

    #[error("element id {0} is not in the group table")]
    NotInTable(u32),

    #[error("left operand does not divide right operand")]
    NotBelow,

    #[error("matrix is not of irreducible spherical type: {0}")]
    NotIrreducibleSpherical(String),

    #[error("invalid generator-to-symmetry assignment: {0}")]
    InvalidBraceSpec(String),

    #[error("not a group table: {0}")]
    NotAGroup(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
