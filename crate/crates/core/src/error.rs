use thiserror::Error;

/// Errors raised by the domain operations.
///
/// The `Display` text of every variant starts with the variant name so the CLI can
/// surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("EmptyInput: {0}")]
    EmptyInput(&'static str),

    #[error("NonPositiveError: {0}")]
    NonPositive(String),

    #[error("DegenerateTriangle: sides ({a}, {b}, {c}) violate the strict triangle inequality")]
    DegenerateTriangle { a: String, b: String, c: String },

    #[error("ParityError: {0}")]
    Parity(String),

    #[error("DivisibilityError: {0}")]
    Divisibility(String),

    #[error("RangeError: {0}")]
    Range(String),

    #[error("NotASolution: {0}")]
    NotASolution(String),

    #[error("ScaleParityError: {0}")]
    ScaleParity(String),

    #[error("NonPrimitiveError: {0}")]
    NonPrimitive(String),

    #[error("IrrationalAreaError: triangle ({a}, {b}, {c}) has irrational area")]
    IrrationalArea { a: String, b: String, c: String },

    #[error("InvariantError: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
