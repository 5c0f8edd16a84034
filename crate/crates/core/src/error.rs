use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the library.
///
/// Variants split into three families that the command-line front end maps to
/// exit codes: malformed input (`Parse`, `Validation`, ...), requests the
/// kernel refuses (`TooLarge`, `NotSquare`, ...) and internal consistency
/// failures (`ComplexInconsistent`), which indicate a bug rather than bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid pargraph: {0}")]
    Validation(String),

    #[error("vertex {vertex} is not in the parset")]
    Domain { vertex: usize },

    #[error("divisor is not effective off the sink block (vertex {vertex} has {value} chips)")]
    NotEffective { vertex: usize, value: i64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },

    #[error("instance too large: {what} ({size} exceeds limit {limit})")]
    TooLarge { what: &'static str, size: u128, limit: u128 },

    #[error("graph has parallel edges ({i}-{j} has multiplicity {mult})")]
    NotSimple { i: usize, j: usize, mult: u32 },

    #[error("alternative graph does not share the Laplacian lattice: block {block} differs")]
    HypothesisViolated { block: usize },

    #[error("value does not fit in a machine word: {0}")]
    Overflow(String),

    #[error("internal consistency failure: {0}")]
    ComplexInconsistent(String),
}

impl Error {
    /// Stable short code used in structured error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Validation(_) => "validation",
            Error::Domain { .. } => "domain",
            Error::NotEffective { .. } => "not_effective",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NotSquare { .. } => "not_square",
            Error::TooLarge { .. } => "too_large",
            Error::NotSimple { .. } => "not_simple",
            Error::HypothesisViolated { .. } => "hypothesis_violated",
            Error::Overflow(_) => "overflow",
            Error::ComplexInconsistent(_) => "complex_inconsistent",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::ComplexInconsistent(_) | Error::Overflow(_))
    }
}
