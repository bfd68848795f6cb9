use thiserror::Error;

/// Precondition violations raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension must be at least {min}, got {got}")]
    AmbientDimension { min: u32, got: u32 },

    #[error("codimension {codim} outside 1..={ambient}")]
    Codimension { codim: u32, ambient: u32 },

    #[error("multiplicity must be at least 1, got {0}")]
    Multiplicity(i64),

    #[error("parameter k must be at least 3, got {0}")]
    FamilyParameter(i64),

    #[error("Veneroni transform needs {expected} multiplicities in P^{ambient}, got {got}")]
    FlatCount {
        ambient: u32,
        expected: usize,
        got: usize,
    },

    #[error("invalid range: {0}")]
    Range(String),

    #[error("oracle input beyond desk scale: {0}")]
    DeskScale(String),

    #[error("oracle modulus {prime} unusable: {reason}")]
    Modulus { prime: u64, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
