use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("group or coefficient-domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("incompatible field tower: {0}")]
    IncompatibleTower(String),

    #[error("coefficient is not {l}-integral at {witness}")]
    NonIntegral { l: u64, witness: String },

    #[error("character does not factor through the group: {0}")]
    CharacterNotDefined(String),

    #[error("degenerate character in Jacobi-sum factor: {0}")]
    DegenerateCharacter(String),

    #[error("non-simple root: derivative vanishes mod p")]
    NonSimpleRoot,

    #[error("linear system infeasible over Z; enlarge the candidate set")]
    Infeasible,

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("internal cross-check failed: {0}")]
    CrossCheckFailed(String),

    #[error("check not applicable: {0}")]
    Inapplicable(String),

    #[error("normalization failed: {0}")]
    NormalizationFailed(String),

    #[error("cache i/o: {0}")]
    Cache(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
