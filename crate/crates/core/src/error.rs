use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse grouping used by the command line to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Bounds,
    Verification,
    Other,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("closure exceeded the bound of {bound} elements")]
    ClosureBoundExceeded { bound: usize },

    #[error("{what}: size {size} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("search exceeded its bound: {0}")]
    SearchBoundExceeded(String),

    #[error("time limit exceeded during {0}")]
    TimeLimitExceeded(&'static str),

    #[error("group is not abelian")]
    NotAbelian,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not a VZ-group")]
    NotVZ,

    #[error("group is not a Camina p-group of class 3: {0}")]
    NotCaminaClass3(String),

    #[error("failed to align a basis of the center with the derived subgroup")]
    AlignmentFailure,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{k} is not coprime to {n}")]
    NotCoprime { k: i64, n: u32 },

    #[error("value is not rational: {0}")]
    NotRational(String),

    #[error("character lifting failed: {0}")]
    LiftingFailure(String),

    #[error("Schur indices unknown for this group")]
    SchurIndicesUnknown,

    #[error("character table check failed: {0}")]
    TableInvariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown {kind} '{name}'")]
    UnknownStrategy { kind: &'static str, name: String },

    #[error("strategy '{0}' does not apply to this group")]
    NotApplicable(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse(_)
            | Error::InvalidPermutation(_)
            | Error::UnknownStrategy { .. }
            | Error::Io { .. } => ErrorClass::Parse,
            Error::ClosureBoundExceeded { .. }
            | Error::BoundExceeded { .. }
            | Error::SearchBoundExceeded(_)
            | Error::TimeLimitExceeded(_) => ErrorClass::Bounds,
            Error::NotCaminaClass3(_)
            | Error::AlignmentFailure
            | Error::LiftingFailure(_)
            | Error::TableInvariant(_) => ErrorClass::Verification,
            _ => ErrorClass::Other,
        }
    }
}
