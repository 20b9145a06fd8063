use thiserror::Error;

/// Errors raised by contract violations anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series of order {have} is too short, need order {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("cannot differentiate a series of order 0")]
    DerivativeOfConstant,
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
    #[error("not a delta series: {0}")]
    NotDelta(&'static str),
    #[error("exponential needs a zero constant term")]
    NonzeroConstantTerm,
    #[error("kernel has {have} entries, need {need}")]
    LengthMismatch { have: usize, need: usize },
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family:?}: missing parameter {param:?}")]
    MissingParam { family: String, param: String },
    #[error("family {family:?}: unexpected parameter {param:?}")]
    UnexpectedParam { family: String, param: String },
    #[error("family {family:?}: {reason}")]
    InvalidParam { family: String, reason: String },
    #[error("associated sequence required (l = 1)")]
    NotAssociated,
    #[error("internal contract violated: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
