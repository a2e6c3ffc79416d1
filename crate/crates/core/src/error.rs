use thiserror::Error;

/// Errors surfaced by library operations.
///
/// Guarded exhaustive searches reject inputs past their documented limits
/// with `TooLarge` rather than running forever; construction-specific
/// failure modes carry their own variants so callers can react (e.g. retry
/// a stabbing construction with a larger dimension on `NoProgress`).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("TooSmall: {0}")]
    TooSmall(String),
    #[error("NeedsDedup: operation requires pairwise-distinct hyperedges")]
    NeedsDedup,
    #[error("DomainError: {0}")]
    Domain(String),
    #[error("BadDimension: {0}")]
    BadDimension(String),
    #[error("NoProgress: no stabbing pair found at dimension {d}; retry with a larger dimension")]
    NoProgress { d: usize },
    #[error("GaveUp: random construction failed verification after {rounds} rounds")]
    GaveUp { rounds: usize },
    #[error("WrongDimension: {0}")]
    WrongDimension(String),
    #[error("SizeExceeded: {0}")]
    SizeExceeded(String),
    #[error("Infeasible: {0}")]
    Infeasible(String),
    #[error("TooFewPoints: {0}")]
    TooFewPoints(String),
    #[error("BadInput: {0}")]
    BadInput(String),
    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// Stable short name, used by the CLI when reporting failures.
    pub fn name(&self) -> &'static str {
        match self {
            Error::TooLarge(_) => "TooLarge",
            Error::TooSmall(_) => "TooSmall",
            Error::NeedsDedup => "NeedsDedup",
            Error::Domain(_) => "DomainError",
            Error::BadDimension(_) => "BadDimension",
            Error::NoProgress { .. } => "NoProgress",
            Error::GaveUp { .. } => "GaveUp",
            Error::WrongDimension(_) => "WrongDimension",
            Error::SizeExceeded(_) => "SizeExceeded",
            Error::Infeasible(_) => "Infeasible",
            Error::TooFewPoints(_) => "TooFewPoints",
            Error::BadInput(_) => "BadInput",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
