use thiserror::Error;

/// Errors produced by the forecasting engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series too short: need at least {needed} observations, got {got}")]
    TooShort { needed: usize, got: usize },

    #[error("series has zero variance")]
    ZeroVariance,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("expected {expected} leading values for undifferencing, got {got}")]
    HeadLength { expected: usize, got: usize },

    #[error("singular regression matrix")]
    Singular,

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("parameters violate stationarity/invertibility: {0}")]
    InvalidParameters(String),

    #[error("no candidate model converged")]
    NoConvergedCandidate,

    #[error("candidate grid has {count} models (limit {limit}); pass force to override")]
    GridTooLarge { count: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
