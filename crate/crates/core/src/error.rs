use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("rank {rank} exceeds the bound {bound}")]
    RankTooLarge { rank: usize, bound: usize },
    #[error("parameter function is not W-invariant: {0}")]
    NotInvariant(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("spectrum is not contained in iZ or matrix is not semisimple")]
    BadSpectrum,
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
