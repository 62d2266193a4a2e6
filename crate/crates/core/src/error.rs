use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// The variants are grouped so that the CLI can map them onto its exit
/// codes: argument and regime problems are validation failures, while
/// [`Error::Consistency`] means a structural theorem check did not hold.
#[derive(Debug, Error)]
pub enum Error {
    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("value out of range: {0}")]
    Range(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("not a clique: {0}")]
    NotAClique(String),

    #[error("degenerate regime: {0}")]
    Regime(String),

    #[error("size cap exceeded: {what} has {count} vertices, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        count: u64,
        cap: u64,
    },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
