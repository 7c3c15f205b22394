use thiserror::Error;

/// Errors raised by symbol construction, evaluation and table handling.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("spin argument {index} is negative (doubled value {twice})")]
    NegativeSpin { index: usize, twice: i64 },

    /// A quadrangle/triangle difference `q_k - p_i` is negative (1-based indices).
    #[error("triangle condition violated: q{k} - p{i} < 0")]
    InvalidTriangle { k: usize, i: usize },

    #[error("triangle p{i} is half-integer; standard symbols need integer triangles")]
    HalfIntegerTriangle { i: usize },

    #[error("symbol does not have beta parity")]
    NotBeta,

    #[error("Regge index {0} out of range 1..=5")]
    BadKappa(usize),

    /// An identity that must hold for every valid input failed.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
