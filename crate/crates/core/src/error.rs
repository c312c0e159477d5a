use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the domain of an operation (bad rank, bad partition, sup θ ≥ 1, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A computed quantity broke an invariant that the algorithms guarantee.
    #[error("internal consistency error: {0}")]
    Internal(String),
    /// A transition row failed to sum to one within tolerance.
    #[error("numerical consistency error: row of vertex {vertex} at level {level} sums to {sum:.15}")]
    RowSum { vertex: String, level: usize, sum: f64 },
    #[error("malformed input: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Domain(_) | Error::Json(_) => 1,
            Error::Internal(_) | Error::RowSum { .. } => 3,
        }
    }
}
