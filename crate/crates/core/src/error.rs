use thiserror::Error;

/// Errors raised by the numerical kernel and the model layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("overflow in {func}: {detail}")]
    Overflow { func: &'static str, detail: String },

    #[error("singularity in {func} at {at}")]
    Singular { func: &'static str, at: f64 },

    #[error("non-finite integrand value {value} at node {node}")]
    NonFinite { node: f64, value: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            func,
            detail: detail.into(),
        }
    }

    pub(crate) fn overflow(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Overflow {
            func,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
