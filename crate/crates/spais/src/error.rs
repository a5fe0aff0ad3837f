//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A sampler or environment was combined with data of the wrong dimension.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// The environment produced a non-finite state; the run aborts rather than
    /// clamping silently.
    #[error("dynamics blow-up in environment '{env}' at step {step}: non-finite state")]
    DynamicsBlowUp { env: String, step: usize },

    /// Invalid configuration value.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An estimate was requested from an empty sample buffer.
    #[error("cannot estimate from an empty buffer")]
    EmptyBuffer,

    /// The training loss became non-finite; adaptation cannot continue.
    #[error("non-finite loss at iteration {iteration}")]
    NonFiniteLoss { iteration: usize },

    /// Pretraining did not reach the required fit quality.
    #[error("pretraining failed: {0}")]
    Pretrain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed JSON in {context}: {source}")]
    Json {
        context: String,
        source: serde_json::Error,
    },
}

impl Error {
    pub fn json(context: impl Into<String>, source: serde_json::Error) -> Self {
        Error::Json {
            context: context.into(),
            source,
        }
    }
}
