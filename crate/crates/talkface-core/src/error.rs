//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("audio error: {0}")]
    Audio(String),

    #[error("corpus error: {0}")]
    Corpus(String),

    #[error("{component} is non-finite at step {step}")]
    NonFiniteLoss { component: String, step: usize },

    #[error("fingerprint mismatch: checkpoint was trained against corpus {expected}, configured corpus is {got}")]
    FingerprintMismatch { expected: String, got: String },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("unavailable: {0}")]
    Unavailable(String),

    #[error("training error: {0}")]
    Training(String),

    #[error("restoration hook error: {0}")]
    Hook(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Candle(#[from] candle_core::Error),

    #[error("wav error: {0}")]
    Wav(#[from] hound::Error),

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn shape(expected: impl Into<String>, got: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            expected: expected.into(),
            got: got.into(),
        }
    }
}
