//! Audio-driven talking face generation on a deterministic synthetic corpus.
//!
//! The pipeline: synthesize a cartoon audio-visual corpus, train a two-tower
//! sync scorer on it, pre-train a silent-lip generator `G_S`, train the
//! talking-face generator `G_L` with stabilized synchronization and adaptive
//! triplet losses, then run inference and the seven-metric evaluation plus
//! the A–G ablation harness.

pub mod corpus;
pub mod error;
pub mod inference;
pub mod losses;
pub mod metrics;
pub mod nets;
pub mod nn;
pub mod seeds;
pub mod sync_scorer;
pub mod train;

pub use error::{Error, Result};

/// Crate version string, also exposed through the C ABI.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
