//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node count must be at least 1")]
    EmptyNodeSet,

    #[error("area side must be positive, got {0}")]
    NonPositiveArea(f64),

    #[error("unknown distribution `{0}` (expected random, normal, skewed or grid)")]
    UnknownDistribution(String),

    #[error("normal-channel range must be positive, got {0}")]
    NonPositiveRange(f64),

    #[error("path-loss exponent must lie in [1, 4], got {0}")]
    AlphaOutOfRange(f64),

    #[error("radii ratio must be greater than 1, got {0}")]
    RadiiRatioOutOfRange(f64),

    #[error("node position ({x}, {y}) lies outside the {side} m square")]
    PositionOutOfBounds { x: f64, y: f64, side: f64 },

    #[error("config line {line}: {msg}")]
    ConfigSyntax { line: usize, msg: String },

    #[error("unknown config key `{0}`")]
    UnknownKey(String),

    #[error("invalid value for key `{key}`: {msg}")]
    InvalidValue { key: String, msg: String },

    #[error("missing config key `{0}`")]
    MissingKey(&'static str),

    #[error(
        "aggregation needs one baseline per report (got {reports} reports, {baselines} baselines)"
    )]
    AggregationMismatch { reports: usize, baselines: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
