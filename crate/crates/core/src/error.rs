use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("image dimensions must be at least 1x1 (got {height}x{width})")]
    EmptyImage { height: usize, width: usize },

    #[error("pixel buffer holds {actual} pixels, expected {expected}")]
    PixelCountMismatch { expected: usize, actual: usize },

    #[error("channel value {value} at pixel ({row}, {col}) outside [0, 255]")]
    ChannelOutOfRange { row: usize, col: usize, value: f64 },

    #[error("kernel axis must be a pure unit quaternion")]
    NonUnitAxis,

    #[error("alpha {0} outside (0, 1]")]
    AlphaOutOfRange(f64),

    #[error("invalid alpha grid: {0}")]
    InvalidGrid(String),

    #[error("invalid measure config: {0}")]
    InvalidMeasureConfig(String),

    #[error("image {height}x{width} is smaller than one {block}x{block} block")]
    ImageSmallerThanBlock {
        height: usize,
        width: usize,
        block: usize,
    },

    #[error("target ratio {0} must be at least 1")]
    TargetRatioBelowOne(f64),

    #[error("empty image collection")]
    EmptyCollection,

    #[error("no finite criterion value in sweep")]
    NonFiniteCriterion,

    #[error("failed to read {path}: {source}")]
    Read {
        path: PathBuf,
        source: image::ImageError,
    },

    #[error("failed to write {path}: {source}")]
    Write {
        path: PathBuf,
        source: image::ImageError,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
