//! Color analysis toolkit for painting images.
//!
//! The pipeline embeds an RGB image into quaternion space, enhances it in
//! the frequency domain by alpha-rooting the right-side 2-D quaternion DFT,
//! scores candidates with block-contrast and color-ratio measures, and
//! corrects palettes toward metallic-mean proportions.
//!
//! Entry points:
//!
//! * [`alpha::alpha_root`] / [`alpha::sweep`] — enhancement and best-alpha
//!   selection
//! * [`measures`] — EMEC/EMEQ block contrast, log-deviation channel
//!   measures, color ratio
//! * [`palette`] — ratio catalog, gold-proportion tests, CMCR correction
//! * [`qdft`] — the transforms themselves (naive reference + fast path)

pub mod alpha;
pub mod color_image;
pub mod error;
pub mod io;
pub mod measures;
pub mod palette;
pub mod qdft;
pub mod quat;

pub use alpha::{alpha_root, alpha_scale, sweep, AlphaGrid, AlphaSweepResult, Criterion};
pub use color_image::{ColorImage, QuaternionImage, RealPart};
pub use error::{Error, Result};
pub use measures::{MeasureConfig, MeasureRecord};
pub use palette::RatioCatalog;
pub use qdft::QSpectrum;
pub use quat::Quaternion;
