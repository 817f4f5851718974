//! Scalar quality and color-ratio measures.
//!
//! Block measures (`emec`, `emeq`) average the channel range of `L x L`
//! blocks in log scale; the log-deviation measures (`m1`..`m3`) relate
//! channel pairs pixelwise; `cr` is the mean largest-to-middle channel
//! ratio. All guards are configurable through [`MeasureConfig`].

use serde::{Deserialize, Serialize};

use crate::color_image::{ColorImage, QuaternionImage};
use crate::error::{Error, Result};
use crate::palette;

/// Guard constants and block size shared by the measures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureConfig {
    /// Side length `L` of the square analysis blocks.
    pub block_size: usize,
    /// Epsilon added to the denominator of the log-deviation ratios.
    pub eps_denominator: f64,
    /// Floor applied to channel values before any base-10 logarithm.
    pub eps_log: f64,
    /// Epsilon added to block max and min before their ratio.
    pub eps_block: f64,
    /// Epsilon added to the sorted channels before the color ratio.
    pub eps_cr: f64,
}

impl Default for MeasureConfig {
    fn default() -> Self {
        Self {
            block_size: 7,
            eps_denominator: 0.001,
            eps_log: 0.1,
            eps_block: 0.001,
            eps_cr: 0.001,
        }
    }
}

impl MeasureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.block_size < 1 {
            return Err(Error::InvalidMeasureConfig(
                "block size must be at least 1".into(),
            ));
        }
        for (name, v) in [
            ("eps-denominator", self.eps_denominator),
            ("eps-log", self.eps_log),
            ("eps-block", self.eps_block),
            ("eps-cr", self.eps_cr),
        ] {
            if !(v > 0.0) {
                return Err(Error::InvalidMeasureConfig(format!(
                    "{name} must be positive (got {v})"
                )));
            }
        }
        Ok(())
    }
}

/// One table row: every measure of a single (possibly alpha-rooted) image.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureRecord {
    pub alpha: f64,
    pub cr: f64,
    pub m1: f64,
    pub m2: f64,
    pub m3: f64,
    pub m: f64,
    pub emec: f64,
    pub emec2: f64,
}

impl MeasureRecord {
    /// Evaluates every measure of `img`, tagging the row with `alpha`.
    pub fn compute(img: &ColorImage, alpha: f64, cfg: &MeasureConfig) -> Result<Self> {
        let m1 = m1(img, cfg);
        let m2 = m2(img, cfg);
        let m3 = m3(img, cfg);
        Ok(Self {
            alpha,
            cr: cr(img, cfg),
            m1,
            m2,
            m3,
            m: m_geo(m1, m2, m3),
            emec: emec(img, cfg)?,
            emec2: emec2(img, cfg)?,
        })
    }
}

fn check_block_fit(height: usize, width: usize, cfg: &MeasureConfig) -> Result<()> {
    cfg.validate()?;
    if height < cfg.block_size || width < cfg.block_size {
        return Err(Error::ImageSmallerThanBlock {
            height,
            width,
            block: cfg.block_size,
        });
    }
    Ok(())
}

fn block_log_range_mean(
    height: usize,
    width: usize,
    cfg: &MeasureConfig,
    mut block_min_max: impl FnMut(usize, usize) -> (f64, f64),
) -> f64 {
    let l = cfg.block_size;
    let (k1, k2) = (height / l, width / l);
    let mut total = 0.0;
    for bi in 0..k1 {
        for bj in 0..k2 {
            let (bmin, bmax) = block_min_max(bi * l, bj * l);
            total += 20.0 * ((bmax + cfg.eps_block) / (bmin + cfg.eps_block)).log10();
        }
    }
    total / (k1 * k2) as f64
}

/// Mean log channel range over full blocks, max/min taken component-wise
/// over r, g, b. Trailing partial blocks are ignored. Errors when the image
/// is smaller than a single block.
pub fn emec(img: &ColorImage, cfg: &MeasureConfig) -> Result<f64> {
    check_block_fit(img.height(), img.width(), cfg)?;
    let l = cfg.block_size;
    Ok(block_log_range_mean(
        img.height(),
        img.width(),
        cfg,
        |r0, c0| {
            let mut bmin = f64::INFINITY;
            let mut bmax = f64::NEG_INFINITY;
            for r in r0..r0 + l {
                for c in c0..c0 + l {
                    for v in img.pixel(r, c) {
                        bmin = bmin.min(v);
                        bmax = bmax.max(v);
                    }
                }
            }
            (bmin, bmax)
        },
    ))
}

/// [`emec`] extended to all four quaternion components per block.
pub fn emeq(qimg: &QuaternionImage, cfg: &MeasureConfig) -> Result<f64> {
    check_block_fit(qimg.height(), qimg.width(), cfg)?;
    let l = cfg.block_size;
    Ok(block_log_range_mean(
        qimg.height(),
        qimg.width(),
        cfg,
        |r0, c0| {
            let mut bmin = f64::INFINITY;
            let mut bmax = f64::NEG_INFINITY;
            for r in r0..r0 + l {
                for c in c0..c0 + l {
                    let q = qimg.get(r, c);
                    for v in [q.w, q.x, q.y, q.z] {
                        bmin = bmin.min(v);
                        bmax = bmax.max(v);
                    }
                }
            }
            (bmin, bmax)
        },
    ))
}

/// Shared evaluator for the pairwise log-deviation measures: channel
/// indices `ca` over `cb`, values floored at `eps_log` before every log
/// (the channel means included).
fn log_deviation_ratio(img: &ColorImage, ca: usize, cb: usize, cfg: &MeasureConfig) -> f64 {
    let floor = cfg.eps_log;
    let count = (img.height() * img.width()) as f64;

    let mut sum_a = 0.0;
    let mut sum_b = 0.0;
    for px in img.pixels() {
        sum_a += px[ca].max(floor);
        sum_b += px[cb].max(floor);
    }
    let log_mean_a = (sum_a / count).log10();
    let log_mean_b = (sum_b / count).log10();

    let mut total = 0.0;
    for px in img.pixels() {
        let num = px[ca].max(floor).log10() - log_mean_a;
        let den = px[cb].max(floor).log10() - log_mean_b + cfg.eps_denominator;
        total += num / den;
    }
    total / count
}

/// Red-to-blue log-deviation measure.
pub fn m1(img: &ColorImage, cfg: &MeasureConfig) -> f64 {
    log_deviation_ratio(img, 0, 2, cfg)
}

/// Green-to-blue log-deviation measure.
pub fn m2(img: &ColorImage, cfg: &MeasureConfig) -> f64 {
    log_deviation_ratio(img, 1, 2, cfg)
}

/// Blue-to-red log-deviation measure.
pub fn m3(img: &ColorImage, cfg: &MeasureConfig) -> f64 {
    log_deviation_ratio(img, 2, 0, cfg)
}

/// Sign-preserving real cube root of the product `m1 * m2 * m3`.
pub fn m_geo(m1: f64, m2: f64, m3: f64) -> f64 {
    (m1 * m2 * m3).cbrt()
}

/// Mean color ratio: per pixel the largest channel over the middle one,
/// both guarded by `eps_cr`, averaged over the image. Always at least 1.
pub fn cr(img: &ColorImage, cfg: &MeasureConfig) -> f64 {
    let mut total = 0.0;
    for px in img.pixels() {
        let [x, y, _] = sorted_desc(*px);
        total += (x + cfg.eps_cr) / (y + cfg.eps_cr);
    }
    total / (img.height() * img.width()) as f64
}

/// [`emec`] of the image after correcting every pixel's smallest channel to
/// the image's own mean color ratio.
pub fn emec2(img: &ColorImage, cfg: &MeasureConfig) -> Result<f64> {
    let corrected = palette::cmcr_target(img, cr(img, cfg))?;
    emec(&corrected, cfg)
}

pub(crate) fn sorted_desc(px: [f64; 3]) -> [f64; 3] {
    let mut t = px;
    if t[0] < t[1] {
        t.swap(0, 1);
    }
    if t[1] < t[2] {
        t.swap(1, 2);
    }
    if t[0] < t[1] {
        t.swap(0, 1);
    }
    t
}
