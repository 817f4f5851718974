//! Metallic-mean ratio catalog, gold-proportion tests, and color-ratio
//! correction (CMCR: color modeling via color ratio).
//!
//! CMCR forces each pixel's descending-sorted channel triple `(x, y, z)`
//! into a geometric progression `x/y = y/z` by rewriting only the smallest
//! channel, then restores the original channel order.

use crate::color_image::ColorImage;
use crate::error::{Error, Result};
use crate::measures::{self, MeasureConfig};

/// Default guard added to ratio numerators/denominators; matches
/// [`MeasureConfig::default`]'s `eps_cr`.
pub const DEFAULT_RATIO_EPS: f64 = 0.001;

/// The golden ratio `(1 + sqrt 5) / 2`.
pub fn golden_ratio() -> f64 {
    (1.0 + 5.0_f64.sqrt()) / 2.0
}

/// Square root of the golden ratio, the per-step factor of a golden
/// three-channel progression (~1.2720).
pub fn golden_phi() -> f64 {
    golden_ratio().sqrt()
}

/// Named proportion constants plus per-artist color-ratio estimates.
#[derive(Debug, Clone)]
pub struct RatioCatalog {
    entries: Vec<(&'static str, f64)>,
    artists: Vec<(&'static str, f64)>,
}

impl Default for RatioCatalog {
    fn default() -> Self {
        Self::standard()
    }
}

impl RatioCatalog {
    /// The standard catalog. Values follow the defining formulas:
    /// Silver `1 + sqrt 2`, Bronze `(3 + sqrt 13) / 2`, Nickel
    /// `1 + sqrt 13` (~4.6056; occasionally misprinted as 5.6055).
    pub fn standard() -> Self {
        Self {
            entries: vec![
                ("Aesthetic", 1.322),
                ("Golden", golden_ratio()),
                ("Copper", 2.0),
                ("Silver", 1.0 + 2.0_f64.sqrt()),
                ("Bronze", (3.0 + 13.0_f64.sqrt()) / 2.0),
                ("Nickel", 1.0 + 13.0_f64.sqrt()),
            ],
            artists: vec![
                ("Da Vinci", 1.46),
                ("Picasso", 1.49),
                ("van Gogh", 1.38),
                ("Raphael", 1.61),
                ("Rembrandt", 1.65),
            ],
        }
    }

    /// Catalog constants, ascending by value.
    pub fn entries(&self) -> &[(&'static str, f64)] {
        &self.entries
    }

    /// Reference color-ratio estimates per painter.
    pub fn artist_ratios(&self) -> &[(&'static str, f64)] {
        &self.artists
    }

    /// Nearest catalog constant by absolute difference; exact ties go to
    /// the smaller constant.
    pub fn classify(&self, value: f64) -> &'static str {
        let mut best = self.entries[0];
        for &(name, v) in &self.entries[1..] {
            if (value - v).abs() < (value - best.1).abs() {
                best = (name, v);
            }
        }
        best.0
    }
}

/// Sorts a channel triple descending, returning the values and the channel
/// indices they came from. The sort is stable with priority r, then g,
/// then b, so equal channels un-permute deterministically.
fn sort_channels_desc(px: [f64; 3]) -> ([f64; 3], [usize; 3]) {
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&a, &b| px[b].partial_cmp(&px[a]).expect("finite channels"));
    ([px[idx[0]], px[idx[1]], px[idx[2]]], idx)
}

/// True when the pixel is proportional to `(psi, sqrt psi, 1)` with psi the
/// golden ratio, in any channel order, within relative tolerance `tol` per
/// coordinate. Scale-invariant: the smallest channel (floored at `eps`)
/// normalizes the triple.
pub fn is_golden(pixel: [f64; 3], tol: f64) -> bool {
    is_golden_eps(pixel, tol, DEFAULT_RATIO_EPS)
}

pub fn is_golden_eps(pixel: [f64; 3], tol: f64, eps: f64) -> bool {
    let ([x, y, z], _) = sort_channels_desc(pixel);
    let base = z.max(eps);
    let psi = golden_ratio();
    let phi = golden_phi();
    (x / base - psi).abs() <= tol * psi && (y / base - phi).abs() <= tol * phi
}

/// Corrects each pixel to its own ratio: with `(x, y, z)` sorted descending
/// and `psi = (x + eps) / (y + eps)`, the smallest channel becomes
/// `y / psi`, making the triple a geometric progression. Idempotent, never
/// increases a channel, and preserves the two largest channels.
pub fn cmcr_self(img: &ColorImage) -> ColorImage {
    cmcr_self_eps(img, DEFAULT_RATIO_EPS)
}

pub fn cmcr_self_eps(img: &ColorImage, eps: f64) -> ColorImage {
    map_sorted(img, |[x, y, _]| {
        let psi = (x + eps) / (y + eps);
        [x, y, y / psi]
    })
}

/// Corrects each pixel toward a fixed target ratio: keeps the two largest
/// channels and sets the smallest to `y / psi_target`. Rejects targets
/// below 1.
pub fn cmcr_target(img: &ColorImage, psi_target: f64) -> Result<ColorImage> {
    if !(psi_target >= 1.0) {
        return Err(Error::TargetRatioBelowOne(psi_target));
    }
    Ok(map_sorted(img, |[x, y, _]| [x, y, y / psi_target]))
}

fn map_sorted(img: &ColorImage, f: impl Fn([f64; 3]) -> [f64; 3]) -> ColorImage {
    let pixels = img
        .pixels()
        .iter()
        .map(|&px| {
            let (sorted, idx) = sort_channels_desc(px);
            let new = f(sorted);
            let mut out = [0.0; 3];
            for slot in 0..3 {
                out[idx[slot]] = new[slot].clamp(0.0, 255.0);
            }
            out
        })
        .collect();
    ColorImage::new(img.height(), img.width(), pixels).expect("corrected channels stay in range")
}

/// Mean color ratio over a collection of images; rejects empty input.
pub fn artist_ratio<'a, I>(images: I, cfg: &MeasureConfig) -> Result<f64>
where
    I: IntoIterator<Item = &'a ColorImage>,
{
    let mut total = 0.0;
    let mut count = 0usize;
    for img in images {
        total += measures::cr(img, cfg);
        count += 1;
    }
    if count == 0 {
        return Err(Error::EmptyCollection);
    }
    Ok(total / count as f64)
}
