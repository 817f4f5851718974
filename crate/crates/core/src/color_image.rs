//! RGB image container and the quaternion embedding.
//!
//! Channel values live on the 0-255 scale as reals; quantization to 8-bit
//! happens only when an image is encoded to a file. A pixel `(r, g, b)`
//! embeds as `a + r*i + g*j + b*k`, where the real part `a` is selected by
//! [`RealPart`].

use crate::error::{Error, Result};
use crate::quat::Quaternion;

/// Choice of the real (scalar) part when embedding an RGB pixel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RealPart {
    /// Luma-style brightness `0.3 r + 0.59 g + 0.11 b`.
    #[default]
    Brightness,
    /// Real part fixed to zero.
    Zero,
    /// Plain channel average `(r + g + b) / 3`.
    GrayMean,
}

impl RealPart {
    pub fn apply(self, r: f64, g: f64, b: f64) -> f64 {
        match self {
            RealPart::Brightness => 0.3 * r + 0.59 * g + 0.11 * b,
            RealPart::Zero => 0.0,
            RealPart::GrayMean => (r + g + b) / 3.0,
        }
    }
}

/// An RGB image with real-valued channels on the 0-255 scale, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ColorImage {
    height: usize,
    width: usize,
    pixels: Vec<[f64; 3]>,
}

impl ColorImage {
    /// Builds an image, validating dimensions and the channel range.
    pub fn new(height: usize, width: usize, pixels: Vec<[f64; 3]>) -> Result<Self> {
        if height == 0 || width == 0 {
            return Err(Error::EmptyImage { height, width });
        }
        if pixels.len() != height * width {
            return Err(Error::PixelCountMismatch {
                expected: height * width,
                actual: pixels.len(),
            });
        }
        for (idx, px) in pixels.iter().enumerate() {
            for &v in px {
                if !(0.0..=255.0).contains(&v) {
                    return Err(Error::ChannelOutOfRange {
                        row: idx / width,
                        col: idx % width,
                        value: v,
                    });
                }
            }
        }
        Ok(Self {
            height,
            width,
            pixels,
        })
    }

    /// Builds an image from a per-pixel closure `(row, col) -> [r, g, b]`.
    pub fn from_fn(
        height: usize,
        width: usize,
        mut f: impl FnMut(usize, usize) -> [f64; 3],
    ) -> Result<Self> {
        let mut pixels = Vec::with_capacity(height * width);
        for n in 0..height {
            for m in 0..width {
                pixels.push(f(n, m));
            }
        }
        Self::new(height, width, pixels)
    }

    /// Constant image of the given color.
    pub fn constant(height: usize, width: usize, color: [f64; 3]) -> Result<Self> {
        Self::new(height, width, vec![color; height * width])
    }

    /// Internal constructor for pixels already known to be in range.
    pub(crate) fn from_clamped(height: usize, width: usize, pixels: Vec<[f64; 3]>) -> Self {
        debug_assert_eq!(pixels.len(), height * width);
        debug_assert!(pixels
            .iter()
            .all(|px| px.iter().all(|v| (0.0..=255.0).contains(v))));
        Self {
            height,
            width,
            pixels,
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pixels(&self) -> &[[f64; 3]] {
        &self.pixels
    }

    pub fn pixel(&self, row: usize, col: usize) -> [f64; 3] {
        self.pixels[row * self.width + col]
    }

    /// Embeds the image into quaternion space, the real part chosen by
    /// `mode` and `(x, y, z) = (r, g, b)`.
    pub fn to_quaternion(&self, mode: RealPart) -> QuaternionImage {
        let data = self
            .pixels
            .iter()
            .map(|&[r, g, b]| Quaternion::new(mode.apply(r, g, b), r, g, b))
            .collect();
        QuaternionImage {
            height: self.height,
            width: self.width,
            data,
        }
    }

    /// Quantizes to 8-bit RGB, rounding half away from zero.
    pub fn to_rgb8(&self) -> Vec<u8> {
        self.pixels
            .iter()
            .flat_map(|px| px.iter().map(|v| v.clamp(0.0, 255.0).round() as u8))
            .collect()
    }
}

/// A quaternion-valued image, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionImage {
    height: usize,
    width: usize,
    data: Vec<Quaternion>,
}

impl QuaternionImage {
    pub fn new(height: usize, width: usize, data: Vec<Quaternion>) -> Result<Self> {
        if height == 0 || width == 0 {
            return Err(Error::EmptyImage { height, width });
        }
        if data.len() != height * width {
            return Err(Error::PixelCountMismatch {
                expected: height * width,
                actual: data.len(),
            });
        }
        Ok(Self {
            height,
            width,
            data,
        })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn data(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> Quaternion {
        self.data[row * self.width + col]
    }

    /// Projects back to RGB: `(r, g, b)` from `(x, y, z)`, clamped to
    /// `[0, 255]`. The real part is dropped.
    pub fn to_color(&self) -> ColorImage {
        let pixels = self
            .data
            .iter()
            .map(|q| {
                [
                    q.x.clamp(0.0, 255.0),
                    q.y.clamp(0.0, 255.0),
                    q.z.clamp(0.0, 255.0),
                ]
            })
            .collect();
        ColorImage::from_clamped(self.height, self.width, pixels)
    }
}
