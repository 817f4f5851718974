//! Image file decode/encode: reads 8-bit PNG and JPEG, writes PNG.

use std::path::Path;

use image::{DynamicImage, ImageBuffer, Rgb};

use crate::color_image::ColorImage;
use crate::error::{Error, Result};

/// A decoded image plus decode metadata the caller may want to report.
#[derive(Debug)]
pub struct LoadedImage {
    pub image: ColorImage,
    /// True when the source carried an alpha channel that was dropped.
    pub alpha_dropped: bool,
}

/// Decodes a PNG or JPEG file into a [`ColorImage`]. Alpha channels are
/// dropped; 8-bit channel values convert losslessly to reals.
pub fn load_image(path: &Path) -> Result<LoadedImage> {
    let dynamic = image::open(path).map_err(|source| Error::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let alpha_dropped = dynamic.color().has_alpha();
    let rgb = dynamic.to_rgb8();
    let (width, height) = rgb.dimensions();
    let pixels = rgb
        .pixels()
        .map(|p| [p.0[0] as f64, p.0[1] as f64, p.0[2] as f64])
        .collect();
    let image = ColorImage::new(height as usize, width as usize, pixels)?;
    Ok(LoadedImage {
        image,
        alpha_dropped,
    })
}

/// Encodes an image as 8-bit RGB PNG, quantizing with round-half-away.
pub fn save_png(img: &ColorImage, path: &Path) -> Result<()> {
    let buffer: ImageBuffer<Rgb<u8>, Vec<u8>> =
        ImageBuffer::from_raw(img.width() as u32, img.height() as u32, img.to_rgb8())
            .expect("pixel buffer matches image dimensions");
    DynamicImage::ImageRgb8(buffer)
        .save_with_format(path, image::ImageFormat::Png)
        .map_err(|source| Error::Write {
            path: path.to_path_buf(),
            source,
        })
}
