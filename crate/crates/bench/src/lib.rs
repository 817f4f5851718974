//! Deterministic inputs shared by the benchmarks.

use qpaint_core::{ColorImage, Quaternion, QuaternionImage};

/// Smooth but non-constant RGB test card.
pub fn color_card(side: usize) -> ColorImage {
    ColorImage::from_fn(side, side, |n, m| {
        let t = (n as f64 * 0.05).sin() * (m as f64 * 0.03).cos();
        [
            120.0 + 60.0 * t,
            100.0 + 50.0 * (n as f64 * 0.021).sin(),
            80.0 + 40.0 * (m as f64 * 0.017).cos(),
        ]
    })
    .expect("card values stay in range")
}

/// Quaternion image with all four components exercised.
pub fn quaternion_card(n: usize, m: usize) -> QuaternionImage {
    let data = (0..n * m)
        .map(|i| {
            let t = i as f64 * 0.013;
            Quaternion::new(
                100.0 + 80.0 * t.sin(),
                90.0 + 70.0 * (1.7 * t).cos(),
                110.0 + 60.0 * (2.3 * t).sin(),
                70.0 + 50.0 * (0.9 * t).cos(),
            )
        })
        .collect();
    QuaternionImage::new(n, m, data).expect("dimensions match")
}
