//! Right-side 2-D quaternion discrete Fourier transform.
//!
//! The forward transform of an `N x M` quaternion image `f(n, m)` is
//!
//! ```text
//! F(p, s) = sum_n ( sum_m f(n, m) * Wk^(m s) ) * Wj^(n p)
//! Wk^t = cos(2 pi t / M) - k sin(2 pi t / M)
//! Wj^t = cos(2 pi t / N) - j sin(2 pi t / N)
//! ```
//!
//! with both kernels multiplying the data on the right: first the `k`-axis
//! pass along rows, then the `j`-axis pass along columns. The kernel axes
//! do not commute, so both the side and the pass order are part of the
//! convention. For the same reason the inverse must undo the passes
//! last-in-first-out — the `j`-axis pass is removed first:
//!
//! ```text
//! f(n, m) = 1/(N M) * sum_s ( sum_p F(p, s) * Wj^(-n p) ) * Wk^(-m s)
//! ```
//!
//! Two implementations are provided and kept permanently:
//!
//! * [`forward_naive`] / [`inverse_naive`] evaluate the sums directly with
//!   quaternion products. They are the reference for the fast path and the
//!   anchor for the kernel-side and pass-order conventions.
//! * [`forward_fast`] / [`inverse_fast`] split each quaternion into two
//!   elements of the commutative plane spanned by `{1, axis}`, where
//!   right-multiplication by the kernel is ordinary complex multiplication;
//!   each pass then reduces to two batches of complex FFTs of arbitrary
//!   length.

use std::f64::consts::TAU;
use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::color_image::QuaternionImage;
use crate::quat::Quaternion;

/// Quaternion-valued 2-D spectrum, row-major over frequencies `(p, s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QSpectrum {
    height: usize,
    width: usize,
    data: Vec<Quaternion>,
}

impl QSpectrum {
    pub fn new(height: usize, width: usize, data: Vec<Quaternion>) -> Self {
        assert_eq!(data.len(), height * width);
        Self {
            height,
            width,
            data,
        }
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

    pub fn data_mut(&mut self) -> &mut [Quaternion] {
        &mut self.data
    }

    pub fn get(&self, p: usize, s: usize) -> Quaternion {
        self.data[p * self.width + s]
    }

    /// Total spectral energy `sum |F(p, s)|^2`.
    pub fn energy(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sq()).sum()
    }
}

/// `cos(sign * 2 pi t / len) - axis sin(sign * 2 pi t / len)` for `t = 0..len`.
fn kernel_table(axis: Quaternion, len: usize, sign: f64) -> Vec<Quaternion> {
    (0..len)
        .map(|t| {
            Quaternion::kernel(axis, sign * TAU * t as f64 / len as f64)
                .expect("axis constants are pure units")
        })
        .collect()
}

/// Direct evaluation of the forward transform. O(NM(N+M)); reference only.
pub fn forward_naive(img: &QuaternionImage) -> QSpectrum {
    let (n, m) = (img.height(), img.width());
    let wk = kernel_table(Quaternion::K, m, 1.0);
    let wj = kernel_table(Quaternion::J, n, 1.0);

    // Row pass: G(n, s) = sum_m f(n, m) * Wk^(m s).
    let mut stage = vec![Quaternion::ZERO; n * m];
    for row in 0..n {
        for s in 0..m {
            let mut acc = Quaternion::ZERO;
            for col in 0..m {
                acc = acc + img.get(row, col) * wk[(col * s) % m];
            }
            stage[row * m + s] = acc;
        }
    }

    // Column pass: F(p, s) = sum_n G(n, s) * Wj^(n p).
    let mut out = vec![Quaternion::ZERO; n * m];
    for p in 0..n {
        for s in 0..m {
            let mut acc = Quaternion::ZERO;
            for row in 0..n {
                acc = acc + stage[row * m + s] * wj[(row * p) % n];
            }
            out[p * m + s] = acc;
        }
    }
    QSpectrum::new(n, m, out)
}

/// Direct evaluation of the inverse transform (with the 1/NM factor).
/// Undoes the column pass first, then the row pass.
pub fn inverse_naive(spec: &QSpectrum) -> QuaternionImage {
    let (n, m) = (spec.height(), spec.width());
    let wk = kernel_table(Quaternion::K, m, -1.0);
    let wj = kernel_table(Quaternion::J, n, -1.0);

    // Undo the j-axis column pass: H(n, s) = sum_p F(p, s) * Wj^(-n p).
    let mut stage = vec![Quaternion::ZERO; n * m];
    for row in 0..n {
        for s in 0..m {
            let mut acc = Quaternion::ZERO;
            for p in 0..n {
                acc = acc + spec.get(p, s) * wj[(p * row) % n];
            }
            stage[row * m + s] = acc;
        }
    }

    // Undo the k-axis row pass and normalize.
    let scale = 1.0 / (n as f64 * m as f64);
    let mut out = vec![Quaternion::ZERO; n * m];
    for row in 0..n {
        for col in 0..m {
            let mut acc = Quaternion::ZERO;
            for s in 0..m {
                acc = acc + stage[row * m + s] * wk[(s * col) % m];
            }
            out[row * m + col] = acc.scale(scale);
        }
    }
    QuaternionImage::new(n, m, out).expect("dimensions preserved")
}

/// Right-multiplies every row by the `k`-axis kernels via two complex FFT
/// batches: `w + xi + yj + zk = (w + zk) + i (x - yk)` maps to the complex
/// pair `a = w + iz`, `b = x - iy`, on which the kernel acts as ordinary
/// complex multiplication.
fn pass_k_rows(
    height: usize,
    width: usize,
    data: &[Quaternion],
    fft: &Arc<dyn Fft<f64>>,
) -> Vec<Quaternion> {
    let mut a: Vec<Complex64> = data.iter().map(|q| Complex64::new(q.w, q.z)).collect();
    let mut b: Vec<Complex64> = data.iter().map(|q| Complex64::new(q.x, -q.y)).collect();
    let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
    for row in a.chunks_exact_mut(width) {
        fft.process_with_scratch(row, &mut scratch);
    }
    for row in b.chunks_exact_mut(width) {
        fft.process_with_scratch(row, &mut scratch);
    }
    (0..height * width)
        .map(|i| Quaternion::new(a[i].re, b[i].re, -b[i].im, a[i].im))
        .collect()
}

/// Right-multiplies every column by the `j`-axis kernels; the commutative
/// split here is `(w + yj) + i (x + zj)`, i.e. `c = w + iy`, `d = x + iz`.
/// Columns are gathered into transposed planes so the FFT runs contiguous.
fn pass_j_cols(
    height: usize,
    width: usize,
    data: &[Quaternion],
    fft: &Arc<dyn Fft<f64>>,
) -> Vec<Quaternion> {
    let mut c = vec![Complex64::default(); height * width];
    let mut d = vec![Complex64::default(); height * width];
    for row in 0..height {
        for col in 0..width {
            let q = data[row * width + col];
            c[col * height + row] = Complex64::new(q.w, q.y);
            d[col * height + row] = Complex64::new(q.x, q.z);
        }
    }
    let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
    for col in c.chunks_exact_mut(height) {
        fft.process_with_scratch(col, &mut scratch);
    }
    for col in d.chunks_exact_mut(height) {
        fft.process_with_scratch(col, &mut scratch);
    }
    let mut out = vec![Quaternion::ZERO; height * width];
    for row in 0..height {
        for col in 0..width {
            let cv = c[col * height + row];
            let dv = d[col * height + row];
            out[row * width + col] = Quaternion::new(cv.re, dv.re, cv.im, dv.im);
        }
    }
    out
}

/// Fast forward transform; agrees with [`forward_naive`] to rounding error.
pub fn forward_fast(img: &QuaternionImage) -> QSpectrum {
    let (n, m) = (img.height(), img.width());
    let mut planner = FftPlanner::<f64>::new();
    let row_fft = planner.plan_fft_forward(m);
    let col_fft = planner.plan_fft_forward(n);
    let stage = pass_k_rows(n, m, img.data(), &row_fft);
    let data = pass_j_cols(n, m, &stage, &col_fft);
    QSpectrum::new(n, m, data)
}

/// Fast inverse transform; agrees with [`inverse_naive`] to rounding error.
pub fn inverse_fast(spec: &QSpectrum) -> QuaternionImage {
    let (n, m) = (spec.height(), spec.width());
    let mut planner = FftPlanner::<f64>::new();
    let col_fft = planner.plan_fft_inverse(n);
    let row_fft = planner.plan_fft_inverse(m);
    let stage = pass_j_cols(n, m, spec.data(), &col_fft);
    let mut data = pass_k_rows(n, m, &stage, &row_fft);
    let scale = 1.0 / (n as f64 * m as f64);
    for q in &mut data {
        *q = q.scale(scale);
    }
    QuaternionImage::new(n, m, data).expect("dimensions preserved")
}
