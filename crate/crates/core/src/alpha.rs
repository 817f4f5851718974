//! Alpha-rooting enhancement and best-alpha sweeps.
//!
//! Alpha-rooting scales every spectral coefficient so its modulus `|F|`
//! becomes `|F|^alpha` (`0 < alpha <= 1`) while keeping its direction,
//! then inverts the transform. Smaller alphas compress large magnitudes
//! harder, which lifts the relative weight of low-energy frequencies.

use rayon::prelude::*;

use crate::color_image::{ColorImage, RealPart};
use crate::error::{Error, Result};
use crate::measures::{self, MeasureConfig, MeasureRecord};
use crate::qdft::{self, QSpectrum};

/// Coefficients with modulus at or below this are left untouched by the
/// rooting: `|F|^(alpha-1)` diverges at zero while the coefficient itself
/// carries no energy.
pub const ZERO_MAGNITUDE_GUARD: f64 = 1e-12;

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    Ok(())
}

/// Scales each coefficient by `|F|^(alpha - 1)` so its modulus becomes
/// `|F|^alpha`. The DC coefficient is treated like any other.
pub fn alpha_scale(spec: &QSpectrum, alpha: f64) -> Result<QSpectrum> {
    check_alpha(alpha)?;
    let mut out = spec.clone();
    for q in out.data_mut() {
        let modulus = q.norm();
        if modulus > ZERO_MAGNITUDE_GUARD {
            *q = q.scale(modulus.powf(alpha - 1.0));
        }
    }
    Ok(out)
}

/// Full enhancement: embed, transform, root the magnitudes, invert, and
/// project back to RGB with clamping. `alpha = 1` reproduces the input up
/// to transform round-trip error.
pub fn alpha_root(img: &ColorImage, alpha: f64, mode: RealPart) -> Result<ColorImage> {
    let spectrum = qdft::forward_fast(&img.to_quaternion(mode));
    root_spectrum(&spectrum, alpha)
}

fn root_spectrum(spectrum: &QSpectrum, alpha: f64) -> Result<ColorImage> {
    let scaled = alpha_scale(spectrum, alpha)?;
    Ok(qdft::inverse_fast(&scaled).to_color())
}

/// Evenly spaced alpha grid `lo, lo + step, ..., hi` (the last point is
/// clamped onto `hi` so rounding never pushes it past the bound).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaGrid {
    lo: f64,
    hi: f64,
    step: f64,
}

impl AlphaGrid {
    pub fn new(lo: f64, step: f64, hi: f64) -> Result<Self> {
        if !(lo > 0.0 && lo <= hi && hi <= 1.0) {
            return Err(Error::InvalidGrid(format!(
                "bounds must satisfy 0 < lo <= hi <= 1 (got {lo}..{hi})"
            )));
        }
        if !(step > 0.0) {
            return Err(Error::InvalidGrid(format!("step must be positive (got {step})")));
        }
        Ok(Self { lo, hi, step })
    }

    /// Default grid for report tables: 0.80 to 1.00 in steps of 0.02
    /// (11 points).
    pub fn table_default() -> Self {
        Self::new(0.80, 0.02, 1.00).expect("constant grid is valid")
    }

    /// Default grid for best-alpha searches: 0.70 to 1.00 in steps of 0.01.
    pub fn search_default() -> Self {
        Self::new(0.70, 0.01, 1.00).expect("constant grid is valid")
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Materializes the strictly increasing grid points.
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| (self.lo + i as f64 * self.step).min(self.hi))
            .collect()
    }
}

/// Which measure a sweep maximizes when picking the best alpha.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Emeq,
    Emec,
    Cr,
    M,
}

impl Criterion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Criterion::Emeq => "EMEQ",
            Criterion::Emec => "EMEC",
            Criterion::Cr => "CR",
            Criterion::M => "M",
        }
    }
}

/// Result of a sweep: one record per alpha plus the selected best alpha.
#[derive(Debug, Clone)]
pub struct AlphaSweepResult {
    /// One record per grid point, in increasing alpha order.
    pub records: Vec<MeasureRecord>,
    /// Alpha of the record maximizing the criterion; ties go to the larger
    /// alpha.
    pub best_alpha: f64,
    pub criterion: Criterion,
}

/// Roots the image at every grid alpha and measures each result. The
/// forward transform is computed once and shared; alphas evaluate in
/// parallel, records assemble in grid order.
///
/// Measures are taken on the clamped RGB output of each rooting; for the
/// EMEQ criterion the rooted image is re-embedded with `mode`.
pub fn sweep(
    img: &ColorImage,
    grid: &AlphaGrid,
    criterion: Criterion,
    mode: RealPart,
    cfg: &MeasureConfig,
) -> Result<AlphaSweepResult> {
    cfg.validate()?;
    let alphas = grid.values();
    let spectrum = qdft::forward_fast(&img.to_quaternion(mode));

    let evaluated = alphas
        .par_iter()
        .map(|&alpha| {
            let rooted = root_spectrum(&spectrum, alpha)?;
            let record = MeasureRecord::compute(&rooted, alpha, cfg)?;
            let value = match criterion {
                Criterion::Emec => record.emec,
                Criterion::Cr => record.cr,
                Criterion::M => record.m,
                Criterion::Emeq => measures::emeq(&rooted.to_quaternion(mode), cfg)?,
            };
            Ok((record, value))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut best: Option<(f64, f64)> = None;
    for (record, value) in &evaluated {
        if !value.is_finite() {
            continue;
        }
        match best {
            Some((_, best_value)) if *value < best_value => {}
            _ => best = Some((record.alpha, *value)),
        }
    }
    let (best_alpha, _) = best.ok_or(Error::NonFiniteCriterion)?;

    Ok(AlphaSweepResult {
        records: evaluated.into_iter().map(|(r, _)| r).collect(),
        best_alpha,
        criterion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;

    fn test_image() -> ColorImage {
        ColorImage::from_fn(16, 16, |n, m| {
            let t = (n as f64 * 0.7 + m as f64 * 0.4).sin();
            [
                125.0 + 40.0 * t,
                110.0 + 30.0 * (n as f64 * 0.3).cos(),
                90.0 + 25.0 * (m as f64 * 0.5).sin(),
            ]
        })
        .unwrap()
    }

    #[test]
    fn alpha_one_is_identity_up_to_round_trip() {
        let img = test_image();
        let out = alpha_root(&img, 1.0, RealPart::Brightness).unwrap();
        for (a, b) in img.pixels().iter().zip(out.pixels()) {
            for ch in 0..3 {
                assert!(
                    (a[ch] - b[ch]).abs() < 1e-6,
                    "channel moved: {} vs {}",
                    a[ch],
                    b[ch]
                );
            }
        }
    }

    #[test]
    fn single_coefficient_scaling() {
        let q = Quaternion::new(1.2, -0.8, 1.0, 0.6);
        let coeff = q.scale(2.0 / q.norm());
        let mut data = vec![Quaternion::ZERO; 6];
        data[1] = coeff;
        let spec = QSpectrum::new(2, 3, data);
        let scaled = alpha_scale(&spec, 0.9).unwrap();
        assert!((scaled.get(0, 1).norm() - 2f64.powf(0.9)).abs() < 1e-12);
        assert_eq!(scaled.get(0, 0), Quaternion::ZERO);
    }

    #[test]
    fn zero_coefficients_pass_through() {
        let spec = QSpectrum::new(2, 2, vec![Quaternion::ZERO; 4]);
        let scaled = alpha_scale(&spec, 0.5).unwrap();
        assert!(scaled.data().iter().all(|q| *q == Quaternion::ZERO));
    }

    #[test]
    fn rooted_magnitudes_preserve_order() {
        let img = test_image();
        let spec = qdft::forward_fast(&img.to_quaternion(RealPart::Brightness));
        let alpha = 0.85;
        let scaled = alpha_scale(&spec, alpha).unwrap();
        let mut pairs: Vec<(f64, f64)> = spec
            .data()
            .iter()
            .zip(scaled.data())
            .map(|(a, b)| (a.norm(), b.norm()))
            .filter(|(a, _)| *a > 1.0)
            .collect();
        pairs.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
        for w in pairs.windows(2) {
            if w[1].0 > w[0].0 {
                assert!(
                    w[1].1 >= w[0].1,
                    "magnitude order broken: {:?} -> {:?}",
                    w[0],
                    w[1]
                );
            }
        }
    }

    #[test]
    fn alpha_out_of_range_rejected() {
        let img = test_image();
        for alpha in [0.0, -0.5, 1.0001, f64::NAN] {
            assert!(alpha_root(&img, alpha, RealPart::Brightness).is_err());
        }
    }

    #[test]
    fn rooting_is_deterministic() {
        let img = test_image();
        let a = alpha_root(&img, 0.9, RealPart::Brightness).unwrap();
        let b = alpha_root(&img, 0.9, RealPart::Brightness).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn grid_counts() {
        assert_eq!(AlphaGrid::table_default().values().len(), 11);
        assert_eq!(AlphaGrid::search_default().values().len(), 31);
        let single = AlphaGrid::new(1.0, 0.01, 1.0).unwrap();
        assert_eq!(single.values(), vec![1.0]);
    }

    #[test]
    fn grid_points_stay_in_bounds_and_increase() {
        let grid = AlphaGrid::table_default().values();
        assert_eq!(*grid.last().unwrap(), 1.0);
        for w in grid.windows(2) {
            assert!(w[1] > w[0]);
        }
        assert!(grid.iter().all(|&a| a > 0.0 && a <= 1.0));
    }

    #[test]
    fn grid_rejects_bad_bounds() {
        assert!(AlphaGrid::new(0.0, 0.1, 1.0).is_err());
        assert!(AlphaGrid::new(0.9, 0.1, 0.8).is_err());
        assert!(AlphaGrid::new(0.5, 0.0, 1.0).is_err());
        assert!(AlphaGrid::new(0.5, 0.1, 1.5).is_err());
    }

    #[test]
    fn sweep_single_point_matches_direct_measures() {
        let img = test_image();
        let cfg = MeasureConfig::default();
        let grid = AlphaGrid::new(1.0, 0.5, 1.0).unwrap();
        let result = sweep(&img, &grid, Criterion::Cr, RealPart::Brightness, &cfg).unwrap();
        assert_eq!(result.best_alpha, 1.0);
        assert_eq!(result.records.len(), 1);
        let rooted = alpha_root(&img, 1.0, RealPart::Brightness).unwrap();
        let direct = MeasureRecord::compute(&rooted, 1.0, &cfg).unwrap();
        assert_eq!(result.records[0], direct);
    }

    #[test]
    fn sweep_matches_independent_recomputation() {
        let img = test_image();
        let cfg = MeasureConfig::default();
        let grid = AlphaGrid::new(0.8, 0.1, 1.0).unwrap();
        let result = sweep(&img, &grid, Criterion::Emec, RealPart::Brightness, &cfg).unwrap();
        assert_eq!(result.records.len(), 3);

        let mut best_alpha = f64::NAN;
        let mut best_value = f64::NEG_INFINITY;
        for &alpha in &[0.8, 0.9, 1.0] {
            let rooted = alpha_root(&img, alpha, RealPart::Brightness).unwrap();
            let record = MeasureRecord::compute(&rooted, alpha, &cfg).unwrap();
            let stored = result.records.iter().find(|r| r.alpha == alpha).unwrap();
            assert_eq!(*stored, record);
            if record.emec >= best_value {
                best_value = record.emec;
                best_alpha = alpha;
            }
        }
        assert_eq!(result.best_alpha, best_alpha);
    }

    #[test]
    fn sweep_ties_break_toward_larger_alpha() {
        // A constant image keeps CR exactly 1 at every alpha.
        let img = ColorImage::constant(8, 8, [90.0, 90.0, 90.0]).unwrap();
        let cfg = MeasureConfig::default();
        let grid = AlphaGrid::new(0.8, 0.1, 1.0).unwrap();
        let result = sweep(&img, &grid, Criterion::Cr, RealPart::Brightness, &cfg).unwrap();
        assert!(result.records.iter().all(|r| r.cr == 1.0));
        assert_eq!(result.best_alpha, 1.0);
    }

    #[test]
    fn sweep_emeq_criterion_runs() {
        let img = test_image();
        let cfg = MeasureConfig::default();
        let grid = AlphaGrid::new(0.9, 0.1, 1.0).unwrap();
        let result = sweep(&img, &grid, Criterion::Emeq, RealPart::Zero, &cfg).unwrap();
        assert_eq!(result.records.len(), 2);
        assert_eq!(result.criterion, Criterion::Emeq);
    }
}
