//! Transform oracles: term-by-term quadruple-loop evaluations built from
//! nothing but quaternion products and kernels, checked against both the
//! staged naive path and the FFT-backed fast path.

use std::f64::consts::TAU;

use qpaint_core::qdft::{forward_fast, forward_naive, inverse_fast, inverse_naive, QSpectrum};
use qpaint_core::{Quaternion, QuaternionImage};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn kernel(axis: Quaternion, theta: f64) -> Quaternion {
    Quaternion::kernel(axis, theta).unwrap()
}

fn random_image(n: usize, m: usize, rng: &mut StdRng) -> QuaternionImage {
    let data = (0..n * m)
        .map(|_| {
            Quaternion::new(
                rng.gen_range(0.0..255.0),
                rng.gen_range(0.0..255.0),
                rng.gen_range(0.0..255.0),
                rng.gen_range(0.0..255.0),
            )
        })
        .collect();
    QuaternionImage::new(n, m, data).unwrap()
}

fn max_diff(a: &[Quaternion], b: &[Quaternion]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(&p, &q)| (p - q).norm())
        .fold(0.0, f64::max)
}

/// Flat sum over every (n, m) per output point, multiplying each term by
/// both kernels on the right in convention order.
fn forward_oracle(img: &QuaternionImage) -> Vec<Quaternion> {
    let (n, m) = (img.height(), img.width());
    let mut out = vec![Quaternion::ZERO; n * m];
    for p in 0..n {
        for s in 0..m {
            let mut acc = Quaternion::ZERO;
            for row in 0..n {
                for col in 0..m {
                    let wk = kernel(Quaternion::K, TAU * (col * s) as f64 / m as f64);
                    let wj = kernel(Quaternion::J, TAU * (row * p) as f64 / n as f64);
                    acc = acc + img.get(row, col) * wk * wj;
                }
            }
            out[p * m + s] = acc;
        }
    }
    out
}

/// Flat inverse sum; the j kernel multiplies first (the column pass is
/// undone before the row pass).
fn inverse_oracle(spec: &QSpectrum) -> Vec<Quaternion> {
    let (n, m) = (spec.height(), spec.width());
    let scale = 1.0 / (n * m) as f64;
    let mut out = vec![Quaternion::ZERO; n * m];
    for row in 0..n {
        for col in 0..m {
            let mut acc = Quaternion::ZERO;
            for p in 0..n {
                for s in 0..m {
                    let wj = kernel(Quaternion::J, -TAU * (p * row) as f64 / n as f64);
                    let wk = kernel(Quaternion::K, -TAU * (s * col) as f64 / m as f64);
                    acc = acc + spec.get(p, s) * wj * wk;
                }
            }
            out[row * m + col] = acc.scale(scale);
        }
    }
    out
}

#[test]
fn forward_matches_term_by_term_oracle() {
    let mut rng = StdRng::seed_from_u64(101);
    let img = random_image(3, 4, &mut rng);
    let expected = forward_oracle(&img);
    let tol = 1e-9 * (3.0 * 4.0) * 512.0;
    assert!(max_diff(forward_naive(&img).data(), &expected) < tol);
    assert!(max_diff(forward_fast(&img).data(), &expected) < tol);
}

#[test]
fn inverse_matches_term_by_term_oracle() {
    let mut rng = StdRng::seed_from_u64(103);
    let data = (0..5 * 7)
        .map(|_| {
            Quaternion::new(
                rng.gen_range(-100.0..100.0),
                rng.gen_range(-100.0..100.0),
                rng.gen_range(-100.0..100.0),
                rng.gen_range(-100.0..100.0),
            )
        })
        .collect();
    let spec = QSpectrum::new(5, 7, data);
    let expected = inverse_oracle(&spec);
    assert!(max_diff(inverse_naive(&spec).data(), &expected) < 1e-9);
    assert!(max_diff(inverse_fast(&spec).data(), &expected) < 1e-9);
}

#[test]
fn fast_equals_naive_on_all_small_sizes() {
    let mut rng = StdRng::seed_from_u64(107);
    for n in 1..=8 {
        for m in 1..=8 {
            let img = random_image(n, m, &mut rng);
            let tol = 1e-9 * (n * m) as f64 * 512.0;

            let f_naive = forward_naive(&img);
            let f_fast = forward_fast(&img);
            assert!(
                max_diff(f_naive.data(), f_fast.data()) < tol,
                "forward mismatch at {n}x{m}"
            );

            let i_naive = inverse_naive(&f_naive);
            let i_fast = inverse_fast(&f_naive);
            assert!(
                max_diff(i_naive.data(), i_fast.data()) < 1e-9,
                "inverse mismatch at {n}x{m}"
            );
        }
    }
}

#[test]
fn round_trip_on_rectangular_sizes() {
    let mut rng = StdRng::seed_from_u64(109);
    for (n, m) in [(7, 5), (8, 6), (16, 16)] {
        let img = random_image(n, m, &mut rng);
        let back_fast = inverse_fast(&forward_fast(&img));
        assert!(max_diff(img.data(), back_fast.data()) < 1e-9);
        let back_naive = inverse_naive(&forward_naive(&img));
        assert!(max_diff(img.data(), back_naive.data()) < 1e-9);
    }
}

#[test]
fn parseval_on_large_image() {
    let mut rng = StdRng::seed_from_u64(113);
    let img = random_image(512, 512, &mut rng);
    let input_energy: f64 = img.data().iter().map(|q| q.norm_sq()).sum();
    let spec = forward_fast(&img);
    let ratio = spec.energy() / ((512.0 * 512.0) * input_energy);
    assert!((ratio - 1.0).abs() < 1e-9, "energy ratio {ratio}");
}
