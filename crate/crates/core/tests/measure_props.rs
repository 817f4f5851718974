//! Property tests for the measure invariants.

use proptest::prelude::*;
use qpaint_core::measures::{cr, emec, emeq, m1, m2, m3, m_geo, MeasureConfig};
use qpaint_core::{ColorImage, RealPart};

fn pixel() -> impl Strategy<Value = [f64; 3]> {
    proptest::array::uniform3(0.0f64..=255.0)
}

fn image(h: usize, w: usize) -> impl Strategy<Value = ColorImage> {
    proptest::collection::vec(pixel(), h * w)
        .prop_map(move |px| ColorImage::new(h, w, px).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn color_ratio_is_at_least_one(img in image(5, 6)) {
        let cfg = MeasureConfig::default();
        prop_assert!(cr(&img, &cfg) >= 1.0 - 1e-12);
    }

    #[test]
    fn pixelwise_measures_ignore_pixel_order(img in image(4, 5), seed in any::<u64>()) {
        let cfg = MeasureConfig::default();
        let mut shuffled: Vec<[f64; 3]> = img.pixels().to_vec();
        // Cheap deterministic shuffle.
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            shuffled.swap(i, j);
        }
        let permuted = ColorImage::new(4, 5, shuffled).unwrap();

        prop_assert!((m1(&img, &cfg) - m1(&permuted, &cfg)).abs() < 1e-9);
        prop_assert!((m2(&img, &cfg) - m2(&permuted, &cfg)).abs() < 1e-9);
        prop_assert!((m3(&img, &cfg) - m3(&permuted, &cfg)).abs() < 1e-9);
        prop_assert!((cr(&img, &cfg) - cr(&permuted, &cfg)).abs() < 1e-9);
    }

    #[test]
    fn block_measures_ignore_order_within_blocks(img in image(7, 14), seed in any::<u64>()) {
        let cfg = MeasureConfig::default();
        // Shuffle pixels inside each 7x7 block, leaving the block layout.
        let mut px = img.pixels().to_vec();
        let mut state = seed | 1;
        for block in 0..2usize {
            let cols = (block * 7)..(block * 7 + 7);
            let mut idx: Vec<usize> = (0..7)
                .flat_map(|r| cols.clone().map(move |c| r * 14 + c))
                .collect();
            for i in (1..idx.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                idx.swap(i, j);
            }
            let orig: Vec<[f64; 3]> = (0..7)
                .flat_map(|r| cols.clone().map(move |c| r * 14 + c))
                .map(|i| img.pixels()[i])
                .collect();
            for (slot, &target) in idx.iter().enumerate() {
                px[target] = orig[slot];
            }
        }
        let permuted = ColorImage::new(7, 14, px).unwrap();
        prop_assert!((emec(&img, &cfg).unwrap() - emec(&permuted, &cfg).unwrap()).abs() < 1e-9);
        let qa = img.to_quaternion(RealPart::Brightness);
        let qb = permuted.to_quaternion(RealPart::Brightness);
        prop_assert!((emeq(&qa, &cfg).unwrap() - emeq(&qb, &cfg).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn emeq_never_falls_below_emec(img in image(7, 7), mode_pick in 0usize..3) {
        let cfg = MeasureConfig::default();
        let mode = [RealPart::Brightness, RealPart::Zero, RealPart::GrayMean][mode_pick];
        let e_c = emec(&img, &cfg).unwrap();
        let e_q = emeq(&img.to_quaternion(mode), &cfg).unwrap();
        prop_assert!(e_q >= e_c - 1e-9, "emeq {e_q} < emec {e_c}");
    }

    #[test]
    fn geometric_mean_fixed_point(v in -50.0f64..50.0) {
        prop_assert!((m_geo(v, v, v) - v).abs() <= 1e-12 * v.abs().max(1.0));
    }
}
