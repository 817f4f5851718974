//! Contact sheets: a row-major grid of labeled tiles, the original first,
//! then one tile per alpha, mirroring the side-by-side figures the sweep
//! tables describe. Labels render with a small built-in 5x7 bitmap font on
//! a strip above each tile, so tile pixels stay untouched.

use qpaint_core::ColorImage;

const MARGIN: usize = 4;
const LABEL_H: usize = 18;
const GLYPH_SCALE: usize = 2;
const BG: f64 = 32.0;
const LABEL_BG: f64 = 0.0;
const LABEL_FG: f64 = 255.0;

/// 5x7 glyphs, one bit row per byte (5 LSBs used).
fn glyph(ch: char) -> [u8; 7] {
    match ch {
        '0' => [0x0E, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0E],
        '1' => [0x04, 0x0C, 0x04, 0x04, 0x04, 0x04, 0x0E],
        '2' => [0x0E, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1F],
        '3' => [0x1F, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0E],
        '4' => [0x02, 0x06, 0x0A, 0x12, 0x1F, 0x02, 0x02],
        '5' => [0x1F, 0x10, 0x1E, 0x01, 0x01, 0x11, 0x0E],
        '6' => [0x06, 0x08, 0x10, 0x1E, 0x11, 0x11, 0x0E],
        '7' => [0x1F, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08],
        '8' => [0x0E, 0x11, 0x11, 0x0E, 0x11, 0x11, 0x0E],
        '9' => [0x0E, 0x11, 0x11, 0x0F, 0x01, 0x02, 0x0C],
        '.' => [0x00, 0x00, 0x00, 0x00, 0x00, 0x06, 0x06],
        '=' => [0x00, 0x00, 0x1F, 0x00, 0x1F, 0x00, 0x00],
        'a' => [0x00, 0x00, 0x0E, 0x01, 0x0F, 0x11, 0x0F],
        'o' => [0x00, 0x00, 0x0E, 0x11, 0x11, 0x11, 0x0E],
        'r' => [0x00, 0x00, 0x16, 0x19, 0x10, 0x10, 0x10],
        'i' => [0x04, 0x00, 0x0C, 0x04, 0x04, 0x04, 0x0E],
        'g' => [0x00, 0x00, 0x0F, 0x11, 0x0F, 0x01, 0x0E],
        _ => [0; 7],
    }
}

/// Tiles the images into a near-square grid. Every tile must share the
/// dimensions of the first.
pub fn contact_sheet(tiles: &[(String, &ColorImage)]) -> ColorImage {
    assert!(!tiles.is_empty(), "contact sheet needs at least one tile");
    let tile_w = tiles[0].1.width();
    let tile_h = tiles[0].1.height();
    debug_assert!(tiles.iter().all(|(_, t)| t.width() == tile_w && t.height() == tile_h));

    let (rows, cols) = grid_layout(tiles.len());
    let cell_w = tile_w;
    let cell_h = LABEL_H + tile_h;
    let sheet_w = cols * cell_w + (cols + 1) * MARGIN;
    let sheet_h = rows * cell_h + (rows + 1) * MARGIN;

    let mut px = vec![[BG, BG, BG]; sheet_w * sheet_h];
    for (i, (label, tile)) in tiles.iter().enumerate() {
        let (row, col) = (i / cols, i % cols);
        let x0 = MARGIN + col * (cell_w + MARGIN);
        let y0 = MARGIN + row * (cell_h + MARGIN);

        for y in 0..LABEL_H {
            for x in 0..cell_w {
                px[(y0 + y) * sheet_w + x0 + x] = [LABEL_BG; 3];
            }
        }
        draw_text(&mut px, sheet_w, x0 + 2, y0 + 2, label);

        for y in 0..tile_h {
            for x in 0..tile_w {
                px[(y0 + LABEL_H + y) * sheet_w + x0 + x] = tile.pixel(y, x);
            }
        }
    }
    ColorImage::new(sheet_h, sheet_w, px).expect("sheet pixels in range")
}

/// Rows/columns for `n` tiles: near-square, wide rather than tall.
pub fn grid_layout(n: usize) -> (usize, usize) {
    let cols = (n as f64).sqrt().ceil() as usize;
    let rows = n.div_ceil(cols);
    (rows, cols)
}

/// Pixel offsets occupied by tile `i`'s image region (top-left corner).
pub fn tile_origin(i: usize, total: usize, tile_w: usize, tile_h: usize) -> (usize, usize) {
    let (_, cols) = grid_layout(total);
    let (row, col) = (i / cols, i % cols);
    let x0 = MARGIN + col * (tile_w + MARGIN);
    let y0 = MARGIN + row * (LABEL_H + tile_h + MARGIN) + LABEL_H;
    (y0, x0)
}

fn draw_text(px: &mut [[f64; 3]], stride: usize, x0: usize, y0: usize, text: &str) {
    let mut x = x0;
    for ch in text.chars() {
        let rows = glyph(ch);
        for (gy, bits) in rows.iter().enumerate() {
            for gx in 0..5 {
                if bits & (1 << (4 - gx)) != 0 {
                    for dy in 0..GLYPH_SCALE {
                        for dx in 0..GLYPH_SCALE {
                            let yy = y0 + gy * GLYPH_SCALE + dy;
                            let xx = x + gx * GLYPH_SCALE + dx;
                            px[yy * stride + xx] = [LABEL_FG; 3];
                        }
                    }
                }
            }
        }
        x += 6 * GLYPH_SCALE;
    }
}
