//! ASCII rendering: every tile becomes a 3x3 block of characters. Edge
//! midpoints carry a strand character exactly where the tile has a
//! connection point. Double arcs show a mirror in the center (`\` turns
//! left into bottom, `/` turns left into top); crossings keep the over
//! strand continuous through the center.

use crate::mosaic::Mosaic;
use crate::tile::Tile;

fn glyph(tile: Tile) -> [&'static str; 3] {
    match tile.id() {
        0 => ["   ", "   ", "   "],
        1 => ["   ", "-. ", " | "],
        2 => ["   ", " .-", " | "],
        3 => [" | ", " '-", "   "],
        4 => [" | ", "-' ", "   "],
        5 => ["   ", "---", "   "],
        6 => [" | ", " | ", " | "],
        7 => [" | ", "-\\-", " | "],
        8 => [" | ", "-/-", " | "],
        9 => [" | ", "-|-", " | "],
        10 => [" | ", "---", " | "],
        _ => unreachable!("tile ids are 0..=10"),
    }
}

/// Renders the mosaic as `3 * rows` lines of `3 * cols` characters, each
/// line newline terminated.
pub fn render(mosaic: &Mosaic) -> String {
    let mut out = String::with_capacity(mosaic.rows() * 3 * (mosaic.cols() * 3 + 1));
    for r in 0..mosaic.rows() {
        for line in 0..3 {
            for &tile in mosaic.row(r) {
                out.push_str(glyph(tile)[line]);
            }
            out.push('\n');
        }
    }
    out
}
