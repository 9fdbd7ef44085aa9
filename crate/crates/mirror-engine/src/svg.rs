//! Deterministic SVG rendering of enumerated pairs of broken lines.

use std::fmt::Write as _;

use crate::enumerate::{BrokenLine, PairOfPants};

const ROW_HEIGHT: f64 = 90.0;
const WIDTH: f64 = 720.0;

fn line_points(line: &BrokenLine, base_y: f64, flip: bool) -> String {
    let ox = WIDTH / 2.0;
    let sx = 6.0;
    let sign = if flip { -1.0 } else { 1.0 };
    let mut points = Vec::new();
    let top = base_y - 60.0;
    points.push((ox + sign * line.direction as f64 * sx, top));
    let n = line.bends.len() as f64 + 1.0;
    for (i, bend) in line.bends.iter().enumerate() {
        let y = top + 60.0 * (i as f64 + 1.0) / n * f64::from(bend.ray.1).min(2.0) / 2.0;
        points.push((ox + sign * bend.ray.0 as f64 * sx, y));
    }
    points.push((ox, base_y));
    points
        .iter()
        .map(|(x, y)| format!("{x:.1},{y:.1}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders each pair as a row: both broken lines as polylines through their
/// bend points down to the shared endpoint, labelled with the carried
/// exponent and coefficient. Output is deterministic byte-for-byte.
pub fn svg_pairs(pairs: &[PairOfPants]) -> String {
    let height = ROW_HEIGHT * pairs.len().max(1) as f64 + 40.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}">"##
    );
    for (i, pair) in pairs.iter().enumerate() {
        let base_y = ROW_HEIGHT * (i as f64 + 1.0);
        let _ = writeln!(
            out,
            r##"  <polyline points="{}" fill="none" stroke="#0055aa" stroke-width="1.5"/>"##,
            line_points(&pair.line_p, base_y, false)
        );
        let _ = writeln!(
            out,
            r##"  <polyline points="{}" fill="none" stroke="#aa3300" stroke-width="1.5"/>"##,
            line_points(&pair.line_q, base_y, true)
        );
        let _ = writeln!(
            out,
            r##"  <circle cx="{:.1}" cy="{base_y:.1}" r="2.5" fill="#000000"/>"##,
            WIDTH / 2.0
        );
        let _ = writeln!(
            out,
            r##"  <text x="10" y="{:.1}" font-size="10">({}, 1) x ({}, 1) -> ({}, {}): {} z^{:?}</text>"##,
            base_y - 30.0,
            pair.line_p.direction,
            pair.line_q.direction,
            pair.target.0,
            pair.target.1,
            pair.coeff,
            pair.exponent
        );
    }
    out.push_str("</svg>\n");
    out
}
