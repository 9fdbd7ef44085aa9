//! Deterministic SVG rendering of the ray fan and the zero cone.

use std::fmt::Write as _;

use crate::phi::{kink, phi, UCoverPoint};

/// Renders the rays through (k, 1) for |k| <= `max_ray`, shades the zero cone
/// spanned by (0, 1) and (1, 1), and labels each ray with its bend class and
/// the grade of the potential there. Output is deterministic byte-for-byte.
pub fn svg_figure(max_ray: i64) -> String {
    let max_ray = max_ray.max(1);
    let width = 80.0 * (2 * max_ray + 2) as f64;
    let height = 420.0;
    let base_y = height - 30.0;
    let top_y = 40.0;
    let ox = width / 2.0;
    let sx = (width / 2.0 - 40.0) / (max_ray as f64 + 0.5);
    let tip = |k: i64| (ox + k as f64 * sx, top_y);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"##
    );
    let (zx, zy) = tip(0);
    let (px, py) = tip(1);
    let _ = writeln!(
        out,
        r##"  <polygon points="{ox:.1},{base_y:.1} {zx:.1},{zy:.1} {px:.1},{py:.1}" fill="#dfe8ff"/>"##
    );
    for k in -max_ray..=max_ray {
        let (x2, y2) = tip(k);
        let _ = writeln!(
            out,
            r##"  <line x1="{ox:.1}" y1="{base_y:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="#333333" stroke-width="1"/>"##
        );
        let idx = kink(k)
            .coeffs()
            .iter()
            .position(|c| !num_traits::Zero::is_zero(c))
            .expect("kink is a single class")
            + 1;
        let grade = phi(&UCoverPoint::integral(k)).grade();
        let _ = writeln!(
            out,
            r##"  <text x="{x2:.1}" y="{:.1}" font-size="10" text-anchor="middle">({k},1) D{idx} g={grade}</text>"##,
            y2 - 6.0
        );
    }
    let _ = writeln!(
        out,
        r##"  <text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">zero cone</text>"##,
        (zx + px) / 2.0,
        (zy + py) / 2.0 + 16.0
    );
    out.push_str("</svg>\n");
    out
}
