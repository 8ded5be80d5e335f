//! SVG drawings of the tropical lines of a `3 × n` weight matrix.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::error::Result;
use crate::weights::{line_apexes, WeightMatrix};

const RAYS: [(f64, f64); 3] = [(1.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];

fn num(x: f64) -> String {
    // avoid "-0.000"
    let s = format!("{x:.3}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000".into()
    } else {
        s
    }
}

/// One tropical line per column: an apex and rays in directions `(1,1)`,
/// `(−1,0)` and `(0,−1)`, labeled by column. The view box is the apex bounding
/// box plus a 20% margin; the y axis points up.
pub fn render_tropical_lines(m: &WeightMatrix) -> Result<String> {
    let apexes: Vec<(f64, f64)> =
        line_apexes(m)?.iter().map(|(x, y)| (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0))).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &apexes {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1.0);
    let pad = 0.2 * span;
    let (vx, vy) = (x0 - pad, -(y1 + pad));
    let (vw, vh) = (x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
    let reach = 2.0 * (vw + vh);
    let stroke = span / 150.0;
    let font = span / 18.0;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="{}">"#,
        num(vx),
        num(vy),
        num(vw),
        num(vh),
        (600.0 * vh / vw).round() as i64
    );
    let _ = writeln!(
        out,
        r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#,
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    );
    for (j, &(x, y)) in apexes.iter().enumerate() {
        let _ = writeln!(out, r#"  <g id="line{}" stroke="black" stroke-width="{}" fill="none">"#, j + 1, num(stroke));
        for (dx, dy) in RAYS {
            let _ = writeln!(
                out,
                r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(x),
                num(-y),
                num(x + reach * dx),
                num(-(y + reach * dy))
            );
        }
        let _ = writeln!(out, "  </g>");
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="{}" font-family="sans-serif">{}</text>"#,
            num(x + font * 0.3),
            num(-y - font * 0.3),
            num(font),
            j + 1
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
