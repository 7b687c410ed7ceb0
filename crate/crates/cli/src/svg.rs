//! SVG rendering of landscapes. Floating point is fine here; nothing is
//! computed from the picture.

use std::fmt::Write;

use erodist::LandscapeSequence;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 360.0;
const MARGIN: f64 = 40.0;
const COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

pub fn render(lam: &LandscapeSequence) -> String {
    let points: Vec<Vec<(f64, f64)>> = lam
        .curves()
        .iter()
        .map(|c| c.breakpoints().iter().map(|(t, h)| (t.to_f64(), h.to_f64())).collect())
        .collect();
    let all = points.iter().flatten();
    let (mut t0, mut t1) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut top: f64 = 0.0;
    for &(t, h) in all {
        t0 = t0.min(t);
        t1 = t1.max(t);
        top = top.max(h);
    }
    if !t0.is_finite() {
        (t0, t1) = (0.0, 1.0);
    }
    if t1 <= t0 {
        t1 = t0 + 1.0;
    }
    if top <= 0.0 {
        top = 1.0;
    }
    let x = |t: f64| MARGIN + (t - t0) / (t1 - t0) * (WIDTH - 2.0 * MARGIN);
    let y = |h: f64| HEIGHT - MARGIN - h / top * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (ax0, ax1, ay0, ay1) = (x(t0), x(t1), y(0.0), y(top));
    let _ = writeln!(s, r#"<line x1="{ax0}" y1="{ay0}" x2="{ax1}" y2="{ay0}" stroke="black"/>"#);
    let _ = writeln!(s, r#"<line x1="{ax0}" y1="{ay0}" x2="{ax0}" y2="{ay1}" stroke="black"/>"#);
    let label = |v: f64| format!("{}", (v * 1000.0).round() / 1000.0);
    let _ = writeln!(
        s,
        r#"<text x="{ax0}" y="{}" font-size="11" text-anchor="middle">{}</text>"#,
        ay0 + 16.0,
        label(t0)
    );
    let _ = writeln!(
        s,
        r#"<text x="{ax1}" y="{}" font-size="11" text-anchor="middle">{}</text>"#,
        ay0 + 16.0,
        label(t1)
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{ay1}" font-size="11" text-anchor="end">{}</text>"#,
        ax0 - 4.0,
        label(top)
    );
    for (k, curve) in points.iter().enumerate() {
        let coords: Vec<String> = curve.iter().map(|&(t, h)| format!("{:.3},{:.3}", x(t), y(h))).collect();
        let _ = writeln!(
            s,
            r#"<polyline class="k{}" fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            k + 1,
            COLORS[k % COLORS.len()],
            coords.join(" ")
        );
    }
    let _ = writeln!(s, "</svg>");
    s
}
