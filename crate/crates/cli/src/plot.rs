//! Standalone SVG of a boundary, colored by the angle `γ` between the radius
//! and the normal, with the `ρ_max` and `R_min` circles around the center.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt::Write as _;

use infsup::{Boundary64, SweepOptions};

const SAMPLES: usize = 2048;
const SIZE: f64 = 600.0;

/// Blue at `γ = 0` through red at `γ = max`.
fn heat(x: f64) -> String {
    let x = x.clamp(0.0, 1.0);
    let r = (255.0 * x).round() as u8;
    let g = (255.0 * (1.0 - (2.0 * x - 1.0).abs()) * 0.6).round() as u8;
    let b = (255.0 * (1.0 - x)).round() as u8;
    format!("#{r:02x}{g:02x}{b:02x}")
}

pub fn svg(boundary: &Boundary64, title: &str) -> String {
    let sweep = SweepOptions::default();
    let scale = boundary.normalization_scale();
    let c = boundary.center();
    let points: Vec<(f64, f64, f64)> = (0..=SAMPLES)
        .map(|i| {
            let theta = TAU * i as f64 / SAMPLES as f64;
            let r = boundary.eval_f(theta) * scale;
            (c.x + r * theta.cos(), c.y + r * theta.sin(), boundary.gamma(theta).abs())
        })
        .collect();
    let rho = boundary.rho_max(&sweep) * scale;
    let r_min = boundary.raw_r_min(&sweep);
    let gamma_max = points.iter().map(|p| p.2).fold(0.0, f64::max).clamp(1e-12, FRAC_PI_2);

    let (mut x0, mut x1, mut y0, mut y1) = (c.x - r_min, c.x + r_min, c.y - r_min, c.y + r_min);
    for &(x, y, _) in &points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0);
    let margin = 0.05 * span;
    let k = SIZE / (span + 2.0 * margin);
    let px = |x: f64| (x - x0 + margin) * k;
    let py = |y: f64| (y1 + margin - y) * k;
    let width = (x1 - x0 + 2.0 * margin) * k;
    let height = (y1 - y0 + 2.0 * margin) * k;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (r, color, label) in [(r_min, "#999999", "R_min"), (rho, "#2a9d3a", "rho_max")] {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="{color}" stroke-dasharray="4 3"><title>{label} = {r:.6}</title></circle>"#,
            px(c.x),
            py(c.y),
            r * k
        );
    }
    let _ = writeln!(out, r#"<g stroke-width="2.5" stroke-linecap="round">"#);
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let _ = writeln!(
            out,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{}"/>"#,
            px(a.0),
            py(a.1),
            px(b.0),
            py(b.1),
            heat(0.5 * (a.2 + b.2) / gamma_max)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<circle cx="{:.3}" cy="{:.3}" r="3" fill="black"><title>center</title></circle>"#,
        px(c.x),
        py(c.y)
    );
    let _ = writeln!(
        out,
        r##"<text x="8" y="18" font-family="sans-serif" font-size="13">{} (max gamma = {:.4} rad)</text>"##,
        escape(title),
        gamma_max
    );
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
