//! Minimal SVG output with a fixed canvas and fixed-precision
//! coordinates, so the same input always gives the same bytes.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::model::{FiniteLamination, StepFunction};

const HEADER: &str = r#"<?xml version="1.0" encoding="UTF-8"?>"#;

fn c(x: f64) -> String {
    format!("{x:.3}")
}

/// Unit circle with one line segment per chord.
pub fn lamination_svg(l: &FiniteLamination, stroke_width: f64) -> String {
    let r = 100.0;
    let point = |s: f64| (r * (2.0 * PI * s).cos(), -r * (2.0 * PI * s).sin());
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-110 -110 220 220" width="440" height="440">"#).unwrap();
    writeln!(out, r#"<circle cx="0" cy="0" r="100" fill="none" stroke="black" stroke-width="{}"/>"#, c(stroke_width)).unwrap();
    writeln!(out, r#"<g stroke="black" stroke-width="{}" stroke-linecap="round">"#, c(stroke_width)).unwrap();
    for chord in l.sorted_chords() {
        let (x1, y1) = point(chord.a());
        let (x2, y2) = point(chord.b());
        writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, c(x1), c(y1), c(x2), c(y2)).unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn plot(points: &[(f64, f64)], y_max: f64, stroke_width: f64) -> String {
    let (w, h, pad) = (400.0, 200.0, 10.0);
    let y_max = if y_max > 0.0 { y_max } else { 1.0 };
    let mut path = String::new();
    for (i, &(x, y)) in points.iter().enumerate() {
        if i > 0 {
            path.push(' ');
        }
        let px = pad + x * (w - 2.0 * pad);
        let py = h - pad - y / y_max * (h - 2.0 * pad);
        write!(path, "{},{}", c(px), c(py)).unwrap();
    }
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 400 200" width="800" height="400">"#).unwrap();
    writeln!(out, r#"<line x1="10.000" y1="190.000" x2="390.000" y2="190.000" stroke="gray" stroke-width="0.500"/>"#).unwrap();
    writeln!(out, r#"<polyline fill="none" stroke="black" stroke-width="{}" points="{path}"/>"#, c(stroke_width)).unwrap();
    out.push_str("</svg>\n");
    out
}

/// Graph of a sampled function on `[0, 1]`, scaled to its maximum.
pub fn function_svg(grid: &[f64], values: &[f64], stroke_width: f64) -> String {
    let max = values.iter().copied().fold(0.0, f64::max);
    let pts: Vec<(f64, f64)> = grid.iter().copied().zip(values.iter().copied()).collect();
    plot(&pts, max, stroke_width)
}

/// Graph of a step function, with vertical segments at the jumps.
pub fn step_svg(f: &StepFunction, stroke_width: f64) -> String {
    let mut pts = Vec::with_capacity(2 * f.values().len());
    let starts = std::iter::once(0.0).chain(f.breakpoints());
    let ends = f.breakpoints().chain(std::iter::once(1.0));
    for ((x0, x1), &v) in starts.zip(ends).zip(f.values()) {
        pts.push((x0, v));
        pts.push((x1, v));
    }
    plot(&pts, f.max(), stroke_width)
}
