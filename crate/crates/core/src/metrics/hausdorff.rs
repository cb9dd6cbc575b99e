use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::model::{Chord, FiniteLamination};

/// Circle point `s` on the circle of circumference 1 centred at the origin.
pub fn circle_point(s: f64) -> [f64; 2] {
    let r = 1.0 / (2.0 * PI);
    let t = 2.0 * PI * s;
    [r * t.cos(), r * t.sin()]
}

type Segment = ([f64; 2], [f64; 2]);

fn segments(chords: &[Chord]) -> Vec<Segment> {
    chords.iter().map(|c| (circle_point(c.a()), circle_point(c.b()))).collect()
}

fn point_segment(p: [f64; 2], (a, b): &Segment) -> f64 {
    let d = [b[0] - a[0], b[1] - a[1]];
    let len2 = d[0] * d[0] + d[1] * d[1];
    let t = if len2 > 0.0 {
        (((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = [a[0] + t * d[0], a[1] + t * d[1]];
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
}

/// `sup_{x ∈ A} dist(x, B)` with `A` sampled along each chord at spacing at
/// most `resolution`; distances to `B` are exact.
fn directed(a: &[Segment], b: &[Segment], resolution: f64) -> f64 {
    let mut worst: f64 = 0.0;
    for seg in a {
        let (p, q) = seg;
        let len = ((q[0] - p[0]).powi(2) + (q[1] - p[1]).powi(2)).sqrt();
        let steps = (len / resolution).ceil().max(1.0) as usize;
        for i in 0..=steps {
            let t = i as f64 / steps as f64;
            let x = [p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])];
            let d = b.iter().map(|s| point_segment(x, s)).fold(f64::INFINITY, f64::min);
            worst = worst.max(d);
        }
    }
    worst
}

/// Hausdorff distance between the unions of the chords of two
/// laminations in the disk of circumference 1. The result is within
/// `resolution / 2` of the exact value.
pub fn hausdorff_laminations(a: &FiniteLamination, b: &FiniteLamination, resolution: f64) -> Result<f64> {
    hausdorff_chords(a.chords(), b.chords(), resolution)
}

/// Hausdorff distance between two unions of chords, crossing or not.
pub fn hausdorff_chords(a: &[Chord], b: &[Chord], resolution: f64) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Empty);
    }
    if !(resolution > 0.0) {
        return Err(Error::InvalidArgument(format!("resolution must be positive, got {resolution}")));
    }
    let (sa, sb) = (segments(a), segments(b));
    Ok(directed(&sa, &sb, resolution).max(directed(&sb, &sa, resolution)))
}
