use super::chord::Chord;
use super::point::Point;
use crate::error::{Error, Result};

/// Half-open interval `[start, end)` of the circle, with `start < end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub start: Point,
    pub end: Point,
}

impl Arc {
    pub fn len(&self) -> f64 {
        Point::width_to_f64(self.width())
    }

    fn width(&self) -> u128 {
        self.start.width_to(self.end)
    }

    pub fn contains(&self, p: Point) -> bool {
        self.start <= p && p < self.end
    }
}

/// The trace of a fragment on the circle.
///
/// Arcs are kept sorted by start point. The measure-preserving local
/// coordinate of a point `p` is `Leb(S ∩ [0, p)) / mass`: local coordinate
/// 0 sits at the smallest point of the fragment, which for a fragment cut
/// off by a chord is that chord's first endpoint and for the root fragment
/// is circle point 0. Under this parametrization no arc needs to wrap
/// across 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSet {
    arcs: Vec<Arc>,
    width: u128,
}

impl ArcSet {
    /// The whole circle.
    pub fn full() -> Self {
        ArcSet {
            arcs: vec![Arc {
                start: Point::ZERO,
                end: Point::ONE,
            }],
            width: Point::ONE.raw(),
        }
    }

    /// Builds an arc set from `(start, end)` pairs, validating order and
    /// disjointness.
    pub fn from_arcs(pairs: &[(f64, f64)]) -> Result<Self> {
        let mut arcs = Vec::with_capacity(pairs.len());
        let mut prev_end = Point::ZERO;
        for &(start, end) in pairs {
            if !(0.0..1.0).contains(&start) {
                return Err(Error::OutOfRange(start));
            }
            if !(start < end && end <= 1.0) {
                return Err(Error::InvalidArgument(format!(
                    "arc [{start}, {end}) is empty or leaves the unit interval"
                )));
            }
            let arc = Arc {
                start: Point::clamped(start),
                end: Point::clamped(end),
            };
            if arc.start < prev_end {
                return Err(Error::InvalidArgument(
                    "arcs must be sorted and disjoint".into(),
                ));
            }
            prev_end = arc.end;
            arcs.push(arc);
        }
        if arcs.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self::from_pieces(arcs))
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn mass(&self) -> f64 {
        Point::width_to_f64(self.width)
    }

    pub fn contains(&self, p: f64) -> bool {
        (0.0..=1.0).contains(&p) && self.contains_point(Point::clamped(p))
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.arc_index(p).is_some()
    }

    fn arc_index(&self, p: Point) -> Option<usize> {
        let i = self.arcs.partition_point(|arc| arc.start <= p);
        (i > 0 && self.arcs[i - 1].contains(p)).then(|| i - 1)
    }

    /// Local coordinate of circle point `p`, or `None` when `p` is not in
    /// the fragment.
    pub fn locate(&self, p: f64) -> Option<f64> {
        if !(0.0..=1.0).contains(&p) {
            return None;
        }
        self.locate_point(Point::clamped(p))
    }

    pub fn locate_point(&self, p: Point) -> Option<f64> {
        let i = self.arc_index(p)?;
        let before: u128 = self.arcs[..i].iter().map(Arc::width).sum();
        Some((before + self.arcs[i].start.width_to(p)) as f64 / self.width as f64)
    }

    /// Circle point with local coordinate `t ∈ [0, 1)`; inverse of
    /// [`ArcSet::locate`] up to the resolution of `t`.
    pub fn point_at(&self, t: f64) -> Result<f64> {
        Ok(self.point_at_exact(t)?.to_f64())
    }

    pub fn point_at_exact(&self, t: f64) -> Result<Point> {
        if !(0.0..1.0).contains(&t) {
            return Err(Error::OutOfRange(t));
        }
        // relative precision of the offset is that of `t`
        let mut remaining = ((t * self.width as f64) as u128).min(self.width - 1);
        for arc in &self.arcs {
            let w = arc.width();
            if remaining < w {
                return Ok(arc.start.add(remaining));
            }
            remaining -= w;
        }
        unreachable!("offset below total width")
    }

    /// Splits the fragment along the chord whose endpoints have local
    /// coordinates `u_local < v_local`. Returns the chord, the child holding
    /// local coordinate 0 and the child cut off by the chord.
    pub fn split(&self, u_local: f64, v_local: f64) -> Result<(Chord, ArcSet, ArcSet)> {
        if !(0.0 < u_local && u_local < v_local && v_local < 1.0) {
            return Err(Error::InvalidSplit(u_local, v_local));
        }
        let a = self.point_at_exact(u_local)?;
        let b = self.point_at_exact(v_local)?;
        let chord = Chord::from_points(a, b)?;
        let (outer, inner) = self.split_at_chord(&chord)?;
        Ok((chord, outer, inner))
    }

    /// Splits along a chord whose endpoints both lie inside the fragment.
    /// Returns `(outer, inner)` where `inner` is the part in `[a, b)`.
    pub fn split_at_chord(&self, chord: &Chord) -> Result<(ArcSet, ArcSet)> {
        let (a, b) = chord.points();
        for p in [a, b] {
            if !self.contains_point(p) {
                return Err(Error::InvalidArgument(format!(
                    "chord endpoint {p} is not inside the fragment"
                )));
            }
            if self.arcs.iter().any(|arc| arc.start == p) {
                return Err(Error::EndpointCollision(p.to_f64()));
            }
        }
        let mut outer = Vec::with_capacity(self.arcs.len() + 1);
        let mut inner = Vec::with_capacity(self.arcs.len());
        for arc in &self.arcs {
            let mut push = |start: Point, end: Point, into_inner: bool| {
                if start < end {
                    let piece = Arc { start, end };
                    if into_inner {
                        inner.push(piece);
                    } else {
                        outer.push(piece);
                    }
                }
            };
            push(arc.start, arc.end.min(a), false);
            push(arc.start.max(a), arc.end.min(b), true);
            push(arc.start.max(b), arc.end, false);
        }
        Ok((ArcSet::from_pieces(outer), ArcSet::from_pieces(inner)))
    }

    fn from_pieces(arcs: Vec<Arc>) -> ArcSet {
        let width = arcs.iter().map(Arc::width).sum();
        ArcSet { arcs, width }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn two_arcs() -> ArcSet {
        ArcSet::from_arcs(&[(0.0, 0.2), (0.6, 1.0)]).unwrap()
    }

    #[test]
    fn split_full_circle() {
        let (c, outer, inner) = ArcSet::full().split(0.2, 0.6).unwrap();
        assert_eq!((c.a(), c.b()), (0.2, 0.6));
        assert!((outer.mass() - 0.6).abs() < 1e-15);
        assert!((inner.mass() - 0.4).abs() < 1e-15);
        assert!(outer.contains(0.0));
    }

    #[test]
    fn splits_below_f64_resolution() {
        let mut s = ArcSet::full();
        // keep cutting the inner part; its mass ends far below 1e-16
        for _ in 0..50 {
            let (_, _, inner) = s.split(0.25, 0.5).unwrap();
            s = inner;
        }
        assert!(s.mass() < 1e-25 && s.mass() > 0.0);
        let (c, outer, inner) = s.split(0.1, 0.9).unwrap();
        assert_ne!(c.points().0, c.points().1);
        assert_eq!(outer.width + inner.width, s.width);
    }

    #[test]
    fn split_two_arc_fragment() {
        let s = two_arcs();
        let (c, outer, inner) = s.split(1.0 / 6.0, 0.5).unwrap();
        assert!((c.a() - 0.1).abs() < 1e-15);
        assert!((c.b() - 0.7).abs() < 1e-15);
        assert!((outer.mass() - 0.4).abs() < 1e-12);
        assert!((inner.mass() - 0.2).abs() < 1e-12);
        assert_eq!(inner.arcs().len(), 2);
        assert!(outer.contains(0.05) && outer.contains(0.8));
    }

    #[test]
    fn degenerate_split_rejected() {
        assert!(matches!(
            two_arcs().split(0.3, 0.3),
            Err(Error::InvalidSplit(..))
        ));
        assert!(ArcSet::full().split(0.6, 0.2).is_err());
    }

    #[test]
    fn locate_examples() {
        let s = two_arcs();
        assert!((s.locate(0.1).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert!((s.locate(0.7).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(s.locate(0.3), None);
    }

    #[test]
    fn locate_inverts_point_at_on_fine_grid() {
        let s = ArcSet::from_arcs(&[(0.05, 0.2), (0.35, 0.36), (0.6, 0.93)]).unwrap();
        for i in 0..=10_000 {
            let t = i as f64 / 10_001.0;
            let back = s.locate(s.point_at(t).unwrap()).unwrap();
            assert!((back - t).abs() < 1e-9, "t={t} back={back}");
        }
    }

    proptest! {
        #[test]
        fn child_masses_sum_to_parent(u in 0.001f64..0.998, w in 0.0005f64..0.999) {
            let v = u + (1.0 - u) * w;
            prop_assume!(v > u && v < 1.0);
            let s = two_arcs();
            if let Ok((_, outer, inner)) = s.split(u, v) {
                prop_assert_eq!(outer.width + inner.width, s.width);
            }
        }
    }
}
