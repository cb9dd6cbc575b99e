use super::point::Point;
use crate::error::{Error, Result};

/// A straight chord of the disk joining two circle points, stored with
/// `a < b`. The circle is the unit interval with `0` and `1` glued.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    a: Point,
    b: Point,
}

impl Chord {
    /// Builds a chord from two endpoints given in any order.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        for p in [x, y] {
            if !(0.0..1.0).contains(&p) {
                return Err(Error::OutOfRange(p));
            }
        }
        Self::from_points(Point::clamped(x), Point::clamped(y))
    }

    pub fn from_points(x: Point, y: Point) -> Result<Self> {
        for p in [x, y] {
            if p >= Point::ONE {
                return Err(Error::OutOfRange(p.to_f64()));
            }
        }
        if x == y {
            return Err(Error::DegenerateChord(x.to_f64()));
        }
        Ok(Chord {
            a: x.min(y),
            b: x.max(y),
        })
    }

    pub fn a(&self) -> f64 {
        self.a.to_f64()
    }

    pub fn b(&self) -> f64 {
        self.b.to_f64()
    }

    /// Exact endpoints `(a, b)`.
    pub fn points(&self) -> (Point, Point) {
        (self.a, self.b)
    }

    /// Whether `s` lies on the far side of the chord as seen from circle
    /// point 0, with the right-continuous convention at the endpoints.
    pub fn separates_from_origin(&self, s: f64) -> bool {
        self.separates_point(Point::clamped(s))
    }

    pub fn separates_point(&self, p: Point) -> bool {
        self.a <= p && p < self.b
    }

    /// Length of the shorter circular arc cut off by the chord.
    pub fn span(&self) -> f64 {
        let d = Point::width_to_f64(self.a.width_to(self.b));
        d.min(1.0 - d)
    }
}

/// True iff the two chords strictly cross, i.e. exactly one endpoint of
/// `c2` lies in the open arc `(c1.a, c1.b)`.
pub fn chords_cross(c1: &Chord, c2: &Chord) -> bool {
    let inside = |p: Point| c1.a < p && p < c1.b;
    inside(c2.a) != inside(c2.b)
}

fn shares_endpoint(c1: &Chord, c2: &Chord) -> bool {
    c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b
}

/// A finite set of pairwise non-crossing chords with distinct endpoints.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FiniteLamination {
    chords: Vec<Chord>,
}

impl FiniteLamination {
    pub fn new() -> Self {
        Self::default()
    }

    /// Checks every pair; quadratic, meant for tests and small inputs.
    pub fn from_chords(chords: Vec<Chord>) -> Result<Self> {
        let mut lam = FiniteLamination::new();
        for c in chords {
            lam.insert(c)?;
        }
        Ok(lam)
    }

    /// Inserts a chord, rejecting crossings and shared endpoints.
    pub fn insert(&mut self, chord: Chord) -> Result<()> {
        for c in &self.chords {
            if shares_endpoint(c, &chord) {
                let p = if c.a == chord.a || c.b == chord.a {
                    chord.a
                } else {
                    chord.b
                };
                return Err(Error::EndpointCollision(p.to_f64()));
            }
            if chords_cross(c, &chord) {
                return Err(Error::InvalidArgument(format!(
                    "chord ({}, {}) crosses ({}, {})",
                    chord.a(),
                    chord.b(),
                    c.a(),
                    c.b()
                )));
            }
        }
        self.chords.push(chord);
        Ok(())
    }

    /// Wraps chords already known to be non-crossing (e.g. produced by the
    /// fragmentation simulator) without the quadratic check.
    pub(crate) fn from_trusted(chords: Vec<Chord>) -> Self {
        FiniteLamination { chords }
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// Chords sorted by `(a, b)`, for set comparisons.
    pub fn sorted_chords(&self) -> Vec<Chord> {
        let mut v = self.chords.clone();
        v.sort();
        v
    }

    /// Set equality, ignoring insertion order.
    pub fn same_chords(&self, other: &FiniteLamination) -> bool {
        self.sorted_chords() == other.sorted_chords()
    }

    /// Number of chords met by the segment from circle point 0 to `s`.
    pub fn crossing_count(&self, s: f64) -> usize {
        self.chords
            .iter()
            .filter(|c| c.separates_from_origin(s))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: f64, b: f64) -> Chord {
        Chord::new(a, b).unwrap()
    }

    #[test]
    fn cross_examples() {
        assert!(chords_cross(&ch(0.2, 0.6), &ch(0.4, 0.8)));
        assert!(!chords_cross(&ch(0.1, 0.2), &ch(0.3, 0.4)));
        assert!(!chords_cross(&ch(0.1, 0.5), &ch(0.2, 0.4)));
    }

    #[test]
    fn normalizes_and_rejects_degenerate() {
        let c = ch(0.7, 0.1);
        assert_eq!((c.a(), c.b()), (0.1, 0.7));
        assert!(matches!(Chord::new(0.3, 0.3), Err(Error::DegenerateChord(_))));
        assert!(matches!(Chord::new(1.2, 0.3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn lamination_rejects_crossing_and_shared_endpoints() {
        let mut lam = FiniteLamination::new();
        lam.insert(ch(0.2, 0.6)).unwrap();
        assert!(lam.insert(ch(0.4, 0.8)).is_err());
        assert!(matches!(
            lam.insert(ch(0.6, 0.9)),
            Err(Error::EndpointCollision(p)) if p == 0.6
        ));
        lam.insert(ch(0.3, 0.5)).unwrap();
        assert_eq!(lam.crossing_count(0.4), 2);
        assert_eq!(lam.crossing_count(0.25), 1);
        assert_eq!(lam.crossing_count(0.1), 0);
    }
}
