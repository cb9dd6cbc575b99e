use super::chord::{Chord, FiniteLamination};
use super::point::Point;
use crate::error::{Error, Result};

/// A right-continuous piecewise constant function on `[0, 1]`.
///
/// `values[i]` holds on `[breakpoints[i-1], breakpoints[i])`, with
/// `values[0]` on `[0, breakpoints[0])`; the value at 1 is the left limit.
/// Equal adjacent values are kept as they are.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction {
    breakpoints: Vec<Point>,
    values: Vec<f64>,
}

impl StepFunction {
    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if breakpoints.iter().any(|&x| !(x > 0.0 && x < 1.0)) {
            return Err(Error::InvalidArgument(
                "breakpoints must lie in (0, 1)".into(),
            ));
        }
        Self::from_points(breakpoints.into_iter().map(Point::clamped).collect(), values)
    }

    /// Same as [`StepFunction::new`] with exact breakpoints.
    pub fn from_points(breakpoints: Vec<Point>, values: Vec<f64>) -> Result<Self> {
        if values.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidArgument(format!(
                "{} breakpoints need {} values, got {}",
                breakpoints.len(),
                breakpoints.len() + 1,
                values.len()
            )));
        }
        if breakpoints.iter().any(|&x| !(x > Point::ZERO && x < Point::ONE)) {
            return Err(Error::InvalidArgument(
                "breakpoints must lie in (0, 1)".into(),
            ));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if values.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(Error::InvalidArgument(
                "values must be finite and non-negative".into(),
            ));
        }
        Ok(StepFunction {
            breakpoints,
            values,
        })
    }

    pub fn zero() -> Self {
        StepFunction {
            breakpoints: Vec::new(),
            values: vec![0.0],
        }
    }

    /// Breakpoints rounded to `f64`.
    pub fn breakpoints(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.breakpoints.iter().map(|p| p.to_f64())
    }

    pub fn breakpoint_points(&self) -> &[Point] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Index of the piece that owns `s` (right-continuous; `s = 1` belongs
    /// to the last piece).
    pub fn piece_index(&self, s: f64) -> Result<usize> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::OutOfRange(s));
        }
        let p = Point::clamped(s);
        Ok(self.breakpoints.partition_point(|&x| x <= p))
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        Ok(self.values[self.piece_index(s)?])
    }

    /// Value at an exact point.
    pub fn eval_point(&self, p: Point) -> f64 {
        self.values[self.breakpoints.partition_point(|&x| x <= p)]
    }

    /// Largest piece value.
    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// Multiplies every value by `factor >= 0`.
    pub fn scaled(&self, factor: f64) -> StepFunction {
        StepFunction {
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// `f(s) + f(t) - 2 inf{f(r) : r between s and t}`.
    pub fn tree_distance(&self, s: f64, t: f64) -> Result<f64> {
        let (i, j) = (self.piece_index(s)?, self.piece_index(t)?);
        let (lo, hi) = (i.min(j), i.max(j));
        let m = self.values[lo..=hi]
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        Ok(self.values[i] + self.values[j] - 2.0 * m)
    }

    /// Chords `[[x, y]]` between breakpoints that are compatible with the
    /// function: some level `w` has `f > w` on `(x, y)` and
    /// `max(f(x-), f(y)) <= w`.
    pub fn lamination(&self) -> FiniteLamination {
        let k = self.breakpoints.len();
        let mut chords = Vec::new();
        // breakpoint i (0-based) has left value values[i] and right value values[i+1]
        for i in 0..k {
            let left = self.values[i];
            let mut run_min = f64::INFINITY;
            for j in (i + 1)..k {
                run_min = run_min.min(self.values[j]);
                if run_min <= left {
                    break;
                }
                if run_min > self.values[j + 1] {
                    chords.push(
                        Chord::from_points(self.breakpoints[i], self.breakpoints[j])
                            .expect("breakpoints are distinct points of (0, 1)"),
                    );
                }
            }
        }
        FiniteLamination::from_trusted(chords)
    }
}

/// Chords compatible with `f`; see [`StepFunction::lamination`].
pub fn lamination_from_step(f: &StepFunction) -> FiniteLamination {
    f.lamination()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single() -> StepFunction {
        StepFunction::new(vec![0.2, 0.6], vec![0.0, 1.0, 0.0]).unwrap()
    }

    fn nested() -> StepFunction {
        StepFunction::new(vec![0.2, 0.3, 0.5, 0.6], vec![0.0, 1.0, 2.0, 1.0, 0.0]).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = single();
        assert_eq!(f.eval(0.3).unwrap(), 1.0);
        assert_eq!(f.eval(0.2).unwrap(), 1.0);
        assert_eq!(f.eval(0.6).unwrap(), 0.0);
        assert_eq!(f.eval(1.0).unwrap(), 0.0);
        assert_eq!(f.eval(0.0).unwrap(), 0.0);
        assert!(matches!(f.eval(1.5), Err(Error::OutOfRange(_))));
        assert!(f.eval(-0.1).is_err());
    }

    #[test]
    fn rejects_malformed() {
        assert!(StepFunction::new(vec![0.5, 0.4], vec![0.0; 3]).is_err());
        assert!(StepFunction::new(vec![0.5], vec![0.0]).is_err());
        assert!(StepFunction::new(vec![0.0], vec![0.0, 1.0]).is_err());
    }

    #[test]
    fn lamination_round_trips() {
        let lam = single().lamination();
        assert_eq!(lam.len(), 1);
        assert_eq!((lam.chords()[0].a(), lam.chords()[0].b()), (0.2, 0.6));
        assert!(StepFunction::zero().lamination().is_empty());

        let expected =
            FiniteLamination::from_chords(vec![Chord::new(0.2, 0.6).unwrap(), Chord::new(0.3, 0.5).unwrap()])
                .unwrap();
        assert!(nested().lamination().same_chords(&expected));
    }

    #[test]
    fn siblings_are_not_joined() {
        let f = StepFunction::new(vec![0.2, 0.3, 0.4, 0.5], vec![0.0, 1.0, 0.0, 1.0, 0.0]).unwrap();
        let lam = f.lamination();
        assert_eq!(lam.len(), 2);
    }

    #[test]
    fn tree_distance_on_nested() {
        let f = nested();
        assert_eq!(f.tree_distance(0.4, 0.1).unwrap(), 2.0);
        assert_eq!(f.tree_distance(0.25, 0.55).unwrap(), 0.0);
        assert_eq!(f.tree_distance(0.4, 0.7).unwrap(), 2.0);
    }
}
