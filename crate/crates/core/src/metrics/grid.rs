use crate::error::{Error, Result};
use crate::model::{Point, StepFunction};

/// A function sampled on a strictly increasing grid of `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSample {
    grid: Vec<f64>,
    values: Vec<f64>,
}

/// `points` equally spaced points from 0 to 1 inclusive.
pub fn uniform_grid(points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..points).map(|i| i as f64 / (points - 1) as f64).collect(),
    }
}

impl GridSample {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::GridMismatch(grid.len(), values.len()));
        }
        if grid.iter().any(|&x| !(0.0..=1.0).contains(&x)) {
            return Err(Error::InvalidGrid("grid points must lie in [0, 1]"));
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid("grid must be strictly increasing"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid("values must be finite"));
        }
        Ok(GridSample { grid, values })
    }

    pub fn from_fn(grid: Vec<f64>, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.iter().map(|&s| f(s)).collect();
        Self::new(grid, values)
    }

    pub fn from_step(f: &StepFunction, grid: Vec<f64>) -> Result<Self> {
        let values = grid.iter().map(|&s| f.eval(s)).collect::<Result<Vec<_>>>()?;
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn scaled(&self, factor: f64) -> GridSample {
        GridSample {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// The sample read as a right-continuous step function: value
    /// `values[i]` on `[grid[i], grid[i+1])`.
    pub fn to_step(&self) -> Result<StepFunction> {
        let n = self.grid.len();
        if n < 2 || self.grid[0] != 0.0 || self.grid[n - 1] != 1.0 {
            return Err(Error::InvalidGrid("step reading needs a grid from 0 to 1"));
        }
        StepFunction::new(self.grid[1..n - 1].to_vec(), self.values[..n - 1].to_vec())
    }
}

/// `max |f - g|` over a common grid.
pub fn sup_diff(f: &GridSample, g: &GridSample) -> Result<f64> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch(f.len(), g.len()));
    }
    Ok(f.values
        .iter()
        .zip(&g.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

/// Exact `sup |f - g|` of two step functions: both are constant between
/// consecutive points of the union of their breakpoints.
pub fn step_sup_diff(f: &StepFunction, g: &StepFunction) -> f64 {
    let mut points: Vec<Point> = std::iter::once(Point::ZERO)
        .chain(f.breakpoint_points().iter().copied())
        .chain(g.breakpoint_points().iter().copied())
        .collect();
    points.sort();
    points.dedup();
    points
        .into_iter()
        .map(|s| (f.eval_point(s) - g.eval_point(s)).abs())
        .fold(0.0, f64::max)
}

/// Upper bound `2 ||f - g||` on the Gromov-Hausdorff distance between the
/// trees encoded by `f` and `g`, with the sup taken over the grid.
pub fn gh_upper_bound(f: &GridSample, g: &GridSample) -> Result<f64> {
    Ok(2.0 * sup_diff(f, g)?)
}
