//! Distances between height processes, trees and laminations, and
//! covering-number estimates of tree dimension.
//!
//! The Gromov-Hausdorff distance is never computed exactly; the bound
//! `d_GH(T_f, T_g) <= 2 ||f - g||` stands in for it.

mod cover;
mod grid;
mod hausdorff;
mod tree;

pub use cover::{boxdim_estimate, covering_number, dyadic_deltas, BoxDimEstimate, CoverBracket};
pub use grid::{gh_upper_bound, step_sup_diff, sup_diff, uniform_grid, GridSample};
pub use hausdorff::{circle_point, hausdorff_chords, hausdorff_laminations};
pub use tree::{DistanceMatrix, PseudoMetric, TreePointCloud};

use crate::analytics::{self, Constants};
use crate::error::{Error, Result};
use crate::fragmentation::{FragState, Mode};
use crate::model::{lamination_from_step, FiniteLamination, StepFunction};

/// Factor turning `C_n` into `X_n`: `κ B(β+1, β+1) / μ(n)` in the
/// self-similar case, `1 / (Γ(4/3) μ^h(n))` in the homogeneous one.
pub fn rescale_factor(mode: Mode, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("rescaling needs n >= 1".into()));
    }
    Ok(match mode {
        Mode::SelfSimilar => Constants::compute().c / analytics::mean_selfsimilar(n)?,
        Mode::Homogeneous => 1.0 / (analytics::gamma(4.0 / 3.0)? * analytics::mean_homogeneous_gamma(n)),
    })
}

/// `X_n`, the height process of `state` rescaled to have the limit's mean.
/// `n` is the number of trials the state has consumed.
pub fn rescaled_discrete(state: &FragState, n: u64) -> Result<StepFunction> {
    Ok(state.height_function().scaled(rescale_factor(state.mode(), n)?))
}

/// `X_n` sampled on `grid`.
pub fn rescaled_sample(state: &FragState, n: u64, grid: Vec<f64>) -> Result<GridSample> {
    GridSample::from_step(&rescaled_discrete(state, n)?, grid)
}

/// Chords compatible with a sampled function read as a step function on
/// its grid.
pub fn lamination_from_grid(sample: &GridSample) -> Result<FiniteLamination> {
    Ok(lamination_from_step(&sample.to_step()?))
}
