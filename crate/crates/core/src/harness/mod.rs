//! Experiment drivers, persistence and rendering. This is the only part
//! of the crate that draws randomness for the discrete processes.

mod commands;
mod config;
pub mod io;
mod process;
mod selftest;
mod splits;
pub mod stats;
pub mod svg;

pub use commands::{
    cmd_converge, cmd_dimension, cmd_mean_table, cmd_render, cmd_simulate, decade_schedule, dimension_estimate,
    monte_carlo_mean, ConvergeReport, ConvergeRow, DimensionReport, QuantileRow, SimulationRow,
};
pub use config::{sha256_hex, RunConfig, RunManifest};
pub use io::TrialRecord;
pub use process::{run_process, Process};
pub use selftest::{cmd_selftest, Check, SelftestReport};
pub use splits::{split_law_homogeneous, split_law_selfsimilar};
pub use stats::{ChiSquare, MeanEstimate};
