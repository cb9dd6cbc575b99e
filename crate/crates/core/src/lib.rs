//! Random recursive laminations of the disk.
//!
//! Chords are thrown into the disk one at a time; a chord is kept when it
//! does not cross those already present. This crate simulates the
//! resulting fragmentations, their dual trees and height processes, the
//! limit processes they converge to, and the exact mean sequences that
//! pin the scaling constants.

pub mod analytics;
pub mod error;
pub mod fragmentation;
pub mod harness;
pub mod limit;
pub mod metrics;
pub mod model;
pub mod rng;

pub use error::{Error, Result};
pub use fragmentation::{Address, CoupledFamily, FragState, Mode, TrialOutcome};
pub use model::{chords_cross, lamination_from_step, Arc, ArcSet, Chord, FiniteLamination, StepFunction};
