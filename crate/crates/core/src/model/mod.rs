//! Geometric and functional primitives: circle points, chords, fragment
//! arc sets, step functions and finite laminations.

mod arcset;
mod chord;
mod point;
mod step;

pub use arcset::{Arc, ArcSet};
pub use chord::{chords_cross, Chord, FiniteLamination};
pub use point::Point;
pub use step::{lamination_from_step, StepFunction};
