//! Discrete chord-insertion processes and their dual trees.
//!
//! A [`FragState`] consumes a stream of raw uniforms supplied by the
//! caller, so every run is replayable from its trial log.

mod address;
mod family;
mod state;

pub use address::Address;
pub use family::CoupledFamily;
pub use state::{FragNode, FragState, Mode, NodeId, Split, TrialOutcome};
