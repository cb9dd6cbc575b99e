use super::io::TrialRecord;
use crate::error::{Error, Result};
use crate::fragmentation::{FragState, Mode};
use crate::rng::{Purpose, Stream};

/// A discrete process together with the keyed streams that drive it.
#[derive(Debug, Clone)]
pub struct Process {
    state: FragState,
    trials: Stream,
    choice: Stream,
    log: Option<Vec<TrialRecord>>,
}

impl Process {
    pub fn new(mode: Mode, seed: u64, replicate: u64) -> Self {
        Process {
            state: FragState::new(mode),
            trials: Stream::replicate(seed, Purpose::Trials, replicate),
            choice: Stream::replicate(seed, Purpose::FragmentChoice, replicate),
            log: None,
        }
    }

    /// Keep every consumed trial for replay.
    pub fn with_log(mut self) -> Self {
        self.log = Some(Vec::new());
        self
    }

    /// Starts from an existing state; used to fix the first chord.
    pub fn from_state(state: FragState, seed: u64, replicate: u64) -> Self {
        let mode = state.mode();
        Process {
            state,
            ..Self::new(mode, seed, replicate)
        }
    }

    pub fn state(&self) -> &FragState {
        &self.state
    }

    pub fn into_state(self) -> FragState {
        self.state
    }

    pub fn log(&self) -> Option<&[TrialRecord]> {
        self.log.as_deref()
    }

    /// Consumes one trial. A pair that rounds onto an existing endpoint
    /// (a null event for the exact process) is redrawn.
    pub fn step(&mut self) -> Result<TrialRecord> {
        const REDRAWS: usize = 32;
        let leaf = match self.state.mode() {
            Mode::SelfSimilar => None,
            Mode::Homogeneous => Some(self.choice.below(self.state.n_leaves() as u64) as usize),
        };
        let mut attempt = 0;
        let record = loop {
            let (u, v) = match leaf {
                None => (self.trials.uniform(), self.trials.uniform()),
                Some(_) => self.trials.ordered_pair(),
            };
            let outcome = match leaf {
                None => self.state.trial_selfsimilar(u, v).map(|_| ()),
                Some(j) => self.state.trial_homogeneous(j, u, v).map(|_| ()),
            };
            match outcome {
                Ok(()) => break TrialRecord { leaf, u, v },
                Err(Error::EndpointCollision(_) | Error::DegenerateChord(_)) if attempt < REDRAWS => attempt += 1,
                Err(e) => return Err(e),
            }
        };
        if let Some(log) = &mut self.log {
            log.push(record);
        }
        Ok(record)
    }

    /// Runs until `n` trials have been consumed in total.
    pub fn advance_to(&mut self, n: u64) -> Result<()> {
        while self.state.n_trials() < n {
            self.step()?;
        }
        Ok(())
    }
}

/// State after `n` trials of replicate `replicate`.
pub fn run_process(mode: Mode, n: u64, seed: u64, replicate: u64) -> Result<FragState> {
    let mut p = Process::new(mode, seed, replicate);
    p.advance_to(n)?;
    Ok(p.into_state())
}
