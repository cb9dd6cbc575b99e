//! Keyed counter-based random streams.
//!
//! Every stream is a ChaCha8 keystream whose key packs
//! `(seed, purpose, index)`; the 64-bit stream id carries a small
//! sub-index. A stream is therefore a pure function of its key and never
//! depends on how many draws other streams have made, which keeps runs
//! identical under any thread count.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// What a stream is used for. The numeric tags are part of the output
/// format: changing them changes every result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u64)]
pub enum Purpose {
    /// Uniform pairs consumed by the discrete processes.
    Trials = 1,
    /// Fragment labels for the homogeneous process.
    FragmentChoice = 2,
    /// Per-node `(U, V, W)` of the limit recursion.
    LimitNodes = 3,
    /// Uniform query points `ξ`.
    QueryPoints = 4,
    /// Anything a test or experiment needs beyond the above.
    Auxiliary = 5,
}

/// A reproducible uniform stream.
#[derive(Debug, Clone)]
pub struct Stream {
    rng: ChaCha8Rng,
}

impl Stream {
    pub fn new(seed: u64, purpose: Purpose, index: u128, sub: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&(purpose as u64).to_le_bytes());
        key[16..].copy_from_slice(&index.to_le_bytes());
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(sub);
        Stream { rng }
    }

    /// Stream for replicate `replicate` of an experiment.
    pub fn replicate(seed: u64, purpose: Purpose, replicate: u64) -> Self {
        Self::new(seed, purpose, replicate as u128, 0)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on the open interval (0, 1): midpoints of a grid of
    /// spacing 2^-52, so both ends are representable and excluded.
    pub fn uniform(&mut self) -> f64 {
        ((self.next_u64() >> 12) as f64 + 0.5) * (1.0 / (1u64 << 52) as f64)
    }

    /// Uniform on `{0, .., n-1}` by Lemire's widening multiply with
    /// rejection, so there is no modulo bias.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let threshold = n.wrapping_neg() % n;
        loop {
            let m = (self.next_u64() as u128) * (n as u128);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }

    /// Ordered pair `(min, max)` of two uniforms: density `2` on the
    /// triangle `0 < u < v < 1`.
    pub fn ordered_pair(&mut self) -> (f64, f64) {
        let (x, y) = (self.uniform(), self.uniform());
        if x < y {
            (x, y)
        } else {
            (y, x)
        }
    }
}
