//! Goodness-of-fit experiments for how trials and chords divide between
//! the two sides of the first chord.

use rayon::prelude::*;

use super::process::Process;
use super::stats::{chi_square, multinomial_pmf, ChiSquare};
use crate::error::Result;
use crate::fragmentation::{FragState, Mode};

/// Self-similar process with the first chord fixed at `(u, v)`: over the
/// next `n - 1` trials count the pairs landing on the side of 0 (`I0`),
/// inside the first chord (`I1`), or straddling it (`F`), and test the
/// counts against `Multi(n-1; (1-(v-u))², (v-u)², 2(v-u)(1-(v-u)))`.
pub fn split_law_selfsimilar(n: u64, u: f64, v: f64, seed: u64, replicates: u64) -> Result<ChiSquare> {
    let m = n - 1;
    let counts: Vec<(u64, u64)> = (0..replicates)
        .into_par_iter()
        .map(|r| {
            let mut first = FragState::new(Mode::SelfSimilar);
            first.trial_selfsimilar(u, v)?;
            let mut p = Process::from_state(first, seed, r);
            let (mut i0, mut i1) = (0, 0);
            for _ in 0..m {
                let t = p.step()?;
                // sides are read after the step; the first chord never moves
                let st = p.state();
                match (st.first_branch(t.u)?, st.first_branch(t.v)?) {
                    (Some(0), Some(0)) => i0 += 1,
                    (Some(1), Some(1)) => i1 += 1,
                    _ => {}
                }
            }
            Ok((i0, i1))
        })
        .collect::<Result<Vec<_>>>()?;
    let w = v - u;
    let probs = [(1.0 - w) * (1.0 - w), w * w, 2.0 * w * (1.0 - w)];
    // cells: every (i0, i1) with i0 + i1 <= m
    let mut cells = Vec::new();
    for a in 0..=m {
        for b in 0..=m - a {
            cells.push((a, b));
        }
    }
    let observed: Vec<u64> = cells
        .iter()
        .map(|&c| counts.iter().filter(|&&x| x == c).count() as u64)
        .collect();
    let expected: Vec<f64> = cells.iter().map(|&(a, b)| multinomial_pmf(&[a, b, m - a - b], &probs)).collect();
    Ok(chi_square(&observed, &expected))
}

/// Homogeneous process run for `n` steps: the number of chords inserted
/// inside the first chord, tested for uniformity on `{0, .., n-1}`.
pub fn split_law_homogeneous(n: u64, seed: u64, replicates: u64) -> Result<ChiSquare> {
    let counts: Vec<usize> = (0..replicates)
        .into_par_iter()
        .map(|r| {
            let mut p = Process::new(Mode::Homogeneous, seed, r);
            p.advance_to(n)?;
            Ok(p.state().chords_below(1))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut observed = vec![0u64; n as usize];
    for c in counts {
        observed[c] += 1;
    }
    Ok(chi_square(&observed, &vec![1.0 / n as f64; n as usize]))
}
