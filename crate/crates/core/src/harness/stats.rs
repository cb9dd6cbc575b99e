use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::analytics::ln_gamma;

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanEstimate {
    pub mean: f64,
    pub se: f64,
    pub count: usize,
}

impl MeanEstimate {
    pub fn from_samples(xs: &[f64]) -> Self {
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
        MeanEstimate {
            mean,
            se: (var / n).sqrt(),
            count: xs.len(),
        }
    }

    /// `|mean - target|` in standard errors.
    pub fn z_score(&self, target: f64) -> f64 {
        (self.mean - target).abs() / self.se
    }
}

pub fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Empirical quantile by linear interpolation between order statistics.
pub fn quantile(xs: &[f64], p: f64) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let h = p * (v.len() - 1) as f64;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    v[lo] + (h - lo as f64) * (v[hi] - v[lo])
}

/// Pearson chi-square goodness-of-fit result.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiSquare {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    /// `(observed, expected)` per cell after merging.
    pub cells: Vec<(u64, f64)>,
}

/// Goodness of fit of `observed` against `probs`. Cells are taken in the
/// given order and merged until every expected count is at least 5.
pub fn chi_square(observed: &[u64], probs: &[f64]) -> ChiSquare {
    assert_eq!(observed.len(), probs.len());
    let total: u64 = observed.iter().sum();
    let mut cells: Vec<(u64, f64)> = Vec::new();
    let (mut o, mut e) = (0u64, 0.0);
    for (&ob, &p) in observed.iter().zip(probs) {
        o += ob;
        e += p * total as f64;
        if e >= 5.0 {
            cells.push((o, e));
            o = 0;
            e = 0.0;
        }
    }
    if e > 0.0 || o > 0 {
        match cells.last_mut() {
            Some(last) => {
                last.0 += o;
                last.1 += e;
            }
            None => cells.push((o, e)),
        }
    }
    let statistic = cells.iter().map(|&(o, e)| (o as f64 - e).powi(2) / e).sum();
    let dof = cells.len().saturating_sub(1).max(1);
    let p_value = ChiSquared::new(dof as f64).expect("positive dof").sf(statistic);
    ChiSquare {
        statistic,
        dof,
        p_value,
        cells,
    }
}

/// Multinomial probability of `counts` with cell probabilities `p`.
pub fn multinomial_pmf(counts: &[u64], p: &[f64]) -> f64 {
    let n: u64 = counts.iter().sum();
    let mut ln = ln_gamma(n as f64 + 1.0).expect("positive");
    for (&k, &pk) in counts.iter().zip(p) {
        ln -= ln_gamma(k as f64 + 1.0).expect("positive");
        if k > 0 {
            ln += k as f64 * pk.ln();
        }
    }
    ln.exp()
}
