use super::tree::PseudoMetric;
use crate::error::{Error, Result};

/// Greedy bounds around the covering number `N(X, δ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverBracket {
    pub delta: f64,
    /// Size of a greedy δ-net; every point is within δ of a center, so
    /// this bounds `N(X, δ)` from above.
    pub cover: usize,
    /// Size of a greedy set with pairwise distances above `2δ`; each of
    /// its points needs its own ball, so this bounds `N(X, δ)` from below.
    pub packing: usize,
}

/// Scan the points in index order, opening a ball of radius `r` at each
/// point not yet covered.
fn greedy_net<M: PseudoMetric + ?Sized>(cloud: &M, r: f64) -> usize {
    let mut covered = vec![false; cloud.len()];
    let mut centers = 0;
    for i in 0..cloud.len() {
        if covered[i] {
            continue;
        }
        centers += 1;
        cloud.ball(i, r, &mut |j| covered[j] = true);
    }
    centers
}

pub fn covering_number<M: PseudoMetric + ?Sized>(cloud: &M, delta: f64) -> Result<CoverBracket> {
    if !(delta > 0.0) {
        return Err(Error::InvalidArgument(format!("delta must be positive, got {delta}")));
    }
    Ok(CoverBracket {
        delta,
        cover: greedy_net(cloud, delta),
        packing: greedy_net(cloud, 2.0 * delta),
    })
}

/// Least-squares fit of `log N(δ)` against `log(1/δ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxDimEstimate {
    /// Slope through the bracket midpoints `sqrt(cover · packing)`.
    pub slope: f64,
    /// Standard error of `slope` from the regression residuals.
    pub slope_se: f64,
    pub cover_slope: f64,
    pub packing_slope: f64,
    /// `cover_slope - packing_slope`.
    pub spread: f64,
    /// All scales, including the two left out of the fit.
    pub table: Vec<CoverBracket>,
}

/// Dyadic radii `2^-k` between `delta_max` and `delta_min`, largest first.
pub fn dyadic_deltas(delta_min: f64, delta_max: f64) -> Result<Vec<f64>> {
    if !(delta_min > 0.0 && delta_min < delta_max) {
        return Err(Error::InvalidArgument(format!("bad delta range [{delta_min}, {delta_max}]")));
    }
    let k0 = (-delta_max.log2()).ceil() as i32;
    let k1 = (-delta_min.log2()).floor() as i32;
    Ok((k0..=k1).map(|k| 2f64.powi(-k)).collect())
}

fn fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let rss: f64 = x.iter().zip(y).map(|(a, b)| (b - my - slope * (a - mx)).powi(2)).sum();
    let se = if x.len() > 2 { (rss / (n - 2.0) / sxx).sqrt() } else { 0.0 };
    (slope, se)
}

/// Box-dimension estimate over the dyadic radii in `[delta_min,
/// delta_max]`. The largest and smallest radius are tabulated but left out
/// of the fit.
pub fn boxdim_estimate<M: PseudoMetric + Sync + ?Sized>(cloud: &M, delta_min: f64, delta_max: f64) -> Result<BoxDimEstimate> {
    use rayon::prelude::*;
    let deltas = dyadic_deltas(delta_min, delta_max)?;
    if deltas.len() < 4 {
        return Err(Error::InvalidArgument(format!(
            "need at least 4 dyadic radii, [{delta_min}, {delta_max}] has {}",
            deltas.len()
        )));
    }
    if cloud.is_empty() {
        return Err(Error::Empty);
    }
    let table: Vec<CoverBracket> = deltas
        .par_iter()
        .map(|&d| covering_number(cloud, d))
        .collect::<Result<_>>()?;
    let inner = &table[1..table.len() - 1];
    let x: Vec<f64> = inner.iter().map(|b| (1.0 / b.delta).ln()).collect();
    let ln = |v: usize| (v as f64).ln();
    let mid: Vec<f64> = inner.iter().map(|b| 0.5 * (ln(b.cover) + ln(b.packing))).collect();
    let cov: Vec<f64> = inner.iter().map(|b| ln(b.cover)).collect();
    let pack: Vec<f64> = inner.iter().map(|b| ln(b.packing)).collect();
    let (slope, slope_se) = fit(&x, &mid);
    let (cover_slope, _) = fit(&x, &cov);
    let (packing_slope, _) = fit(&x, &pack);
    Ok(BoxDimEstimate {
        slope,
        slope_se,
        cover_slope,
        packing_slope,
        spread: cover_slope - packing_slope,
        table,
    })
}
