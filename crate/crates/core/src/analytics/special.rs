//! Real log-gamma and beta functions.

use crate::error::{Error, Result};

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} / (2k (2k - 1)) for k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// Below this the argument is shifted up before using the asymptotic series.
const SHIFT_TO: f64 = 12.0;

fn stirling_tail(x: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut acc = 0.0;
    for c in STIRLING.iter().rev() {
        acc = acc * inv2 + c;
    }
    acc / x
}

fn check_positive(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("gamma argument must be positive and finite, got {x}")))
    }
}

/// Number of unit shifts that bring `x` to at least `SHIFT_TO`, with the
/// product `x (x+1) ... (x+k-1)`.
fn shift(x: f64) -> (f64, f64) {
    let mut x = x;
    let mut prod = 1.0;
    while x < SHIFT_TO {
        prod *= x;
        x += 1.0;
    }
    (x, prod)
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    check_positive(x)?;
    let (y, prod) = shift(x);
    Ok((y - 0.5) * y.ln() - y + HALF_LN_2PI + stirling_tail(y) - prod.ln())
}

pub fn gamma(x: f64) -> Result<f64> {
    Ok(ln_gamma(x)?.exp())
}

/// `ln Γ(x) - ln Γ(y)`, accurate when `x` and `y` are large and close.
pub fn ln_gamma_ratio(x: f64, y: f64) -> Result<f64> {
    check_positive(x)?;
    check_positive(y)?;
    if x.min(y) < SHIFT_TO {
        return Ok(ln_gamma(x)? - ln_gamma(y)?);
    }
    let d = x - y;
    // (x-1/2) ln x - (y-1/2) ln y, rearranged to avoid cancellation
    let lead = (y - 0.5) * (d / y).ln_1p() + d * x.ln();
    Ok(lead - d + stirling_tail(x) - stirling_tail(y))
}

pub fn ln_beta(x: f64, y: f64) -> Result<f64> {
    Ok(ln_gamma(x)? + ln_gamma(y)? - ln_gamma(x + y)?)
}

/// Euler's beta function `B(x, y) = Γ(x)Γ(y)/Γ(x+y)`.
pub fn beta_fn(x: f64, y: f64) -> Result<f64> {
    Ok(ln_beta(x, y)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn known_values() {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!(rel(gamma(2.5).unwrap(), 0.75 * sqrt_pi) < 1e-14);
        assert!(rel(gamma(0.5).unwrap(), sqrt_pi) < 1e-14);
        assert!((beta_fn(1.0, 1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!(rel(gamma(1.0 / 3.0).unwrap(), 2.678_938_534_707_747_6) < 1e-14);
        assert!(rel(gamma(10.0).unwrap(), 362_880.0) < 1e-14);
        assert!(ln_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(ln_gamma(2.0).unwrap().abs() < 1e-14);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
        assert!(ln_gamma(f64::NAN).is_err());
        assert!(beta_fn(1.0, 0.0).is_err());
    }

    #[test]
    fn agrees_with_statrs_on_range() {
        let mut x = 1e-3;
        while x < 1e3 {
            let ours = gamma(x).unwrap();
            let theirs = statrs::function::gamma::gamma(x);
            if theirs.is_finite() {
                assert!(rel(ours, theirs) < 1e-12, "x = {x}: {ours} vs {theirs}");
            }
            let lg = statrs::function::gamma::ln_gamma(x);
            assert!((ln_gamma(x).unwrap() - lg).abs() <= 1e-12 * lg.abs().max(1.0), "x = {x}");
            x *= 1.07;
        }
    }

    #[test]
    fn ratio_matches_difference() {
        for &(x, y) in &[(5.0, 3.0), (12.5, 20.25), (1000.0 + 4.0 / 3.0, 1001.0), (0.3, 40.0)] {
            let direct = ln_gamma(x).unwrap() - ln_gamma(y).unwrap();
            assert!((ln_gamma_ratio(x, y).unwrap() - direct).abs() < 1e-11);
        }
        // Γ(n+1)/Γ(n) = n with large n
        let n = 1e5;
        assert!((ln_gamma_ratio(n + 1.0, n).unwrap() - n.ln()).abs() < 1e-14);
    }
}
