//! The mean height `μ(n) = E[C_n(ξ)]` of the self-similar process.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::special::ln_gamma_ratio;
use crate::error::{Error, Result};

/// `μ(1..=n_max)` from the recurrence
/// `μ(n) = 1/3 + Σ_{k<n} μ(k) π_{n,k}` with the splitting kernel
/// `π_{n,k} = 2 B(k+1, n-k) C(n-1, k) - B(k+3/2, n-k) C(n-1, k)`.
///
/// The first kernel term is exactly `1/n`; the second is evaluated as a
/// difference of log-gamma ratios. O(n²).
pub fn mean_recurrence(n_max: usize) -> Vec<f64> {
    // a[k] = ln Γ(k+3/2) - ln Γ(k+1),  r[n] = ln Γ(n+3/2) - ln Γ(n)
    let a: Vec<f64> = (0..=n_max)
        .map(|k| ln_gamma_ratio(k as f64 + 1.5, k as f64 + 1.0).expect("positive"))
        .collect();
    let mut mu = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let nf = n as f64;
        let r = ln_gamma_ratio(nf + 1.5, nf).expect("positive");
        let mut acc = 0.0;
        for k in 1..n {
            let kernel = 2.0 / nf - (a[k] - r).exp();
            acc += mu[k - 1] * kernel;
        }
        mu.push(1.0 / 3.0 + acc);
    }
    mu
}

/// The same recurrence in exact rational arithmetic; the kernel is
/// rational because `Γ(k+3/2)/Γ(n+3/2) = 1/Π_{i=k+1}^{n} (i + 1/2)`.
pub fn mean_recurrence_exact(n_max: usize) -> Vec<BigRational> {
    let int = |x: usize| BigInt::from(x);
    let third = BigRational::new(int(1), int(3));
    let mut mu: Vec<BigRational> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = third.clone();
        // second kernel term for k = n-1 down to 1:
        // (n-1)!/k! * Π_{i=k+1}^{n} 2/(2i+1)
        let mut second = BigRational::new(int(2), int(2 * n + 1));
        for k in (1..n).rev() {
            if k < n - 1 {
                second *= BigRational::new(int(2 * (k + 1)), int(2 * k + 3));
            }
            let kernel = BigRational::new(int(2), int(n)) - &second;
            acc += &mu[k - 1] * kernel;
        }
        mu.push(acc);
    }
    mu
}

/// Fractional bits used by the fixed-point evaluation of the alternating
/// closed form: `slope * n + base`.
///
/// The largest terms grow like `2^n` while the sum stays of order
/// `n^{β/2}`, so roughly `n` bits cancel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionPolicy {
    pub slope: f64,
    pub base: u64,
    /// Extra bits of the confirming evaluation.
    pub check_bits: u64,
    /// Largest tolerated disagreement between the two evaluations.
    pub tolerance: f64,
    /// Number of times the precision may be doubled before giving up.
    pub max_retries: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            slope: 1.0,
            base: 96,
            check_bits: 64,
            tolerance: 1e-12,
            max_retries: 4,
        }
    }
}

impl PrecisionPolicy {
    pub fn bits(&self, n: u64) -> u64 {
        (self.slope * n as f64).ceil() as u64 + self.base
    }
}

/// `Σ_{k=1}^n C(n,k) (-1)^{k+1} f(k)` with `f(k) = (1/3) Π_{j=2}^k
/// (2j²-j-2)/(j(2j+1))`, in fixed point with `bits` fractional bits.
fn closed_form_fixed(n: u64, bits: u64) -> f64 {
    // t_1 = n/3, t_k = t_{k-1} (n-k+1)(2k²-k-2) / (k²(2k+1))
    let mut t: BigUint = (BigUint::from(n) << bits) / 3u32;
    let mut pos = t.clone();
    let mut neg = BigUint::zero();
    for k in 2..=n {
        let mul = (n - k + 1) * (2 * k * k - k - 2);
        let div = k * k * (2 * k + 1);
        t *= mul;
        t /= div;
        if t.is_zero() {
            break;
        }
        if k % 2 == 1 {
            pos += &t;
        } else {
            neg += &t;
        }
    }
    let sum = BigInt::from_biguint(Sign::Plus, pos) - BigInt::from_biguint(Sign::Plus, neg);
    fixed_to_f64(&sum, bits)
}

fn fixed_to_f64(x: &BigInt, bits: u64) -> f64 {
    // keep 64 fractional bits, then scale
    let keep = 64u64;
    let shifted: BigInt = if bits > keep { x >> (bits - keep) as usize } else { x << (keep - bits) as usize };
    shifted.to_f64().expect("finite") / 2f64.powi(keep as i32)
}

/// `μ(n)` from the exact alternating-sum formula, evaluated at the
/// policy's precision and confirmed against an evaluation with
/// `check_bits` more bits. On disagreement the precision is doubled.
pub fn mean_closed_form(n: u64, policy: &PrecisionPolicy) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("mean_closed_form needs n >= 1".into()));
    }
    let mut bits = policy.bits(n);
    for _ in 0..=policy.max_retries {
        let value = closed_form_fixed(n, bits);
        let confirm = closed_form_fixed(n, bits + policy.check_bits);
        if (value - confirm).abs() <= policy.tolerance * confirm.abs().max(1.0) {
            return Ok(confirm);
        }
        bits *= 2;
    }
    Err(Error::InvalidArgument(format!(
        "closed form for n = {n} did not stabilise within {} precision bumps",
        policy.max_retries
    )))
}

/// `μ(n)` at fixed precision without the confirming pass.
pub fn mean_closed_form_at(n: u64, bits: u64) -> f64 {
    closed_form_fixed(n, bits)
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    // scale to 64 fractional bits before dividing so huge numerators and
    // denominators do not overflow f64
    let scaled = (x.numer() << 64usize) / x.denom();
    scaled.to_f64().expect("finite") / 2f64.powi(64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn first_values() {
        let mu = mean_recurrence(3);
        assert!((mu[0] - 1.0 / 3.0).abs() < 1e-15);
        assert!((mu[1] - 8.0 / 15.0).abs() < 1e-15);
        assert!((mu[2] - 43.0 / 63.0).abs() < 1e-15);
        let exact = mean_recurrence_exact(3);
        assert_eq!(exact, vec![q(1, 3), q(8, 15), q(43, 63)]);
    }

    #[test]
    fn reference_values() {
        let mu = mean_recurrence(200);
        for &(n, v) in &[(5usize, 0.907_275_933_942_600_6), (10, 1.283_865_594_251_954_3), (50, 2.545_107_575_692_637), (200, 4.219_731_217_967_512)] {
            assert!((mu[n - 1] - v).abs() < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn bounded_by_n() {
        let mu = mean_recurrence(1000);
        assert!(mu.iter().enumerate().all(|(i, &m)| m > 0.0 && m <= (i + 1) as f64));
        assert!(mu.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn closed_form_small() {
        let p = PrecisionPolicy::default();
        assert!((mean_closed_form(1, &p).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((mean_closed_form(2, &p).unwrap() - 8.0 / 15.0).abs() < 1e-15);
        assert!(mean_closed_form(0, &p).is_err());
        let mu = mean_recurrence(64);
        assert!((mean_closed_form(64, &p).unwrap() - mu[63]).abs() < 1e-11);
    }

    #[test]
    fn too_few_bits_is_visible() {
        let good = mean_closed_form_at(200, 300);
        let bad = mean_closed_form_at(200, 16);
        assert!((good - 4.219_731_217_967_512).abs() < 1e-12);
        assert!((bad - good).abs() > 1e-7);
    }

    #[test]
    fn rational_conversion() {
        assert_eq!(rational_to_f64(&q(1, 4)), 0.25);
        assert!((rational_to_f64(&q(-8, 15)) + 8.0 / 15.0).abs() < 1e-16);
    }
}
