//! Mean height `μ^h(n)` of the homogeneous process, by three routes.

use super::special::{beta_fn, ln_gamma, ln_gamma_ratio};

/// `Γ(n+4/3)/(Γ(4/3) n!) - 1`.
pub fn mean_homogeneous_gamma(n: u64) -> f64 {
    let nf = n as f64;
    let ln = ln_gamma_ratio(nf + 4.0 / 3.0, nf + 1.0).expect("positive") - ln_gamma(4.0 / 3.0).expect("positive");
    ln.exp_m1()
}

/// `μ^h(1..=n_max)` from `μ(n) = 1/3 + (4/(3n)) Σ_{k<n} μ(k)`.
pub fn mean_homogeneous_recurrence(n_max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max);
    let mut sum = 0.0;
    for n in 1..=n_max {
        let mu = 1.0 / 3.0 + 4.0 / (3.0 * n as f64) * sum;
        sum += mu;
        out.push(mu);
    }
    out
}

/// `μ^h(1..=n_max)` from `μ(n) + 1 = (μ(n-1) + 1)(1 + 1/(3n))`.
pub fn mean_homogeneous_product(n_max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max);
    let mut p = 1.0;
    for n in 1..=n_max {
        p *= 1.0 + 1.0 / (3.0 * n as f64);
        out.push(p - 1.0);
    }
    out
}

/// Two moments that would agree if the homogeneous limit were a Brownian
/// excursion: `(10/3) B(4/3, 4/3) · √π/2` against `E[e(ξ)²] = 2`.
pub fn brownian_gap() -> (f64, f64) {
    let lhs = 10.0 / 3.0 * beta_fn(4.0 / 3.0, 4.0 / 3.0).expect("positive") * std::f64::consts::PI.sqrt() / 2.0;
    (lhs, 2.0)
}
