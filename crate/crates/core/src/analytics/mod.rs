//! Constants, special functions and exact mean sequences.

mod constants;
mod homogeneous;
mod means;
mod special;
mod transform;

pub use constants::{asymptotic_c, kappa, kappa_h, Constants, IdentityCheck};
pub use homogeneous::{brownian_gap, mean_homogeneous_gamma, mean_homogeneous_product, mean_homogeneous_recurrence};
pub use means::{mean_closed_form, mean_closed_form_at, mean_recurrence, mean_recurrence_exact, rational_to_f64, PrecisionPolicy};
pub use special::{beta_fn, gamma, ln_beta, ln_gamma, ln_gamma_ratio};
pub use transform::{binomial_transform, mean_from_mu_star, mu_star, mu_star_table};

/// `μ(n)` by whichever exact route is cheap: the recurrence up to
/// `n = 1000`, the closed form beyond.
pub fn mean_selfsimilar(n: u64) -> crate::error::Result<f64> {
    const RECURRENCE_MAX: u64 = 1000;
    if n == 0 {
        return Err(crate::error::Error::InvalidArgument("mean needs n >= 1".into()));
    }
    if n <= RECURRENCE_MAX {
        Ok(mean_recurrence(n as usize)[n as usize - 1])
    } else {
        mean_closed_form(n, &PrecisionPolicy::default())
    }
}

