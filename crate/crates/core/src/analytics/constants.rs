use std::f64::consts::PI;

use super::special::{beta_fn, gamma};

/// Numerical constants of the self-similar and homogeneous models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Height exponent `(√17 - 3)/2`.
    pub beta: f64,
    /// `β/2 + 1`, the larger root of `2z² - z - 2 = 0`.
    pub gamma: f64,
    /// The other root, `(1 - √17)/4`.
    pub gamma_bar: f64,
    /// Contraction constant `2/(2β+1)` of the limit recursion.
    pub q: f64,
    pub q_prime: f64,
    /// `E[C_n(ξ)] ~ c n^{β/2}`.
    pub c: f64,
    /// `E[Z(s)] = κ (s(1-s))^β`.
    pub kappa: f64,
    /// `E[H(s)] = κ^h (s(1-s))^{1/2}`.
    pub kappa_h: f64,
    pub q_h: f64,
    pub q_bar: f64,
    pub sqrt_pi: f64,
}

/// One identity between constants, with its tolerance.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub tolerance: f64,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        (self.lhs - self.rhs).abs() <= self.tolerance * self.rhs.abs().max(1.0)
    }
}

const IDENTITY_TOL: f64 = 1e-14;

pub fn asymptotic_c() -> f64 {
    let g = (1.0 + 17f64.sqrt()) / 4.0;
    let num = PI.sqrt() * gamma(2.0 * g - 0.5).expect("positive");
    let gh = gamma(g + 0.5).expect("positive");
    num / (2.0 * gamma(g).expect("positive") * gh * gh)
}

pub fn kappa() -> f64 {
    let beta = (17f64.sqrt() - 3.0) / 2.0;
    asymptotic_c() / beta_fn(beta + 1.0, beta + 1.0).expect("positive")
}

pub fn kappa_h() -> f64 {
    24.0 / (PI * gamma(1.0 / 3.0).expect("positive"))
}

impl Constants {
    pub fn compute() -> Self {
        let s17 = 17f64.sqrt();
        let beta = (s17 - 3.0) / 2.0;
        let b = |x: f64, y: f64| beta_fn(x, y).expect("positive");
        Constants {
            beta,
            gamma: beta / 2.0 + 1.0,
            gamma_bar: (1.0 - s17) / 4.0,
            q: 2.0 / (2.0 * beta + 1.0),
            q_prime: 2.0 * (2.0 * b(2.0 * beta + 1.0, 2.0 * beta + 2.0)).sqrt(),
            c: asymptotic_c(),
            kappa: kappa(),
            kappa_h: kappa_h(),
            q_h: 6.0 / 7.0,
            q_bar: 4.0 / 5.0,
            sqrt_pi: PI.sqrt(),
        }
    }

    /// Identities the constants must satisfy, each evaluated through a
    /// second expression.
    pub fn identities(&self) -> Vec<IdentityCheck> {
        let s17 = 17f64.sqrt();
        let beta = self.beta;
        let b = |x: f64, y: f64| beta_fn(x, y).expect("positive");
        let g13 = gamma(1.0 / 3.0).expect("positive");
        let check = |name, lhs, rhs| IdentityCheck {
            name,
            lhs,
            rhs,
            tolerance: IDENTITY_TOL,
        };
        vec![
            check("beta^2 + 3 beta = 2", beta * beta + 3.0 * beta, 2.0),
            check("gamma = (1 + sqrt 17)/4", self.gamma, (1.0 + s17) / 4.0),
            check("gamma + gamma_bar = 1/2", self.gamma + self.gamma_bar, 0.5),
            check("gamma * gamma_bar = -1", self.gamma * self.gamma_bar, -1.0),
            check("q = 2/(sqrt 17 - 2)", self.q, 2.0 / (s17 - 2.0)),
            check(
                "q = E(1-(V-U))^2b + E(V-U)^2b",
                self.q,
                1.0 / (beta + 1.0) + 2.0 / ((2.0 * beta + 1.0) * (2.0 * beta + 2.0)),
            ),
            check(
                "q' = 2 sqrt(E((V-U)(1-(V-U)))^2b)",
                self.q_prime * self.q_prime / 8.0,
                b(2.0 * beta + 1.0, 2.0 * beta + 2.0),
            ),
            check("kappa B(b+1, b+1) = c", self.kappa * b(beta + 1.0, beta + 1.0), self.c),
            check("kappa_h pi Gamma(1/3) = 24", self.kappa_h * std::f64::consts::PI * g13, 24.0),
            check("q_h = 2 E W^(4/3)", self.q_h, 2.0 * 3.0 / 7.0),
            check("q_bar = E W^(2/3) + E(V-U) E(1-W)^(2/3)", self.q_bar, 0.6 + 0.6 / 3.0),
            check("sqrt_pi = Gamma(1/2)", self.sqrt_pi, gamma(0.5).expect("positive")),
        ]
    }

    pub fn failed_identities(&self) -> Vec<IdentityCheck> {
        self.identities().into_iter().filter(|c| !c.passed()).collect()
    }
}
