//! Exact binomial transforms and the product form of `μ*`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `a*(n) = Σ_{k=0}^n C(n,k) (-1)^k a(k)` for every prefix of `a`.
/// The transform is an involution.
pub fn binomial_transform(a: &[BigRational]) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (k, ak) in a.iter().enumerate().take(n + 1) {
            let term = ak * BigRational::from_integer(binom.clone());
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
        }
        out.push(acc);
    }
    out
}

/// `μ*(n) = -1/3 Π_{j=2}^n (2j²-j-2)/(j(2j+1))`.
pub fn mu_star(n: usize) -> BigRational {
    assert!(n >= 1, "mu_star is defined for n >= 1");
    mu_star_table(n).pop().expect("non-empty")
}

/// `μ*(1..=n_max)`.
pub fn mu_star_table(n_max: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n_max);
    let mut cur = BigRational::new((-1).into(), 3.into());
    for j in 1..=n_max {
        if j >= 2 {
            let j = j as i64;
            cur *= BigRational::new((2 * j * j - j - 2).into(), (j * (2 * j + 1)).into());
        }
        out.push(cur.clone());
    }
    out
}

/// `μ(0..=n_max)` (with `μ(0) = 0`) recovered by transforming
/// `(0, μ*(1), .., μ*(n_max))`.
pub fn mean_from_mu_star(n_max: usize) -> Vec<BigRational> {
    let mut seq = vec![BigRational::zero()];
    seq.extend(mu_star_table(n_max));
    binomial_transform(&seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::means::mean_recurrence_exact;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_transform() {
        let a = vec![q(0, 1), q(1, 1), q(2, 1)];
        assert_eq!(binomial_transform(&a), vec![q(0, 1), q(-1, 1), q(0, 1)]);
        assert!(binomial_transform(&[]).is_empty());
    }

    #[test]
    fn mu_star_values() {
        assert_eq!(mu_star(1), q(-1, 3));
        assert_eq!(mu_star(2), q(-2, 15));
    }

    #[test]
    fn transform_of_recurrence_is_mu_star() {
        let mut mu = vec![BigRational::zero()];
        mu.extend(mean_recurrence_exact(20));
        let star = binomial_transform(&mu);
        assert_eq!(star[0], BigRational::zero());
        assert_eq!(star[2], q(-2, 1) * &mu[1] + &mu[2]);
        assert_eq!(&star[1..], &mu_star_table(20)[..]);
        // the closed form's alternating sum uses f(k) = -μ*(k)
        assert_eq!(mean_from_mu_star(20), mu);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn involution(v in proptest::collection::vec((-1000i64..1000, 1i64..1000), 30)) {
            let a: Vec<BigRational> = v.iter().map(|&(n, d)| q(n, d)).collect();
            prop_assert_eq!(binomial_transform(&binomial_transform(&a)), a);
        }
    }
}
