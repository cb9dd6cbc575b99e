use num_rational::BigRational;
use rayon::prelude::*;

use super::process::run_process;
use crate::analytics::{self, Constants};
use crate::error::Result;
use crate::fragmentation::Mode;
use crate::rng::{Purpose, Stream};

/// Outcome of one self-test check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelftestReport {
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        self.checks
            .iter()
            .map(|c| format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
            .collect()
    }
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

/// Exact-arithmetic suites, cross-route agreement and the structural
/// identities of the discrete process, run against `constants`.
pub fn cmd_selftest(constants: &Constants) -> Result<SelftestReport> {
    let mut checks = Vec::new();

    for id in constants.identities() {
        checks.push(check(
            format!("constant identity {}", id.name),
            id.passed(),
            format!("{:e} vs {:e}", id.lhs, id.rhs),
        ));
    }
    // printed values are truncated: value lies in [printed, printed + unit)
    let reference = [
        ("beta", constants.beta, 0.561552, 1e-6),
        ("c", constants.c, 1.178226, 1e-6),
        ("kappa", constants.kappa, 3.34443, 1e-5),
    ];
    for (name, value, printed, unit) in reference {
        checks.push(check(
            format!("{name} matches its printed digits"),
            printed <= value && value < printed + unit,
            format!("{value} vs {printed}..."),
        ));
    }

    // binomial transform involution on a fixed rational sequence
    let mut s = Stream::replicate(0, Purpose::Auxiliary, 0);
    let seq: Vec<BigRational> = (0..30)
        .map(|_| BigRational::new((s.below(2001) as i64 - 1000).into(), (s.below(999) as i64 + 1).into()))
        .collect();
    let twice = analytics::binomial_transform(&analytics::binomial_transform(&seq));
    checks.push(check("binomial transform is an involution", twice == seq, "length 30"));

    let exact = analytics::mean_recurrence_exact(2);
    let first = analytics::mean_from_mu_star(2);
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    checks.push(check(
        "mu(1) = 1/3, mu(2) = 8/15 exactly",
        exact == [q(1, 3), q(8, 15)] && first[1..] == [q(1, 3), q(8, 15)],
        "recurrence and transform of mu*",
    ));

    let n_max = 200;
    let rec = analytics::mean_recurrence(n_max);
    let star = analytics::mean_from_mu_star(n_max);
    let policy = analytics::PrecisionPolicy::default();
    let worst = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let closed = analytics::mean_closed_form(n as u64, &policy)?;
            let via_star = analytics::rational_to_f64(&star[n]);
            Ok((closed - rec[n - 1]).abs().max((via_star - rec[n - 1]).abs()))
        })
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    checks.push(check("three routes to mu(n) agree for n <= 200", worst <= 1e-9, format!("max gap {worst:e}")));

    let hr = analytics::mean_homogeneous_recurrence(1000);
    let hp = analytics::mean_homogeneous_product(1000);
    let hworst = (1..=1000usize)
        .map(|n| {
            let g = analytics::mean_homogeneous_gamma(n as u64);
            ((hr[n - 1] - g) / g).abs().max(((hp[n - 1] - g) / g).abs())
        })
        .fold(0.0, f64::max);
    checks.push(check("three routes to mu^h(n) agree", hworst <= 1e-10, format!("max relative gap {hworst:e}")));

    let (lhs, rhs) = analytics::brownian_gap();
    checks.push(check("Brownian excursion moment gap", (lhs - rhs).abs() > 0.3, format!("{lhs} vs {rhs}")));

    // oracle equivalences on small runs
    let mut mismatches = 0usize;
    for r in 0..20u64 {
        let mode = if r % 2 == 0 { Mode::SelfSimilar } else { Mode::Homogeneous };
        let st = run_process(mode, 200, 99, r)?;
        let f = st.height_function();
        if !crate::model::lamination_from_step(&f).same_chords(&st.lamination()) {
            mismatches += 1;
        }
        let mut q = Stream::replicate(99, Purpose::QueryPoints, r);
        for _ in 0..20 {
            let (x, y) = (q.uniform(), q.uniform());
            if st.height(x)? != st.height_by_crossing(x)? || st.dual_tree_distance(x, y)? != f.tree_distance(x, y)? as u32 {
                mismatches += 1;
            }
        }
    }
    checks.push(check("oracle equivalences on 20 runs", mismatches == 0, format!("{mismatches} mismatches")));

    Ok(SelftestReport { checks })
}
