use lamination_core::fragmentation::Mode;
use lamination_core::harness::stats::{median, MeanEstimate};
use lamination_core::limit::{eval_grid, KeyedSource, LimitEvaluator, LimitSpec};
use lamination_core::metrics::uniform_grid;

const POINTS: [f64; 3] = [0.1, 0.25, 0.5];

fn martingale_means(mode: Mode, depth: u32, replicates: u64) {
    let spec = LimitSpec::for_mode(mode, depth);
    let mut samples = vec![Vec::with_capacity(replicates as usize); POINTS.len()];
    for r in 0..replicates {
        let src = KeyedSource::new(11, r);
        let mut ev = LimitEvaluator::new(spec, &src);
        for (i, &s) in POINTS.iter().enumerate() {
            samples[i].push(ev.eval(s).unwrap());
        }
    }
    for (i, &s) in POINTS.iter().enumerate() {
        if depth == 0 {
            assert!(samples[i].iter().all(|&x| x == spec.base(s)));
            continue;
        }
        let est = MeanEstimate::from_samples(&samples[i]);
        let z = est.z_score(spec.base(s));
        assert!(z.abs() < 4.0, "{mode} depth {depth} s={s}: z={z}");
    }
}

#[test]
fn z_means_stay_on_the_base_profile() {
    for depth in [0, 4, 8] {
        martingale_means(Mode::SelfSimilar, depth, 2000);
    }
}

#[test]
fn h_means_stay_on_the_base_profile() {
    for depth in [0, 4, 8] {
        martingale_means(Mode::Homogeneous, depth, 2000);
    }
}

fn successive_gaps(mode: Mode) -> Vec<f64> {
    let grid = uniform_grid(257);
    let mut per_level = vec![Vec::new(); 10];
    for r in 0..200 {
        let src = KeyedSource::new(23, r);
        let mut prev = eval_grid(&LimitSpec::for_mode(mode, 2), &src, &grid).unwrap();
        for (k, n) in (2..=10).enumerate() {
            let next = eval_grid(&LimitSpec::for_mode(mode, n + 1), &src, &grid).unwrap();
            let gap = prev.iter().zip(&next).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            per_level[k].push(gap);
            prev = next;
        }
    }
    per_level.iter().filter(|v| !v.is_empty()).map(|v| median(v)).collect()
}

#[test]
fn successive_depths_draw_closer() {
    for mode in [Mode::SelfSimilar, Mode::Homogeneous] {
        let med = successive_gaps(mode);
        assert_eq!(med.len(), 9);
        for w in med.windows(2) {
            assert!(w[1] < w[0], "{mode}: {med:?}");
        }
    }
}

#[test]
fn boundary_values_vanish_at_every_depth() {
    for mode in [Mode::SelfSimilar, Mode::Homogeneous] {
        for depth in [0, 1, 5, 12] {
            let src = KeyedSource::new(1, depth as u64);
            let v = eval_grid(&LimitSpec::for_mode(mode, depth), &src, &[0.0, 1.0]).unwrap();
            assert_eq!(v, vec![0.0, 0.0]);
        }
    }
}
