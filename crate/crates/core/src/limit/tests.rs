use super::*;
use crate::rng::{Purpose, Stream};

fn fixed(u: f64, v: f64, w: f64) -> impl Fn(Address) -> NodeDraw + Sync {
    move |_| NodeDraw { u, v, w }
}

#[test]
fn coordinate_maps() {
    assert!((k0(0.1, 0.4, 0.6) - 0.125).abs() < 1e-15);
    assert!((k1(0.5, 0.4, 0.6) - 0.5).abs() < 1e-15);
    assert!((k0(0.5, 0.4, 0.6) - 0.5).abs() < 1e-15);
    assert_eq!(k1(0.7, 0.4, 0.6), 0.0);
    assert!((k0(0.8, 0.4, 0.6) - 0.75).abs() < 1e-15);
}

#[test]
fn depth_zero_profiles() {
    let src = KeyedSource::new(1, 0);
    let z = eval_z(&LimitSpec::self_similar(0), &src, 0.5).unwrap();
    assert!((z - 1.535_443_254_360_803_8).abs() < 1e-12);
    assert_eq!(eval_z(&LimitSpec::self_similar(0), &src, 0.0).unwrap(), 0.0);
    let h = eval_h(&LimitSpec::homogeneous(0), &src, 0.5).unwrap();
    assert!((h - 1.425_832_875_490_811_2).abs() < 1e-12);
    assert_eq!(eval_h(&LimitSpec::homogeneous(0), &src, 0.0).unwrap(), 0.0);
    assert!(eval_h(&LimitSpec::self_similar(0), &src, 0.5).is_err());
    assert!(eval_z(&LimitSpec::self_similar(0), &src, 1.5).is_err());
}

#[test]
fn boundary_is_zero_at_every_depth() {
    for depth in 0..12 {
        for mode in [Mode::SelfSimilar, Mode::Homogeneous] {
            let spec = LimitSpec::for_mode(mode, depth);
            let src = KeyedSource::new(9, depth as u64);
            let vals = eval_grid(&spec, &src, &[0.0, 1.0]).unwrap();
            assert_eq!(vals, vec![0.0, 0.0]);
        }
    }
}

#[test]
fn grid_matches_pointwise_exactly() {
    let mut q = Stream::replicate(3, Purpose::Auxiliary, 0);
    let mut pts: Vec<f64> = (0..1000).map(|_| q.uniform()).collect();
    pts.sort_by(f64::total_cmp);
    for mode in [Mode::SelfSimilar, Mode::Homogeneous] {
        let spec = LimitSpec::for_mode(mode, 10);
        let src = KeyedSource::new(5, 2);
        let grid = eval_grid(&spec, &src, &pts).unwrap();
        let mut ev = LimitEvaluator::new(spec, &src);
        for (s, g) in pts.iter().zip(&grid) {
            assert_eq!(ev.eval(*s).unwrap().to_bits(), g.to_bits());
        }
        let fresh: Vec<f64> = pts.iter().map(|&s| LimitEvaluator::new(spec, &src).eval(s).unwrap()).collect();
        assert_eq!(fresh, grid);
    }
    assert!(eval_grid(&LimitSpec::self_similar(4), &KeyedSource::new(0, 0), &[]).unwrap().is_empty());
}

#[test]
fn coupled_single_chord() {
    let mut fam = CoupledFamily::new();
    fam.insert(Address::ROOT, 0.2, 0.6);
    let z = coupled_z(&fam, 11, 0, 1, &[0.1]).unwrap()[0];
    assert!((z - 0.828_523_799_532_951_4).abs() < 1e-12);
    let k = Constants::compute();
    let h = |s: f64| (s * (1.0 - s)).powf(k.beta);
    assert!((z - 0.6f64.powf(k.beta) * k.kappa * h(1.0 / 6.0)).abs() < 1e-15);
    // depth 0 ignores the family
    let z0 = coupled_z(&fam, 11, 0, 0, &[0.3]).unwrap()[0];
    assert_eq!(z0, LimitSpec::self_similar(0).base(0.3));
}

#[test]
fn empty_family_is_keyed() {
    let grid: Vec<f64> = (0..=64).map(|i| i as f64 / 64.0).collect();
    let coupled = coupled_z(&CoupledFamily::new(), 21, 4, 8, &grid).unwrap();
    let keyed = eval_grid(&LimitSpec::self_similar(8), &KeyedSource::new(21, 4), &grid).unwrap();
    assert_eq!(coupled, keyed);
}

#[test]
fn degenerate_weight_copies_left_child() {
    let spec = LimitSpec::homogeneous(1);
    let src = fixed(0.3, 0.5, 1.0);
    for &s in &[0.1, 0.3, 0.4, 0.7] {
        let h = eval_h(&spec, &src, s).unwrap();
        assert!((h - spec.base(k0(s, 0.3, 0.5))).abs() < 1e-15);
    }
}

#[test]
fn one_step_of_the_operator() {
    // depth n+1 at the root equals G applied to the depth-n children
    let n = 5;
    for mode in [Mode::SelfSimilar, Mode::Homogeneous] {
        let src = KeyedSource::new(77, 1);
        let top = LimitSpec::for_mode(mode, n + 1);
        let sub = LimitSpec::for_mode(mode, n);
        let d = src.draw(Address::ROOT);
        let (c0, c1) = top.coefficients(&d);
        let mut z = LimitEvaluator::new(top, &src);
        let mut z0 = LimitEvaluator::at(sub, &src, Address::ROOT.child(0).unwrap());
        let mut z1 = LimitEvaluator::at(sub, &src, Address::ROOT.child(1).unwrap());
        let mut q = Stream::replicate(8, Purpose::Auxiliary, 0);
        for _ in 0..200 {
            let s = q.uniform();
            let g = c0 * z0.eval(k0(s, d.u, d.v)).unwrap() + c1 * z1.eval(k1(s, d.u, d.v)).unwrap();
            assert!((z.eval(s).unwrap() - g).abs() <= 1e-12 * g.abs().max(1.0));
        }
    }
}

#[test]
fn keyed_draws_are_stable_and_distinct() {
    let src = KeyedSource::new(4, 0);
    let a = Address::ROOT.child(1).unwrap();
    assert_eq!(src.draw(a), src.draw(a));
    assert_ne!(src.draw(a), src.draw(a.child(0).unwrap()));
    assert_ne!(src.draw(Address::ROOT.child(0).unwrap()), src.draw(Address::ROOT.child(0).unwrap().child(0).unwrap()));
    assert_ne!(src.draw(a), KeyedSource::new(4, 1).draw(a));
    let d = src.draw(a);
    assert!(0.0 < d.u && d.u < d.v && d.v < 1.0 && 0.0 < d.w && d.w < 1.0);
}
