use lamination_core::fragmentation::{Address, FragState, Mode};
use lamination_core::harness::{io, run_process, Process};
use lamination_core::model::{lamination_from_step, Point};
use lamination_core::rng::{Purpose, Stream};

#[test]
fn heights_distances_and_round_trip_agree() {
    for r in 0..200u64 {
        let mode = if r % 2 == 0 { Mode::SelfSimilar } else { Mode::Homogeneous };
        let n = 1 + Stream::replicate(5, Purpose::Auxiliary, r).below(500);
        let st = run_process(mode, n, 5, r).unwrap();
        let f = st.height_function();
        assert!(lamination_from_step(&f).same_chords(&st.lamination()), "replicate {r}");
        assert_eq!(f.max(), st.max_height() as f64);
        let mut q = Stream::replicate(5, Purpose::QueryPoints, r);
        for _ in 0..100 {
            let (s, t) = (q.uniform(), q.uniform());
            let h = st.height(s).unwrap();
            assert_eq!(h, st.height_by_crossing(s).unwrap());
            assert_eq!(h as f64, f.eval(s).unwrap());
            assert_eq!(st.depth(st.leaf_containing(s).unwrap()), Some(h));
            assert_eq!(st.dual_tree_distance(s, t).unwrap(), st.encoded_distance(s, t).unwrap());
        }
    }
}

#[test]
fn leaf_masses_sum_to_one() {
    let st = run_process(Mode::Homogeneous, 1_000_000, 3, 0).unwrap();
    assert_eq!(st.n_chords(), 1_000_000);
    assert!((st.total_leaf_mass() - 1.0).abs() < 1e-9);
    let ss = run_process(Mode::SelfSimilar, 200_000, 3, 0).unwrap();
    assert!((ss.total_leaf_mass() - 1.0).abs() < 1e-9);
}

#[test]
fn every_split_records_its_local_pair() {
    let st = run_process(Mode::SelfSimilar, 5000, 8, 0).unwrap();
    let fam = st.coupled_family().unwrap();
    let ends: std::collections::HashSet<Point> = st
        .leaves()
        .iter()
        .flat_map(|&id| st.node(id).arcs().unwrap().arcs().to_vec())
        .map(|a| a.start)
        .collect();
    assert_eq!(fam.len(), st.n_chords());
    for node in st.split_nodes() {
        let split = node.split().unwrap();
        assert_eq!(fam.get(&node.address()), Some((split.u_local, split.v_local)));
        assert!(0.0 < split.u_local && split.u_local < split.v_local && split.v_local < 1.0);
        let (a, b) = split.chord.points();
        assert!(ends.contains(&a) && ends.contains(&b));
    }
    assert!(FragState::new(Mode::SelfSimilar).coupled_family().unwrap().is_empty());
}

#[test]
fn homogeneous_runs_insert_every_trial() {
    let st = run_process(Mode::Homogeneous, 1000, 2, 0).unwrap();
    assert_eq!(st.n_chords(), 1000);
    assert_eq!(st.n_trials(), 1000);
    assert_eq!(st.n_leaves(), 1001);
}

#[test]
fn trial_log_replays_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    for mode in [Mode::SelfSimilar, Mode::Homogeneous] {
        let mut p = Process::new(mode, 17, 4).with_log();
        p.advance_to(3000).unwrap();
        let path = dir.path().join("trials.csv");
        io::write_trial_log(&path, p.log().unwrap()).unwrap();
        let log = io::read_trial_log(&path).unwrap();
        assert_eq!(log, p.log().unwrap());
        let again = io::replay(mode, &log).unwrap();
        assert_eq!(again.height_function(), p.state().height_function());
        assert_eq!(again.split_family(), p.state().split_family());
        assert!(io::replay(if mode == Mode::SelfSimilar { Mode::Homogeneous } else { Mode::SelfSimilar }, &log).is_err());
    }
}

#[test]
fn snapshot_lists_every_chord() {
    let dir = tempfile::tempdir().unwrap();
    let st = run_process(Mode::SelfSimilar, 2000, 6, 1).unwrap();
    let path = dir.path().join("snapshot.csv");
    io::write_snapshot_csv(&path, &st).unwrap();
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    assert_eq!(rdr.headers().unwrap(), vec!["address", "a", "b", "depth"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), st.n_chords());
    assert_eq!(&rows[0][0], "root");
    for row in &rows {
        let addr: Address = row[0].parse().unwrap();
        assert!(addr.len() < 128);
        let a: f64 = row[1].parse().unwrap();
        assert_eq!(row[3].parse::<u32>().unwrap(), st.height_by_crossing(a).unwrap());
    }
}
