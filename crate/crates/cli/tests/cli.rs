use std::path::Path;
use std::process::{Command, Output};

fn lamination(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lamination")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn simulate_writes_outputs_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let o = lamination(&["simulate", "--mode", "homogeneous", "--n", "500", "--replicates", "3", "--seed", "5", "--out", path(dir.path())]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for f in ["summary.csv", "lamination.csv", "lamination.svg", "height.csv", "height.svg", "snapshot.csv", "trials.csv", "manifest.txt"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let manifest = std::fs::read_to_string(dir.path().join("manifest.txt")).unwrap();
    assert!(manifest.contains("mode=homogeneous"));
    assert!(manifest.contains("seed=5"));
    assert!(stdout(&o).contains("mean chords = 500"));
}

#[test]
fn same_seed_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for (out, threads) in [(&a, "1"), (&b, "4")] {
        let o = lamination(&["simulate", "--n", "3000", "--replicates", "4", "--threads", threads, "--out", path(out)]);
        assert!(o.status.success());
    }
    for f in ["summary.csv", "lamination.csv", "height.csv", "trials.csv"] {
        assert_eq!(std::fs::read(a.join(f)).unwrap(), std::fs::read(b.join(f)).unwrap(), "{f}");
    }
}

#[test]
fn render_round_trips_the_simulated_picture() {
    let dir = tempfile::tempdir().unwrap();
    assert!(lamination(&["simulate", "--n", "400", "--out", path(dir.path())]).status.success());
    let svg = dir.path().join("again.svg");
    let o = lamination(&["render", path(&dir.path().join("height.csv")), path(&svg)]);
    assert!(o.status.success());
    assert_eq!(std::fs::read(svg).unwrap(), std::fs::read(dir.path().join("height.svg")).unwrap());
}

#[test]
fn dimension_and_converge_run_small() {
    let dir = tempfile::tempdir().unwrap();
    let o = lamination(&["dimension", "--depth", "6", "--grid", "1025", "--out", path(dir.path())]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("slope = "));
    let o = lamination(&["converge", "--n", "1000", "--replicates", "3", "--depth", "6", "--grid", "257", "--out", path(dir.path())]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(dir.path().join("converge.csv").exists());
}

#[test]
fn mean_table_and_selftest() {
    let dir = tempfile::tempdir().unwrap();
    let o = lamination(&["mean-table", "--n", "100", "--out", path(dir.path())]);
    assert!(o.status.success());
    assert!(dir.path().join("mean_table.csv").exists());
    let o = lamination(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn bad_arguments_are_rejected() {
    assert!(!lamination(&["simulate", "--mode", "sideways"]).status.success());
    let dir = tempfile::tempdir().unwrap();
    let o = lamination(&["simulate", "--n", "0", "--out", path(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n must be positive"));
}
