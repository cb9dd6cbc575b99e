//! CSV persistence. Floats are written in Rust's shortest round-trip
//! form and circle points in their exact form, so reading a file back
//! gives the same values and rewriting it gives the same bytes.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::fragmentation::{FragState, Mode, TrialOutcome};
use crate::metrics::GridSample;
use crate::model::{Chord, FiniteLamination, Point, StepFunction};

pub fn fmt(x: f64) -> String {
    format!("{x}")
}

/// Writes a header and rows as RFC 4180 CSV.
pub fn write_csv<I, R>(path: &Path, header: &[&str], rows: I) -> Result<()>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    w.write_record(header).map_err(|e| Error::csv(path, e))?;
    for row in rows {
        let row: Vec<String> = row.into_iter().collect();
        w.write_record(&row).map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

fn read_rows(path: &Path) -> Result<Vec<csv::StringRecord>> {
    let mut r = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
    r.records().map(|rec| rec.map_err(|e| Error::csv(path, e))).collect()
}

fn field<T: std::str::FromStr>(path: &Path, rec: &csv::StringRecord, i: usize) -> Result<T> {
    rec.get(i)
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::InvalidArgument(format!("{}: bad field {i} in row {:?}", path.display(), rec)))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    let mut f = File::create(path).map_err(|e| Error::io(path, e))?;
    f.write_all(text.as_bytes()).map_err(|e| Error::io(path, e))
}

/// Rows `(breakpoint, value)`; the first row carries the value on
/// `[0, x_1)` at breakpoint 0.
pub fn write_step_csv(path: &Path, f: &StepFunction) -> Result<()> {
    let rows = std::iter::once(&Point::ZERO)
        .chain(f.breakpoint_points())
        .zip(f.values())
        .map(|(x, v)| [x.to_string(), fmt(*v)]);
    write_csv(path, &["breakpoint", "value"], rows)
}

pub fn read_step_csv(path: &Path) -> Result<StepFunction> {
    let rows = read_rows(path)?;
    let mut breakpoints = Vec::new();
    let mut values = Vec::new();
    for (i, rec) in rows.iter().enumerate() {
        let x: Point = field(path, rec, 0)?;
        if i > 0 {
            breakpoints.push(x);
        }
        values.push(field(path, rec, 1)?);
    }
    if values.is_empty() {
        return Err(Error::Empty);
    }
    StepFunction::from_points(breakpoints, values)
}

pub fn write_lamination_csv(path: &Path, l: &FiniteLamination) -> Result<()> {
    write_csv(
        path,
        &["a", "b"],
        l.chords().iter().map(|c| [c.points().0.to_string(), c.points().1.to_string()]),
    )
}

pub fn read_lamination_csv(path: &Path) -> Result<FiniteLamination> {
    let chords = read_rows(path)?
        .iter()
        .map(|rec| Chord::from_points(field(path, rec, 0)?, field(path, rec, 1)?))
        .collect::<Result<Vec<_>>>()?;
    FiniteLamination::from_chords(chords)
}

pub fn write_grid_csv(path: &Path, g: &GridSample) -> Result<()> {
    write_csv(path, &["s", "value"], g.grid().iter().zip(g.values()).map(|(s, v)| [fmt(*s), fmt(*v)]))
}

/// One row per inserted chord: the address of the fragment it split, its
/// endpoints, and the current height just inside it.
pub fn write_snapshot_csv(path: &Path, state: &FragState) -> Result<()> {
    let height = state.height_function();
    let rows = state.split_nodes().map(|node| {
        let (a, b) = node.split().expect("split node").chord.points();
        let depth = height.eval_point(a);
        [node.address().to_string(), a.to_string(), b.to_string(), depth.to_string()]
    });
    write_csv(path, &["address", "a", "b", "depth"], rows)
}

/// A consumed trial: the raw pair, and for the homogeneous process the
/// fragment label it was applied to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialRecord {
    pub leaf: Option<usize>,
    pub u: f64,
    pub v: f64,
}

pub fn write_trial_log(path: &Path, log: &[TrialRecord]) -> Result<()> {
    let rows = log.iter().enumerate().map(|(i, t)| {
        [i.to_string(), t.leaf.map(|j| j.to_string()).unwrap_or_default(), fmt(t.u), fmt(t.v)]
    });
    write_csv(path, &["index", "leaf", "u", "v"], rows)
}

pub fn read_trial_log(path: &Path) -> Result<Vec<TrialRecord>> {
    read_rows(path)?
        .iter()
        .map(|rec| {
            let leaf = match rec.get(1).map(str::trim) {
                Some("") | None => None,
                Some(_) => Some(field(path, rec, 1)?),
            };
            Ok(TrialRecord {
                leaf,
                u: field(path, rec, 2)?,
                v: field(path, rec, 3)?,
            })
        })
        .collect()
}

/// Rebuilds a state from its trial log.
pub fn replay(mode: Mode, log: &[TrialRecord]) -> Result<FragState> {
    let mut state = FragState::new(mode);
    for t in log {
        match (mode, t.leaf) {
            (Mode::SelfSimilar, None) => {
                let _: TrialOutcome = state.trial_selfsimilar(t.u, t.v)?;
            }
            (Mode::Homogeneous, Some(j)) => {
                state.trial_homogeneous(j, t.u, t.v)?;
            }
            _ => {
                return Err(Error::InvalidArgument("trial log does not match the mode".into()));
            }
        }
    }
    Ok(state)
}
