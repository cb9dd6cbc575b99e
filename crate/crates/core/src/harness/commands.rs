use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use super::config::{RunConfig, RunManifest};
use super::io::{self, fmt};
use super::process::{run_process, Process};
use super::stats::{median, quantile, MeanEstimate};
use super::svg;
use crate::analytics::{self, Constants};
use crate::error::{Error, Result};
use crate::fragmentation::Mode;
use crate::limit::{coupled_z, eval_grid, KeyedSource, LimitSpec};
use crate::metrics::{self, boxdim_estimate, uniform_grid, BoxDimEstimate, GridSample, TreePointCloud};
use crate::rng::{Purpose, Stream};

fn prepare(config: &RunConfig) -> Result<()> {
    config.validate()?;
    std::fs::create_dir_all(&config.out).map_err(|e| Error::io(&config.out, e))
}

fn finish(config: &RunConfig, mut manifest: RunManifest, files: &[PathBuf], started: Instant) -> Result<RunManifest> {
    for f in files {
        manifest.add_file(f)?;
    }
    manifest.set("wall_time_s", format!("{:.3}", started.elapsed().as_secs_f64()));
    let path = config.out.join("manifest.txt");
    io::write_text(&path, &manifest.render())?;
    Ok(manifest)
}

/// Per-replicate summary of a simulation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationRow {
    pub replicate: u64,
    pub n_trials: u64,
    pub n_chords: usize,
    pub max_height: u32,
}

/// Runs `replicates` independent copies of the process and writes
/// `summary.csv`; replicate 0 is also written out in full (lamination,
/// height process, snapshot, trial log and pictures).
pub fn cmd_simulate(config: &RunConfig) -> Result<(Vec<SimulationRow>, RunManifest)> {
    prepare(config)?;
    let started = Instant::now();
    let rows: Vec<SimulationRow> = config.install(|| {
        (0..config.replicates)
            .into_par_iter()
            .map(|r| {
                let st = run_process(config.mode, config.n, config.seed, r)?;
                let max_height = st.max_height();
                Ok(SimulationRow {
                    replicate: r,
                    n_trials: st.n_trials(),
                    n_chords: st.n_chords(),
                    max_height,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let out = &config.out;
    let mut files = Vec::new();
    let summary = out.join("summary.csv");
    io::write_csv(
        &summary,
        &["replicate", "n_trials", "n_chords", "max_height", "chords_over_sqrt_n"],
        rows.iter().map(|r| {
            [
                r.replicate.to_string(),
                r.n_trials.to_string(),
                r.n_chords.to_string(),
                r.max_height.to_string(),
                fmt(r.n_chords as f64 / (r.n_trials as f64).sqrt()),
            ]
        }),
    )?;
    files.push(summary);

    let mut first = Process::new(config.mode, config.seed, 0).with_log();
    first.advance_to(config.n)?;
    let st = first.state();
    let lam = st.lamination();
    let height = st.height_function();
    let targets: Vec<(PathBuf, Box<dyn Fn(&Path) -> Result<()>>)> = vec![
        (out.join("lamination.csv"), Box::new(|p: &Path| io::write_lamination_csv(p, &lam))),
        (out.join("height.csv"), Box::new(|p: &Path| io::write_step_csv(p, &height))),
        (out.join("snapshot.csv"), Box::new(|p: &Path| io::write_snapshot_csv(p, st))),
        (out.join("trials.csv"), Box::new(|p: &Path| io::write_trial_log(p, first.log().expect("logged")))),
        (out.join("lamination.svg"), Box::new(|p: &Path| io::write_text(p, &svg::lamination_svg(&lam, 0.3)))),
        (out.join("height.svg"), Box::new(|p: &Path| io::write_text(p, &svg::step_svg(&height, 0.5)))),
    ];
    for (path, write) in &targets {
        write(path)?;
        files.push(path.clone());
    }

    let mut manifest = RunManifest::new(config, "simulate");
    let mean_ratio = rows.iter().map(|r| r.n_chords as f64 / (r.n_trials as f64).sqrt()).sum::<f64>() / rows.len() as f64;
    manifest.set("mean_chords_over_sqrt_n", fmt(mean_ratio));
    let manifest = finish(config, manifest, &files, started)?;
    Ok((rows, manifest))
}

/// Mean height at a uniform query point: `E[C_n(ξ)]` by Monte Carlo.
pub fn monte_carlo_mean(mode: Mode, n: u64, seed: u64, replicates: u64) -> Result<MeanEstimate> {
    let samples = (0..replicates)
        .into_par_iter()
        .map(|r| {
            let st = run_process(mode, n, seed, r)?;
            let xi = Stream::replicate(seed, Purpose::QueryPoints, r).uniform();
            Ok(st.height(xi)? as f64)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(MeanEstimate::from_samples(&samples))
}

/// Decades `10^2, 10^3, ..` up to `n_max`.
pub fn decade_schedule(n_max: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = 100;
    while n <= n_max {
        out.push(n);
        n *= 10;
    }
    out
}

/// One replicate and schedule point of a convergence run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergeRow {
    pub replicate: u64,
    pub n: u64,
    pub sup_diff: f64,
    pub gh_bound: f64,
}

/// Quantiles of the sup norm of the rescaled discrete process and of the
/// limit approximation (homogeneous mode).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantileRow {
    pub n: u64,
    pub p: f64,
    pub discrete: f64,
    pub limit: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergeReport {
    pub rows: Vec<ConvergeRow>,
    pub quantiles: Vec<QuantileRow>,
    /// `(n, median sup_diff, median gh_bound)`; self-similar mode only.
    pub medians: Vec<(u64, f64, f64)>,
}

/// Self-similar mode: each replicate runs to `config.n`, its split
/// coordinates drive `Z_depth`, and `X_n` at every decade is compared
/// with it on the grid. Homogeneous mode: independent samples of the
/// sup norms of `X^h_n` and `H_depth`, compared through quantiles.
pub fn cmd_converge(config: &RunConfig) -> Result<(ConvergeReport, RunManifest)> {
    prepare(config)?;
    let started = Instant::now();
    let schedule = decade_schedule(config.n);
    if schedule.is_empty() {
        return Err(Error::InvalidArgument("converge needs n >= 100".into()));
    }
    let grid = uniform_grid(config.grid);
    let mut files = Vec::new();
    let report = match config.mode {
        Mode::SelfSimilar => {
            let per_rep: Vec<Vec<ConvergeRow>> = config.install(|| {
                (0..config.replicates)
                    .into_par_iter()
                    .map(|r| converge_replicate(config, r, &schedule, &grid))
                    .collect::<Result<Vec<_>>>()
            })?;
            let rows: Vec<ConvergeRow> = per_rep.into_iter().flatten().collect();
            let medians = schedule
                .iter()
                .map(|&n| {
                    let sel: Vec<&ConvergeRow> = rows.iter().filter(|r| r.n == n).collect();
                    let sd: Vec<f64> = sel.iter().map(|r| r.sup_diff).collect();
                    let gh: Vec<f64> = sel.iter().map(|r| r.gh_bound).collect();
                    (n, median(&sd), median(&gh))
                })
                .collect();
            ConvergeReport {
                rows,
                quantiles: Vec::new(),
                medians,
            }
        }
        Mode::Homogeneous => {
            let spec = LimitSpec::homogeneous(config.depth);
            let samples: Vec<(Vec<f64>, f64)> = config.install(|| {
                (0..config.replicates)
                    .into_par_iter()
                    .map(|r| {
                        let mut p = Process::new(Mode::Homogeneous, config.seed, r);
                        let mut norms = Vec::new();
                        for &n in &schedule {
                            p.advance_to(n)?;
                            norms.push(metrics::rescaled_discrete(p.state(), n)?.max());
                        }
                        let h = eval_grid(&spec, &KeyedSource::new(config.seed, r), &grid)?;
                        Ok((norms, h.into_iter().fold(0.0, f64::max)))
                    })
                    .collect::<Result<Vec<_>>>()
            })?;
            let limit: Vec<f64> = samples.iter().map(|s| s.1).collect();
            let mut quantiles = Vec::new();
            for (i, &n) in schedule.iter().enumerate() {
                let disc: Vec<f64> = samples.iter().map(|s| s.0[i]).collect();
                for p in [0.1, 0.25, 0.5, 0.75, 0.9] {
                    quantiles.push(QuantileRow {
                        n,
                        p,
                        discrete: quantile(&disc, p),
                        limit: quantile(&limit, p),
                    });
                }
            }
            ConvergeReport {
                rows: Vec::new(),
                quantiles,
                medians: Vec::new(),
            }
        }
    };
    match config.mode {
        Mode::SelfSimilar => {
            let path = config.out.join("converge.csv");
            io::write_csv(
                &path,
                &["replicate", "n", "sup_diff", "gh_bound"],
                report.rows.iter().map(|r| [r.replicate.to_string(), r.n.to_string(), fmt(r.sup_diff), fmt(r.gh_bound)]),
            )?;
            files.push(path);
            let path = config.out.join("converge_medians.csv");
            io::write_csv(
                &path,
                &["n", "median_sup_diff", "median_gh_bound"],
                report.medians.iter().map(|(n, a, b)| [n.to_string(), fmt(*a), fmt(*b)]),
            )?;
            files.push(path);
        }
        Mode::Homogeneous => {
            let path = config.out.join("converge_quantiles.csv");
            io::write_csv(
                &path,
                &["n", "p", "discrete_sup", "limit_sup"],
                report.quantiles.iter().map(|q| [q.n.to_string(), fmt(q.p), fmt(q.discrete), fmt(q.limit)]),
            )?;
            files.push(path);
        }
    }
    let manifest = finish(config, RunManifest::new(config, "converge"), &files, started)?;
    Ok((report, manifest))
}

fn converge_replicate(config: &RunConfig, r: u64, schedule: &[u64], grid: &[f64]) -> Result<Vec<ConvergeRow>> {
    let mut p = Process::new(Mode::SelfSimilar, config.seed, r);
    let mut snapshots = Vec::with_capacity(schedule.len());
    for &n in schedule {
        p.advance_to(n)?;
        snapshots.push(metrics::rescaled_sample(p.state(), n, grid.to_vec())?);
    }
    let family = p.state().coupled_family()?;
    let z = GridSample::new(grid.to_vec(), coupled_z(&family, config.seed, r, config.depth, grid)?)?;
    schedule
        .iter()
        .zip(&snapshots)
        .map(|(&n, x)| {
            Ok(ConvergeRow {
                replicate: r,
                n,
                sup_diff: metrics::sup_diff(x, &z)?,
                gh_bound: metrics::gh_upper_bound(x, &z)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionReport {
    pub tree: BoxDimEstimate,
    pub line: BoxDimEstimate,
    /// The sampled limit approximation the tree is coded by.
    pub sample: GridSample,
}

/// Box-dimension estimate of the tree coded by `Z_depth` (replicate 0)
/// on `config.grid` points, next to the same estimate for a segment.
/// Also writes the sampled process as `limit.csv` and `limit.svg`.
pub fn cmd_dimension(config: &RunConfig) -> Result<(DimensionReport, RunManifest)> {
    prepare(config)?;
    let started = Instant::now();
    let report = config.install(|| dimension_estimate(config))?;
    let path = config.out.join("dimension.csv");
    let rows = report
        .tree
        .table
        .iter()
        .map(|b| ("tree", b))
        .chain(report.line.table.iter().map(|b| ("line", b)))
        .map(|(cloud, b)| [cloud.to_string(), fmt(b.delta), b.cover.to_string(), b.packing.to_string()]);
    io::write_csv(&path, &["cloud", "delta", "cover", "packing"], rows)?;
    let limit_csv = config.out.join("limit.csv");
    io::write_grid_csv(&limit_csv, &report.sample)?;
    let limit_svg = config.out.join("limit.svg");
    io::write_text(&limit_svg, &svg::function_svg(report.sample.grid(), report.sample.values(), 0.5))?;
    let mut manifest = RunManifest::new(config, "dimension");
    manifest.set("slope", fmt(report.tree.slope));
    manifest.set("slope_se", fmt(report.tree.slope_se));
    manifest.set("cover_slope", fmt(report.tree.cover_slope));
    manifest.set("packing_slope", fmt(report.tree.packing_slope));
    manifest.set("line_slope", fmt(report.line.slope));
    manifest.set("target", fmt(1.0 / Constants::compute().beta));
    let manifest = finish(config, manifest, &[path, limit_csv, limit_svg], started)?;
    Ok((report, manifest))
}

pub fn dimension_estimate(config: &RunConfig) -> Result<DimensionReport> {
    let grid = uniform_grid(config.grid);
    let spec = LimitSpec::for_mode(config.mode, config.depth);
    let z = eval_grid(&spec, &KeyedSource::new(config.seed, 0), &grid)?;
    let tree = boxdim_estimate(&TreePointCloud::new(z.clone()), config.delta_min, config.delta_max)?;
    let line = boxdim_estimate(&TreePointCloud::line(config.grid), config.delta_min, config.delta_max)?;
    Ok(DimensionReport {
        tree,
        line,
        sample: GridSample::new(grid, z)?,
    })
}

/// Writes `mean_table.csv` with `(n, μ(n), μ^h(n), c n^{β/2}, μ(n) - c n^{β/2})`
/// for `n = 1..=n_max` by the recurrences.
pub fn cmd_mean_table(n_max: usize, out: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    let k = Constants::compute();
    let mu = analytics::mean_recurrence(n_max);
    let mu_h = analytics::mean_homogeneous_product(n_max);
    let path = out.join("mean_table.csv");
    io::write_csv(
        &path,
        &["n", "mu_selfsim", "mu_homog", "c_n_pow_half_beta", "residual"],
        (1..=n_max).map(|n| {
            let asym = k.c * (n as f64).powf(k.beta / 2.0);
            [n.to_string(), fmt(mu[n - 1]), fmt(mu_h[n - 1]), fmt(asym), fmt(mu[n - 1] - asym)]
        }),
    )?;
    Ok(path)
}

/// Renders a CSV written by this crate as SVG. The kind is read from the
/// header: `a,b` is a lamination, `breakpoint,value` a height process and
/// `s,value` a sampled function.
pub fn cmd_render(input: &Path, output: &Path, stroke_width: f64) -> Result<()> {
    let text = std::fs::read_to_string(input).map_err(|e| Error::io(input, e))?;
    let header = text.lines().next().unwrap_or("").trim();
    let svg = match header {
        "a,b" => svg::lamination_svg(&io::read_lamination_csv(input)?, stroke_width),
        "breakpoint,value" => svg::step_svg(&io::read_step_csv(input)?, stroke_width),
        "s,value" => {
            let mut grid = Vec::new();
            let mut values = Vec::new();
            for line in text.lines().skip(1).filter(|l| !l.trim().is_empty()) {
                let mut parts = line.split(',');
                let mut next = || -> Result<f64> {
                    parts
                        .next()
                        .and_then(|x| x.trim().parse().ok())
                        .ok_or_else(|| Error::InvalidArgument(format!("{}: bad row {line:?}", input.display())))
                };
                grid.push(next()?);
                values.push(next()?);
            }
            svg::function_svg(&grid, &values, stroke_width)
        }
        other => {
            return Err(Error::InvalidArgument(format!("{}: unrecognised header {other:?}", input.display())));
        }
    };
    io::write_text(output, &svg)
}
