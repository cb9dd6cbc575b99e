use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use lamination_core::analytics::Constants;
use lamination_core::fragmentation::Mode;
use lamination_core::harness::{
    cmd_converge, cmd_dimension, cmd_mean_table, cmd_render, cmd_selftest, cmd_simulate, RunConfig, RunManifest,
};

/// Random recursive laminations of the disk: simulation, limit processes
/// and exact means.
#[derive(Parser)]
#[command(name = "lamination", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the discrete process and write the lamination, height process
    /// and a per-replicate summary.
    Simulate(RunArgs),
    /// Compare rescaled discrete heights with the limit approximation.
    Converge(RunArgs),
    /// Box-counting dimension of the tree coded by the limit approximation.
    Dimension(RunArgs),
    /// Table of exact means up to --n.
    MeanTable {
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Draw a lamination, height or grid CSV as SVG.
    Render {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        stroke_width: f64,
    },
    /// Exact-arithmetic and oracle checks; exits nonzero on any failure.
    Selftest,
}

#[derive(Args)]
struct RunArgs {
    /// self-similar or homogeneous
    #[arg(long, default_value = "self-similar")]
    mode: Mode,
    /// Number of trials (largest n for schedules).
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    replicates: Option<u64>,
    /// Depth of the limit recursion.
    #[arg(long)]
    depth: Option<u32>,
    /// Number of grid points on [0, 1].
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    delta_min: Option<f64>,
    #[arg(long)]
    delta_max: Option<f64>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Experiment name recorded in the manifest.
    #[arg(long)]
    name: Option<String>,
}

impl RunArgs {
    fn config(self, command: &str) -> RunConfig {
        let d = RunConfig::default();
        RunConfig {
            name: self.name.unwrap_or_else(|| command.to_string()),
            mode: self.mode,
            n: self.n.unwrap_or(d.n),
            seed: self.seed.unwrap_or(d.seed),
            replicates: self.replicates.unwrap_or(d.replicates),
            grid: self.grid.unwrap_or(d.grid),
            depth: self.depth.unwrap_or(d.depth),
            out: self.out.unwrap_or(d.out),
            delta_min: self.delta_min.unwrap_or(d.delta_min),
            delta_max: self.delta_max.unwrap_or(d.delta_max),
            threads: self.threads,
        }
    }
}

fn report(manifest: &RunManifest, out: &std::path::Path, keys: &[&str]) {
    for key in keys {
        if let Some(v) = manifest.get(key) {
            println!("{key} = {v}");
        }
    }
    for (file, _) in manifest.digests() {
        println!("wrote {}", out.join(file).display());
    }
    println!("wrote {}", out.join("manifest.txt").display());
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Simulate(args) => {
            let config = args.config("simulate");
            let (rows, manifest) = cmd_simulate(&config).context("simulate")?;
            let chords: f64 = rows.iter().map(|r| r.n_chords as f64).sum::<f64>() / rows.len() as f64;
            println!("replicates = {}, mean chords = {chords}", rows.len());
            report(&manifest, &config.out, &["mode", "n"]);
        }
        Command::Converge(args) => {
            let config = args.config("converge");
            let (rep, manifest) = cmd_converge(&config).context("converge")?;
            for (n, sup, gh) in &rep.medians {
                println!("n = {n}: median sup diff {sup}, median gh bound {gh}");
            }
            report(&manifest, &config.out, &["mode", "depth"]);
        }
        Command::Dimension(args) => {
            let config = args.config("dimension");
            let (_, manifest) = cmd_dimension(&config).context("dimension")?;
            report(&manifest, &config.out, &["slope", "slope_se", "line_slope", "target"]);
        }
        Command::MeanTable { n, out } => {
            std::fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            let path = cmd_mean_table(n, &out).context("mean-table")?;
            println!("wrote {}", path.display());
        }
        Command::Render {
            input,
            output,
            stroke_width,
        } => {
            cmd_render(&input, &output, stroke_width).with_context(|| format!("rendering {}", input.display()))?;
            println!("wrote {}", output.display());
        }
        Command::Selftest => {
            let report = cmd_selftest(&Constants::compute()).context("selftest")?;
            print!("{}", report.render());
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
