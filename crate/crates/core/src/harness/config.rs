use std::path::PathBuf;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fragmentation::Mode;

/// Everything an experiment needs; the seed determines every random stream.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub name: String,
    pub mode: Mode,
    /// Number of trials of the discrete process (largest `n` for
    /// schedules).
    pub n: u64,
    pub seed: u64,
    pub replicates: u64,
    /// Number of grid points on `[0, 1]`.
    pub grid: usize,
    /// Depth of the limit recursion.
    pub depth: u32,
    pub out: PathBuf,
    pub delta_min: f64,
    pub delta_max: f64,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            name: "run".into(),
            mode: Mode::SelfSimilar,
            n: 1000,
            seed: 1,
            replicates: 1,
            grid: 1025,
            depth: 12,
            out: PathBuf::from("out"),
            delta_min: 2f64.powi(-7),
            delta_max: 2f64.powi(-3),
            threads: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidArgument(format!("{what} must be positive")));
        if self.n == 0 {
            return bad("n");
        }
        if self.replicates == 0 {
            return bad("replicates");
        }
        if self.grid < 2 {
            return Err(Error::InvalidArgument("grid needs at least 2 points".into()));
        }
        if !(self.delta_min > 0.0 && self.delta_min < self.delta_max) {
            return Err(Error::InvalidArgument("need 0 < delta-min < delta-max".into()));
        }
        if self.threads == Some(0) {
            return bad("threads");
        }
        Ok(())
    }

    /// Runs `f` on a pool of `threads` workers if set.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }

    fn entries(&self) -> Vec<(String, String)> {
        vec![
            ("name".into(), self.name.clone()),
            ("mode".into(), self.mode.to_string()),
            ("n".into(), self.n.to_string()),
            ("seed".into(), self.seed.to_string()),
            ("replicates".into(), self.replicates.to_string()),
            ("grid".into(), self.grid.to_string()),
            ("depth".into(), self.depth.to_string()),
            ("delta_min".into(), self.delta_min.to_string()),
            ("delta_max".into(), self.delta_max.to_string()),
        ]
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Flat `key=value` record of a run: the configuration, the code version,
/// the wall time and a digest of every output file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub entries: Vec<(String, String)>,
}

impl RunManifest {
    pub fn new(config: &RunConfig, command: &str) -> Self {
        let mut entries = vec![
            ("command".to_string(), command.to_string()),
            ("version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ];
        entries.extend(config.entries());
        RunManifest { entries }
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Records the digest of a written file under `digest.<file name>`.
    pub fn add_file(&mut self, path: &std::path::Path) -> Result<()> {
        let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
        let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        self.set(format!("digest.{name}"), sha256_hex(&bytes));
        Ok(())
    }

    /// Digests of the output files, in the order they were written.
    pub fn digests(&self) -> Vec<(&str, &str)> {
        self.entries
            .iter()
            .filter_map(|(k, v)| k.strip_prefix("digest.").map(|f| (f, v.as_str())))
            .collect()
    }

    pub fn render(&self) -> String {
        self.entries.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    }
}
