use std::path::PathBuf;

/// Errors raised by the lamination primitives and experiment drivers.
///
/// Exact floating point coincidences (shared chord endpoints, zero-length
/// splits) happen with probability zero under the continuous model and are
/// reported as errors rather than resolved.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("degenerate chord: both endpoints equal {0}")]
    DegenerateChord(f64),
    #[error("value {0} lies outside the unit interval")]
    OutOfRange(f64),
    #[error("point {0} coincides with an existing chord endpoint")]
    EndpointCollision(f64),
    #[error("local coordinates must satisfy 0 < u < v < 1, got ({0}, {1})")]
    InvalidSplit(f64, f64),
    #[error("leaf index {index} out of range ({leaves} leaves)")]
    LeafIndex { index: usize, leaves: usize },
    #[error("operation requires {expected} mode")]
    ModeMismatch { expected: &'static str },
    #[error("node address deeper than {0} letters")]
    AddressOverflow(usize),
    #[error("grids differ ({0} vs {1} points)")]
    GridMismatch(usize, usize),
    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),
    #[error("empty point set")]
    Empty,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("CSV error on {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn csv(path: impl Into<PathBuf>, source: csv::Error) -> Self {
        Error::Csv {
            path: path.into(),
            source,
        }
    }
}
