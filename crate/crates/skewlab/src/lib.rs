//! File formats, parameter sweeps and randomized verification on top of
//! [`skewlab_core`].

pub mod compute;
pub mod matrix_json;
pub mod report;
pub mod sweep;
pub mod verify;

use std::path::PathBuf;

/// Errors surfaced by the command-line layer. All map to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: PathBuf,
        #[source]
        source: matrix_json::FormatError,
    },
    #[error(transparent)]
    Core(#[from] skewlab_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub type AppResult<T> = Result<T, AppError>;

/// Runs `f` on a pool with `threads` workers, or the rayon default when `None` or zero.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> AppResult<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads.filter(|&n| n > 0) {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| AppError::Usage(format!("cannot start thread pool: {e}")))?;
    Ok(pool.install(f))
}
