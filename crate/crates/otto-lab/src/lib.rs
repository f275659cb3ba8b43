//! Tooling around `otto-core`: parameter sweeps written as CSV, the tables
//! behind the published figures, single-point JSON reports and the
//! closed-form-versus-oracle verification run.

pub mod figure;
pub mod format;
pub mod point;
pub mod quantity;
pub mod sweep;
pub mod verify;

use std::io;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Model(#[from] otto_core::Error),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl LabError {
    /// 1 for usage errors, 2 for domain errors (IO failures are reported as
    /// usage errors since they come from a bad `--out`).
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Model(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
