//! Grid sweeps, limit tables and self-tests behind the `relspin` command.

pub mod cnot;
pub mod error;
pub mod format;
pub mod selftest;
pub mod sweep;

pub use error::{CliError, Result};
pub use sweep::{run_sweep, Execution, Format, SweepConfig, SweepRow};
