//! Configuration, reports and commands behind the `bitrade` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use commands::analyze::{analyze_game, golden_passed, BUILTIN_BILATERAL};
pub use commands::estimator::{validate_estimator, EstimatorReport, EstimatorTrial};
pub use commands::run::{execute, execute_at, run, RunOutput};
pub use commands::sweep::{loglog_slope, sweep, SweepResult, SweepRow};
pub use config::{Experiment, ExperimentConfig, Seeds};
pub use error::{CliError, Result};
pub use report::{RegretReport, SeedTotals};
