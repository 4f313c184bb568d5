//! Exact analysis of finite partial-monitoring games: cell decomposition,
//! action classification, neighbor pairs and observability conditions.

pub mod bilateral;
pub mod cells;
pub mod error;
pub mod game;
pub mod linalg;
pub mod observability;
pub mod polytope;
pub mod rational;
pub mod report;

/// Largest supported number of outcomes.
pub const MAX_OUTCOMES: usize = 8;

pub use bilateral::bilateral_trade_game;
pub use cells::{classify_actions, neighbors, ActionKind, Cell, Classification, NeighborPair};
pub use error::{PmError, Result};
pub use game::{GameDocument, PmGame, SignalMatrix};
pub use observability::{global_observability, local_observability, GlobalObservability, LocalObservability};
pub use report::{analyze, bilateral_trade_golden, AnalysisReport, GoldenCheck};
