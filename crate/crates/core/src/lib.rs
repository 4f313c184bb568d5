//! Repeated bilateral trade: valuations, feedback protocols, learners and
//! adversarial valuation sources.

pub mod adversaries;
pub mod env;
pub mod error;
pub mod exact;
pub mod harness;
pub mod learners;
pub mod par;
pub mod random_walk;
pub mod rng;
pub mod trade;

pub use env::{
    run_episode, EpisodeTrace, Feedback, FeedbackModel, Learner, PriceMode, ProtocolConfig, Quote,
    RoundRecord,
};
pub use error::{Error, Result};
pub use harness::{
    run_many, AlphaSummary, Batch, BatchSummary, EpisodeOutcome, LearnerFactory, Summary, ValuationSource,
};
pub use rng::{Rng, SeedStreams, Stream};
pub use trade::{
    alpha_regret, best_fixed_price, best_grid_price, check_discretization_bound, gain_from_trade,
    social_welfare, total_gain_at, uniform_grid, PriceGrid, PricePair, ValuationPair,
    ValuationSequence,
};
