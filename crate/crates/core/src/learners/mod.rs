//! Posted-price learners: baselines, multiplicative weights under full
//! feedback, the one-bit gain estimator and block decomposition.

mod baseline;
mod block;
mod estimator;
mod mw;
mod spec;

pub use baseline::{FixedPriceLearner, RandomUniformLearner};
pub use block::{BlockDecompositionLearner, BlockParams};
pub use estimator::{gft_estimate, EstimatorDraw};
pub use mw::{default_eta, MultiplicativeWeights, MwFullFeedbackLearner};
pub use spec::LearnerSpec;
