use rand::Rng as _;

use crate::env::{Feedback, Learner, Quote};
use crate::error::{Error, Result};
use crate::rng::{Rng, SeedStreams, Stream};

/// Posts `(p, p)` every round and ignores feedback.
#[derive(Debug, Clone)]
pub struct FixedPriceLearner {
    price: f64,
}

impl FixedPriceLearner {
    pub fn new(price: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&price) {
            return Err(Error::LearnerConfig(format!("fixed price {price} outside [0,1]")));
        }
        Ok(Self { price })
    }

    pub fn price(&self) -> f64 {
        self.price
    }
}

impl Learner for FixedPriceLearner {
    fn name(&self) -> &'static str {
        "fixed"
    }

    fn reset(&mut self, _seeds: &SeedStreams) {}

    fn act(&mut self, _round: usize) -> Quote {
        Quote::single(self.price)
    }

    fn observe(&mut self, _feedback: &Feedback) {}
}

/// Posts an independent uniform single price every round.
#[derive(Debug, Clone)]
pub struct RandomUniformLearner {
    rng: Rng,
}

impl RandomUniformLearner {
    pub fn new() -> Self {
        Self { rng: SeedStreams::new(0).rng(Stream::Learner) }
    }
}

impl Default for RandomUniformLearner {
    fn default() -> Self {
        Self::new()
    }
}

impl Learner for RandomUniformLearner {
    fn name(&self) -> &'static str {
        "random-uniform"
    }

    fn reset(&mut self, seeds: &SeedStreams) {
        self.rng = seeds.rng(Stream::Learner);
    }

    fn act(&mut self, _round: usize) -> Quote {
        Quote::single(self.rng.random_range(0.0..=1.0))
    }

    fn observe(&mut self, _feedback: &Feedback) {}
}
