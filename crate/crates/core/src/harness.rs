//! Seeded batches of episodes and their regret statistics.

use serde::{Deserialize, Serialize};

use crate::env::{run_episode, EpisodeTrace, Learner, ProtocolConfig};
use crate::error::{Error, Result};
use crate::par;
use crate::rng::{Rng, SeedStreams, Stream};
use crate::trade::{best_fixed_price, ValuationSequence};

/// Anything that produces an oblivious valuation sequence from its own
/// randomness: the adversary constructions, or a fixed sequence.
pub trait ValuationSource: Send + Sync {
    fn generate(&self, horizon: usize, rng: &mut Rng) -> Result<ValuationSequence>;

    /// Sequence for one episode, drawn from the adversary sub-stream.
    fn generate_seeded(&self, horizon: usize, seed: u64) -> Result<ValuationSequence> {
        self.generate(horizon, &mut SeedStreams::new(seed).rng(Stream::Adversary))
    }
}

impl ValuationSource for ValuationSequence {
    fn generate(&self, horizon: usize, _rng: &mut Rng) -> Result<ValuationSequence> {
        self.truncated(horizon)
    }
}

/// Sample mean and standard deviation (`n - 1` denominator).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
    pub count: usize,
}

impl Summary {
    pub fn of(values: &[f64]) -> Self {
        let count = values.len();
        if count == 0 {
            return Self { mean: f64::NAN, std: f64::NAN, count };
        }
        let mean = values.iter().sum::<f64>() / count as f64;
        let std = if count > 1 {
            let ss: f64 = values.iter().map(|x| (x - mean).powi(2)).sum();
            (ss / (count - 1) as f64).sqrt()
        } else {
            0.0
        };
        Self { mean, std, count }
    }

    /// Standard error of the mean.
    pub fn std_error(&self) -> f64 {
        self.std / (self.count as f64).sqrt()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpisodeOutcome {
    pub seed: u64,
    pub total_gft: f64,
    pub hindsight_price: f64,
    pub hindsight_gft: f64,
    /// One entry per requested alpha, same order.
    pub regrets: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<EpisodeTrace>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaSummary {
    pub alpha: f64,
    pub regret: Summary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub episodes: Vec<EpisodeOutcome>,
    pub total_gft: Summary,
    pub hindsight_gft: Summary,
    pub regret: Vec<AlphaSummary>,
}

pub type LearnerFactory<'a> = dyn Fn() -> Result<Box<dyn Learner>> + Sync + 'a;

/// Batch settings shared by every seed.
pub struct Batch<'a> {
    pub learner: &'a LearnerFactory<'a>,
    pub source: &'a dyn ValuationSource,
    pub protocol: ProtocolConfig,
    pub alphas: &'a [f64],
    pub keep_traces: bool,
}

impl Batch<'_> {
    fn validate(&self, seeds: &[u64]) -> Result<()> {
        if seeds.is_empty() {
            return Err(Error::NoSeeds);
        }
        if let Some(&a) = self.alphas.iter().find(|&&a| !(a >= 1.0)) {
            return Err(Error::InvalidAlpha(a));
        }
        Ok(())
    }

    /// One episode: sequence from the adversary stream, learner from the
    /// learner and estimator streams.
    pub fn episode(&self, seed: u64) -> Result<EpisodeOutcome> {
        let seq = self.source.generate_seeded(self.protocol.horizon, seed)?;
        let mut learner = (self.learner)()?;
        let trace = run_episode(learner.as_mut(), &seq, &self.protocol, &SeedStreams::new(seed))?;
        let (hindsight_price, hindsight_gft) = best_fixed_price(&seq);
        let regrets = self.alphas.iter().map(|a| hindsight_gft - a * trace.total_gft).collect();
        Ok(EpisodeOutcome {
            seed,
            total_gft: trace.total_gft,
            hindsight_price,
            hindsight_gft,
            regrets,
            trace: self.keep_traces.then_some(trace),
        })
    }

    fn summarize(&self, outcomes: Vec<Result<EpisodeOutcome>>) -> Result<BatchSummary> {
        let episodes = outcomes.into_iter().collect::<Result<Vec<_>>>()?;
        let totals: Vec<f64> = episodes.iter().map(|e| e.total_gft).collect();
        let hindsight: Vec<f64> = episodes.iter().map(|e| e.hindsight_gft).collect();
        let regret = self
            .alphas
            .iter()
            .enumerate()
            .map(|(k, &alpha)| {
                let r: Vec<f64> = episodes.iter().map(|e| e.regrets[k]).collect();
                AlphaSummary { alpha, regret: Summary::of(&r) }
            })
            .collect();
        Ok(BatchSummary {
            total_gft: Summary::of(&totals),
            hindsight_gft: Summary::of(&hindsight),
            regret,
            episodes,
        })
    }

    pub fn run_sequential(&self, seeds: &[u64]) -> Result<BatchSummary> {
        self.validate(seeds)?;
        self.summarize(par::map_sequential(seeds, |&s| self.episode(s)))
    }

    /// Runs every seed (in parallel with the `parallel` feature); results
    /// are assembled in seed-list order regardless of completion order.
    pub fn run(&self, seeds: &[u64]) -> Result<BatchSummary> {
        self.validate(seeds)?;
        self.summarize(par::map(seeds, |&s| self.episode(s)))
    }
}

/// `run_many`: one episode per seed, aggregated.
pub fn run_many(
    learner: &LearnerFactory<'_>,
    source: &dyn ValuationSource,
    protocol: ProtocolConfig,
    seeds: &[u64],
    alphas: &[f64],
) -> Result<BatchSummary> {
    Batch { learner, source, protocol, alphas, keep_traces: false }.run(seeds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_stats() {
        let s = Summary::of(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s.mean, 2.5);
        assert!((s.std - (5.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert_eq!(Summary::of(&[3.0]).std, 0.0);
    }
}
