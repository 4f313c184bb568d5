use std::ops::Range;

use rand::Rng as _;

use crate::env::{Feedback, FeedbackModel, Learner, ProtocolConfig, Quote};
use crate::error::{Error, Result};
use crate::rng::{Rng, SeedStreams, Stream};
use crate::trade::PriceGrid;

/// Weights are rescaled by their maximum once it passes this value.
const RESCALE_ABOVE: f64 = 1e200;

/// Multiplicative weights in gains form: `w_i <- w_i * (1 + eta * g_i)`
/// with gains in `[0, 1]`.
///
/// Weights are kept relative to the largest one and floored at the smallest
/// positive normal `f64`, so they stay strictly positive.
#[derive(Debug, Clone)]
pub struct MultiplicativeWeights {
    weights: Vec<f64>,
    eta: f64,
}

impl MultiplicativeWeights {
    pub fn new(actions: usize, eta: f64) -> Result<Self> {
        if actions == 0 {
            return Err(Error::LearnerConfig("multiplicative weights needs an action".into()));
        }
        if !(eta > 0.0) || !eta.is_finite() {
            return Err(Error::LearnerConfig(format!("learning rate must be positive, got {eta}")));
        }
        Ok(Self { weights: vec![1.0; actions], eta })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn reset(&mut self) {
        self.weights.fill(1.0);
    }

    /// Selection distribution (weights normalized).
    pub fn probabilities(&self) -> Vec<f64> {
        let total: f64 = self.weights.iter().sum();
        self.weights.iter().map(|w| w / total).collect()
    }

    pub fn sample(&self, rng: &mut Rng) -> usize {
        let total: f64 = self.weights.iter().sum();
        let mut target = rng.random::<f64>() * total;
        for (i, &w) in self.weights.iter().enumerate() {
            if target < w {
                return i;
            }
            target -= w;
        }
        // rounding left a sliver past the last bucket
        self.weights.iter().rposition(|&w| w > 0.0).unwrap_or(self.weights.len() - 1)
    }

    /// Full update with one gain per action.
    pub fn update(&mut self, gains: &[f64]) {
        debug_assert_eq!(gains.len(), self.weights.len());
        for (w, g) in self.weights.iter_mut().zip(gains) {
            *w *= 1.0 + self.eta * g;
        }
        self.rescale();
    }

    /// Update where every action in `range` earned `gain` and the rest earned 0.
    pub fn update_range(&mut self, range: Range<usize>, gain: f64) {
        if range.is_empty() || gain == 0.0 {
            return;
        }
        let factor = 1.0 + self.eta * gain;
        for w in &mut self.weights[range] {
            *w *= factor;
        }
        self.rescale();
    }

    fn rescale(&mut self) {
        let max = self.weights.iter().copied().fold(0.0, f64::max);
        if max > RESCALE_ABOVE {
            for w in &mut self.weights {
                *w = (*w / max).max(f64::MIN_POSITIVE);
            }
        }
    }
}

/// `sqrt(ln T / T)`, with `ln 2` standing in for `ln 1` at `T = 1`.
pub fn default_eta(horizon: usize) -> f64 {
    let t = horizon.max(1) as f64;
    (t.max(2.0).ln() / t).sqrt()
}

/// Experts over a price grid under full feedback: samples a grid price in
/// proportion to its weight, posts it as a single price, and credits every
/// grid price with the gain it would have earned.
#[derive(Debug, Clone)]
pub struct MwFullFeedbackLearner {
    grid: PriceGrid,
    mw: MultiplicativeWeights,
    rng: Rng,
}

impl MwFullFeedbackLearner {
    pub fn new(grid: PriceGrid, eta: f64) -> Result<Self> {
        let mw = MultiplicativeWeights::new(grid.len(), eta)?;
        Ok(Self { grid, mw, rng: SeedStreams::new(0).rng(Stream::Learner) })
    }

    /// Grid `uniform_grid(T)` and `eta = sqrt(ln T / T)`.
    pub fn with_defaults(horizon: usize) -> Result<Self> {
        Self::new(PriceGrid::uniform(horizon.max(1))?, default_eta(horizon))
    }

    pub fn grid(&self) -> &PriceGrid {
        &self.grid
    }

    pub fn weights(&self) -> &MultiplicativeWeights {
        &self.mw
    }
}

impl Learner for MwFullFeedbackLearner {
    fn name(&self) -> &'static str {
        "mw-full"
    }

    fn check_protocol(&self, cfg: &ProtocolConfig) -> Result<()> {
        if cfg.feedback != FeedbackModel::Full {
            return Err(Error::LearnerConfig(format!(
                "mw-full requires full feedback, got {:?}",
                cfg.feedback
            )));
        }
        Ok(())
    }

    fn reset(&mut self, seeds: &SeedStreams) {
        self.mw.reset();
        self.rng = seeds.rng(Stream::Learner);
    }

    fn act(&mut self, _round: usize) -> Quote {
        Quote::single(self.grid.points()[self.mw.sample(&mut self.rng)])
    }

    fn observe(&mut self, feedback: &Feedback) {
        if let Feedback::Full { s, b } = *feedback {
            // GFT_t(q) = b - s on [s, b] and 0 elsewhere
            self.mw.update_range(self.grid.index_range(s, b), b - s);
        }
    }
}
