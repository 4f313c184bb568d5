//! I.i.d. draws from a finite valuation distribution.

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;

use crate::error::{Error, Result};
use crate::harness::ValuationSource;
use crate::rng::Rng;
use crate::trade::{ValuationPair, ValuationSequence};

/// Tolerance on the sum of the supplied probabilities.
pub const PROBABILITY_SUM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct IidFinite {
    support: Vec<ValuationPair>,
    probs: Vec<f64>,
    dist: WeightedIndex<f64>,
}

impl PartialEq for IidFinite {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support && self.probs == other.probs
    }
}

impl IidFinite {
    pub fn new(outcomes: Vec<(ValuationPair, f64)>) -> Result<Self> {
        if outcomes.is_empty() {
            return Err(Error::AdversaryConfig("iid support is empty".into()));
        }
        if let Some((_, p)) = outcomes.iter().find(|(_, p)| !(p.is_finite() && *p >= 0.0)) {
            return Err(Error::AdversaryConfig(format!("iid probability {p} is not a nonnegative number")));
        }
        let total: f64 = outcomes.iter().map(|(_, p)| p).sum();
        if (total - 1.0).abs() > PROBABILITY_SUM_TOLERANCE {
            return Err(Error::AdversaryConfig(format!("iid probabilities sum to {total}, not 1")));
        }
        let (support, raw): (Vec<_>, Vec<_>) = outcomes.into_iter().unzip();
        let probs: Vec<f64> = raw.iter().map(|p| p / total).collect();
        let dist = WeightedIndex::new(&probs).map_err(|e| Error::AdversaryConfig(e.to_string()))?;
        Ok(Self { support, probs, dist })
    }

    pub fn constant(v: ValuationPair) -> Self {
        Self::new(vec![(v, 1.0)]).expect("a single certain outcome is valid")
    }

    pub fn support(&self) -> &[ValuationPair] {
        &self.support
    }

    /// Probabilities after renormalization.
    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }
}

impl ValuationSource for IidFinite {
    fn generate(&self, horizon: usize, rng: &mut Rng) -> Result<ValuationSequence> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        ValuationSequence::new((0..horizon).map(|_| self.support[self.dist.sample(rng)]).collect())
    }
}
