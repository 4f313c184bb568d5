//! Two i.i.d. four-outcome distributions that differ only in where an extra
//! `epsilon` of probability sits.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::exact::{ExactOutcome, Rational};
use crate::harness::ValuationSource;
use crate::rng::Rng;
use crate::trade::{ValuationPair, ValuationSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourOutcomeSide {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FourOutcome {
    epsilon: BigRational,
    delta_pert: BigRational,
}

/// A drawn instance: side and shift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourOutcomeInstance {
    pub side: FourOutcomeSide,
    pub shift: f64,
}

fn r(n: i64, d: i64) -> BigRational {
    Rational::new(n, d).0
}

impl FourOutcome {
    pub fn new(epsilon: BigRational, delta_pert: BigRational) -> Result<Self> {
        if epsilon <= BigRational::zero() || epsilon > r(1, 4) {
            return Err(Error::AdversaryConfig(format!("four-outcome epsilon must lie in (0, 1/4], got {epsilon}")));
        }
        if delta_pert < BigRational::zero() {
            return Err(Error::AdversaryConfig(format!("four-outcome perturbation must be >= 0, got {delta_pert}")));
        }
        Ok(Self { epsilon, delta_pert })
    }

    pub fn epsilon(&self) -> &BigRational {
        &self.epsilon
    }

    pub fn delta_pert(&self) -> &BigRational {
        &self.delta_pert
    }

    /// Exact unperturbed distribution of `side`.
    pub fn outcomes(&self, side: FourOutcomeSide) -> Vec<ExactOutcome> {
        let q = r(1, 4);
        let up = &q + &self.epsilon;
        let down = &q - &self.epsilon;
        let probs = match side {
            FourOutcomeSide::First => [up, down, q.clone(), q],
            FourOutcomeSide::Second => [q.clone(), q, down, up],
        };
        let points = [(r(0, 1), r(1, 2)), (r(1, 3), r(1, 2)), (r(1, 2), r(2, 3)), (r(1, 2), r(1, 1))];
        points
            .into_iter()
            .zip(probs)
            .map(|((s, b), p)| ExactOutcome::new(s, b, p))
            .collect()
    }

    pub fn instance(&self, rng: &mut Rng) -> FourOutcomeInstance {
        let side = if rng.random() { FourOutcomeSide::First } else { FourOutcomeSide::Second };
        let dp = self.delta_pert.to_f64().unwrap_or(0.0);
        let shift = if dp > 0.0 { rng.random_range(0.0..=dp) } else { 0.0 };
        FourOutcomeInstance { side, shift }
    }
}

impl ValuationSource for FourOutcome {
    fn generate(&self, horizon: usize, rng: &mut Rng) -> Result<ValuationSequence> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        let inst = self.instance(rng);
        let outcomes = self.outcomes(inst.side);
        let scale = 1.0 + self.delta_pert.to_f64().unwrap_or(0.0);
        let support = outcomes
            .iter()
            .map(|o| {
                let s = o.s.to_f64().unwrap_or(f64::NAN);
                let b = o.b.to_f64().unwrap_or(f64::NAN);
                ValuationPair::new((s + inst.shift) / scale, (b + inst.shift) / scale)
            })
            .collect::<Result<Vec<_>>>()?;
        let weights: Vec<f64> = outcomes.iter().map(|o| o.prob.to_f64().unwrap_or(0.0)).collect();
        let dist = WeightedIndex::new(&weights).map_err(|e| Error::AdversaryConfig(e.to_string()))?;
        ValuationSequence::new((0..horizon).map(|_| support[dist.sample(rng)]).collect())
    }
}
