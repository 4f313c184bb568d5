//! Two scaled nested-thirds copies, one in `[0, 1/2 - delta]` and one in
//! `[1/2 + delta, 1]`, with a fair coin choosing which copy is shown.

use rand::Rng as _;

use super::nested_thirds::{Branch, ThirdsProcess};
use crate::error::{Error, Result};
use crate::harness::ValuationSource;
use crate::rng::Rng;
use crate::trade::{ValuationPair, ValuationSequence};

/// Which copy a round was drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoCopy {
    delta: f64,
}

impl TwoCopy {
    pub fn new(delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < 0.25) {
            return Err(Error::AdversaryConfig(format!("two-copy delta must lie in (0, 1/4), got {delta}")));
        }
        Ok(Self { delta })
    }

    /// `delta = 1/T`.
    pub fn for_horizon(horizon: usize) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        Self::new(1.0 / horizon as f64)
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn processes(&self) -> (ThirdsProcess, ThirdsProcess) {
        let d = self.delta;
        let left = ThirdsProcess::new(0.0, 0.5 - d, 0.25 - d, 0.25);
        let right = ThirdsProcess::new(0.5 + d, 1.0, 0.75, 0.75 + d);
        (left.expect("valid left copy"), right.expect("valid right copy"))
    }

    /// Sequence from explicit coins: `(left branch, right branch, shown side)`.
    pub fn from_coins(&self, coins: &[(Branch, Branch, Side)]) -> Result<ValuationSequence> {
        let (mut left, mut right) = self.processes();
        let rounds = coins
            .iter()
            .map(|&(bl, br, side)| {
                let l = left.step(bl);
                let r = right.step(br);
                let (s, b) = match side {
                    Side::Left => l,
                    Side::Right => r,
                };
                ValuationPair::new(s, b)
            })
            .collect::<Result<Vec<_>>>()?;
        ValuationSequence::new(rounds)
    }

    /// Draws the coins and returns them along with the sequence.
    pub fn generate_with_sides(&self, horizon: usize, rng: &mut Rng) -> Result<(ValuationSequence, Vec<Side>)> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        let coins: Vec<_> = (0..horizon)
            .map(|_| {
                let bl = Branch::from_coin(rng.random());
                let br = Branch::from_coin(rng.random());
                let side = if rng.random() { Side::Left } else { Side::Right };
                (bl, br, side)
            })
            .collect();
        let sides = coins.iter().map(|c| c.2).collect();
        Ok((self.from_coins(&coins)?, sides))
    }
}

impl ValuationSource for TwoCopy {
    fn generate(&self, horizon: usize, rng: &mut Rng) -> Result<ValuationSequence> {
        self.generate_with_sides(horizon, rng).map(|(seq, _)| seq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn delta_range() {
        assert!(TwoCopy::new(0.0).is_err());
        assert!(TwoCopy::new(0.25).is_err());
        assert_eq!(TwoCopy::for_horizon(500).unwrap().delta(), 1.0 / 500.0);
    }

    #[test]
    fn gaps_and_halves() {
        let adv = TwoCopy::new(0.05).unwrap();
        let mut rng = Rng::seed_from_u64(9);
        let (seq, sides) = adv.generate_with_sides(400, &mut rng).unwrap();
        for (v, side) in seq.rounds().iter().zip(&sides) {
            let gap = v.buyer() - v.seller();
            assert!((0.25 - 0.05 - 1e-12..=0.25 + 0.05 + 1e-12).contains(&gap));
            match side {
                Side::Left => assert!(v.buyer() <= 0.45 + 1e-15),
                Side::Right => assert!(v.seller() >= 0.55 - 1e-15),
            }
        }
    }
}
