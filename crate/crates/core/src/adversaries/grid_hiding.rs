//! Grid-hiding construction: one wide pair hidden among `delta`-wide pairs,
//! indistinguishable to any single price off the `delta` grid.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng as _;

use crate::error::{Error, Result};
use crate::exact::{is_integer_positive, ExactOutcome};
use crate::harness::ValuationSource;
use crate::rng::Rng;
use crate::trade::{ValuationPair, ValuationSequence};

#[derive(Debug, Clone, PartialEq)]
pub struct GridHiding {
    wide: BigRational,
    narrow: BigRational,
    perturb: bool,
}

/// A drawn instance: hidden block, shift, and the support as floats.
#[derive(Debug, Clone, PartialEq)]
pub struct GridHidingInstance {
    pub hidden: usize,
    pub shift: Option<f64>,
    pub support: Vec<ValuationPair>,
}

fn ratio_usize(x: &BigRational) -> usize {
    x.to_integer().to_usize().expect("ratio fits in usize")
}

impl GridHiding {
    /// `wide` is the block width, `narrow` the hidden grid step.
    pub fn new(wide: BigRational, narrow: BigRational) -> Result<Self> {
        let one = BigRational::one();
        let bad = |why: &str| Err(Error::AdversaryConfig(format!("grid-hiding: {why} (wide={wide}, narrow={narrow})")));
        if narrow <= BigRational::zero() || wide > one || narrow >= wide {
            return bad("need 0 < narrow < wide <= 1");
        }
        if !is_integer_positive(&wide.recip()) || !is_integer_positive(&narrow.recip()) {
            return bad("1/wide and 1/narrow must be integers");
        }
        if !is_integer_positive(&(&wide / &narrow)) {
            return bad("wide/narrow must be an integer");
        }
        Ok(Self { wide, narrow, perturb: true })
    }

    /// Parameters targeting a constant `alpha`: wide = 1/(2 alpha), narrow = 1/(8 alpha^2).
    pub fn for_alpha(alpha: &BigRational) -> Result<Self> {
        let two = BigRational::from_integer(BigInt::from(2));
        let eight = BigRational::from_integer(BigInt::from(8));
        if *alpha <= BigRational::zero() {
            return Err(Error::AdversaryConfig(format!("grid-hiding alpha must be positive, got {alpha}")));
        }
        Self::new((&two * alpha).recip(), (&eight * alpha * alpha).recip())
    }

    pub fn with_perturbation(mut self, perturb: bool) -> Self {
        self.perturb = perturb;
        self
    }

    pub fn wide(&self) -> &BigRational {
        &self.wide
    }

    pub fn narrow(&self) -> &BigRational {
        &self.narrow
    }

    pub fn perturbed(&self) -> bool {
        self.perturb
    }

    /// Number of hidden positions, `1/wide`.
    pub fn blocks(&self) -> usize {
        ratio_usize(&self.wide.recip())
    }

    /// `wide/narrow`.
    pub fn steps_per_block(&self) -> usize {
        ratio_usize(&(&self.wide / &self.narrow))
    }

    /// `1/narrow`, the size of every support set.
    pub fn support_size(&self) -> usize {
        ratio_usize(&self.narrow.recip())
    }

    /// Exact support for hidden block `hidden`, before perturbation.
    pub fn support(&self, hidden: usize) -> Result<Vec<(BigRational, BigRational)>> {
        let blocks = self.blocks();
        if hidden >= blocks {
            return Err(Error::AdversaryConfig(format!("hidden block {hidden} out of range 0..{blocks}")));
        }
        let k_max = self.steps_per_block();
        let at = |j: usize, k: usize| {
            &self.wide * BigRational::from_integer(j.into()) + &self.narrow * BigRational::from_integer(k.into())
        };
        let mut out = Vec::with_capacity(self.support_size());
        out.push((at(hidden, 0), at(hidden + 1, 0)));
        for j in (0..blocks).filter(|&j| j != hidden) {
            out.extend((0..k_max).map(|k| (at(j, k), at(j, k + 1))));
        }
        out.extend((1..k_max).map(|k| (at(hidden, k), at(hidden, k))));
        Ok(out)
    }

    /// Support as uniformly weighted exact outcomes.
    pub fn outcomes(&self, hidden: usize) -> Result<Vec<ExactOutcome>> {
        Ok(self
            .support(hidden)?
            .into_iter()
            .map(|(s, b)| ExactOutcome::new(s, b, self.narrow.clone()))
            .collect())
    }

    /// Expected hindsight total of a price inside the hidden wide block: `T * narrow * wide`.
    pub fn hindsight_value(&self, horizon: usize) -> BigRational {
        BigRational::from_integer(horizon.into()) * &self.narrow * &self.wide
    }

    pub fn instance(&self, rng: &mut Rng) -> Result<GridHidingInstance> {
        let hidden = rng.random_range(0..self.blocks());
        let shift = self.perturb.then(|| rng.random_range(0.0..=0.5));
        let support = self
            .support(hidden)?
            .iter()
            .map(|(s, b)| {
                let (s, b) = (s.to_f64().unwrap_or(f64::NAN), b.to_f64().unwrap_or(f64::NAN));
                match shift {
                    Some(x) => ValuationPair::new(s / 2.0 + x, b / 2.0 + x),
                    None => ValuationPair::new(s, b),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GridHidingInstance { hidden, shift, support })
    }
}

impl ValuationSource for GridHiding {
    fn generate(&self, horizon: usize, rng: &mut Rng) -> Result<ValuationSequence> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        let inst = self.instance(rng)?;
        let n = inst.support.len();
        ValuationSequence::new((0..horizon).map(|_| inst.support[rng.random_range(0..n)]).collect())
    }
}
