//! Nested-thirds sequences: every emitted interval contains a common point,
//! yet the two candidate intervals at each step are disjoint.

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::harness::ValuationSource;
use crate::rng::Rng;
use crate::trade::{ValuationPair, ValuationSequence};

/// Gap below which the interval stops shrinking.
pub const MIN_GAP: f64 = f64::from_bits((1023 - 500) << 52);

/// Direction chosen by the adversary's coin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Left,
    Right,
}

impl Branch {
    pub fn from_coin(heads: bool) -> Self {
        if heads {
            Branch::Left
        } else {
            Branch::Right
        }
    }
}

/// Current interval `[c, d]` and the number of steps taken.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NestedThirdsState {
    pub c: f64,
    pub d: f64,
    pub t: usize,
}

/// One nested-thirds process living inside `[lo, hi]`.
///
/// A left step keeps `c` and moves `d` to the end of the first third; the
/// pair `(lo, d)` is emitted. A right step keeps `d`, moves `c` to the start
/// of the last third and emits `(c, hi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThirdsProcess {
    lo: f64,
    hi: f64,
    state: NestedThirdsState,
}

impl ThirdsProcess {
    pub fn new(lo: f64, hi: f64, c: f64, d: f64) -> Result<Self> {
        if !(0.0 <= lo && lo <= c && c < d && d <= hi && hi <= 1.0) {
            return Err(Error::AdversaryConfig(format!(
                "need 0 <= lo <= c < d <= hi <= 1, got lo={lo} c={c} d={d} hi={hi}"
            )));
        }
        Ok(Self { lo, hi, state: NestedThirdsState { c, d, t: 0 } })
    }

    pub fn state(&self) -> NestedThirdsState {
        self.state
    }

    /// The two pairs that the next step could emit, left first.
    pub fn candidates(&self) -> ((f64, f64), (f64, f64)) {
        let NestedThirdsState { c, d, .. } = self.state;
        let g = d - c;
        if g < MIN_GAP {
            return ((self.lo, d), (c, self.hi));
        }
        ((self.lo, c + g / 3.0), ((c + 2.0 * g / 3.0).min(d), self.hi))
    }

    pub fn step(&mut self, branch: Branch) -> (f64, f64) {
        let (left, right) = self.candidates();
        let st = &mut self.state;
        st.t += 1;
        match branch {
            Branch::Left => {
                st.d = left.1;
                left
            }
            Branch::Right => {
                st.c = right.0;
                right
            }
        }
    }
}

/// Single nested-thirds adversary started at `[1/2 - delta/2, 1/2 + delta/2]`.
#[derive(Debug, Clone, PartialEq)]
pub struct NestedThirds {
    delta: f64,
}

impl NestedThirds {
    pub fn new(delta: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::AdversaryConfig(format!("nested-thirds delta must lie in (0,1), got {delta}")));
        }
        Ok(Self { delta })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn process(&self) -> ThirdsProcess {
        ThirdsProcess::new(0.0, 1.0, 0.5 - self.delta / 2.0, 0.5 + self.delta / 2.0)
            .expect("delta checked in constructor")
    }

    /// Sequence driven by an explicit list of branches.
    pub fn from_branches(&self, branches: &[Branch]) -> Result<ValuationSequence> {
        let mut proc = self.process();
        let rounds = branches
            .iter()
            .map(|&b| {
                let (s, v) = proc.step(b);
                ValuationPair::new(s, v)
            })
            .collect::<Result<Vec<_>>>()?;
        ValuationSequence::new(rounds)
    }
}

impl ValuationSource for NestedThirds {
    fn generate(&self, horizon: usize, rng: &mut Rng) -> Result<ValuationSequence> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        let branches: Vec<Branch> = (0..horizon).map(|_| Branch::from_coin(rng.random())).collect();
        self.from_branches(&branches)
    }
}
