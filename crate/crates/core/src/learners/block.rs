use rand::seq::{index, SliceRandom};

use crate::env::{Feedback, FeedbackModel, Learner, PriceMode, ProtocolConfig, Quote};
use crate::error::{Error, Result};
use crate::learners::estimator::EstimatorDraw;
use crate::learners::mw::MultiplicativeWeights;
use crate::rng::{Rng, SeedStreams, Stream};
use crate::trade::PriceGrid;

/// Block layout of a [`BlockDecompositionLearner`].
#[derive(Debug, Clone, PartialEq)]
pub struct BlockParams {
    pub horizon: usize,
    pub blocks: usize,
    pub block_len: usize,
    pub grid: PriceGrid,
    pub eta: f64,
}

/// Smallest `n` with `n^k >= x`.
fn ceil_root(x: usize, k: u32) -> usize {
    let mut n = (x as f64).powf(1.0 / k as f64).floor() as usize;
    while n.pow(k) < x {
        n += 1;
    }
    while n > 1 && (n - 1).pow(k) >= x {
        n -= 1;
    }
    n.max(1)
}

/// Inner learning rate `sqrt(ln K / S)` for `K` experts over `S` block steps.
fn inner_eta(actions: usize, blocks: usize) -> f64 {
    ((actions.max(2) as f64).ln() / blocks.max(1) as f64).sqrt()
}

impl BlockParams {
    /// `S` blocks of length `ceil(T / S)`; the last block is padded with
    /// dummy rounds when `S` does not divide `T`.
    pub fn new(horizon: usize, blocks: usize, grid: PriceGrid, eta: Option<f64>) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        if blocks == 0 || blocks > horizon {
            return Err(Error::LearnerConfig(format!(
                "block count {blocks} must lie in 1..={horizon}"
            )));
        }
        let block_len = horizon.div_ceil(blocks);
        if grid.len() > block_len {
            return Err(Error::LearnerConfig(format!(
                "grid of {} prices does not fit in blocks of {block_len} rounds",
                grid.len()
            )));
        }
        if blocks * block_len < horizon {
            return Err(Error::LearnerConfig("blocks do not cover the horizon".into()));
        }
        let eta = eta.unwrap_or_else(|| inner_eta(grid.len(), blocks));
        Ok(Self { horizon, blocks, block_len, grid, eta })
    }

    /// Block length `ceil(sqrt T)`, `ceil(T / len)` blocks, and the grid of
    /// multiples of `1/ceil(T^{1/4})`.
    pub fn defaults(horizon: usize) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        if horizon < 2 {
            return Err(Error::LearnerConfig("block-decomposition needs a horizon of at least 2".into()));
        }
        let block_len = ceil_root(horizon, 2);
        let blocks = horizon.div_ceil(block_len);
        // the grid must fit into a block; this only binds for horizons below 10
        let steps = ceil_root(horizon, 4).min(block_len - 1);
        let grid = PriceGrid::uniform(steps)?;
        Self::new(horizon, blocks, grid, None)
    }

    pub fn with_grid_steps(horizon: usize, blocks: Option<usize>, grid_steps: Option<usize>, eta: Option<f64>) -> Result<Self> {
        let defaults = Self::defaults(horizon)?;
        let grid = match grid_steps {
            Some(n) => PriceGrid::uniform(n)?,
            None => defaults.grid,
        };
        Self::new(horizon, blocks.unwrap_or(defaults.blocks), grid, eta)
    }
}

/// Block decomposition over a price grid with one-bit feedback.
///
/// Each block of `Δ` rounds posts the inner expert's price `p_τ`, except at
/// `|Q|` rounds picked by a uniformly random injection of the grid into the
/// block, where the one-bit estimator of the matching grid price runs. At
/// the end of the block the `{0,1}` estimates are fed to the inner
/// multiplicative-weights learner as that block's gains.
#[derive(Debug, Clone)]
pub struct BlockDecompositionLearner {
    params: BlockParams,
    experts: MultiplicativeWeights,
    rng: Rng,
    estimator_rng: Rng,
    block_price: f64,
    /// Offset within the block -> explored grid index.
    schedule: Vec<Option<usize>>,
    estimates: Vec<f64>,
    exploring: Option<usize>,
    offset: usize,
    exploration_rounds: usize,
}

impl BlockDecompositionLearner {
    pub fn new(params: BlockParams) -> Result<Self> {
        let experts = MultiplicativeWeights::new(params.grid.len(), params.eta)?;
        let seeds = SeedStreams::new(0);
        Ok(Self {
            schedule: vec![None; params.block_len],
            estimates: vec![0.0; params.grid.len()],
            experts,
            rng: seeds.rng(Stream::Learner),
            estimator_rng: seeds.rng(Stream::Estimator),
            block_price: 0.0,
            exploring: None,
            offset: 0,
            exploration_rounds: 0,
            params,
        })
    }

    pub fn with_defaults(horizon: usize) -> Result<Self> {
        Self::new(BlockParams::defaults(horizon)?)
    }

    pub fn params(&self) -> &BlockParams {
        &self.params
    }

    pub fn experts(&self) -> &MultiplicativeWeights {
        &self.experts
    }

    /// Grid index explored in the round most recently acted on.
    pub fn exploring(&self) -> Option<usize> {
        self.exploring
    }

    pub fn block_price(&self) -> f64 {
        self.block_price
    }

    pub fn exploration_rounds(&self) -> usize {
        self.exploration_rounds
    }

    /// Estimates gathered in the current (or just finished) block, one per grid price.
    pub fn block_estimates(&self) -> &[f64] {
        &self.estimates
    }

    fn start_block(&mut self) {
        let k = self.params.grid.len();
        self.block_price = self.params.grid.points()[self.experts.sample(&mut self.rng)];
        // uniform k-subset of the block's rounds, matched to the grid by a
        // uniform bijection
        let rounds = index::sample(&mut self.rng, self.params.block_len, k).into_vec();
        let mut prices: Vec<usize> = (0..k).collect();
        prices.shuffle(&mut self.rng);
        self.schedule.fill(None);
        for (offset, price) in rounds.into_iter().zip(prices) {
            self.schedule[offset] = Some(price);
        }
        self.estimates.fill(0.0);
    }
}

impl Learner for BlockDecompositionLearner {
    fn name(&self) -> &'static str {
        "block-decomposition"
    }

    fn check_protocol(&self, cfg: &ProtocolConfig) -> Result<()> {
        if cfg.feedback != FeedbackModel::OneBit || cfg.price_mode != PriceMode::TwoPrices {
            return Err(Error::LearnerConfig(format!(
                "block-decomposition requires one-bit feedback with two prices, got {:?}/{:?}",
                cfg.feedback, cfg.price_mode
            )));
        }
        if cfg.horizon != self.params.horizon {
            return Err(Error::LearnerConfig(format!(
                "learner built for horizon {} but protocol has {}",
                self.params.horizon, cfg.horizon
            )));
        }
        Ok(())
    }

    fn reset(&mut self, seeds: &SeedStreams) {
        self.experts.reset();
        self.rng = seeds.rng(Stream::Learner);
        self.estimator_rng = seeds.rng(Stream::Estimator);
        self.exploring = None;
        self.exploration_rounds = 0;
    }

    fn act(&mut self, round: usize) -> Quote {
        let offset = round % self.params.block_len;
        self.offset = offset;
        if offset == 0 {
            self.start_block();
        }
        self.exploring = self.schedule[offset];
        match self.exploring {
            Some(i) => {
                self.exploration_rounds += 1;
                let price = self.params.grid.points()[i];
                let draw = EstimatorDraw::sample(price, &mut self.estimator_rng)
                    .expect("grid prices lie in [0,1]");
                draw.pair.into()
            }
            None => Quote::single(self.block_price),
        }
    }

    fn observe(&mut self, feedback: &Feedback) {
        if let (Some(i), Feedback::OneBit { traded }) = (self.exploring, *feedback) {
            self.estimates[i] = if traded { 1.0 } else { 0.0 };
        }
        if self.offset + 1 == self.params.block_len {
            self.experts.update(&self.estimates);
        }
    }
}
