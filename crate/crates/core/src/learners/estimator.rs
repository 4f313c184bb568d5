use rand::Rng as _;

use crate::error::{Error, Result};
use crate::rng::Rng;
use crate::trade::{PricePair, ValuationPair};

/// One draw of the two-price, one-bit estimator of `GFT(p)`.
///
/// With probability `p` (head) it posts `(U, p)` with `U ~ Unif[0, p]`,
/// otherwise `(p, V)` with `V ~ Unif[p, 1]`. The trade bit of the posted
/// pair is an unbiased estimate of `GFT((p, p), v)`:
/// `p * (p - s)/p + (1 - p) * (b - p)/(1 - p) = b - s` when `s <= p <= b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimatorDraw {
    pub coin_head: bool,
    /// `U` on heads, `V` on tails.
    pub aux: f64,
    pub pair: PricePair,
}

impl EstimatorDraw {
    pub fn sample(price: f64, rng: &mut Rng) -> Result<Self> {
        if !(0.0..=1.0).contains(&price) {
            return Err(Error::LearnerConfig(format!("estimator price {price} outside [0,1]")));
        }
        // random() lies in [0, 1): p = 0 never lands heads, p = 1 always does
        let coin_head = rng.random::<f64>() < price;
        let (aux, pair) = if coin_head {
            let u = rng.random_range(0.0..=price);
            (u, PricePair::new(u, price)?)
        } else {
            let v = rng.random_range(price..=1.0);
            (v, PricePair::new(price, v)?)
        };
        Ok(Self { coin_head, aux, pair })
    }
}

/// Runs the estimator against known valuations; returns the posted pair and
/// the one-bit estimate (the trade indicator of that pair).
pub fn gft_estimate(price: f64, v: &ValuationPair, rng: &mut Rng) -> Result<(PricePair, bool)> {
    let draw = EstimatorDraw::sample(price, rng)?;
    Ok((draw.pair, draw.pair.trades(v)))
}
