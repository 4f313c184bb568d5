//! Round-level arithmetic of bilateral trade: valuations, posted prices,
//! gain from trade, social welfare, price grids and the hindsight oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hidden valuations of one seller/buyer pair.
///
/// `b < s` is legal; such a round never trades.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct ValuationPair {
    s: f64,
    b: f64,
}

impl ValuationPair {
    pub fn new(s: f64, b: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&s) || !(0.0..=1.0).contains(&b) {
            return Err(Error::InvalidValuation { s, b });
        }
        Ok(Self { s, b })
    }

    #[inline]
    pub fn seller(&self) -> f64 {
        self.s
    }

    #[inline]
    pub fn buyer(&self) -> f64 {
        self.b
    }
}

impl TryFrom<(f64, f64)> for ValuationPair {
    type Error = Error;
    fn try_from((s, b): (f64, f64)) -> Result<Self> {
        Self::new(s, b)
    }
}

impl From<ValuationPair> for (f64, f64) {
    fn from(v: ValuationPair) -> Self {
        (v.s, v.b)
    }
}

/// Seller price `p` and buyer price `q` with `0 <= p <= q <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct PricePair {
    p: f64,
    q: f64,
}

impl PricePair {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&q) || p > q {
            return Err(Error::InvalidPricePair { p, q });
        }
        Ok(Self { p, q })
    }

    /// The same price posted to both agents.
    pub fn single(price: f64) -> Result<Self> {
        Self::new(price, price)
    }

    #[inline]
    pub fn seller_price(&self) -> f64 {
        self.p
    }

    #[inline]
    pub fn buyer_price(&self) -> f64 {
        self.q
    }

    #[inline]
    pub fn is_single(&self) -> bool {
        self.p == self.q
    }

    /// Seller accepts: `s <= p`.
    #[inline]
    pub fn seller_accepts(&self, v: &ValuationPair) -> bool {
        v.s <= self.p
    }

    /// Buyer accepts: `q <= b`.
    #[inline]
    pub fn buyer_accepts(&self, v: &ValuationPair) -> bool {
        self.q <= v.b
    }

    #[inline]
    pub fn trades(&self, v: &ValuationPair) -> bool {
        self.seller_accepts(v) && self.buyer_accepts(v)
    }
}

impl TryFrom<(f64, f64)> for PricePair {
    type Error = Error;
    fn try_from((p, q): (f64, f64)) -> Result<Self> {
        Self::new(p, q)
    }
}

impl From<PricePair> for (f64, f64) {
    fn from(pp: PricePair) -> Self {
        (pp.p, pp.q)
    }
}

/// `(b - s) * 1{s <= p <= q <= b}`, closed inequalities throughout.
#[inline]
pub fn gain_from_trade(pp: &PricePair, v: &ValuationPair) -> f64 {
    if pp.trades(v) {
        v.b - v.s
    } else {
        0.0
    }
}

/// `s + gain_from_trade`.
#[inline]
pub fn social_welfare(pp: &PricePair, v: &ValuationPair) -> f64 {
    v.s + gain_from_trade(pp, v)
}

/// Gain from trade of a single price, without constructing a [`PricePair`].
#[inline]
pub(crate) fn single_price_gain(price: f64, v: &ValuationPair) -> f64 {
    if v.s <= price && price <= v.b {
        v.b - v.s
    } else {
        0.0
    }
}

/// A finite sorted grid `0 = q_0 <= ... <= q_n = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PriceGrid {
    points: Vec<f64>,
    mesh: f64,
}

impl PriceGrid {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        let (Some(&first), Some(&last)) = (points.first(), points.last()) else {
            return Err(Error::InvalidGrid("empty grid".into()));
        };
        if first != 0.0 || last != 1.0 {
            return Err(Error::InvalidGrid(format!(
                "grid must start at 0 and end at 1, got [{first}, {last}]"
            )));
        }
        if points.iter().any(|x| !(0.0..=1.0).contains(x)) {
            return Err(Error::InvalidGrid("point outside [0,1]".into()));
        }
        if points.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidGrid("points must be nondecreasing".into()));
        }
        let mesh = points.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
        Ok(Self { points, mesh })
    }

    /// `{i/n : i = 0..=n}`.
    pub fn uniform(steps: usize) -> Result<Self> {
        if steps == 0 {
            return Err(Error::InvalidGrid("uniform grid needs at least one step".into()));
        }
        let n = steps as f64;
        Self::new((0..=steps).map(|i| i as f64 / n).collect())
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Largest gap between contiguous points.
    pub fn mesh(&self) -> f64 {
        self.mesh
    }

    /// Index range of the grid points inside `[lo, hi]` (empty when `hi < lo`).
    pub(crate) fn index_range(&self, lo: f64, hi: f64) -> std::ops::Range<usize> {
        if hi < lo {
            return 0..0;
        }
        let start = self.points.partition_point(|&x| x < lo);
        let end = self.points.partition_point(|&x| x <= hi);
        start..end.max(start)
    }
}

/// `uniform_grid(n)`: `n + 1` equally spaced points.
pub fn uniform_grid(steps: usize) -> Result<PriceGrid> {
    PriceGrid::uniform(steps)
}

/// An oblivious, nonempty sequence of valuations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ValuationPair>", into = "Vec<ValuationPair>")]
pub struct ValuationSequence {
    rounds: Vec<ValuationPair>,
}

impl ValuationSequence {
    pub fn new(rounds: Vec<ValuationPair>) -> Result<Self> {
        if rounds.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { rounds })
    }

    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        let rounds = pairs
            .iter()
            .map(|&(s, b)| ValuationPair::new(s, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rounds)
    }

    pub fn rounds(&self) -> &[ValuationPair] {
        &self.rounds
    }

    pub fn horizon(&self) -> usize {
        self.rounds.len()
    }

    /// First `horizon` rounds.
    pub fn truncated(&self, horizon: usize) -> Result<Self> {
        if horizon > self.rounds.len() {
            return Err(Error::LengthMismatch { expected: horizon, actual: self.rounds.len() });
        }
        Self::new(self.rounds[..horizon].to_vec())
    }
}

impl TryFrom<Vec<ValuationPair>> for ValuationSequence {
    type Error = Error;
    fn try_from(rounds: Vec<ValuationPair>) -> Result<Self> {
        Self::new(rounds)
    }
}

impl From<ValuationSequence> for Vec<ValuationPair> {
    fn from(seq: ValuationSequence) -> Self {
        seq.rounds
    }
}

/// `sum_t GFT_t(price)`, summed in round order.
pub fn total_gain_at(seq: &ValuationSequence, price: f64) -> f64 {
    seq.rounds.iter().map(|v| single_price_gain(price, v)).sum()
}

/// Picks the smallest candidate attaining the exact maximum of `exact`,
/// given approximate scores that may carry summation error up to `tol`.
fn refine_argmax(
    candidates: &[f64],
    approx: &[f64],
    tol: f64,
    exact: impl Fn(f64) -> f64,
) -> (f64, f64) {
    let top = approx.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut best: Option<(f64, f64)> = None;
    for (&c, &a) in candidates.iter().zip(approx) {
        if a < top - tol {
            continue;
        }
        let value = exact(c);
        match best {
            Some((_, v)) if value <= v => {}
            _ => best = Some((c, value)),
        }
    }
    best.expect("at least one candidate reaches the approximate maximum")
}

fn summation_tolerance(seq: &ValuationSequence) -> f64 {
    1e-9 * (1.0 + seq.horizon() as f64)
}

/// Best single fixed price in hindsight and its total gain from trade.
///
/// `sum_t GFT_t(.)` is piecewise constant with breakpoints in `{s_t} ∪ {b_t}`
/// and every round's trading interval `[s_t, b_t]` is closed, so the maximum
/// over `[0,1]` is attained on that candidate set. Ties go to the smallest
/// price. By the budget-balance argument a pair `(p, q)` never beats the
/// single price, so pairs are not searched.
pub fn best_fixed_price(seq: &ValuationSequence) -> (f64, f64) {
    let mut candidates: Vec<f64> =
        seq.rounds.iter().flat_map(|v| [v.s, v.b]).collect();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let mut starts: Vec<(f64, f64)> = Vec::new();
    let mut ends: Vec<(f64, f64)> = Vec::new();
    for v in &seq.rounds {
        if v.s <= v.b {
            starts.push((v.s, v.b - v.s));
            ends.push((v.b, v.b - v.s));
        }
    }
    if starts.iter().all(|&(_, w)| w == 0.0) {
        return (candidates[0], 0.0);
    }
    starts.sort_by(|a, b| a.0.total_cmp(&b.0));
    ends.sort_by(|a, b| a.0.total_cmp(&b.0));

    // value(c) = sum of weights with s <= c minus those with b < c.
    let mut approx = Vec::with_capacity(candidates.len());
    let (mut i, mut j) = (0, 0);
    let (mut opened, mut closed) = (0.0, 0.0);
    for &c in &candidates {
        while i < starts.len() && starts[i].0 <= c {
            opened += starts[i].1;
            i += 1;
        }
        while j < ends.len() && ends[j].0 < c {
            closed += ends[j].1;
            j += 1;
        }
        approx.push(opened - closed);
    }
    refine_argmax(&candidates, &approx, summation_tolerance(seq), |p| total_gain_at(seq, p))
}

/// Best price restricted to the grid; smallest index wins ties.
pub fn best_grid_price(seq: &ValuationSequence, grid: &PriceGrid) -> (f64, f64) {
    let n = grid.len();
    let mut diff = vec![0.0; n + 1];
    for v in &seq.rounds {
        let range = grid.index_range(v.s, v.b);
        if range.is_empty() {
            continue;
        }
        let w = v.b - v.s;
        diff[range.start] += w;
        diff[range.end] -= w;
    }
    let mut acc = 0.0;
    let approx: Vec<f64> = diff[..n]
        .iter()
        .map(|d| {
            acc += d;
            acc
        })
        .collect();
    refine_argmax(grid.points(), &approx, summation_tolerance(seq), |p| total_gain_at(seq, p))
}

/// Checks `sum_t GFT_t(p) <= 2 max_{q in Q} sum_t GFT_t(q) + mesh(Q) * T`,
/// up to floating-point summation error.
pub fn check_discretization_bound(seq: &ValuationSequence, grid: &PriceGrid, price: f64) -> bool {
    let lhs = total_gain_at(seq, price);
    let (_, grid_best) = best_grid_price(seq, grid);
    let horizon = seq.horizon() as f64;
    let rhs = 2.0 * grid_best + grid.mesh() * horizon;
    lhs <= rhs + 1e-12 * horizon
}

/// `max_p sum_t GFT_t(p) - alpha * sum_t realized_t`.
pub fn alpha_regret(seq: &ValuationSequence, realized_gains: &[f64], alpha: f64) -> Result<f64> {
    if !(alpha >= 1.0) {
        return Err(Error::InvalidAlpha(alpha));
    }
    if realized_gains.len() != seq.horizon() {
        return Err(Error::LengthMismatch {
            expected: seq.horizon(),
            actual: realized_gains.len(),
        });
    }
    let (_, best) = best_fixed_price(seq);
    Ok(best - alpha * realized_gains.iter().sum::<f64>())
}
