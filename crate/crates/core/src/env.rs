//! The sequential protocol: a learner posts prices, the environment checks
//! them, scores the round against the hidden valuations and reveals only the
//! configured feedback.

use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SeedStreams;
use crate::trade::{gain_from_trade, social_welfare, PricePair, ValuationPair, ValuationSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FeedbackModel {
    Full,
    TwoBit,
    OneBit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PriceMode {
    SinglePrice,
    TwoPrices,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtocolConfig {
    pub feedback: FeedbackModel,
    pub price_mode: PriceMode,
    pub horizon: usize,
}

impl ProtocolConfig {
    pub fn new(feedback: FeedbackModel, price_mode: PriceMode, horizon: usize) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        Ok(Self { feedback, price_mode, horizon })
    }
}

/// What the learner gets to see after a round.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Feedback {
    Full { s: f64, b: f64 },
    TwoBit { seller_accepts: bool, buyer_accepts: bool },
    OneBit { traded: bool },
}

impl Feedback {
    pub fn reveal(model: FeedbackModel, prices: &PricePair, v: &ValuationPair) -> Self {
        match model {
            FeedbackModel::Full => Feedback::Full { s: v.seller(), b: v.buyer() },
            FeedbackModel::TwoBit => Feedback::TwoBit {
                seller_accepts: prices.seller_accepts(v),
                buyer_accepts: prices.buyer_accepts(v),
            },
            FeedbackModel::OneBit => Feedback::OneBit { traded: prices.trades(v) },
        }
    }

    pub fn model(&self) -> FeedbackModel {
        match self {
            Feedback::Full { .. } => FeedbackModel::Full,
            Feedback::TwoBit { .. } => FeedbackModel::TwoBit,
            Feedback::OneBit { .. } => FeedbackModel::OneBit,
        }
    }
}

/// CSV cell encoding: `s;b` for full feedback, two digits for the two bits,
/// one digit for the trade bit.
impl fmt::Display for Feedback {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Feedback::Full { s, b } => write!(f, "{s};{b}"),
            Feedback::TwoBit { seller_accepts, buyer_accepts } => {
                write!(f, "{}{}", seller_accepts as u8, buyer_accepts as u8)
            }
            Feedback::OneBit { traded } => write!(f, "{}", traded as u8),
        }
    }
}

/// Prices as proposed by a learner, before the environment validates them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quote {
    pub seller: f64,
    pub buyer: f64,
}

impl Quote {
    pub fn single(price: f64) -> Self {
        Self { seller: price, buyer: price }
    }
}

impl From<PricePair> for Quote {
    fn from(pp: PricePair) -> Self {
        Self { seller: pp.seller_price(), buyer: pp.buyer_price() }
    }
}

/// A posted-price learner.
///
/// `act` may depend only on earlier feedback and the learner's own
/// randomness; the environment never passes valuations any other way.
pub trait Learner: Send {
    fn name(&self) -> &'static str;

    /// Rejects protocols the learner cannot run under.
    fn check_protocol(&self, _cfg: &ProtocolConfig) -> Result<()> {
        Ok(())
    }

    /// Restarts the learner; randomness must be drawn from `seeds`.
    fn reset(&mut self, seeds: &SeedStreams);

    fn act(&mut self, round: usize) -> Quote;

    fn observe(&mut self, feedback: &Feedback);
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub t: usize,
    pub prices: PricePair,
    pub feedback: Feedback,
    pub gft: f64,
    pub sw: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpisodeTrace {
    pub rounds: Vec<RoundRecord>,
    pub total_gft: f64,
    pub total_sw: f64,
}

impl EpisodeTrace {
    pub fn horizon(&self) -> usize {
        self.rounds.len()
    }

    pub fn gains(&self) -> Vec<f64> {
        self.rounds.iter().map(|r| r.gft).collect()
    }

    /// Columns `t,p,q,feedback,gft,sw`, rounds numbered from 1.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["t", "p", "q", "feedback", "gft", "sw"])?;
        for r in &self.rounds {
            w.write_record([
                (r.t + 1).to_string(),
                r.prices.seller_price().to_string(),
                r.prices.buyer_price().to_string(),
                r.feedback.to_string(),
                r.gft.to_string(),
                r.sw.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace is always serializable")
    }
}

fn validate_quote(round: usize, quote: Quote, mode: PriceMode) -> Result<PricePair> {
    let violation = |reason: String| Error::ProtocolViolation { round, reason };
    let Quote { seller, buyer } = quote;
    if !(0.0..=1.0).contains(&seller) || !(0.0..=1.0).contains(&buyer) {
        return Err(violation(format!("price outside [0,1]: ({seller}, {buyer})")));
    }
    if seller > buyer {
        return Err(violation(format!("seller price {seller} exceeds buyer price {buyer}")));
    }
    if mode == PriceMode::SinglePrice && seller != buyer {
        return Err(violation(format!("two prices ({seller}, {buyer}) in single-price mode")));
    }
    Ok(PricePair::new(seller, buyer).expect("validated above"))
}

/// Plays `learner` against the oblivious sequence `seq`.
pub fn run_episode(
    learner: &mut dyn Learner,
    seq: &ValuationSequence,
    cfg: &ProtocolConfig,
    seeds: &SeedStreams,
) -> Result<EpisodeTrace> {
    if seq.horizon() != cfg.horizon {
        return Err(Error::LengthMismatch { expected: cfg.horizon, actual: seq.horizon() });
    }
    learner.check_protocol(cfg)?;
    learner.reset(seeds);

    let mut rounds = Vec::with_capacity(cfg.horizon);
    let (mut total_gft, mut total_sw) = (0.0, 0.0);
    for (t, v) in seq.rounds().iter().enumerate() {
        let prices = validate_quote(t, learner.act(t), cfg.price_mode)?;
        let gft = gain_from_trade(&prices, v);
        let sw = social_welfare(&prices, v);
        let feedback = Feedback::reveal(cfg.feedback, &prices, v);
        learner.observe(&feedback);
        total_gft += gft;
        total_sw += sw;
        rounds.push(RoundRecord { t, prices, feedback, gft, sw });
    }
    Ok(EpisodeTrace { rounds, total_gft, total_sw })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Constant(Quote);

    impl Learner for Constant {
        fn name(&self) -> &'static str {
            "constant"
        }
        fn reset(&mut self, _: &SeedStreams) {}
        fn act(&mut self, _: usize) -> Quote {
            self.0
        }
        fn observe(&mut self, _: &Feedback) {}
    }

    fn cfg(feedback: FeedbackModel, mode: PriceMode, horizon: usize) -> ProtocolConfig {
        ProtocolConfig::new(feedback, mode, horizon).unwrap()
    }

    #[test]
    fn one_bit_trade() {
        let seq = ValuationSequence::from_pairs(&[(0.3, 0.8)]).unwrap();
        let trace = run_episode(
            &mut Constant(Quote::single(0.5)),
            &seq,
            &cfg(FeedbackModel::OneBit, PriceMode::SinglePrice, 1),
            &SeedStreams::new(0),
        )
        .unwrap();
        assert_eq!(trace.rounds[0].feedback, Feedback::OneBit { traded: true });
        assert_eq!(trace.rounds[0].gft, 0.5);
        assert_eq!(trace.total_gft, 0.5);
    }

    #[test]
    fn two_bit_no_trade() {
        let seq = ValuationSequence::from_pairs(&[(0.6, 0.8)]).unwrap();
        let trace = run_episode(
            &mut Constant(Quote::single(0.5)),
            &seq,
            &cfg(FeedbackModel::TwoBit, PriceMode::SinglePrice, 1),
            &SeedStreams::new(0),
        )
        .unwrap();
        assert_eq!(
            trace.rounds[0].feedback,
            Feedback::TwoBit { seller_accepts: false, buyer_accepts: true }
        );
        assert_eq!(trace.total_gft, 0.0);
        assert_eq!(trace.total_sw, 0.6);
    }

    #[test]
    fn violations_are_errors() {
        let seq = ValuationSequence::from_pairs(&[(0.3, 0.8)]).unwrap();
        let seeds = SeedStreams::new(0);
        let two = cfg(FeedbackModel::OneBit, PriceMode::TwoPrices, 1);
        let single = cfg(FeedbackModel::OneBit, PriceMode::SinglePrice, 1);
        let inverted = Quote { seller: 0.6, buyer: 0.4 };
        assert!(matches!(
            run_episode(&mut Constant(inverted), &seq, &two, &seeds),
            Err(Error::ProtocolViolation { round: 0, .. })
        ));
        let spread = Quote { seller: 0.4, buyer: 0.6 };
        assert!(run_episode(&mut Constant(spread), &seq, &two, &seeds).is_ok());
        assert!(matches!(
            run_episode(&mut Constant(spread), &seq, &single, &seeds),
            Err(Error::ProtocolViolation { .. })
        ));
        assert!(matches!(
            run_episode(&mut Constant(Quote::single(1.5)), &seq, &single, &seeds),
            Err(Error::ProtocolViolation { .. })
        ));
        let long = cfg(FeedbackModel::OneBit, PriceMode::SinglePrice, 2);
        assert!(matches!(
            run_episode(&mut Constant(Quote::single(0.5)), &seq, &long, &seeds),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn csv_layout() {
        let seq = ValuationSequence::from_pairs(&[(0.3, 0.8), (0.6, 0.9)]).unwrap();
        let trace = run_episode(
            &mut Constant(Quote { seller: 0.5, buyer: 0.7 }),
            &seq,
            &cfg(FeedbackModel::TwoBit, PriceMode::TwoPrices, 2),
            &SeedStreams::new(0),
        )
        .unwrap();
        let mut buf = Vec::new();
        trace.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "t,p,q,feedback,gft,sw\n1,0.5,0.7,11,0.5,0.8\n2,0.5,0.7,01,0,0.6\n");
        let back: EpisodeTrace = serde_json::from_str(&trace.to_json()).unwrap();
        assert_eq!(back, trace);
    }
}
