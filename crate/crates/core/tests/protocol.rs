use bitrade_core::adversaries::{IidFinite, NestedThirds, TwoCopy};
use bitrade_core::harness::LearnerFactory;
use bitrade_core::learners::*;
use bitrade_core::*;
use proptest::prelude::*;

fn pair() -> impl Strategy<Value = ValuationPair> {
    (0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(s, b)| ValuationPair::new(s, b).unwrap())
}

proptest! {
    #[test]
    fn one_bit_is_the_and_of_two_bit(a in 0.0..=1.0f64, b in 0.0..=1.0f64, v in pair()) {
        let pp = PricePair::new(a.min(b), a.max(b)).unwrap();
        let Feedback::TwoBit { seller_accepts, buyer_accepts } = Feedback::reveal(FeedbackModel::TwoBit, &pp, &v) else {
            unreachable!()
        };
        let Feedback::OneBit { traded } = Feedback::reveal(FeedbackModel::OneBit, &pp, &v) else { unreachable!() };
        prop_assert_eq!(traded, seller_accepts && buyer_accepts);
        prop_assert_eq!(traded, gain_from_trade(&pp, &v) > 0.0 || (traded && v.seller() == v.buyer()));
    }

    #[test]
    fn trace_totals_are_sums(seed in any::<u64>(), t in 2usize..200) {
        let seq = NestedThirds::new(0.1).unwrap().generate_seeded(t, seed).unwrap();
        let cfg = ProtocolConfig::new(FeedbackModel::OneBit, PriceMode::TwoPrices, t).unwrap();
        let mut l = BlockDecompositionLearner::with_defaults(t).unwrap();
        let trace = run_episode(&mut l, &seq, &cfg, &SeedStreams::new(seed)).unwrap();
        prop_assert_eq!(trace.horizon(), t);
        let gft: f64 = trace.rounds.iter().map(|r| r.gft).sum();
        let sw: f64 = trace.rounds.iter().map(|r| r.sw).sum();
        prop_assert!((gft - trace.total_gft).abs() < 1e-9);
        prop_assert!((sw - trace.total_sw).abs() < 1e-9);
        for (r, v) in trace.rounds.iter().zip(seq.rounds()) {
            prop_assert_eq!(r.gft, gain_from_trade(&r.prices, v));
            prop_assert_eq!(r.feedback.model(), FeedbackModel::OneBit);
        }
    }
}

#[test]
fn episodes_are_deterministic_per_seed() {
    let t = 500;
    let cfg = ProtocolConfig::new(FeedbackModel::Full, PriceMode::SinglePrice, t).unwrap();
    let seq = TwoCopy::new(0.01).unwrap().generate_seeded(t, 1).unwrap();
    let run = |seed| {
        let mut l = MwFullFeedbackLearner::with_defaults(t).unwrap();
        run_episode(&mut l, &seq, &cfg, &SeedStreams::new(seed)).unwrap()
    };
    assert_eq!(run(3), run(3));
    assert_ne!(run(3), run(4));
}

#[test]
fn learner_randomness_does_not_move_the_sequence() {
    let src = TwoCopy::new(0.01).unwrap();
    let a = src.generate_seeded(300, 7).unwrap();
    let b = src.generate(300, &mut SeedStreams::new(7).rng(Stream::Adversary)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn fixed_learner_on_fixed_sequence_has_zero_variance() {
    let seq = ValuationSequence::from_pairs(&[(0.2, 0.6), (0.4, 0.9), (0.1, 0.3)]).unwrap();
    let cfg = ProtocolConfig::new(FeedbackModel::TwoBit, PriceMode::SinglePrice, 3).unwrap();
    let factory: &LearnerFactory = &|| Ok(Box::new(FixedPriceLearner::new(0.5)?) as Box<dyn Learner>);
    let out = run_many(factory, &seq, cfg, &[1, 2, 3, 4], &[1.0, 2.0]).unwrap();
    assert_eq!(out.total_gft.std, 0.0);
    assert_eq!(out.regret[0].regret.std, 0.0);
    assert!((out.total_gft.mean - 0.9).abs() < 1e-12);
    // Best fixed price earns 0.4 + 0.5 = 0.9 at 0.4 to 0.6.
    assert!(out.regret[0].regret.mean.abs() < 1e-12);
    assert!((out.regret[1].regret.mean + 0.9).abs() < 1e-12);
}

#[test]
fn parallel_and_sequential_batches_agree() {
    let t = 300;
    let cfg = ProtocolConfig::new(FeedbackModel::OneBit, PriceMode::TwoPrices, t).unwrap();
    let src = NestedThirds::new(0.05).unwrap();
    let factory: &LearnerFactory = &move || Ok(Box::new(BlockDecompositionLearner::with_defaults(t)?) as Box<dyn Learner>);
    let batch = harness::Batch { learner: factory, source: &src, protocol: cfg, alphas: &[1.0, 2.0], keep_traces: false };
    let seeds: Vec<u64> = (10..22).collect();
    assert_eq!(batch.run(&seeds).unwrap(), batch.run_sequential(&seeds).unwrap());
    let out = batch.run(&seeds).unwrap();
    assert_eq!(out.episodes.iter().map(|e| e.seed).collect::<Vec<_>>(), seeds);
}

#[test]
fn batch_validation() {
    let seq = ValuationSequence::from_pairs(&[(0.2, 0.6)]).unwrap();
    let cfg = ProtocolConfig::new(FeedbackModel::Full, PriceMode::SinglePrice, 1).unwrap();
    let factory: &LearnerFactory = &|| Ok(Box::new(FixedPriceLearner::new(0.5)?) as Box<dyn Learner>);
    assert_eq!(run_many(factory, &seq, cfg, &[], &[1.0]).unwrap_err(), Error::NoSeeds);
    assert_eq!(run_many(factory, &seq, cfg, &[0], &[0.5]).unwrap_err(), Error::InvalidAlpha(0.5));
    let c = IidFinite::constant(ValuationPair::new(0.2, 0.8).unwrap());
    assert!(run_many(factory, &c, cfg, &[0], &[1.0]).is_ok());
}
