use bitrade_core::*;
use proptest::prelude::*;

fn pair() -> impl Strategy<Value = ValuationPair> {
    (0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(s, b)| ValuationPair::new(s, b).unwrap())
}

fn prices() -> impl Strategy<Value = PricePair> {
    (0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(a, b)| PricePair::new(a.min(b), a.max(b)).unwrap())
}

fn sequence(max_len: usize) -> impl Strategy<Value = ValuationSequence> {
    prop::collection::vec(pair(), 1..=max_len).prop_map(|v| ValuationSequence::new(v).unwrap())
}

/// Direct evaluation at every candidate price.
fn brute_force_best(seq: &ValuationSequence) -> f64 {
    seq.rounds()
        .iter()
        .flat_map(|v| [v.seller(), v.buyer()])
        .map(|p| total_gain_at(seq, p))
        .fold(0.0, f64::max)
}

proptest! {
    #[test]
    fn gain_is_bounded(pp in prices(), v in pair()) {
        let g = gain_from_trade(&pp, &v);
        prop_assert!(g >= 0.0);
        prop_assert!(g <= (v.buyer() - v.seller()).max(0.0));
        prop_assert_eq!(g > 0.0, pp.trades(&v) && v.buyer() > v.seller());
        let sw = social_welfare(&pp, &v);
        prop_assert!((sw - (v.seller() + g)).abs() == 0.0);
    }

    #[test]
    fn trade_needs_both_sides(pp in prices(), v in pair()) {
        prop_assert_eq!(pp.trades(&v), pp.seller_accepts(&v) && pp.buyer_accepts(&v) && pp.seller_price() <= pp.buyer_price());
    }

    #[test]
    fn single_price_dominates_its_two_price_widenings(p in 0.0..=1.0f64, lo in 0.0..=1.0f64, hi in 0.0..=1.0f64, v in pair()) {
        let wide = PricePair::new(p * lo, p + (1.0 - p) * hi).unwrap();
        let single = PricePair::single(p).unwrap();
        prop_assert!(gain_from_trade(&wide, &v) <= gain_from_trade(&single, &v));
    }

    #[test]
    fn best_fixed_price_matches_candidate_scan(seq in sequence(40)) {
        let (price, value) = best_fixed_price(&seq);
        let oracle = brute_force_best(&seq);
        prop_assert!((value - oracle).abs() <= 1e-12 * seq.horizon() as f64);
        prop_assert!((total_gain_at(&seq, price) - value).abs() <= 1e-12 * seq.horizon() as f64);
    }

    #[test]
    fn best_fixed_dominates_grid(seq in sequence(40), n in 1usize..40) {
        let grid = uniform_grid(n).unwrap();
        let (gp, gv) = best_grid_price(&seq, &grid);
        prop_assert!(grid.points().contains(&gp));
        let (_, fv) = best_fixed_price(&seq);
        prop_assert!(fv + 1e-12 >= gv);
        let direct = grid.points().iter().map(|&p| total_gain_at(&seq, p)).fold(0.0, f64::max);
        prop_assert!((gv - direct).abs() <= 1e-12 * seq.horizon() as f64);
    }

    #[test]
    fn discretization_bound(seq in sequence(60), n in 1usize..30, p in 0.0..=1.0f64) {
        let grid = uniform_grid(n).unwrap();
        prop_assert!(check_discretization_bound(&seq, &grid, p));
    }

    #[test]
    fn alpha_regret_is_linear_in_alpha(seq in sequence(20), a in 1.0..4.0f64) {
        let gains = vec![0.01; seq.horizon()];
        let r1 = alpha_regret(&seq, &gains, 1.0).unwrap();
        let ra = alpha_regret(&seq, &gains, a).unwrap();
        let total: f64 = gains.iter().sum();
        prop_assert!((r1 - ra - (a - 1.0) * total).abs() < 1e-9);
    }

    #[test]
    fn valuation_serde_round_trip(seq in sequence(10)) {
        let text = serde_json::to_string(&seq).unwrap();
        let back: ValuationSequence = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, seq);
    }
}

#[test]
fn grid_with_irregular_points() {
    let grid = PriceGrid::new(vec![0.0, 0.1, 0.7, 1.0]).unwrap();
    assert!((grid.mesh() - 0.6).abs() < 1e-12);
    let seq = ValuationSequence::from_pairs(&[(0.2, 0.6), (0.3, 0.5)]).unwrap();
    // Prices in [0.3, 0.5] earn 0.6; no grid point trades at all.
    assert!((best_fixed_price(&seq).1 - 0.6).abs() < 1e-12);
    assert_eq!(best_grid_price(&seq, &grid).1, 0.0);
    assert!(check_discretization_bound(&seq, &grid, 0.3));
}
