use bitrade_core::adversaries::*;
use bitrade_core::exact::{expected_gain, trade_probability, two_bit_masses, Rational};
use bitrade_core::*;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::SeedableRng;

fn r(n: i64, d: i64) -> BigRational {
    Rational::new(n, d).0
}

/// Rational replay of the thirds rule.
fn exact_thirds(delta: &BigRational, branches: &[Branch]) -> Vec<(BigRational, BigRational, BigRational, BigRational)> {
    let half = r(1, 2);
    let (mut c, mut d) = (&half - delta / r(2, 1), &half + delta / r(2, 1));
    let mut out = Vec::new();
    for b in branches {
        let g = &d - &c;
        let left = (r(0, 1), &c + &g / r(3, 1));
        let right = (&c + &g * r(2, 3), r(1, 1));
        // candidate intervals are disjoint
        assert!(left.1 < right.0);
        let (s, v) = match b {
            Branch::Left => {
                d = left.1.clone();
                left
            }
            Branch::Right => {
                c = right.0.clone();
                right
            }
        };
        out.push((s, v, c.clone(), d.clone()));
    }
    out
}

#[test]
fn nested_thirds_matches_rational_mirror() {
    let mut rng = bitrade_core::Rng::seed_from_u64(21);
    for delta in [r(1, 10), r(1, 20), r(1, 16)] {
        let branches: Vec<Branch> = (0..60).map(|_| Branch::from_coin(rand::Rng::random(&mut rng))).collect();
        let exact = exact_thirds(&delta, &branches);
        let seq = NestedThirds::new(delta.to_f64().unwrap()).unwrap().from_branches(&branches).unwrap();
        let mut gap = delta.clone();
        for (t, ((s, b, c, d), v)) in exact.iter().zip(seq.rounds()).enumerate() {
            gap /= r(3, 1);
            assert_eq!(d - c, gap, "gap after step {}", t + 1);
            assert!(s <= c && d <= b, "emitted interval contains the remaining one");
            assert!((v.seller() - s.to_f64().unwrap()).abs() < 1e-15);
            assert!((v.buyer() - b.to_f64().unwrap()).abs() < 1e-15);
            let width = b - s;
            assert!(width >= r(1, 2) - &delta / r(2, 1) && width <= r(1, 2) + &delta / r(2, 1));
        }
    }
}

proptest! {
    #[test]
    fn nested_thirds_intersection_is_nonempty(seed in any::<u64>(), t in 1usize..400) {
        let seq = NestedThirds::new(0.05).unwrap().generate_seeded(t, seed).unwrap();
        let lo = seq.rounds().iter().map(|v| v.seller()).fold(0.0, f64::max);
        let hi = seq.rounds().iter().map(|v| v.buyer()).fold(1.0, f64::min);
        prop_assert!(lo <= hi);
        let (_, best) = best_fixed_price(&seq);
        prop_assert!(best >= t as f64 / 2.0 * (1.0 - 0.05) - 1e-9);
    }

    #[test]
    fn every_generator_stays_in_the_unit_square(seed in any::<u64>()) {
        let sources: Vec<Box<dyn ValuationSource>> = vec![
            Box::new(NestedThirds::new(0.3).unwrap()),
            Box::new(TwoCopy::new(0.1).unwrap()),
            Box::new(GridHiding::for_alpha(&r(3, 2)).unwrap()),
            Box::new(FourOutcome::new(r(1, 8), r(1, 4)).unwrap()),
        ];
        for s in &sources {
            let seq = s.generate_seeded(200, seed).unwrap();
            for v in seq.rounds() {
                prop_assert!((0.0..=1.0).contains(&v.seller()) && (0.0..=1.0).contains(&v.buyer()));
            }
        }
    }
}

#[test]
fn generators_are_reproducible_and_seed_sensitive() {
    let g = TwoCopy::new(0.01).unwrap();
    assert_eq!(g.generate_seeded(100, 4).unwrap(), g.generate_seeded(100, 4).unwrap());
    assert_ne!(g.generate_seeded(100, 4).unwrap(), g.generate_seeded(100, 5).unwrap());
}

#[test]
fn grid_hiding_feedback_is_indistinguishable() {
    for g in [GridHiding::new(r(1, 10), r(1, 30)).unwrap(), GridHiding::for_alpha(&r(1, 1)).unwrap()] {
        let n = g.support_size() as i64;
        let blocks = g.blocks();
        // one probe strictly inside every delta-cell, plus an asymmetric one
        let probes: Vec<BigRational> = (0..n)
            .flat_map(|k| [r(2 * k + 1, 2 * n), r(7 * k + 3, 7 * n)])
            .collect();
        for p in &probes {
            let reference = two_bit_masses(&g.outcomes(0).unwrap(), p, p);
            assert_eq!(reference.both, g.narrow().clone());
            for i in 1..blocks {
                assert_eq!(two_bit_masses(&g.outcomes(i).unwrap(), p, p), reference, "price {p}, block {i}");
            }
            let k = (p * r(n, 1)).floor();
            assert_eq!(reference.seller_only, &k / r(n, 1));
        }
        for i in 0..blocks {
            let inside = (g.wide() * r(i as i64, 1)) + g.wide() / r(2, 1) + g.narrow() / r(2, 1);
            let per_round = expected_gain(&g.outcomes(i).unwrap(), &inside);
            assert_eq!(per_round * r(1000, 1), g.hindsight_value(1000));
        }
    }
}

#[test]
fn four_outcome_tables() {
    let eps = r(1, 10);
    let adv = FourOutcome::new(eps.clone(), r(0, 1)).unwrap();
    let first = adv.outcomes(FourOutcomeSide::First);
    let second = adv.outcomes(FourOutcomeSide::Second);
    let e = |a: i64, b: i64, k: i64| r(a, b) + &eps / r(k, 1);
    let table = [
        (r(1, 6), e(1, 8, 2), r(1, 8)),
        (r(2, 5), e(1, 6, 3), r(1, 6)),
        (r(1, 2), e(1, 3, 3), e(1, 3, 3)),
        (r(3, 5), r(1, 6), e(1, 6, 3)),
        (r(5, 6), r(1, 8), e(1, 8, 2)),
    ];
    for (p, a, b) in table {
        assert_eq!(expected_gain(&first, &p), a, "first side at {p}");
        assert_eq!(expected_gain(&second, &p), b, "second side at {p}");
    }
    assert_eq!(trade_probability(&first, &r(1, 3), &r(1, 3)), r(1, 2));
    assert_eq!(trade_probability(&second, &r(1, 3), &r(1, 3)), r(1, 2));
    assert_eq!(trade_probability(&first, &r(0, 1), &r(0, 1)), r(1, 4) + &eps);
    assert_eq!(trade_probability(&second, &r(0, 1), &r(0, 1)), r(1, 4));
}

#[test]
fn iid_frequencies_within_three_sigma() {
    let a = ValuationPair::new(0.1, 0.2).unwrap();
    let b = ValuationPair::new(0.5, 0.9).unwrap();
    let adv = IidFinite::new(vec![(a, 0.5), (b, 0.5)]).unwrap();
    let n = 100_000;
    let seq = adv.generate_seeded(n, 8).unwrap();
    let hits = seq.rounds().iter().filter(|v| **v == a).count() as f64;
    let sigma = (n as f64 * 0.25).sqrt();
    assert!((hits - n as f64 / 2.0).abs() <= 3.0 * sigma);
}

#[test]
fn two_copy_caps_single_price_trades() {
    let adv = TwoCopy::new(0.02).unwrap();
    let probes = [0.1, 0.25, 0.3, 0.5, 0.7, 0.75, 0.9];
    let mut trades = vec![0usize; probes.len()];
    let (seeds, t) = (100, 200);
    for seed in 0..seeds {
        let seq = adv.generate_seeded(t, seed).unwrap();
        for (k, &p) in probes.iter().enumerate() {
            let pp = PricePair::single(p).unwrap();
            trades[k] += seq.rounds().iter().filter(|v| pp.trades(v)).count();
        }
    }
    let n = (seeds as usize * t) as f64;
    for (k, &c) in trades.iter().enumerate() {
        let f = c as f64 / n;
        assert!(f <= 0.25 + 3.0 * (0.25 * 0.75 / n).sqrt() + 1e-9, "price {} trades {f}", probes[k]);
    }
}

#[test]
fn adversary_specs_generate() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("seq.csv");
    std::fs::write(&csv, "s,b\n0.1,0.6\n0.2,0.7\n0.3,0.8\n").unwrap();
    let mut spec: AdversarySpec = serde_json::from_str(r#"{"name":"fixed-file","path":"seq.csv"}"#).unwrap();
    spec.resolve_paths(dir.path());
    let seq = spec.build(3).unwrap().generate_seeded(3, 0).unwrap();
    assert_eq!(seq.rounds()[2], ValuationPair::new(0.3, 0.8).unwrap());
}
