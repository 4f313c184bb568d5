use bitrade_core::random_walk::{at_least_two_thirds_sqrt, random_walk_abs_expectation, random_walk_abs_expectations};
use bitrade_core::*;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng as _, SeedableRng};

/// Brute-force scan over the grid {k/n}, via a difference array over grid indices.
fn grid_scan(seq: &ValuationSequence, n: usize) -> f64 {
    let mut diff = vec![0.0f64; n + 2];
    for v in seq.rounds() {
        let at = |k: usize| k as f64 / n as f64;
        let mut lo = (v.seller() * n as f64).ceil() as usize;
        while lo > 0 && at(lo - 1) >= v.seller() {
            lo -= 1;
        }
        while lo <= n && at(lo) < v.seller() {
            lo += 1;
        }
        let mut hi = ((v.buyer() * n as f64).floor() as usize).min(n) as i64;
        while hi < n as i64 && at(hi as usize + 1) <= v.buyer() {
            hi += 1;
        }
        while hi >= 0 && at(hi as usize) > v.buyer() {
            hi -= 1;
        }
        if hi >= 0 && lo <= hi as usize {
            diff[lo] += v.buyer() - v.seller();
            diff[hi as usize + 1] -= v.buyer() - v.seller();
        }
    }
    let mut acc = 0.0;
    let mut best = 0.0f64;
    for d in &diff[..=n] {
        acc += d;
        best = best.max(acc);
    }
    best
}

#[test]
fn best_fixed_price_never_below_a_fine_grid() {
    let mut rng = Rng::seed_from_u64(77);
    for _ in 0..10 {
        let pairs: Vec<(f64, f64)> = (0..50).map(|_| (rng.random(), rng.random())).collect();
        let seq = ValuationSequence::from_pairs(&pairs).unwrap();
        let (_, best) = best_fixed_price(&seq);
        let scan = grid_scan(&seq, 1_000_000);
        assert!(best + 1e-9 >= scan, "oracle {best} below grid scan {scan}");
        // A grid price lands within 1e-6 of any interval of positive length.
        assert!(best - scan < 1e-9, "grid scan {scan} misses oracle {best}");
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// `E|S_2m| = 2m C(2m, m) / 4^m`, and `E|S_{2m-1}| = E|S_2m|`.
fn closed_form(t: usize) -> BigRational {
    let even = t + (t % 2);
    let num = BigUint::from(even) * binomial(even, even / 2);
    BigRational::new(num.into(), (BigUint::one() << even).into())
}

#[test]
fn random_walk_matches_closed_form_and_bound() {
    let all = random_walk_abs_expectations(2048);
    assert_eq!(all.len(), 2048);
    for (i, v) in all.iter().enumerate() {
        let t = i + 1;
        assert_eq!(*v, closed_form(t), "T = {t}");
        assert!(at_least_two_thirds_sqrt(v, t), "T = {t}");
    }
    assert_eq!(random_walk_abs_expectation(7).unwrap(), closed_form(7));
    let ratio = all[2047].to_f64().unwrap() / 2048f64.sqrt();
    assert!((ratio - (2.0 / std::f64::consts::PI).sqrt()).abs() < 1e-3);
}
