//! Exact expected distance from the origin of a symmetric ±1 random walk.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact `E|S_T|` for the symmetric ±1 walk after `horizon` steps.
pub fn random_walk_abs_expectation(horizon: usize) -> Result<BigRational> {
    if horizon == 0 {
        return Err(Error::ZeroHorizon);
    }
    Ok(random_walk_abs_expectations(horizon).pop().expect("nonempty"))
}

/// `E|S_T|` for every `T` in `1..=max_horizon`, from one pass of the
/// binomial recursion over endpoint counts.
pub fn random_walk_abs_expectations(max_horizon: usize) -> Vec<BigRational> {
    // counts[k] = number of paths with k up-steps; total paths = 2^T.
    let mut counts: Vec<BigUint> = vec![BigUint::one()];
    let mut out = Vec::with_capacity(max_horizon);
    for t in 1..=max_horizon {
        let mut next = Vec::with_capacity(t + 1);
        next.push(BigUint::one());
        for k in 1..t {
            next.push(&counts[k - 1] + &counts[k]);
        }
        next.push(BigUint::one());
        counts = next;

        let mut weighted = BigUint::zero();
        for (k, c) in counts.iter().enumerate() {
            let distance = (2 * k).abs_diff(t);
            if distance > 0 {
                weighted += c * BigUint::from(distance);
            }
        }
        let paths = BigUint::one() << t;
        out.push(BigRational::new(weighted.into(), paths.into()));
    }
    out
}

/// Exact test of `value >= (2/3) * sqrt(horizon)`, i.e. `9 value^2 >= 4 horizon`
/// for nonnegative `value`.
pub fn at_least_two_thirds_sqrt(value: &BigRational, horizon: usize) -> bool {
    if value < &BigRational::zero() {
        return false;
    }
    let nine = BigRational::from_integer(9.into());
    let rhs = BigRational::from_integer((4 * horizon).into());
    nine * value * value >= rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn binomial(n: usize, k: usize) -> BigUint {
        (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
    }

    #[test]
    fn small_horizons() {
        assert_eq!(random_walk_abs_expectation(1).unwrap(), ratio(1, 1));
        assert_eq!(random_walk_abs_expectation(2).unwrap(), ratio(1, 1));
        assert_eq!(random_walk_abs_expectation(3).unwrap(), ratio(3, 2));
        assert_eq!(random_walk_abs_expectation(0), Err(Error::ZeroHorizon));
    }

    #[test]
    fn even_horizons_match_central_binomial_closed_form() {
        // E|S_{2m}| = 2m * C(2m, m) / 2^{2m}
        let all = random_walk_abs_expectations(64);
        for m in 1..=32usize {
            let t = 2 * m;
            let closed = BigRational::new(
                (BigUint::from(t) * binomial(t, m)).into(),
                (BigUint::one() << t).into(),
            );
            assert_eq!(all[t - 1], closed, "T = {t}");
        }
    }

    #[test]
    fn hundred_steps_clears_two_thirds_sqrt() {
        let e = random_walk_abs_expectation(100).unwrap();
        assert!(e >= ratio(20, 3));
        assert!(at_least_two_thirds_sqrt(&e, 100));
    }
}
