//! Rational parsing and printing as `"a/b"` strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{PmError, Result};

pub type Q = BigRational;

pub fn parse_rational(text: &str) -> Result<Q> {
    let bad = || PmError::MalformedRational(text.to_string());
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match text.trim().split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(int(n)?, d))
        }
        None => Ok(Q::from_integer(int(text)?)),
    }
}

pub fn format_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn format_vector(v: &[Q]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
