//! Exact rational helpers for the finite-support constructions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A rational number that reads from `"a/b"`, `"a"` or a JSON number, and
/// writes as `"a/b"`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Self(BigRational::new(numer.into(), denom.into()))
    }

    pub fn integer(n: i64) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Self)
    }
}

impl FromStr for Rational {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| format!("bad rational {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse(d)?;
                if d.is_zero() {
                    return Err(format!("zero denominator in {s:?}"));
                }
                Ok(Self(BigRational::new(parse(n)?, d)))
            }
            None => Ok(Self(BigRational::from_integer(parse(s)?))),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Number(f64),
        }
        match Repr::deserialize(d)? {
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
            Repr::Number(x) => Rational::from_f64(x)
                .ok_or_else(|| serde::de::Error::custom(format!("non-finite number {x}"))),
        }
    }
}

/// One outcome of a finite valuation distribution, all exact.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactOutcome {
    pub s: BigRational,
    pub b: BigRational,
    pub prob: BigRational,
}

impl ExactOutcome {
    pub fn new(s: BigRational, b: BigRational, prob: BigRational) -> Self {
        Self { s, b, prob }
    }

    pub fn trades_at(&self, seller_price: &BigRational, buyer_price: &BigRational) -> bool {
        &self.s <= seller_price && seller_price <= buyer_price && buyer_price <= &self.b
    }
}

/// `E[GFT(p)]` of a single price.
pub fn expected_gain(outcomes: &[ExactOutcome], price: &BigRational) -> BigRational {
    outcomes
        .iter()
        .filter(|o| o.trades_at(price, price))
        .map(|o| &o.prob * (&o.b - &o.s))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// Probability that posting `(p, q)` trades.
pub fn trade_probability(outcomes: &[ExactOutcome], seller: &BigRational, buyer: &BigRational) -> BigRational {
    outcomes
        .iter()
        .filter(|o| o.trades_at(seller, buyer))
        .map(|o| o.prob.clone())
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// Masses of the two-bit feedback `(1{s <= p}, 1{q <= b})` for prices `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoBitMasses {
    pub both: BigRational,
    pub seller_only: BigRational,
    pub buyer_only: BigRational,
    pub neither: BigRational,
}

pub fn two_bit_masses(outcomes: &[ExactOutcome], seller: &BigRational, buyer: &BigRational) -> TwoBitMasses {
    let mut m = TwoBitMasses {
        both: BigRational::zero(),
        seller_only: BigRational::zero(),
        buyer_only: BigRational::zero(),
        neither: BigRational::zero(),
    };
    for o in outcomes {
        let slot = match (&o.s <= seller, buyer <= &o.b) {
            (true, true) => &mut m.both,
            (true, false) => &mut m.seller_only,
            (false, true) => &mut m.buyer_only,
            (false, false) => &mut m.neither,
        };
        *slot += &o.prob;
    }
    m
}

pub(crate) fn is_integer_positive(x: &BigRational) -> bool {
    x.is_integer() && x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let r: Rational = "2/6".parse().unwrap();
        assert_eq!(r, Rational::new(1, 3));
        assert_eq!(r.to_string(), "1/3");
        assert_eq!("-4".parse::<Rational>().unwrap().to_string(), "-4");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
        let j: Rational = serde_json::from_str("0.25").unwrap();
        assert_eq!(j, Rational::new(1, 4));
        let j: Rational = serde_json::from_str("\"1/30\"").unwrap();
        assert_eq!(serde_json::to_string(&j).unwrap(), "\"1/30\"");
    }
}
