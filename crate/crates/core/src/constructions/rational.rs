use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational, always reduced with positive denominator. Serialized as
/// the string `"p/q"` (or `"p"` for integers).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Precondition("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `base^-exp`.
    pub fn inverse_power(base: u64, exp: u32) -> Self {
        let d: BigInt = Pow::pow(BigInt::from(base), exp);
        Rational(BigRational::new(BigInt::one(), d))
    }

    /// The default epsilon of the tower construction, `q^(-q*m)`.
    pub fn tower_default(q: usize, m: usize) -> Self {
        Rational::inverse_power(q as u64, (q * m) as u32)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// `0 < self <= 1`.
    pub fn is_unit_fraction_range(&self) -> bool {
        self.0.is_positive() && self.0 <= BigRational::one()
    }

    /// Exact test of `count < self * n`.
    pub fn exceeds_fraction(&self, count: usize, n: usize) -> bool {
        BigInt::from(count) * self.denom() < self.numer() * BigInt::from(n)
    }

    /// `ceil(self * n)`, the least size of a set of "at least eps*n" vertices.
    pub fn ceil_times(&self, n: usize) -> usize {
        let v = &self.0 * BigRational::from_integer(BigInt::from(n));
        let c = v.ceil().to_integer();
        usize::try_from(c).unwrap_or(usize::MAX)
    }

    /// The least `n` with `count < self * n`, if it fits in a usize.
    pub fn least_n_exceeding(&self, count: usize) -> Option<usize> {
        if !self.is_positive() {
            return None;
        }
        // count * d < p * n  <=>  n > count * d / p
        let bound = BigInt::from(count) * self.denom() / self.numer();
        usize::try_from(bound + 1).ok()
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

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            position: "rational".into(),
            message: format!("expected \"p/q\", got {s:?}"),
        };
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(p, q)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
