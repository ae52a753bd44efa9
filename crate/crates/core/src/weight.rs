//! Exact nonnegative rational weights.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A nonnegative rational kept in lowest terms. Displays as `p/q`, never as a float.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(BigRational);

impl Weight {
    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    pub fn one() -> Self {
        Weight(BigRational::one())
    }

    pub fn integer(value: u64) -> Self {
        Weight(BigRational::from_integer(BigInt::from(value)))
    }

    /// `numerator / denominator`; rejects a zero denominator.
    pub fn ratio(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        Ok(Weight(BigRational::new(
            BigInt::from(numerator),
            BigInt::from(denominator),
        )))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Difference of two weights; `None` when it would be negative.
    pub fn checked_sub(&self, other: &Weight) -> Option<Weight> {
        let diff = &self.0 - &other.0;
        if diff.is_negative() {
            None
        } else {
            Some(Weight(diff))
        }
    }
}

impl Default for Weight {
    fn default() -> Self {
        Weight::zero()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `p/q`, integers and decimal literals such as `2.75`; all are parsed exactly.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("not a nonnegative rational: {s:?}"));
        let s = s.trim();
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let value = if let Some((p, q)) = s.split_once('/') {
            if !digits(p) || !digits(q) {
                return Err(bad());
            }
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            BigRational::new(p.parse().map_err(|_| bad())?, q)
        } else if let Some((int, frac)) = s.split_once('.') {
            if !(digits(int) || int.is_empty()) || !(digits(frac) || frac.is_empty()) {
                return Err(bad());
            }
            if int.is_empty() && frac.is_empty() {
                return Err(bad());
            }
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let int: BigInt = if int.is_empty() {
                BigInt::zero()
            } else {
                int.parse().map_err(|_| bad())?
            };
            let frac: BigInt = if frac.is_empty() {
                BigInt::zero()
            } else {
                frac.parse().map_err(|_| bad())?
            };
            BigRational::new(int * &scale + frac, scale)
        } else {
            if !digits(s) {
                return Err(bad());
            }
            BigRational::from_integer(s.parse().map_err(|_| bad())?)
        };
        Ok(Weight(value))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        self.0 += &rhs.0;
    }
}

impl<'a> Mul<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(&self.0 * &rhs.0)
    }
}

// Used only where the caller knows the result is nonnegative (join recurrence).
impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        let diff = &self.0 - &rhs.0;
        debug_assert!(!diff.is_negative(), "negative weight difference");
        Weight(diff)
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |acc, w| acc + w)
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        let mut acc = Weight::zero();
        for w in iter {
            acc += w;
        }
        acc
    }
}

/// Per-vertex weights of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMap(Vec<Weight>);

impl WeightMap {
    pub fn new(weights: Vec<Weight>) -> Self {
        WeightMap(weights)
    }

    pub fn unit(n: usize) -> Self {
        WeightMap(vec![Weight::one(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> &Weight {
        &self.0[v]
    }

    pub fn as_slice(&self) -> &[Weight] {
        &self.0
    }

    pub fn total<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Weight {
        let mut acc = Weight::zero();
        for v in vertices {
            acc += &self.0[v];
        }
        acc
    }

    pub fn scaled(&self, factor: &Weight) -> WeightMap {
        WeightMap(self.0.iter().map(|w| w * factor).collect())
    }
}

impl From<Vec<Weight>> for WeightMap {
    fn from(weights: Vec<Weight>) -> Self {
        WeightMap(weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(
            "6/4".parse::<Weight>().unwrap(),
            Weight::ratio(3, 2).unwrap()
        );
        assert_eq!("7".parse::<Weight>().unwrap(), Weight::integer(7));
        assert_eq!(
            "2.75".parse::<Weight>().unwrap(),
            Weight::ratio(11, 4).unwrap()
        );
        assert_eq!(
            ".5".parse::<Weight>().unwrap(),
            Weight::ratio(1, 2).unwrap()
        );
        assert_eq!(
            "0.1".parse::<Weight>().unwrap(),
            Weight::ratio(1, 10).unwrap()
        );
    }

    #[test]
    fn rejects_negative_and_malformed() {
        for s in ["-1", "1/0", "abc", "1.2.3", ".", "", "1e3", "-1/2"] {
            assert!(s.parse::<Weight>().is_err(), "{s}");
        }
    }

    #[test]
    fn displays_as_fraction() {
        assert_eq!(Weight::integer(6).to_string(), "6/1");
        assert_eq!("0.25".parse::<Weight>().unwrap().to_string(), "1/4");
    }
}
