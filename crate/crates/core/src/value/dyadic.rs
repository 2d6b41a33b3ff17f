use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A dyadic rational `numerator / 2^exponent`, always stored reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dyadic {
    numerator: i64,
    exponent: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DyadicError {
    #[error("denominator {0} is not a power of two")]
    NotDyadic(u64),
    #[error("malformed dyadic literal {0:?}")]
    Malformed(String),
    #[error("dyadic arithmetic overflow")]
    Overflow,
}

const MAX_EXPONENT: u32 = 60;

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { numerator: 0, exponent: 0 };
    pub const ONE: Dyadic = Dyadic { numerator: 1, exponent: 0 };

    pub fn new(numerator: i64, exponent: u32) -> Dyadic {
        let mut d = Dyadic { numerator, exponent };
        d.reduce();
        d
    }

    pub fn integer(n: i64) -> Dyadic {
        Dyadic { numerator: n, exponent: 0 }
    }

    /// Builds `numerator / denominator`, rejecting denominators that are not powers of two.
    pub fn from_fraction(numerator: i64, denominator: u64) -> Result<Dyadic, DyadicError> {
        if denominator == 0 || !denominator.is_power_of_two() {
            return Err(DyadicError::NotDyadic(denominator));
        }
        let exponent = denominator.trailing_zeros();
        if exponent > MAX_EXPONENT {
            return Err(DyadicError::Overflow);
        }
        Ok(Dyadic::new(numerator, exponent))
    }

    fn reduce(&mut self) {
        if self.numerator == 0 {
            self.exponent = 0;
            return;
        }
        let shift = self.numerator.trailing_zeros().min(self.exponent);
        self.numerator >>= shift;
        self.exponent -= shift;
    }

    pub fn numerator(self) -> i64 {
        self.numerator
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_integer(self) -> bool {
        self.exponent == 0
    }

    pub fn floor(self) -> i64 {
        self.numerator >> self.exponent
    }

    pub fn ceil(self) -> i64 {
        -((-self).floor())
    }

    pub fn signum(self) -> i64 {
        self.numerator.signum()
    }

    pub fn abs(self) -> Dyadic {
        if self.numerator < 0 {
            -self
        } else {
            self
        }
    }

    /// Numerator after rescaling to denominator `2^exponent` (`exponent >= self.exponent`).
    fn scaled_numerator(self, exponent: u32) -> i128 {
        (self.numerator as i128) << (exponent - self.exponent)
    }

    pub fn checked_add(self, other: Dyadic) -> Option<Dyadic> {
        let e = self.exponent.max(other.exponent);
        let n = self.scaled_numerator(e) + other.scaled_numerator(e);
        let n = i64::try_from(n).ok()?;
        Some(Dyadic::new(n, e))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        self.scaled_numerator(e).cmp(&other.scaled_numerator(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { numerator: -self.numerator, exponent: self.exponent }
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, other: Dyadic) -> Dyadic {
        self.checked_add(other).expect("dyadic addition overflow")
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, other: Dyadic) -> Dyadic {
        self + (-other)
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Dyadic {
        Dyadic::integer(n)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.exponent)
        }
    }
}

impl FromStr for Dyadic {
    type Err = DyadicError;

    fn from_str(s: &str) -> Result<Dyadic, DyadicError> {
        let s = s.trim();
        let malformed = || DyadicError::Malformed(s.to_string());
        match s.split_once('/') {
            None => s.parse::<i64>().map(Dyadic::integer).map_err(|_| malformed()),
            Some((n, d)) => {
                let n = n.trim().parse::<i64>().map_err(|_| malformed())?;
                let d = d.trim().parse::<u64>().map_err(|_| malformed())?;
                Dyadic::from_fraction(n, d)
            }
        }
    }
}

/// The simplest dyadic strictly between `lo` and `hi` (`None` = unbounded).
///
/// Integers are preferred, with the smallest absolute value; otherwise the
/// dyadic with the smallest denominator wins.
pub fn simplest_between(lo: Option<Dyadic>, hi: Option<Dyadic>) -> Dyadic {
    if let (Some(l), Some(h)) = (lo, hi) {
        assert!(l < h, "empty interval ({l}, {h})");
    }
    let zero = Dyadic::ZERO;
    if lo.map_or(true, |l| l < zero) && hi.map_or(true, |h| h > zero) {
        return zero;
    }
    if let Some(l) = lo.filter(|l| *l >= zero) {
        let n = Dyadic::integer(l.floor() + 1);
        if hi.map_or(true, |h| n < h) {
            return n;
        }
    }
    if let Some(h) = hi.filter(|h| *h <= zero) {
        let n = Dyadic::integer(h.ceil() - 1);
        if lo.map_or(true, |l| n > l) {
            return n;
        }
    }
    // Both ends are finite and no integer fits.
    let (l, h) = (lo.unwrap(), hi.unwrap());
    for k in 1..=MAX_EXPONENT {
        let scaled = l.scaled_numerator(l.exponent.max(k)) >> (l.exponent.max(k) - k);
        let candidate = Dyadic::new((scaled + 1) as i64, k);
        if candidate > l && candidate < h {
            return candidate;
        }
    }
    panic!("no dyadic found between {l} and {h}");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_on_construction() {
        assert_eq!(Dyadic::new(4, 3), d("1/2"));
        assert_eq!(Dyadic::new(0, 5), Dyadic::ZERO);
        assert_eq!(Dyadic::new(-6, 2), d("-3/2"));
    }

    #[test]
    fn rejects_non_dyadic_denominators() {
        assert_eq!("1/3".parse::<Dyadic>(), Err(DyadicError::NotDyadic(3)));
        assert!("x/2".parse::<Dyadic>().is_err());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(d("-3/2").floor(), -2);
        assert_eq!(d("-3/2").ceil(), -1);
        assert_eq!(d("5/4").floor(), 1);
        assert_eq!(d("3").ceil(), 3);
    }

    #[test]
    fn simplest_number_rule() {
        assert_eq!(simplest_between(None, None), Dyadic::ZERO);
        assert_eq!(simplest_between(Some(d("0")), None), d("1"));
        assert_eq!(simplest_between(None, Some(d("-2"))), d("-3"));
        assert_eq!(simplest_between(Some(d("0")), Some(d("1"))), d("1/2"));
        assert_eq!(simplest_between(Some(d("1/2")), Some(d("1"))), d("3/4"));
        assert_eq!(simplest_between(Some(d("-1")), Some(d("3/4"))), d("0"));
        assert_eq!(simplest_between(Some(d("1/4")), Some(d("3"))), d("1"));
        assert_eq!(simplest_between(Some(d("-5/2")), Some(d("-1"))), d("-2"));
        assert_eq!(simplest_between(Some(d("5/8")), Some(d("3/4"))), d("11/16"));
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "-7", "3/4", "-1/64"] {
            assert_eq!(d(s).to_string(), s);
        }
    }
}
