//! Half-integer lattice arguments: the points where Gamma and the extended
//! harmonic numbers evaluate in closed form.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rat;

/// A number `p/2` with integer `p`, stored as the doubled value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    doubled: BigInt,
}

impl HalfInt {
    pub fn from_doubled(doubled: impl Into<BigInt>) -> Self {
        HalfInt {
            doubled: doubled.into(),
        }
    }

    /// The integer lattice point `n`.
    pub fn int(n: i64) -> Self {
        HalfInt::from_doubled(2 * n)
    }

    /// The lattice point `n/2`; `n` may be odd.
    pub fn half(n: i64) -> Self {
        HalfInt::from_doubled(n)
    }

    pub fn doubled(&self) -> &BigInt {
        &self.doubled
    }

    pub fn is_integer(&self) -> bool {
        (&self.doubled % 2u8).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.doubled.is_positive()
    }

    /// True for 0, -1, -2, ...: the poles of Gamma at `self + 1`-style shifts
    /// are phrased through this predicate.
    pub fn is_non_positive_integer(&self) -> bool {
        self.is_integer() && !self.doubled.is_positive()
    }

    pub fn is_negative_integer(&self) -> bool {
        self.is_integer() && self.doubled.is_negative()
    }

    /// Integer value, when the lattice point is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(&self.doubled / 2)
        } else {
            None
        }
    }

    pub fn to_rat(&self) -> Rat {
        Rat::new(self.doubled.clone(), BigInt::from(2))
    }

    pub fn succ(&self) -> HalfInt {
        HalfInt::from_doubled(&self.doubled + 2)
    }

    pub fn pred(&self) -> HalfInt {
        HalfInt::from_doubled(&self.doubled - 2)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", &self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl Add for &HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: &HalfInt) -> HalfInt {
        HalfInt::from_doubled(&self.doubled + &rhs.doubled)
    }
}

impl Sub for &HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: &HalfInt) -> HalfInt {
        HalfInt::from_doubled(&self.doubled - &rhs.doubled)
    }
}

impl Neg for &HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-&self.doubled)
    }
}

impl Add<i64> for &HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt::from_doubled(&self.doubled + 2 * rhs)
    }
}

impl Sub<i64> for &HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt::from_doubled(&self.doubled - 2 * rhs)
    }
}

impl One for HalfInt {
    fn one() -> Self {
        HalfInt::int(1)
    }
}

impl std::ops::Mul for HalfInt {
    type Output = HalfInt;
    fn mul(self, _rhs: HalfInt) -> HalfInt {
        unimplemented!("the lattice is closed under addition, not multiplication")
    }
}

/// Parses "3", "-1/2", "5/2" as lattice points; rejects other denominators.
pub fn parse_halfint(s: &str) -> Option<HalfInt> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().ok()?;
        let den: i64 = den.trim().parse().ok()?;
        match den {
            1 => Some(HalfInt::int(num)),
            2 => Some(HalfInt::half(num)),
            -1 => Some(HalfInt::int(-num)),
            -2 => Some(HalfInt::half(-num)),
            _ => None,
        }
    } else {
        s.parse::<i64>().ok().map(HalfInt::int)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_classification() {
        assert!(HalfInt::int(3).is_integer());
        assert!(!HalfInt::half(3).is_integer());
        assert!(HalfInt::int(0).is_non_positive_integer());
        assert!(HalfInt::int(-2).is_non_positive_integer());
        assert!(!HalfInt::half(-1).is_non_positive_integer());
        assert!(!HalfInt::int(1).is_non_positive_integer());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["3", "-4", "1/2", "-3/2", "0"] {
            let h = parse_halfint(s).unwrap();
            assert_eq!(h.to_string(), s);
        }
        assert!(parse_halfint("1/3").is_none());
        assert!(parse_halfint("x").is_none());
    }
}
