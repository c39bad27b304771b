//! Binary floating-point numbers with arbitrary-precision mantissas.
//!
//! A value is `mantissa * 2^exp`. Rounding is round-to-nearest-even at the
//! precision passed to each operation; add, sub and mul compute the exact
//! result before rounding and div and sqrt round via the exact remainder, so
//! every operation here is correctly rounded.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::exactnum::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigFloat {
    mantissa: BigInt,
    exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mantissa: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    /// Canonical form: an odd (or zero) mantissa, so that structural
    /// equality is value equality.
    fn canonical(m: BigInt, e: i64) -> Self {
        if m.is_zero() {
            return BigFloat::zero();
        }
        let tz = m.trailing_zeros().unwrap_or(0);
        BigFloat {
            mantissa: m >> tz,
            exp: e + tz as i64,
        }
    }

    /// Round `m * 2^e` to `prec` mantissa bits, ties to even.
    pub fn rounded(m: BigInt, e: i64, prec: u32) -> Self {
        if m.is_zero() {
            return BigFloat::zero();
        }
        let bits = m.magnitude().bits();
        if bits <= prec as u64 {
            return BigFloat::canonical(m, e);
        }
        let shift = bits - prec as u64;
        let (sign, mag) = (m.sign(), m.magnitude().clone());
        let mut q = &mag >> shift;
        let dropped = &mag - (&q << shift);
        let half = num_bigint::BigUint::one() << (shift - 1);
        match dropped.cmp(&half) {
            Ordering::Greater => q += 1u8,
            Ordering::Equal => {
                if (&q & num_bigint::BigUint::one()) == num_bigint::BigUint::one() {
                    q += 1u8;
                }
            }
            Ordering::Less => {}
        }
        // A carry can push the mantissa to prec + 1 bits (e.g. 0.111.. -> 1.0);
        // one more halving restores the bound exactly.
        let mut e = e + shift as i64;
        if q.bits() > prec as u64 {
            q >>= 1;
            e += 1;
        }
        BigFloat::canonical(BigInt::from_biguint(sign, q), e)
    }

    pub fn from_bigint(n: BigInt, prec: u32) -> Self {
        BigFloat::rounded(n, 0, prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        BigFloat::from_bigint(BigInt::from(n), prec)
    }

    /// Convert an exact rational, correctly rounded.
    pub fn from_rat(q: &Rat, prec: u32) -> Self {
        if q.numer().is_zero() {
            return BigFloat::zero();
        }
        let nbits = q.numer().magnitude().bits() as i64;
        let dbits = q.denom().magnitude().bits() as i64;
        // Scale the numerator so the quotient has prec + 2 significant bits.
        let shift = (prec as i64 + 2 + dbits - nbits).max(0) as u64;
        let scaled = q.numer() << shift;
        Self::div_round(&scaled, q.denom(), -(shift as i64), prec)
    }

    /// Round `num / den * 2^e` to prec bits using the exact remainder.
    fn div_round(num: &BigInt, den: &BigInt, e: i64, prec: u32) -> Self {
        debug_assert!(!den.is_zero());
        let negative = num.is_negative() != den.is_negative();
        let (n, d) = (num.magnitude().clone(), den.magnitude().clone());
        let mut q = &n / &d;
        let r = &n - &q * &d;
        let twice = &r << 1u8;
        match twice.cmp(&d) {
            Ordering::Greater => q += 1u8,
            Ordering::Equal => {
                if (&q & num_bigint::BigUint::one()) == num_bigint::BigUint::one() {
                    q += 1u8;
                }
            }
            Ordering::Less => {}
        }
        let sign = if negative { Sign::Minus } else { Sign::Plus };
        BigFloat::rounded(BigInt::from_biguint(sign, q), e, prec)
    }

    pub fn add(&self, rhs: &BigFloat, prec: u32) -> BigFloat {
        if self.is_zero() {
            return BigFloat::rounded(rhs.mantissa.clone(), rhs.exp, prec);
        }
        if rhs.is_zero() {
            return BigFloat::rounded(self.mantissa.clone(), self.exp, prec);
        }
        // Order by magnitude, not exponent: canonical mantissas make the two
        // orderings disagree.
        let (hi, lo) = if self.log2_floor() >= rhs.log2_floor() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let spread = hi.log2_floor().unwrap() - lo.log2_floor().unwrap();
        // Beyond this spread the small operand moves the result by less than
        // a quarter ulp; nudge the last bit instead of materializing an
        // enormous alignment shift. The nudge keeps the rounding direction
        // correct and costs at most one ulp.
        if spread > prec as i64 + 8 {
            let nudge = if lo.mantissa.is_negative() { -1 } else { 1 };
            let nudged = (&hi.mantissa << 2u8) + BigInt::from(nudge);
            return BigFloat::rounded(nudged, hi.exp - 2, prec);
        }
        let e_min = hi.exp.min(lo.exp);
        let m = (&hi.mantissa << (hi.exp - e_min) as u64)
            + (&lo.mantissa << (lo.exp - e_min) as u64);
        BigFloat::rounded(m, e_min, prec)
    }

    pub fn sub(&self, rhs: &BigFloat, prec: u32) -> BigFloat {
        self.add(&rhs.neg(), prec)
    }

    pub fn neg(&self) -> BigFloat {
        BigFloat {
            mantissa: -self.mantissa.clone(),
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat {
            mantissa: self.mantissa.abs(),
            exp: self.exp,
        }
    }

    pub fn mul(&self, rhs: &BigFloat, prec: u32) -> BigFloat {
        if self.is_zero() || rhs.is_zero() {
            return BigFloat::zero();
        }
        BigFloat::rounded(&self.mantissa * &rhs.mantissa, self.exp + rhs.exp, prec)
    }

    pub fn div(&self, rhs: &BigFloat, prec: u32) -> BigFloat {
        assert!(!rhs.is_zero(), "division by zero BigFloat");
        if self.is_zero() {
            return BigFloat::zero();
        }
        let nbits = self.mantissa.magnitude().bits() as i64;
        let dbits = rhs.mantissa.magnitude().bits() as i64;
        let shift = (prec as i64 + 2 + dbits - nbits).max(0) as u64;
        let scaled = &self.mantissa << shift;
        Self::div_round(
            &scaled,
            &rhs.mantissa,
            self.exp - rhs.exp - shift as i64,
            prec,
        )
    }

    /// Square root of a non-negative value, correctly rounded.
    pub fn sqrt(&self, prec: u32) -> BigFloat {
        assert!(!self.is_negative(), "sqrt of negative BigFloat");
        if self.is_zero() {
            return BigFloat::zero();
        }
        let bits = self.mantissa.magnitude().bits() as i64;
        let mut shift = (2 * (prec as i64 + 2) - bits).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let scaled: BigInt = &self.mantissa << (shift as u64);
        let mut s = scaled.sqrt();
        // floor sqrt; round to nearest via the remainder test
        let r = &scaled - &s * &s;
        if r > s {
            s += 1;
        }
        BigFloat::rounded(s, (self.exp - shift) / 2, prec)
    }

    /// Multiply by `2^k` exactly.
    pub fn scale2(&self, k: i64) -> BigFloat {
        if self.is_zero() {
            return BigFloat::zero();
        }
        BigFloat {
            mantissa: self.mantissa.clone(),
            exp: self.exp + k,
        }
    }

    pub fn cmp_abs(&self, rhs: &BigFloat) -> Ordering {
        self.abs().cmp_signed(&rhs.abs())
    }

    pub fn cmp_signed(&self, rhs: &BigFloat) -> Ordering {
        let diff = self.sub(rhs, 8);
        if diff.is_zero() {
            Ordering::Equal
        } else if diff.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// `log2(|x|)` rounded toward minus infinity, for magnitude tests.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.exp + self.mantissa.magnitude().bits() as i64 - 1)
    }

    /// True when `|self| < 2^threshold`.
    pub fn below_pow2(&self, threshold: i64) -> bool {
        match self.log2_floor() {
            None => true,
            Some(l) => l < threshold,
        }
    }

    /// Nearest integer (ties away from zero), exactly; must fit an i64.
    pub fn to_i64_rounded(&self) -> i64 {
        if self.is_zero() {
            return 0;
        }
        let neg = self.is_negative();
        let m = self.mantissa.abs();
        let v: BigInt = if self.exp >= 0 {
            m << self.exp as u64
        } else {
            // floor(m / 2^d + 1/2) = floor((2m + 2^d) / 2^(d+1))
            let d = (-self.exp) as u64;
            ((&m << 1u8) + (BigInt::one() << d)) >> (d + 1)
        };
        let v = if neg { -v } else { v };
        i64::try_from(&v).expect("rounded value exceeds i64")
    }

    /// Decimal rendering with `digits` significant digits, scientific form.
    pub fn to_decimal(&self, digits: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let mag = self.abs();
        // decimal exponent estimate from the binary magnitude
        let log2 = mag.log2_floor().unwrap();
        let mut dec_exp = ((log2 as f64) * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            // scaled = round(|x| * 10^(digits - 1 - dec_exp))
            let k = digits as i64 - 1 - dec_exp;
            let scaled = Self::scale_pow10(&mag, k);
            let s = scaled.to_string();
            if s.len() as i64 == digits as i64 {
                let mut out = String::new();
                if neg {
                    out.push('-');
                }
                out.push_str(&s[..1]);
                if digits > 1 {
                    out.push('.');
                    out.push_str(&s[1..]);
                }
                out.push('e');
                out.push_str(&dec_exp.to_string());
                return out;
            }
            if s.len() as i64 > digits as i64 {
                dec_exp += 1;
            } else {
                dec_exp -= 1;
            }
        }
    }

    /// `round(|x| * 10^k)` as a non-negative integer.
    fn scale_pow10(x: &BigFloat, k: i64) -> BigInt {
        let ten = BigInt::from(10u8);
        let (num_pow, den_pow) = if k >= 0 {
            (ten.pow(k as u32), BigInt::one())
        } else {
            (BigInt::one(), ten.pow((-k) as u32))
        };
        let mut num = x.mantissa.abs() * num_pow;
        let mut den = den_pow;
        if x.exp >= 0 {
            num <<= x.exp as u64;
        } else {
            den <<= (-x.exp) as u64;
        }
        let q = &num / &den;
        let r = num - &q * &den;
        if (&r << 1u8) >= den {
            q + 1
        } else {
            q
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    const P: u32 = 128;

    fn f(n: i64) -> BigFloat {
        BigFloat::from_i64(n, P)
    }

    #[test]
    fn exact_small_arithmetic() {
        let a = f(3);
        let b = f(5);
        assert_eq!(a.add(&b, P), f(8));
        assert_eq!(a.mul(&b, P), f(15));
        assert_eq!(a.sub(&b, P), f(-2));
        assert_eq!(f(15).div(&f(3), P), f(5));
    }

    #[test]
    fn rational_round_trip_matches_division() {
        let q = rat(1, 3);
        let via_rat = BigFloat::from_rat(&q, P);
        let via_div = f(1).div(&f(3), P);
        assert_eq!(via_rat, via_div);
    }

    #[test]
    fn sqrt_is_exact_on_squares() {
        assert_eq!(f(1 << 20).sqrt(P), f(1 << 10));
        assert_eq!(f(81).sqrt(P), f(9));
    }

    #[test]
    fn sqrt_squares_back_within_two_ulps() {
        let two = f(2);
        let r = two.sqrt(P);
        let back = r.mul(&r, P);
        let err = back.sub(&two, P).abs();
        assert!(err.below_pow2(2 - P as i64));
    }

    #[test]
    fn rounding_ties_to_even() {
        // 0b1011 rounded to 3 bits: 0b101|1 exactly half -> even mantissa
        // 0b110, i.e. the value 12, canonicalized to 3 * 2^2.
        let v = BigFloat::rounded(BigInt::from(0b1011), 0, 3);
        assert_eq!(v.mantissa, BigInt::from(0b11));
        assert_eq!(v.exp, 2);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(f(1).div(&f(4), P).to_decimal(3), "2.50e-1");
        assert_eq!(f(-1234).to_decimal(4), "-1.234e3");
        assert_eq!(BigFloat::zero().to_decimal(5), "0");
    }

    #[test]
    fn to_i64_rounds_to_nearest() {
        let half_up = BigFloat::from_rat(&rat(7, 2), P);
        assert_eq!(half_up.to_i64_rounded(), 4);
        let down = BigFloat::from_rat(&rat(-7, 2), P);
        assert_eq!(down.to_i64_rounded(), -4);
        assert_eq!(BigFloat::from_rat(&rat(10, 3), P).to_i64_rounded(), 3);
    }
}
