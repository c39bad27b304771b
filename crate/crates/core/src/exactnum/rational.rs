//! Big-rational helpers and the shared factorial/binomial memo tables.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `2^e` for any integer exponent, including negative ones.
pub fn pow2(e: i64) -> Rat {
    let mag = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rat::from_integer(mag)
    } else {
        Rat::new(BigInt::one(), mag)
    }
}

/// `(-1)^k`.
pub fn sign_pow(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

// Factorials are shared by every identity sweep, so they are memoized behind
// a growable table; readers always observe a fully initialized prefix.
static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!` as a big integer, memoized.
pub fn factorial(n: u64) -> BigInt {
    let n = n as usize;
    {
        let table = FACTORIALS.read().unwrap();
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Ordinary binomial coefficient over non-negative integers, 0 outside the
/// triangle.
pub fn binom_int(n: i64, k: i64) -> Rat {
    if k < 0 || k > n || n < 0 {
        return Rat::zero();
    }
    let num = factorial(n as u64);
    let den = factorial(k as u64) * factorial((n - k) as u64);
    Rat::new(num, den)
}

/// Rising factorial `x (x+1) ... (x+n-1)`; the empty product is 1.
pub fn rising_factorial(x: &Rat, n: u64) -> Rat {
    let mut acc = Rat::one();
    let mut f = x.clone();
    for _ in 0..n {
        acc *= &f;
        f += Rat::one();
    }
    acc
}

/// Binomial coefficient with arbitrary rational upper index and integer lower
/// index: the falling-factorial form `r (r-1) ... (r-k+1) / k!`, and 0 for
/// negative `k`.
pub fn binom_rational_lower_int(r: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    let mut f = r.clone();
    for _ in 0..k {
        acc *= &f;
        f -= Rat::one();
    }
    acc / Rat::from_integer(factorial(k as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(rising_factorial(&rat_int(7), 0), Rat::one());
        assert_eq!(rising_factorial(&rat_int(-1), 3), Rat::zero());
    }

    #[test]
    fn binom_rational_examples() {
        assert_eq!(binom_rational_lower_int(&rat(3, 2), 2), rat(3, 8));
        assert_eq!(binom_rational_lower_int(&rat_int(5), 7), Rat::zero());
        assert_eq!(binom_rational_lower_int(&rat_int(4), -1), Rat::zero());
    }

    #[test]
    fn central_binomial_scaling() {
        // binom(k-1/2, k) = 2^{-2k} binom(2k, k) at k = 2.
        assert_eq!(
            binom_rational_lower_int(&rat(3, 2), 2),
            pow2(-4) * binom_int(4, 2)
        );
    }

    #[test]
    fn pascal_rule_for_rational_upper_index() {
        let r = rat(17, 5);
        for k in 0..=20 {
            let lhs = binom_rational_lower_int(&r, k);
            let rhs = binom_rational_lower_int(&(&r - Rat::one()), k - 1)
                + binom_rational_lower_int(&(&r - Rat::one()), k);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn factorial_table_grows() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(3), BigInt::from(6));
    }
}
