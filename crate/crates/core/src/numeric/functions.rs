//! Constants and elementary functions on [`BigFloat`], each with an explicit
//! truncation bound.
//!
//! Everything here is evaluated at a working precision chosen by the caller
//! (the context adds guard bits on top of the user precision), and each
//! series is summed until the next term drops below `2^(-(prec + 8))`
//! relative to the accumulated value, so the truncation error is at most a
//! few ulps at the working precision.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bigfloat::BigFloat;
use crate::exactnum::{rat_int, Rat};

/// `atan(1/x)` for integer `x >= 2`, as a fixed-point integer scaled by
/// `2^frac_bits`. Every division floors, so the absolute error is below
/// `terms + 1` units in the last place of the scale.
fn atan_recip_scaled(x: u64, frac_bits: u64) -> BigInt {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut term = (BigInt::one() << frac_bits) / BigInt::from(x);
    let mut sum = term.clone();
    let mut k = 1u64;
    loop {
        term /= &x2;
        if term.is_zero() {
            return sum;
        }
        k += 2;
        let contribution = &term / BigInt::from(k);
        if (k / 2) % 2 == 1 {
            sum -= &contribution;
        } else {
            sum += &contribution;
        }
    }
}

/// `pi` via the arctangent decomposition
/// `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> BigFloat {
    let f = prec as u64 + 16;
    let a5 = atan_recip_scaled(5, f);
    let a239 = atan_recip_scaled(239, f);
    let scaled = (a5 << 4u8) - (a239 << 2u8);
    BigFloat::rounded(scaled, -(f as i64), prec)
}

/// `ln 2 = 2 atanh(1/3)`, summed in fixed point.
pub fn ln2(prec: u32) -> BigFloat {
    let f = prec as u64 + 16;
    let nine = BigInt::from(9u8);
    let mut term = (BigInt::one() << f) / BigInt::from(3u8);
    let mut sum = term.clone();
    let mut k = 1u64;
    loop {
        term /= &nine;
        if term.is_zero() {
            break;
        }
        k += 2;
        sum += &term / BigInt::from(k);
    }
    BigFloat::rounded(sum << 1u8, -(f as i64), prec)
}

/// `exp(x)`: range-reduce by `ln 2`, Taylor on the remainder, rescale.
pub fn exp(x: &BigFloat, ln2_const: &BigFloat, prec: u32) -> BigFloat {
    let k = x.div(ln2_const, 64).to_i64_rounded();
    let r = x.sub(&ln2_const.mul(&BigFloat::from_i64(k, prec), prec), prec);
    // |r| <= ln2/2, so term magnitudes fall faster than (0.35)^j / j!.
    let mut acc = BigFloat::from_i64(1, prec);
    let mut term = BigFloat::from_i64(1, prec);
    let mut j = 1i64;
    loop {
        term = term.mul(&r, prec).div(&BigFloat::from_i64(j, prec), prec);
        if term.below_pow2(acc.log2_floor().unwrap_or(0) - prec as i64 - 8) {
            break;
        }
        acc = acc.add(&term, prec);
        j += 1;
    }
    acc.scale2(k)
}

/// Natural log of a positive value: split off the power of two, then
/// `ln f = 2 atanh((f-1)/(f+1))` with `f` folded into `[3/4, 3/2)` so the
/// series argument stays below `1/5`.
pub fn ln(x: &BigFloat, ln2_const: &BigFloat, prec: u32) -> BigFloat {
    assert!(!x.is_negative() && !x.is_zero(), "ln of non-positive value");
    let mut j = x.log2_floor().unwrap();
    let mut f = x.scale2(-j);
    // f in [1, 2); fold the top half down
    let three_halves = BigFloat::from_rat(&Rat::new(3.into(), 2.into()), prec);
    if f.cmp_signed(&three_halves) != std::cmp::Ordering::Less {
        f = f.scale2(-1);
        j += 1;
    }
    let one = BigFloat::from_i64(1, prec);
    let t = f.sub(&one, prec).div(&f.add(&one, prec), prec);
    let t2 = t.mul(&t, prec);
    let mut term = t.clone();
    let mut acc = t;
    let mut k = 1i64;
    loop {
        term = term.mul(&t2, prec);
        k += 2;
        let contribution = term.div(&BigFloat::from_i64(k, prec), prec);
        if contribution.below_pow2(
            acc.log2_floor().unwrap_or(-(prec as i64)) - prec as i64 - 8,
        ) {
            break;
        }
        acc = acc.add(&contribution, prec);
    }
    acc.scale2(1)
        .add(&BigFloat::from_i64(j, prec).mul(ln2_const, prec), prec)
}

/// Taylor sine for `|u| <= pi/2`.
fn sin_taylor(u: &BigFloat, prec: u32) -> BigFloat {
    let u2 = u.mul(u, prec);
    let mut term = u.clone();
    let mut acc = u.clone();
    let mut k = 1i64;
    loop {
        term = term
            .mul(&u2, prec)
            .div(&BigFloat::from_i64((k + 1) * (k + 2), prec), prec)
            .neg();
        k += 2;
        if term.below_pow2(-(prec as i64) - 8) {
            break;
        }
        acc = acc.add(&term, prec);
    }
    acc
}

/// `sin(pi x)` for exact rational `x`: the reduction into `[0, 1/2]` is done
/// on the rational, so the only rounding happens inside one short Taylor sum.
pub fn sin_pi(x: &Rat, pi_const: &BigFloat, prec: u32) -> BigFloat {
    let (u, flip) = fold_to_half(x);
    let arg = BigFloat::from_rat(&u, prec).mul(pi_const, prec);
    let s = sin_taylor(&arg, prec);
    if flip {
        s.neg()
    } else {
        s
    }
}

/// `cos(pi x)` for exact rational `x`, via the shift `cos t = sin(t + pi/2)`.
pub fn cos_pi(x: &Rat, pi_const: &BigFloat, prec: u32) -> BigFloat {
    let shifted = x + Rat::new(1.into(), 2.into());
    sin_pi(&shifted, pi_const, prec)
}

/// Fold `x` so that `sin(pi x) = +- sin(pi u)` with `u` in `[0, 1/2]`.
fn fold_to_half(x: &Rat) -> (Rat, bool) {
    let two = rat_int(2);
    let mut u = x - (x / &two).floor() * &two; // u in [0, 2)
    let mut flip = false;
    if u >= rat_int(1) {
        u -= rat_int(1);
        flip = !flip;
    }
    if u > Rat::new(1.into(), 2.into()) {
        u = rat_int(1) - u;
    }
    (u, flip)
}

/// Bernoulli numbers `B_0, B_1, B_2, ...` as exact rationals, extended on
/// demand via the recurrence `sum_j binom(m+1, j) B_j = 0`.
pub fn extend_bernoulli(cache: &mut Vec<Rat>, upto: usize) {
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= upto {
        let m = cache.len();
        if m > 1 && m % 2 == 1 {
            cache.push(Rat::zero());
            continue;
        }
        let mut acc = Rat::zero();
        for (j, b) in cache.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            acc += crate::exactnum::binom_int(m as i64 + 1, j as i64) * b;
        }
        cache.push(-acc / rat_int(m as i64 + 1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    const P: u32 = 320;

    fn assert_matches_decimal(x: &BigFloat, expected: &str, digits: u32) {
        assert_eq!(x.to_decimal(digits), expected);
    }

    #[test]
    fn pi_to_forty_digits() {
        assert_matches_decimal(&pi(P), "3.141592653589793238462643383279502884197e0", 40);
    }

    #[test]
    fn ln2_to_forty_digits() {
        assert_matches_decimal(&ln2(P), "6.931471805599453094172321214581765680755e-1", 40);
    }

    #[test]
    fn exp_and_ln_are_inverse() {
        let l2 = ln2(P);
        let x = BigFloat::from_rat(&rat(7, 3), P);
        let back = ln(&exp(&x, &l2, P), &l2, P);
        assert!(back.sub(&x, P).abs().below_pow2(-(P as i64) + 24));
        assert_matches_decimal(
            &exp(&BigFloat::from_i64(1, P), &l2, P),
            "2.718281828459045235360287471352662497757e0",
            40,
        );
    }

    #[test]
    fn ln_of_two_matches_constant() {
        let l2 = ln2(P);
        let computed = ln(&BigFloat::from_i64(2, P), &l2, P);
        assert!(computed.sub(&l2, P).abs().below_pow2(-(P as i64) + 16));
    }

    #[test]
    fn sin_cos_at_rational_multiples() {
        let pi_c = pi(P);
        // sin(pi/6) = 1/2, cos(pi/3) = 1/2
        let s = sin_pi(&rat(1, 6), &pi_c, P);
        let c = cos_pi(&rat(1, 3), &pi_c, P);
        let half = BigFloat::from_rat(&rat(1, 2), P);
        assert!(s.sub(&half, P).abs().below_pow2(-(P as i64) + 16));
        assert!(c.sub(&half, P).abs().below_pow2(-(P as i64) + 16));
        // sin at integers vanishes to working precision
        let z = sin_pi(&rat(5, 1), &pi_c, P);
        assert!(z.is_zero() || z.below_pow2(-(P as i64) + 16));
        // sign conventions
        assert!(sin_pi(&rat(7, 6), &pi_c, P).is_negative());
        assert!(cos_pi(&rat(5, 6), &pi_c, P).is_negative());
    }

    #[test]
    fn bernoulli_known_values() {
        let mut b = Vec::new();
        extend_bernoulli(&mut b, 12);
        assert_eq!(b[0], Rat::one());
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[12], rat(-691, 2730));
        assert_eq!(b[7], Rat::zero());
    }
}
