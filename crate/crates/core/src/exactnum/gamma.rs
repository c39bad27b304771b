//! Gamma on the half-integer lattice and the binomial coefficients built
//! from it, plus the two limit rewrites the verification engine uses at the
//! singular parameter values `s = 0` and `r = -1`.

use std::collections::HashMap;
use std::sync::RwLock;


use super::constexpr::ConstExpr;
use super::error::PoleError;
use super::halfint::HalfInt;
use super::rational::rat_int;

static GAMMA_CACHE: RwLock<Option<HashMap<HalfInt, ConstExpr>>> = RwLock::new(None);

/// Exact `Gamma(z)` on the lattice: a rational for positive integer `z`,
/// a rational multiple of `sqrt pi` for half-integer `z`.
///
/// Both regimes walk the recurrence `Gamma(z+1) = z Gamma(z)` from the
/// anchors `Gamma(1) = 1` and `Gamma(1/2) = sqrt pi`; the closed factorial
/// and duplication forms are kept as test oracles instead of code paths.
pub fn gamma_half(z: &HalfInt) -> Result<ConstExpr, PoleError> {
    if z.is_non_positive_integer() {
        return Err(PoleError::gamma(format!("Gamma({z})")));
    }
    {
        let cache = GAMMA_CACHE.read().unwrap();
        if let Some(map) = cache.as_ref() {
            if let Some(v) = map.get(z) {
                return Ok(v.clone());
            }
        }
    }
    let (anchor, mut value) = if z.is_integer() {
        (HalfInt::int(1), ConstExpr::one())
    } else {
        (HalfInt::half(1), ConstExpr::sqrt_pi())
    };
    let mut arg = anchor;
    while &arg < z {
        value = value.mul_rat(&arg.to_rat());
        arg = arg.succ();
    }
    while &arg > z {
        arg = arg.pred();
        // arg is never a pole here: the integer walk stops at 1, and the
        // half-integer walk only passes through nonzero half-integers.
        value = value
            .div_rat(&arg.to_rat())
            .expect("recurrence factor is nonzero");
    }
    let mut cache = GAMMA_CACHE.write().unwrap();
    cache
        .get_or_insert_with(HashMap::new)
        .insert(z.clone(), value.clone());
    Ok(value)
}

/// `binom(r, s)` on the lattice via the Gamma quotient
/// `Gamma(r+1) / (Gamma(s+1) Gamma(r-s+1))`.
///
/// A pole of the numerator Gamma is an error; a pole of exactly a
/// denominator Gamma makes the quotient an exact zero.
pub fn binom_lattice(r: &HalfInt, s: &HalfInt) -> Result<ConstExpr, PoleError> {
    let one = HalfInt::int(1);
    let top_arg = r + &one;
    if top_arg.is_non_positive_integer() {
        return Err(PoleError::gamma(format!("Gamma({top_arg}) in binom({r}, {s})")));
    }
    let d1 = s + &one;
    let d2 = &(r - s) + &one;
    if d1.is_non_positive_integer() || d2.is_non_positive_integer() {
        return Ok(ConstExpr::zero());
    }
    let num = gamma_half(&top_arg)?;
    let den = gamma_half(&d1)?.try_mul(&gamma_half(&d2)?)?;
    num.try_div(&den)
}

/// `binom(r, s)^{-1}` computed directly as the Gamma ratio
/// `Gamma(s+1) Gamma(r-s+1) / Gamma(r+1)`, never as `1 / binom`.
///
/// Where the binomial itself is zero through a denominator Gamma pole, the
/// pole lands in the denominator here and the reciprocal is an exact zero;
/// poles of `Gamma(s+1)` or `Gamma(r-s+1)` are errors.
pub fn binom_reciprocal_lattice(r: &HalfInt, s: &HalfInt) -> Result<ConstExpr, PoleError> {
    let one = HalfInt::int(1);
    let n1 = s + &one;
    let n2 = &(r - s) + &one;
    if n1.is_non_positive_integer() {
        return Err(PoleError::gamma(format!(
            "Gamma({n1}) in 1/binom({r}, {s})"
        )));
    }
    if n2.is_non_positive_integer() {
        return Err(PoleError::gamma(format!(
            "Gamma({n2}) in 1/binom({r}, {s})"
        )));
    }
    let d = r + &one;
    if d.is_non_positive_integer() {
        return Ok(ConstExpr::zero());
    }
    let num = gamma_half(&n1)?.try_mul(&gamma_half(&n2)?)?;
    num.try_div(&gamma_half(&d)?)
}

/// The value of `s * binom(p-1, p-s)^{-1}` in the limit `s -> 0`, namely `p`
/// itself; the engine substitutes this for the surviving term when an
/// identity instance sits at `s = 0`.
pub fn limit_rewrite_s0(p: &HalfInt) -> ConstExpr {
    ConstExpr::from_rat(p.to_rat())
}

/// The pair of limit values used to evaluate the right side of the
/// `1/(2k-1)` sum exactly at `r = -1`:
/// `lim (1+r) binom(n+r-1, n)^{-1} = -n(n-1)` and
/// `lim binom(k+r-1, k) binom(n+r-1, n)^{-1} = n(n-1)/(k(k-1))`.
pub fn limit_rewrite_r_neg1(n: i64, k: i64) -> (ConstExpr, ConstExpr) {
    assert!(n >= 2 && (2..=n).contains(&k), "requires n >= 2 and 2 <= k <= n");
    let nn = rat_int(n) * rat_int(n - 1);
    let first = ConstExpr::from_rat(-nn.clone());
    let second = ConstExpr::from_rat(nn / (rat_int(k) * rat_int(k - 1)));
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::error::PoleKind;
    use crate::exactnum::rational::{binom_int, binom_rational_lower_int, factorial, pow2, rat, Rat};
    use num_traits::One;

    fn h(n: i64) -> HalfInt {
        HalfInt::int(n)
    }

    fn hh(n: i64) -> HalfInt {
        HalfInt::half(n)
    }

    #[test]
    fn gamma_anchors_and_poles() {
        assert_eq!(gamma_half(&h(1)).unwrap(), ConstExpr::one());
        assert_eq!(gamma_half(&hh(1)).unwrap(), ConstExpr::sqrt_pi());
        assert_eq!(
            gamma_half(&hh(-1)).unwrap(),
            ConstExpr::term(1, 0, rat_int(-2))
        );
        let err = gamma_half(&h(0)).unwrap_err();
        assert_eq!(err.kind, PoleKind::GammaPole);
        assert!(gamma_half(&h(-3)).is_err());
    }

    #[test]
    fn gamma_recurrence_on_lattice() {
        for doubled in -19..=19 {
            let z = hh(doubled);
            if z.is_non_positive_integer() {
                continue;
            }
            let stepped = gamma_half(&z.succ()).unwrap();
            let direct = gamma_half(&z).unwrap().mul_rat(&z.to_rat());
            assert_eq!(stepped, direct, "recurrence fails at z = {z}");
        }
    }

    #[test]
    fn gamma_duplication_oracle() {
        // Gamma(z + 1/2) = sqrt(pi) 2^{-2z} binom(2z, z) z!
        for z in 0..=12i64 {
            let lhs = gamma_half(&hh(2 * z + 1)).unwrap();
            let coeff = pow2(-2 * z) * binom_int(2 * z, z) * Rat::from_integer(factorial(z as u64));
            assert_eq!(lhs, ConstExpr::term(1, 0, coeff), "z = {z}");
        }
    }

    #[test]
    fn gamma_reflection_oracle() {
        // Gamma(-z + 1/2) = (-1)^z 2^{2z} binom(2z, z)^{-1} sqrt(pi) / z!
        for z in 0..=12i64 {
            let lhs = gamma_half(&hh(1 - 2 * z)).unwrap();
            let sign = if z % 2 == 0 { Rat::one() } else { -Rat::one() };
            let coeff = sign * pow2(2 * z) / binom_int(2 * z, z)
                / Rat::from_integer(factorial(z as u64));
            assert_eq!(lhs, ConstExpr::term(1, 0, coeff), "z = {z}");
        }
    }

    #[test]
    fn binom_lattice_examples() {
        assert_eq!(binom_lattice(&h(5), &h(2)).unwrap(), ConstExpr::from_int(10));
        // binom(2k+1, 3/2) at k = 1 equals (4/(3 pi)) 2^{4k} / C_{2k}.
        assert_eq!(
            binom_lattice(&h(3), &hh(3)).unwrap(),
            ConstExpr::term(-2, 0, rat(32, 3))
        );
        // binom(1/2, k+2) at k = 2 equals (-1)^{k+1} 2^{-2k-3} C_{k+1}.
        assert_eq!(
            binom_lattice(&hh(1), &h(4)).unwrap(),
            ConstExpr::from_rat(rat(-5, 128))
        );
        // Denominator Gamma pole gives an exact zero.
        assert_eq!(binom_lattice(&h(3), &h(5)).unwrap(), ConstExpr::zero());
        assert_eq!(binom_lattice(&h(3), &h(-2)).unwrap(), ConstExpr::zero());
        // Numerator pole is an error.
        assert!(binom_lattice(&h(-1), &h(-2)).is_err());
    }

    #[test]
    fn binom_lattice_sqrt_pi_exponent_is_0_or_minus_2() {
        for rd in -6..=8 {
            for sd in -6..=8 {
                if let Ok(v) = binom_lattice(&hh(rd), &hh(sd)) {
                    for (&(a, b), _) in v.iter_terms() {
                        assert!(a == 0 || a == -2, "binom({}/2, {}/2) has exponent {a}", rd, sd);
                        assert_eq!(b, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn binom_lattice_symmetry() {
        for rd in -7..=10 {
            for sd in -7..=10 {
                let r = hh(rd);
                let s = hh(sd);
                let mirrored = &r - &s;
                match (binom_lattice(&r, &s), binom_lattice(&r, &mirrored)) {
                    (Ok(a), Ok(b)) => assert_eq!(a, b, "symmetry fails at r={r}, s={s}"),
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn binom_lattice_agrees_with_falling_factorial_for_integer_lower_index() {
        for rd in -5..=10 {
            let r = hh(rd);
            if r.is_negative_integer() {
                continue;
            }
            for s in 0..=6i64 {
                let expected = binom_rational_lower_int(&r.to_rat(), s);
                let got = binom_lattice(&r, &h(s)).unwrap();
                assert_eq!(got, ConstExpr::from_rat(expected), "r = {r}, s = {s}");
            }
        }
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            binom_reciprocal_lattice(&h(4), &h(2)).unwrap(),
            ConstExpr::from_rat(rat(1, 6))
        );
        assert_eq!(
            binom_reciprocal_lattice(&hh(3), &hh(3)).unwrap(),
            ConstExpr::one()
        );
        // Gamma(r-s+1) = Gamma(0) sits in the numerator of the reciprocal.
        assert!(binom_reciprocal_lattice(&h(2), &h(3)).is_err());
        // Numerator-Gamma pole of the binomial is absorbed into a zero.
        assert_eq!(
            binom_reciprocal_lattice(&h(-1), &hh(1)).unwrap(),
            ConstExpr::zero()
        );
    }

    #[test]
    fn reciprocal_matches_inverse_where_binomial_is_nonzero() {
        for rd in -7..=10 {
            for sd in -7..=10 {
                let r = hh(rd);
                let s = hh(sd);
                if let (Ok(b), Ok(recip)) =
                    (binom_lattice(&r, &s), binom_reciprocal_lattice(&r, &s))
                {
                    if !b.is_zero() {
                        assert_eq!(b.try_mul(&recip).unwrap(), ConstExpr::one());
                    } else {
                        // The vanishing binomial's pole is absorbed: the
                        // reciprocal is a finite value, not an error.
                        assert!(recip.is_normal_form());
                    }
                }
            }
        }
    }

    #[test]
    fn limit_rewrites() {
        assert_eq!(limit_rewrite_s0(&h(7)), ConstExpr::from_int(7));
        assert_eq!(limit_rewrite_s0(&h(1)), ConstExpr::one());
        assert_eq!(limit_rewrite_s0(&hh(5)), ConstExpr::from_rat(rat(5, 2)));
        assert_eq!(
            limit_rewrite_r_neg1(3, 2),
            (ConstExpr::from_int(-6), ConstExpr::from_int(3))
        );
        assert_eq!(
            limit_rewrite_r_neg1(2, 2),
            (ConstExpr::from_int(-2), ConstExpr::one())
        );
        assert_eq!(
            limit_rewrite_r_neg1(4, 3),
            (ConstExpr::from_int(-12), ConstExpr::from_int(2))
        );
    }
}
