//! Shared helpers for catalog entry evaluators.

use crate::exactnum::{
    binom_int, binom_lattice, binom_reciprocal_lattice, pow2, rat_int, ConstExpr, HalfInt,
    PoleError, Rat,
};
use crate::identities::{DomainCheck, Instance};
use crate::sequences;

pub(super) fn ce(q: Rat) -> ConstExpr {
    ConstExpr::from_rat(q)
}

/// Catalan number with a signed index; callers keep `k >= 0`.
pub(super) fn cat(k: i64) -> Rat {
    sequences::catalan(k as u64)
}

/// Central binomial `binom(2k, k)`.
pub(super) fn cb(k: i64) -> Rat {
    sequences::central_binomial(k as u64)
}

pub(super) fn harm(n: i64) -> Rat {
    sequences::harmonic(n as u64)
}

pub(super) fn oddharm(n: i64) -> Rat {
    sequences::odd_harmonic(n as u64)
}

pub(super) fn stir(m: i64, n: i64) -> Rat {
    sequences::stirling2(m as u64, n as u64)
}

pub(super) fn hi(n: i64) -> HalfInt {
    HalfInt::int(n)
}

pub(super) fn hx(x: &HalfInt) -> Result<ConstExpr, PoleError> {
    sequences::harmonic_ext(x)
}

pub(super) fn blat(r: &HalfInt, s: &HalfInt) -> Result<ConstExpr, PoleError> {
    binom_lattice(r, s)
}

pub(super) fn recip(r: &HalfInt, s: &HalfInt) -> Result<ConstExpr, PoleError> {
    binom_reciprocal_lattice(r, s)
}

pub(super) fn bi(n: i64, k: i64) -> Rat {
    binom_int(n, k)
}

pub(super) fn p2(e: i64) -> Rat {
    pow2(e)
}

pub(super) fn sg(k: i64) -> Rat {
    crate::exactnum::sign_pow(k)
}

pub(super) fn ri(n: i64) -> Rat {
    rat_int(n)
}

/// Integer power with big result; `0^0 = 1`.
pub(super) fn ipow(base: i64, e: i64) -> Rat {
    if e == 0 {
        return Rat::from_integer(1.into());
    }
    Rat::from_integer(num_bigint::BigInt::from(base).pow(e as u32))
}

/// The default half-integer grid `[-3/2, 3]` in half steps.
pub(super) fn default_grid() -> Vec<HalfInt> {
    (-3..=6).map(HalfInt::half).collect()
}

/// Only the non-integer lattice points of the default grid.
pub(super) fn half_odd_grid() -> Vec<HalfInt> {
    (-3..=6)
        .map(HalfInt::half)
        .filter(|h| !h.is_integer())
        .collect()
}

pub(super) fn int_grid(lo: i64, hi_incl: i64) -> Vec<HalfInt> {
    (lo..=hi_incl).map(HalfInt::int).collect()
}

/// Domain predicate shared by the two-parameter generalizations with
/// reciprocal binomials on both sides.
pub(super) fn pred_gen_family(inst: &Instance) -> DomainCheck {
    let r = inst.extra("r");
    let s = inst.extra("s");
    if s.is_zero() {
        return Err(
            "s = 0 excluded; the s -> 0 limit rewrite reduces this instance to the base identity"
                .to_string(),
        );
    }
    if r.is_negative_integer() {
        return Err(format!("r = {r} excluded: negative integer"));
    }
    if s.is_negative_integer() {
        return Err(format!("s = {s} excluded: negative integer"));
    }
    if (&hi(inst.n) + r).is_zero() {
        return Err(format!("n + r = 0 at n = {}, r = {r}", inst.n));
    }
    let diff = r - s;
    if diff.is_negative_integer() {
        return Err(format!(
            "r - s = {diff} is a negative integer: the summand crosses a Gamma pole"
        ));
    }
    Ok(())
}
