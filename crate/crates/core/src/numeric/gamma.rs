//! Real Gamma and digamma at rational arguments.
//!
//! Strategy shared by both functions: reflect arguments below 1/2, shift the
//! rest upward by the recurrence until they reach a target where the
//! divergent asymptotic series is usable, then sum that series until the
//! terms drop below the working-precision threshold. For real positive
//! arguments the truncation error of the series is bounded by the first
//! omitted term, and the shift factors are accumulated as exact rationals,
//! so the total relative error stays within a few ulps of the working
//! precision (which carries 64 guard bits over the user precision).

use num_traits::{Signed, Zero};

use super::bigfloat::BigFloat;
use super::context::NumCtx;
use crate::exactnum::{rat_int, PoleError, Rat};

/// Smallest argument at which the asymptotic series is summed: large enough
/// that the series bottoms out below `2^-(prec + 16)` before diverging.
pub(super) fn shift_target(prec: u32) -> i64 {
    (prec as f64 * 0.12).ceil() as i64 + 4
}

fn shift_amount(x: &Rat, target: i64) -> u64 {
    let diff = rat_int(target) - x;
    if diff.is_positive() {
        diff.ceil().to_integer().try_into().unwrap()
    } else {
        0
    }
}

/// `ln Gamma(y)` for `y >= shift_target`, by the asymptotic series
/// `(y - 1/2) ln y - y + ln(2 pi)/2 + sum B_2j / (2j (2j-1) y^(2j-1))`.
fn ln_gamma_large(ctx: &NumCtx, y: &Rat) -> BigFloat {
    let prec = ctx.work();
    let yf = ctx.from_rat(y);
    let ln_y = ctx.ln(&yf);
    let half = ctx.from_rat(&Rat::new(1.into(), 2.into()));
    let mut acc = yf.sub(&half, prec).mul(&ln_y, prec).sub(&yf, prec);
    acc = acc.add(ctx.half_ln_two_pi(), prec);
    let inv = ctx.one().div(&yf, prec);
    let inv2 = inv.mul(&inv, prec);
    let mut power = inv; // y^{-(2j-1)}
    let mut prev_mag: Option<i64> = None;
    for j in 1.. {
        let coeff = ctx.bernoulli(2 * j) / (rat_int(2 * j as i64) * rat_int(2 * j as i64 - 1));
        let term = ctx.from_rat(&coeff).mul(&power, prec);
        let mag = term.abs().log2_floor().unwrap_or(i64::MIN / 2);
        if let Some(p) = prev_mag {
            assert!(mag < p, "asymptotic series diverging: shift target too small");
        }
        prev_mag = Some(mag);
        acc = acc.add(&term, prec);
        if mag < -(prec as i64) - 8 {
            break;
        }
        power = power.mul(&inv2, prec);
    }
    acc
}

/// `Gamma(x)` for rational `x` not a non-positive integer.
pub(super) fn gamma_rat(ctx: &NumCtx, x: &Rat) -> Result<BigFloat, PoleError> {
    if x.is_integer() && !x.is_positive() {
        return Err(PoleError::gamma(format!("Gamma({x})")));
    }
    let prec = ctx.work();
    let half = Rat::new(1.into(), 2.into());
    if x < &half {
        // Gamma(x) = pi / (sin(pi x) Gamma(1 - x)); 1 - x > 1/2.
        let mirrored = rat_int(1) - x;
        let g = gamma_rat(ctx, &mirrored)?;
        let s = ctx.sin_pi(x);
        return Ok(ctx.pi().div(&s.mul(&g, prec), prec));
    }
    let target = shift_target(prec);
    let m = shift_amount(x, target);
    let y = x + rat_int(m as i64);
    let ln_g = ln_gamma_large(ctx, &y);
    let g_y = ctx.exp(&ln_g);
    if m == 0 {
        return Ok(g_y);
    }
    // Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1)), product kept exact.
    let mut prod = Rat::from_integer(1.into());
    let mut f = x.clone();
    for _ in 0..m {
        prod *= &f;
        f += rat_int(1);
    }
    Ok(g_y.div(&ctx.from_rat(&prod), prec))
}

/// `psi(y)` for `y >= shift_target`:
/// `ln y - 1/(2y) - sum B_2j / (2j y^(2j))`.
fn digamma_large(ctx: &NumCtx, y: &Rat) -> BigFloat {
    let prec = ctx.work();
    let yf = ctx.from_rat(y);
    let ln_y = ctx.ln(&yf);
    let inv = ctx.one().div(&yf, prec);
    let mut acc = ln_y.sub(&inv.scale2(-1), prec);
    let inv2 = inv.mul(&inv, prec);
    let mut power = inv2.clone(); // y^{-2j}
    let mut prev_mag: Option<i64> = None;
    for j in 1.. {
        let coeff = ctx.bernoulli(2 * j) / rat_int(2 * j as i64);
        let term = ctx.from_rat(&coeff).mul(&power, prec);
        let mag = term.abs().log2_floor().unwrap_or(i64::MIN / 2);
        if let Some(p) = prev_mag {
            assert!(mag < p, "asymptotic series diverging: shift target too small");
        }
        prev_mag = Some(mag);
        acc = acc.sub(&term, prec);
        if mag < -(prec as i64) - 8 {
            break;
        }
        power = power.mul(&inv2, prec);
    }
    acc
}

/// `psi(x)` for rational `x` not a non-positive integer.
pub(super) fn digamma_rat(ctx: &NumCtx, x: &Rat) -> Result<BigFloat, PoleError> {
    if x.is_integer() && !x.is_positive() {
        return Err(PoleError::gamma(format!("psi({x})")));
    }
    let prec = ctx.work();
    let half = Rat::new(1.into(), 2.into());
    if x < &half {
        // psi(x) = psi(1 - x) - pi cot(pi x)
        let mirrored = rat_int(1) - x;
        let base = digamma_rat(ctx, &mirrored)?;
        let cot = ctx.cos_pi(x).div(&ctx.sin_pi(x), prec);
        return Ok(base.sub(&ctx.pi().mul(&cot, prec), prec));
    }
    let target = shift_target(prec);
    let m = shift_amount(x, target);
    let y = x + rat_int(m as i64);
    let base = digamma_large(ctx, &y);
    if m == 0 {
        return Ok(base);
    }
    // psi(x) = psi(x + m) - sum_{i=0}^{m-1} 1/(x+i), the sum kept exact.
    let mut s = Rat::zero();
    let mut f = x.clone();
    for _ in 0..m {
        s += f.recip();
        f += rat_int(1);
    }
    Ok(base.sub(&ctx.from_rat(&s), prec))
}
