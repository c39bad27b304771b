//! The Catalan base identities: the even-index convolution producing the
//! next Catalan number, its alternating self-inverse form, and the
//! three-way evaluation chain.

use super::util::*;
use crate::exactnum::{ConstExpr, PoleError, Rat};
use crate::identities::{IdentityEntry, Instance, ParamSpec};
use crate::numeric::{NumCtx, NumericInstance};
use num_traits::Zero;

fn touchard_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(n - 2 * k) * cat(k);
    }
    Ok(ce(acc))
}

fn touchard_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(ce(cat(i.n + 1)))
}

fn touchard_lhs_num(i: &NumericInstance, cx: &NumCtx) -> Result<crate::numeric::BigFloat, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(n - 2 * k) * cat(k);
    }
    Ok(cx.from_rat(&acc))
}

fn touchard_rhs_num(i: &NumericInstance, cx: &NumCtx) -> Result<crate::numeric::BigFloat, PoleError> {
    Ok(cx.from_rat(&cat(i.n + 1)))
}

fn donaghey_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * p2(-2 * k) * cat(k + 1);
    }
    Ok(ce(acc))
}

fn donaghey_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(ce(p2(-2 * i.n) * cat(i.n + 1)))
}

fn chain_alternating(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * cat(k + 1);
    }
    Ok(ce(acc))
}

fn chain_scaled_thirds(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * cat(k + 1) / ipow(3, k);
    }
    Ok(ce(sg(n) * ipow(3, n) * acc))
}

fn chain_even_sum(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * cat(k);
    }
    Ok(ce(sg(n) * acc))
}

fn broken_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(ce(cat(i.n + 1) + ri(1)))
}

pub(super) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "touchard",
            "sum_{k<=n/2} binom(n,2k) 2^(n-2k) C_k = C_(n+1)",
            ParamSpec::n_range(0, 40),
            vec![touchard_lhs, touchard_rhs],
        )
        .with_numeric(vec![touchard_lhs_num, touchard_rhs_num]),
        IdentityEntry::new(
            "donaghey",
            "sum_k (-1)^k binom(n,k) 2^(-2k) C_(k+1) = 2^(-2n) C_(n+1)",
            ParamSpec::n_range(0, 40),
            vec![donaghey_lhs, donaghey_rhs],
        ),
        IdentityEntry::new(
            "x-eval-chain",
            "sum_k (-1)^k binom(n,k) C_(k+1) = (-3)^n sum_k (-1)^k binom(n,k) 3^(-k) C_(k+1) \
             = (-1)^n sum_k binom(n,2k) C_k",
            ParamSpec::n_range(0, 40),
            vec![chain_alternating, chain_scaled_thirds, chain_even_sum],
        ),
        // Deliberately broken pairing kept for the exit-code contract tests;
        // reachable only by explicit id.
        IdentityEntry::new(
            "fault-injection-demo",
            "intentionally unequal sides for exercising failure reporting",
            ParamSpec::n_range(0, 5),
            vec![broken_lhs, touchard_rhs],
        )
        .hidden(),
    ]
}
