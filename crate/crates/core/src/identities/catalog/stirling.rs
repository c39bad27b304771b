//! Stirling-number material: the derivative identity behind the power
//! weights, and the power-weighted generalization of the Catalan
//! convolution.

use super::util::*;
use crate::exactnum::{factorial, ConstExpr, PoleError, Rat};
use crate::identities::{IdentityEntry, Instance, ParamSpec};
use num_traits::Zero;

fn exp_derivative_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (m, u) = (i.n, i.extra_int("u"));
    let mut acc = Rat::zero();
    for p in 0..=u {
        acc += sg(p) * bi(u, p) * ipow(p, m);
    }
    Ok(ce(acc))
}

fn exp_derivative_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (m, u) = (i.n, i.extra_int("u"));
    Ok(ce(
        sg(u) * Rat::from_integer(factorial(u as u64)) * stir(m, u)
    ))
}

fn stirling_touchard_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra_int("r"));
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(n - 2 * k) * ipow(n - 2 * k, r) * cat(k);
    }
    Ok(ce(acc))
}

fn stirling_touchard_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra_int("r"));
    let mut acc = Rat::zero();
    for k in 0..=r.min(n) {
        acc += p2(k) * bi(n, k) * stir(r, k) * Rat::from_integer(factorial(k as u64))
            * cat(n - k + 1);
    }
    Ok(ce(acc))
}

pub(super) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "lemma-exp-derivative",
            "sum_p (-1)^p binom(u,p) p^m = (-1)^u u! S2(m,u)",
            ParamSpec::n_range(0, 40)
                .named("m")
                .with_extra("u", int_grid(0, 20)),
            vec![exp_derivative_lhs, exp_derivative_rhs],
        ),
        IdentityEntry::new(
            "stirling-touchard",
            "sum binom(n,2k) 2^(n-2k) (n-2k)^r C_k = sum_{k<=r} 2^k binom(n,k) S2(r,k) k! C_(n-k+1)",
            ParamSpec::n_range(0, 25).with_extra("r", int_grid(0, 8)),
            vec![stirling_touchard_lhs, stirling_touchard_rhs],
        ),
    ]
}
