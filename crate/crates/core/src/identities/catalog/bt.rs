//! Binomial-transform material: the transform theorem instantiated at the
//! built-in pairs, the parity-split specializations, and the even/odd
//! rearrangement consequences.

use std::sync::OnceLock;

use super::util::*;
use crate::exactnum::{ConstExpr, PoleError, Rat};
use crate::identities::{IdentityEntry, Instance, ParamSpec};
use crate::transforms::{builtin_pairs, eval_bt1, eval_bt2, TransformPair};
use num_traits::Zero;

fn pairs() -> &'static [TransformPair] {
    static PAIRS: OnceLock<Vec<TransformPair>> = OnceLock::new();
    PAIRS.get_or_init(builtin_pairs)
}

pub(super) fn pair_of(i: &Instance) -> &'static TransformPair {
    let idx = i.extra_int("pair");
    &pairs()[(idx - 1) as usize]
}

fn bt1_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(eval_bt1(pair_of(i), i.n as u64)?.0)
}

fn bt1_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(eval_bt1(pair_of(i), i.n as u64)?.1)
}

fn bt2_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(eval_bt2(pair_of(i), i.n as u64)?.0)
}

fn bt2_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(eval_bt2(pair_of(i), i.n as u64)?.1)
}

fn self_inverse_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * p2(-k) * cat(k + 1);
    }
    Ok(ce(acc))
}

fn self_inverse_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    Ok(if n % 2 == 0 {
        ce(p2(-n) * cat(n / 2))
    } else {
        ConstExpr::zero()
    })
}

fn parity_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(n - k) * bi(n, k) * p2(n - 2 * k) / ri(n - k + 1) * cat(k + 1);
    }
    Ok(ce(acc))
}

fn parity_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    Ok(if n % 2 == 0 {
        let mut acc = Rat::zero();
        for k in 0..=n / 2 {
            acc += bi(n, 2 * k) * p2(-2 * k) / ri(n - 2 * k + 1) * cat(k);
        }
        ce(acc)
    } else {
        ConstExpr::zero()
    })
}

fn parity_harmonic_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(n - k) * bi(n, k) * p2(n - 2 * k) / ri(n - k + 1) * cat(k + 1) * harm(n - k);
    }
    Ok(ce(acc))
}

fn parity_harmonic_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    Ok(if n % 2 == 1 {
        let mut acc = Rat::zero();
        for k in 0..=(n - 1) / 2 {
            acc += bi(n, 2 * k) * p2(-2 * k) / ri(n - 2 * k + 1) * cat(k)
                * oddharm((n - 2 * k + 1) / 2);
        }
        ce(ri(-2) * acc)
    } else {
        ConstExpr::zero()
    })
}

fn imported_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * p2(k) / ri(k + 1);
    }
    Ok(ce(acc))
}

fn imported_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    Ok(if n % 2 == 0 {
        ce(ri(1) / ri(n + 1))
    } else {
        ConstExpr::zero()
    })
}

fn swap_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(2 * (n - 2 * k)) / ri(n - 2 * k + 1) * cat(k);
    }
    Ok(ce(acc))
}

fn swap_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(2 * k) / ri(2 * k + 1) * cat(n - 2 * k + 1);
    }
    Ok(ce(acc))
}

fn swap_harmonic_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(2 * (n - 2 * k)) / ri(n - 2 * k + 1) * cat(k) * harm(n - 2 * k);
    }
    Ok(ce(acc))
}

fn swap_harmonic_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 1..=(n + 1) / 2 {
        acc += bi(n, 2 * k - 1) * p2(2 * k) / ri(k) * cat(n + 2 - 2 * k) * oddharm(k);
    }
    Ok(ce(acc / ri(2)))
}

pub(super) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "bt1-builtin",
            "transform theorem, Catalan form, at the built-in transform pairs",
            ParamSpec::n_range(0, 40).with_extra("pair", int_grid(1, 3)),
            vec![bt1_lhs, bt1_rhs],
        ),
        IdentityEntry::new(
            "bt2-builtin",
            "transform theorem, even/odd rearrangement, at the built-in transform pairs",
            ParamSpec::n_range(0, 40).with_extra("pair", int_grid(1, 3)),
            vec![bt2_lhs, bt2_rhs],
        ),
        IdentityEntry::new(
            "prop-self-inverse-even",
            "sum (-1)^k binom(n,k) 2^(-k) C_(k+1) = 2^(-n) C_(n/2) for even n, 0 for odd n",
            ParamSpec::n_range(0, 40),
            vec![self_inverse_lhs, self_inverse_rhs],
        )
        .parity(),
        IdentityEntry::new(
            "prop-parity",
            "sum (-1)^(n-k) binom(n,k) 2^(n-2k)/(n-k+1) C_(k+1) \
             = sum binom(n,2k) 2^(-2k)/(n-2k+1) C_k for even n, 0 for odd n",
            ParamSpec::n_range(0, 40),
            vec![parity_lhs, parity_rhs],
        )
        .parity(),
        IdentityEntry::new(
            "prop-parity-harmonic",
            "sum (-1)^(n-k) binom(n,k) 2^(n-2k)/(n-k+1) C_(k+1) H_(n-k) \
             = -2 sum binom(n,2k) 2^(-2k)/(n-2k+1) C_k O_((n-2k+1)/2) for odd n, 0 for even n",
            ParamSpec::n_range(0, 40),
            vec![parity_harmonic_lhs, parity_harmonic_rhs],
        )
        .parity(),
        IdentityEntry::new(
            "imported-n2x6xs0",
            "sum (-1)^k binom(n,k) 2^k/(k+1) = 1/(n+1) for even n, 0 for odd n",
            ParamSpec::n_range(0, 40),
            vec![imported_lhs, imported_rhs],
        )
        .parity(),
        IdentityEntry::new(
            "prop-swap",
            "sum binom(n,2k) 2^(2(n-2k))/(n-2k+1) C_k = sum binom(n,2k) 2^(2k)/(2k+1) C_(n-2k+1)",
            ParamSpec::n_range(0, 40),
            vec![swap_lhs, swap_rhs],
        ),
        IdentityEntry::new(
            "prop-swap-harmonic",
            "sum binom(n,2k) 2^(2(n-2k))/(n-2k+1) C_k H_(n-2k) \
             = 1/2 sum binom(n,2k-1) 2^(2k)/k C_(n-2k+2) O_k",
            ParamSpec::n_range(0, 40),
            vec![swap_harmonic_lhs, swap_harmonic_rhs],
        ),
    ]
}
