//! The alternating central-binomial sum, its reciprocal-binomial and
//! power-weighted generalizations, and the partial central-binomial sum.

use super::util::*;
use crate::exactnum::{factorial, ConstExpr, HalfInt, PoleError, Rat};
use crate::identities::{IdentityEntry, Instance, ParamSpec};
use crate::numeric::{BigFloat, NumCtx, NumericInstance};
use crate::transforms::eval_knuth_bt;
use num_traits::{One, Zero};

fn knuth_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * p2(-k) * cb(k);
    }
    Ok(ce(acc))
}

fn knuth_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    Ok(if n % 2 == 0 {
        ce(p2(-n) * bi(n, n / 2))
    } else {
        ConstExpr::zero()
    })
}

fn knuth_gen_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let mut acc = ConstExpr::zero();
    for k in 0..=n {
        let w = sg(k) * bi(n, k) * p2(-k) * cb(k);
        acc = acc.add(&recip(&(&hi(k) + r), s)?.mul_rat(&w));
    }
    Ok(acc)
}

fn knuth_gen_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let factor = s.to_rat() / (&hi(n) + r).to_rat();
    let upper = &(&hi(n) + r) - 1;
    let mut acc = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cb(k);
        acc = acc.add(&recip(&upper, &(&(&hi(2 * k) + r) - s))?.mul_rat(&w));
    }
    Ok(acc.mul_rat(&factor))
}

fn knuth_gen_lhs_num(i: &NumericInstance, cx: &NumCtx) -> Result<BigFloat, PoleError> {
    let (n, r, s) = (i.n, i.rat("r"), i.rat("s"));
    let mut acc = cx.zero();
    for k in 0..=n {
        let w = sg(k) * bi(n, k) * p2(-k) * cb(k);
        let rec = cx.recip_binom(&(ri(k) + r), s)?;
        acc = cx.add(&acc, &cx.mul(&cx.from_rat(&w), &rec));
    }
    Ok(acc)
}

fn knuth_gen_rhs_num(i: &NumericInstance, cx: &NumCtx) -> Result<BigFloat, PoleError> {
    let (n, r, s) = (i.n, i.rat("r"), i.rat("s"));
    let factor = s / &(ri(n) + r);
    let upper = ri(n) + r - Rat::one();
    let mut acc = cx.zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cb(k);
        let rec = cx.recip_binom(&upper, &(ri(2 * k) + r - s))?;
        acc = cx.add(&acc, &cx.mul(&cx.from_rat(&w), &rec));
    }
    Ok(cx.mul(&acc, &cx.from_rat(&factor)))
}

fn it0ghdj_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * p2(-k) * cat(k);
    }
    Ok(ce(acc))
}

fn it0ghdj_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    Ok(ce(p2(-n) * bi(n, n / 2)))
}

fn partial_sum_direct(i: &Instance) -> Result<ConstExpr, PoleError> {
    let m = i.n;
    let mut acc = Rat::zero();
    for r in 0..=m {
        acc += p2(-2 * r) * cb(r);
    }
    Ok(ce(acc))
}

fn partial_sum_lattice_terms(i: &Instance) -> Result<ConstExpr, PoleError> {
    let m = i.n;
    let mut acc = ConstExpr::zero();
    for r in 0..=m {
        acc = acc.add(&blat(&HalfInt::half(2 * r - 1), &hi(r))?);
    }
    Ok(acc)
}

fn partial_sum_single_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    let m = i.n;
    blat(&HalfInt::half(2 * m + 1), &hi(m))
}

fn partial_sum_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let m = i.n;
    Ok(ce(ri(2 * m + 1) * p2(-2 * m) * cb(m)))
}

fn central_squared_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * p2(-3 * k) * cb(k) * cb(k);
    }
    Ok(ce(acc))
}

fn central_squared_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += p2(-2 * k) * cb(k) * cb(2 * k) * cb(n - 2 * k);
    }
    Ok(ce(p2(-2 * n) * acc))
}

fn knuth_stirling_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra_int("r"));
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * p2(-k) * cb(k) * ipow(n - k, r);
    }
    Ok(ce(acc))
}

fn knuth_stirling_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra_int("r"));
    let mut acc = Rat::zero();
    if n % 2 == 0 {
        for k in 0..=r / 2 {
            if 2 * k > n {
                continue;
            }
            let m = n - 2 * k;
            acc += bi(n, 2 * k) * p2(-m) * bi(m, m / 2)
                * Rat::from_integer(factorial(2 * k as u64))
                * stir(r, 2 * k);
        }
    } else {
        for k in 1..=r.div_euclid(2) + 1 {
            if 2 * k - 1 > n {
                continue;
            }
            let m = n - 2 * k + 1;
            acc += bi(n, 2 * k - 1) * p2(-m) * bi(m, m / 2)
                * Rat::from_integer(factorial(2 * k as u64 - 1))
                * stir(r, 2 * k - 1);
        }
    }
    Ok(ce(acc))
}

fn knuth_bt_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(eval_knuth_bt(super::bt::pair_of(i), i.n as u64)?.0)
}

fn knuth_bt_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(eval_knuth_bt(super::bt::pair_of(i), i.n as u64)?.1)
}

fn mzx3fur_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let mut acc = ConstExpr::zero();
    for k in 0..=n {
        let w = sg(k) * bi(n, k) * p2(-k) * cat(k + 1);
        acc = acc.add(&recip(&(&hi(k) + r), s)?.mul_rat(&w));
    }
    Ok(acc)
}

fn mzx3fur_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let factor = s.to_rat() / (&hi(n) + r).to_rat();
    let upper = &(&hi(n) + r) - 1;
    let mut acc = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cat(k);
        acc = acc.add(&recip(&upper, &(&(&hi(2 * k) + r) - s))?.mul_rat(&w));
    }
    Ok(acc.mul_rat(&factor))
}

fn mzx3fur_lhs_num(i: &NumericInstance, cx: &NumCtx) -> Result<BigFloat, PoleError> {
    let (n, r, s) = (i.n, i.rat("r"), i.rat("s"));
    let mut acc = cx.zero();
    for k in 0..=n {
        let w = sg(k) * bi(n, k) * p2(-k) * cat(k + 1);
        let rec = cx.recip_binom(&(ri(k) + r), s)?;
        acc = cx.add(&acc, &cx.mul(&cx.from_rat(&w), &rec));
    }
    Ok(acc)
}

fn mzx3fur_rhs_num(i: &NumericInstance, cx: &NumCtx) -> Result<BigFloat, PoleError> {
    let (n, r, s) = (i.n, i.rat("r"), i.rat("s"));
    let factor = s / &(ri(n) + r);
    let upper = ri(n) + r - Rat::one();
    let mut acc = cx.zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cat(k);
        let rec = cx.recip_binom(&upper, &(ri(2 * k) + r - s))?;
        acc = cx.add(&acc, &cx.mul(&cx.from_rat(&w), &rec));
    }
    Ok(cx.mul(&acc, &cx.from_rat(&factor)))
}

fn catalan_squared_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += sg(k) * bi(n, k) * p2(-3 * k) * cat(k + 1) * cat(k + 1);
    }
    Ok(ce(acc))
}

fn catalan_squared_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += ri(2 * n - 4 * k + 1) * ri(4 * k + 1) * p2(-2 * k) * cat(k) * cb(2 * k)
            * cb(n - 2 * k);
    }
    Ok(ce(acc / (ri(n + 1) * ri(n + 2) * p2(2 * n - 1))))
}

pub(super) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "knuth",
            "sum (-1)^k binom(n,k) 2^(-k) binom(2k,k) = 2^(-n) binom(n,n/2) for even n, 0 for odd n",
            ParamSpec::n_range(0, 40),
            vec![knuth_lhs, knuth_rhs],
        )
        .parity(),
        IdentityEntry::new(
            "knuth-gen",
            "sum (-1)^k binom(n,k) 2^(-k) binom(2k,k) / binom(k+r,s) = s/(n+r) \
             sum binom(n,2k) 2^(-2k) binom(2k,k) / binom(n+r-1,2k+r-s)",
            ParamSpec::n_range(0, 20)
                .with_extra("r", default_grid())
                .with_extra("s", default_grid())
                .with_predicate(pred_gen_family),
            vec![knuth_gen_lhs, knuth_gen_rhs],
        )
        .with_numeric(vec![knuth_gen_lhs_num, knuth_gen_rhs_num]),
        IdentityEntry::new(
            "knuth-it0ghdj",
            "sum (-1)^k binom(n,k) 2^(-k) C_k = 2^(-n) binom(n, floor(n/2))",
            ParamSpec::n_range(0, 40),
            vec![it0ghdj_lhs, it0ghdj_rhs],
        ),
        IdentityEntry::new(
            "partial-central-sum",
            "sum_{r<=m} 2^(-2r) binom(2r,r) = sum_{r<=m} binom(r-1/2,r) = binom(m+1/2,m) \
             = (2m+1) 2^(-2m) binom(2m,m)",
            ParamSpec::n_range(0, 40).named("m"),
            vec![
                partial_sum_direct,
                partial_sum_lattice_terms,
                partial_sum_single_binom,
                partial_sum_closed,
            ],
        ),
        IdentityEntry::new(
            "knuth-central-squared",
            "sum (-1)^k binom(n,k) 2^(-3k) binom(2k,k)^2 = 2^(-2n) \
             sum 2^(-2k) binom(2k,k) binom(4k,2k) binom(2(n-2k),n-2k)",
            ParamSpec::n_range(0, 40),
            vec![central_squared_lhs, central_squared_rhs],
        ),
        IdentityEntry::new(
            "knuth-stirling",
            "sum (-1)^k binom(n,k) 2^(-k) binom(2k,k) (n-k)^r, parity-split Stirling closed form",
            ParamSpec::n_range(0, 25).with_extra("r", int_grid(0, 8)),
            vec![knuth_stirling_lhs, knuth_stirling_rhs],
        )
        .parity(),
        IdentityEntry::new(
            "knuth-bt-pair",
            "transform theorem, central-binomial form, at the built-in transform pairs",
            ParamSpec::n_range(0, 40).with_extra("pair", int_grid(1, 3)),
            vec![knuth_bt_lhs, knuth_bt_rhs],
        ),
        IdentityEntry::new(
            "mzx3fur",
            "sum (-1)^k binom(n,k) 2^(-k) C_(k+1) / binom(k+r,s) = s/(n+r) \
             sum binom(n,2k) 2^(-2k) C_k / binom(n+r-1,2k+r-s)",
            ParamSpec::n_range(0, 20)
                .with_extra("r", default_grid())
                .with_extra("s", default_grid())
                .with_predicate(pred_gen_family),
            vec![mzx3fur_lhs, mzx3fur_rhs],
        )
        .with_numeric(vec![mzx3fur_lhs_num, mzx3fur_rhs_num]),
        IdentityEntry::new(
            "catalan-squared",
            "sum (-1)^k binom(n,k) 2^(-3k) C_(k+1)^2 = 1/((n+1)(n+2) 2^(2n-1)) \
             sum (2n-4k+1)(4k+1) 2^(-2k) C_k binom(4k,2k) binom(2(n-2k),n-2k)",
            ParamSpec::n_range(0, 40),
            vec![catalan_squared_lhs, catalan_squared_rhs],
        ),
    ]
}
