//! Harmonic-weighted identities obtained by differentiating the generalized
//! convolution in its free parameter, and their odd-harmonic descendants.

use super::util::*;
use crate::exactnum::{ConstExpr, PoleError, Rat};
use crate::identities::{DomainCheck, IdentityEntry, Instance, ParamSpec};
use num_traits::Zero;

fn master_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let mut acc = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cat(k);
        let h = hx(&(&(&hi(2 * k) + r) - s))?;
        let rec = recip(&(&hi(2 * k) + r), s)?;
        acc = acc.add(&h.try_mul(&rec)?.mul_rat(&w));
    }
    Ok(acc)
}

fn master_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let factor = s.to_rat() / (&hi(n) + r).to_rat();
    let upper = &(&hi(n) + r) - 1;
    let h_s1 = hx(&(s - 1))?;
    let mut acc = ConstExpr::zero();
    for k in 0..=n {
        let w = bi(n, k) * p2(-k) * cat(k + 1);
        let h = hx(&(&(&hi(k) + r) - s))?
            .add(&h_s1)
            .sub(&hx(&(&(&hi(n) + s) - (k + 1)))?);
        let rec = recip(&upper, &(&(&hi(k) + r) - s))?;
        acc = acc.add(&h.try_mul(&rec)?.mul_rat(&w));
    }
    Ok(acc.mul_rat(&factor))
}

fn pred_r_not_negative_int(i: &Instance) -> DomainCheck {
    let r = i.extra("r");
    if r.is_negative_integer() {
        return Err(format!("r = {r} excluded: negative integer"));
    }
    Ok(())
}

fn harmonic_r_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra("r"));
    let mut acc = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cat(k);
        acc = acc.add(&hx(&(&hi(2 * k) + r))?.mul_rat(&w));
    }
    Ok(acc)
}

fn harmonic_r_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra("r"));
    let head = hx(&(&hi(n) + r))?.mul_rat(&(p2(-n) * cat(n + 1)));
    let mut tail = ConstExpr::zero();
    for k in 0..=n - 1 {
        let w = bi(n, k) * p2(-k) / ri(n - k) * cat(k + 1);
        tail = tail.add(&recip(&(&hi(n) + r), &(&hi(k) + r))?.mul_rat(&w));
    }
    Ok(head.sub(&tail))
}

fn pred_r_not_nonpositive_int(i: &Instance) -> DomainCheck {
    let r = i.extra("r");
    if r.is_non_positive_integer() {
        return Err(format!("r = {r} excluded: non-positive integer"));
    }
    Ok(())
}

fn harmonic_2kr_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra("r"));
    let mut acc = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cat(k) / (&hi(2 * k) + r).to_rat();
        acc = acc.add(&hx(&(&(&hi(2 * k) + r) - 1))?.mul_rat(&w));
    }
    Ok(acc)
}

fn harmonic_2kr_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra("r"));
    let mut acc = ConstExpr::zero();
    for k in 0..=n {
        let w = p2(-k) * cat(k + 1);
        let h = hx(&(&(&hi(k) + r) - 1))?.sub(&ce(harm(n - k)));
        let b = blat(&(&(&hi(k) + r) - 1), &hi(k))?;
        acc = acc.add(&h.try_mul(&b)?.mul_rat(&w));
    }
    let rec = recip(&(&(&hi(n) + r) - 1), &hi(n))?;
    acc.try_mul(&rec)
        .map(|v| v.mul_rat(&(&hi(n) + r).to_rat().recip()))
}

fn harmonic_plain_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-2 * k) * cat(k) * harm(2 * k);
    }
    Ok(ce(acc))
}

fn harmonic_plain_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut tail = Rat::zero();
    for k in 0..=n - 1 {
        tail += p2(-k) * cat(k + 1) / ri(n - k);
    }
    Ok(ce(p2(-n) * cat(n + 1) * harm(n) - tail))
}

fn odd_harmonic_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-2 * k) * cat(k) * oddharm(2 * k);
    }
    Ok(ce(acc))
}

fn odd_harmonic_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut tail = Rat::zero();
    for k in 1..=n {
        tail += p2(3 * k) / ri(k) * bi(n, k) * bi(n, k) / cb(k) / bi(2 * n, 2 * k)
            * cat(n - k + 1);
    }
    Ok(ce(p2(-n) * cat(n + 1) * oddharm(n) - p2(-n - 1) * tail))
}

fn ckc2k_odd_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-6 * k) * cat(k) * cat(2 * k) * oddharm(2 * k);
    }
    Ok(ce(acc))
}

fn ckc2k_odd_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        let weight = ri(2 * (n - k) + 1) * cb(n - k) * cb(k) * p2(-k) * cat(k + 1);
        acc += weight * (oddharm(k) - oddharm(n - k + 1) + ri(1));
    }
    Ok(ce(acc / (p2(2 * n) * ri(n + 1))))
}

fn over_2kplus1_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-2 * k) / ri(2 * k + 1) * cat(k) * harm(2 * k);
    }
    Ok(ce(acc))
}

fn over_2kplus1_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += p2(-k) * cat(k + 1) * (harm(k) - harm(n - k));
    }
    Ok(ce(acc / ri(n + 1)))
}

fn odd_4kplus1_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-2 * k) / ri(4 * k + 1) * cat(k) * oddharm(2 * k);
    }
    Ok(ce(acc))
}

fn odd_4kplus1_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += p2(-3 * k) * cat(k + 1) * cb(k) * (ri(2) * oddharm(k) - harm(n - k));
    }
    Ok(ce(p2(2 * n - 1) / ri(2 * n + 1) / cb(n) * acc))
}

pub(super) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "harmonic-master",
            "sum binom(n,2k) 2^(-2k) C_k H_(2k+r-s) / binom(2k+r,s) = s/(n+r) \
             sum binom(n,k) 2^(-k) C_(k+1) (H_(k+r-s) + H_(s-1) - H_(n+s-k-1)) / binom(n+r-1,k+r-s)",
            ParamSpec::n_range(0, 20)
                .with_extra("r", default_grid())
                .with_extra("s", default_grid())
                .with_predicate(pred_gen_family),
            vec![master_lhs, master_rhs],
        ),
        IdentityEntry::new(
            "harmonic-r",
            "sum binom(n,2k) 2^(-2k) C_k H_(2k+r) = 2^(-n) C_(n+1) H_(n+r) \
             - sum_{k<n} binom(n,k) 2^(-k)/(n-k) C_(k+1) / binom(n+r,k+r)",
            ParamSpec::n_range(0, 40)
                .with_extra("r", default_grid())
                .with_predicate(pred_r_not_negative_int),
            vec![harmonic_r_lhs, harmonic_r_rhs],
        ),
        IdentityEntry::new(
            "harmonic-2kr",
            "sum binom(n,2k) 2^(-2k)/(2k+r) C_k H_(2k+r-1) = 1/((n+r) binom(n+r-1,n)) \
             sum 2^(-k) C_(k+1) (H_(k+r-1) - H_(n-k)) binom(k+r-1,k)",
            ParamSpec::n_range(0, 40)
                .with_extra("r", default_grid())
                .with_predicate(pred_r_not_nonpositive_int),
            vec![harmonic_2kr_lhs, harmonic_2kr_rhs],
        ),
        IdentityEntry::new(
            "harmonic-plain",
            "sum binom(n,2k) 2^(-2k) C_k H_2k = 2^(-n) C_(n+1) H_n - sum_{k<n} 2^(-k) C_(k+1)/(n-k)",
            ParamSpec::n_range(0, 40),
            vec![harmonic_plain_lhs, harmonic_plain_rhs],
        ),
        IdentityEntry::new(
            "odd-harmonic",
            "sum binom(n,2k) 2^(-2k) C_k O_2k = 2^(-n) C_(n+1) O_n \
             - 2^(-n-1) sum_{k>=1} 2^(3k)/k binom(n,k)^2 C_(n-k+1)/(binom(2k,k) binom(2n,2k))",
            ParamSpec::n_range(0, 40),
            vec![odd_harmonic_lhs, odd_harmonic_rhs],
        ),
        IdentityEntry::new(
            "ckc2k-odd-harmonic",
            "sum binom(n,2k) 2^(-6k) C_k C_2k O_2k = 1/(2^(2n) (n+1)) \
             sum (2(n-k)+1) binom(2(n-k),n-k) binom(2k,k) 2^(-k) C_(k+1) (O_k - O_(n-k+1) + 1)",
            ParamSpec::n_range(0, 40),
            vec![ckc2k_odd_lhs, ckc2k_odd_rhs],
        ),
        IdentityEntry::new(
            "harmonic-over-2kplus1",
            "sum binom(n,2k) 2^(-2k)/(2k+1) C_k H_2k = 1/(n+1) sum 2^(-k) C_(k+1) (H_k - H_(n-k))",
            ParamSpec::n_range(0, 40),
            vec![over_2kplus1_lhs, over_2kplus1_rhs],
        ),
        IdentityEntry::new(
            "odd-harmonic-4kplus1",
            "sum binom(n,2k) 2^(-2k)/(4k+1) C_k O_2k = 2^(2n-1)/((2n+1) binom(2n,n)) \
             sum 2^(-3k) C_(k+1) binom(2k,k) (2 O_k - H_(n-k))",
            ParamSpec::n_range(0, 40),
            vec![odd_4kplus1_lhs, odd_4kplus1_rhs],
        ),
    ]
}
