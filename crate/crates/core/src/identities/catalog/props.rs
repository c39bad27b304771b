//! The reciprocal-binomial generalization of the Catalan convolution, the
//! Beta-integral equalities behind it (checked as Gamma-ratio identities),
//! and its single-parameter consequences.

use super::util::*;
use crate::exactnum::{gamma_half, limit_rewrite_r_neg1, ConstExpr, HalfInt, PoleError, Rat};
use crate::identities::{DomainCheck, IdentityEntry, Instance, ParamSpec};
use crate::numeric::{BigFloat, NumCtx, NumericInstance};
use num_traits::{One, Zero};

fn gen_touchard_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let mut acc = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cat(k);
        acc = acc.add(&recip(&(&hi(2 * k) + r), s)?.mul_rat(&w));
    }
    Ok(acc)
}

fn gen_touchard_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let factor = s.to_rat() / (&hi(n) + r).to_rat();
    let upper = &(&hi(n) + r) - 1;
    let mut acc = ConstExpr::zero();
    for k in 0..=n {
        let w = bi(n, k) * p2(-k) * cat(k + 1);
        let lower = &(&hi(k) + r) - s;
        acc = acc.add(&recip(&upper, &lower)?.mul_rat(&w));
    }
    Ok(acc.mul_rat(&factor))
}

fn gen_touchard_lhs_num(i: &NumericInstance, cx: &NumCtx) -> Result<BigFloat, PoleError> {
    let (n, r, s) = (i.n, i.rat("r"), i.rat("s"));
    let mut acc = cx.zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cat(k);
        let rec = cx.recip_binom(&(ri(2 * k) + r), s)?;
        acc = cx.add(&acc, &cx.mul(&cx.from_rat(&w), &rec));
    }
    Ok(acc)
}

fn gen_touchard_rhs_num(i: &NumericInstance, cx: &NumCtx) -> Result<BigFloat, PoleError> {
    let (n, r, s) = (i.n, i.rat("r"), i.rat("s"));
    let factor = s / &(ri(n) + r);
    let upper = ri(n) + r - Rat::one();
    let mut acc = cx.zero();
    for k in 0..=n {
        let w = bi(n, k) * p2(-k) * cat(k + 1);
        let rec = cx.recip_binom(&upper, &(ri(k) + r - s))?;
        acc = cx.add(&acc, &cx.mul(&cx.from_rat(&w), &rec));
    }
    Ok(cx.mul(&acc, &cx.from_rat(&factor)))
}

/// `Gamma(x) Gamma(y) / Gamma(x + y)` on the lattice.
fn beta_lattice(x: &HalfInt, y: &HalfInt) -> Result<ConstExpr, PoleError> {
    let num = gamma_half(x)?.try_mul(&gamma_half(y)?)?;
    num.try_div(&gamma_half(&(x + y))?)
}

fn beta1_pred(i: &Instance) -> DomainCheck {
    let (k, r, s) = (i.n, i.extra("r"), i.extra("s"));
    if s.is_non_positive_integer() {
        return Err(format!("s = {s} excluded: Gamma(s) pole"));
    }
    let kr = &hi(k) + r;
    if kr.is_negative_integer() {
        return Err(format!("k + r = {kr} excluded: Gamma(k+r+1) pole"));
    }
    let krs = &kr - s;
    if krs.is_negative_integer() {
        return Err(format!("k + r - s = {krs} excluded: Gamma pole"));
    }
    Ok(())
}

fn beta1_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (k, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let x = &(&(&hi(k) + r) - s) + 1; // r + k - s + 1
    let b = beta_lattice(&x, s)?;
    let binom = blat(&(&hi(k) + r), s)?;
    b.try_mul(&binom)?
        .try_mul(&ConstExpr::from_rat(s.to_rat()))
}

fn one_side(_i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(ConstExpr::one())
}

fn beta2_pred(i: &Instance) -> DomainCheck {
    let (k, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let sk = &hi(k) + s;
    if sk.is_negative_integer() {
        return Err(format!("s + k = {sk} excluded: Gamma(s+k+1) pole"));
    }
    let rk = r - &hi(k);
    if rk.is_negative_integer() {
        return Err(format!("r - k = {rk} excluded: Gamma(r-k+1) pole"));
    }
    let rs = r + s;
    if rs.is_integer() && !(&rs + 1).is_positive() {
        return Err(format!("r + s = {rs} excluded: Gamma(r+s+2) pole or zero divisor"));
    }
    Ok(())
}

fn beta2_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (k, r, s) = (i.n, i.extra("r"), i.extra("s"));
    let x = &(s + &hi(k)) + 1; // s + k + 1
    let y = &(r - &hi(k)) + 1; // r - k + 1
    let b = beta_lattice(&x, &y)?;
    let binom = blat(&(r + s), &(s + &hi(k)))?;
    let factor = (&(r + s) + 1).to_rat();
    b.try_mul(&binom).map(|v| v.mul_rat(&factor))
}

fn ckc2k_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-6 * k) * cat(k) * cat(2 * k);
    }
    Ok(ce(acc))
}

fn ckc2k_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += ri(2 * (n - k) + 1) * cb(n - k) * cb(k) * p2(-k) * cat(k + 1);
    }
    Ok(ce(acc / (ri(n + 1) * p2(2 * n))))
}

fn ck_over_c2k_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(2 * k) * cat(k) / cat(2 * k);
    }
    Ok(ce(acc))
}

fn ck_over_c2k_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        let den = ri(2 * (n - k) - 1) * ri(2 * (n - k) - 3);
        acc += p2(k) * ri(k + 1) / den * cb(n - k) * cat(k + 1);
    }
    Ok(ce(ri(3) / cb(n) * acc))
}

fn pred_r_not_nonpositive_int(i: &Instance) -> DomainCheck {
    let r = i.extra("r");
    if r.is_non_positive_integer() {
        return Err(format!("r = {r} excluded: non-positive integer"));
    }
    Ok(())
}

fn two_k_plus_r_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra("r"));
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-2 * k) * cat(k) / (&hi(2 * k) + r).to_rat();
    }
    Ok(ce(acc))
}

fn two_k_plus_r_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra("r"));
    let mut acc = ConstExpr::zero();
    for k in 0..=n {
        let w = p2(-k) * cat(k + 1);
        acc = acc.add(&blat(&(&(&hi(k) + r) - 1), &hi(k))?.mul_rat(&w));
    }
    let rec = recip(&(&(&hi(n) + r) - 1), &hi(n))?;
    acc.try_mul(&rec)
        .map(|v| v.mul_rat(&(&hi(n) + r).to_rat().recip()))
}

fn two_k_plus_one_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-2 * k) * cat(k) / ri(2 * k + 1);
    }
    Ok(ce(acc))
}

fn two_k_plus_one_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += p2(-k) * cat(k + 1);
    }
    Ok(ce(acc / ri(n + 1)))
}

fn four_k_plus_one_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-2 * k) * cat(k) / ri(4 * k + 1);
    }
    Ok(ce(acc))
}

fn four_k_plus_one_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n {
        acc += p2(-3 * k) * cb(k) * cat(k + 1);
    }
    Ok(ce(p2(2 * n) / ri(2 * n + 1) / cb(n) * acc))
}

fn four_k_minus_one_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-2 * k) * cat(k) / ri(4 * k - 1);
    }
    Ok(ce(acc))
}

fn four_k_minus_one_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 1..=n {
        acc += p2(-3 * k) * cat(k - 1) * cat(k + 1);
    }
    Ok(ce(p2(2 * n) / cb(n) * (ri(2) * acc - ri(1))))
}

fn two_k_minus_one_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(-2 * k) * cat(k) / ri(2 * k - 1);
    }
    Ok(ce(acc))
}

/// Right side evaluated exactly at `r = -1` through the two limit values:
/// the split-off head becomes `-n(n-1)` and the tail weights become
/// `n(n-1)/(k(k-1))`.
fn two_k_minus_one_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = limit_rewrite_r_neg1(n, 2).0;
    for k in 2..=n {
        let w = p2(-k) * cat(k + 1);
        acc = acc.add(&limit_rewrite_r_neg1(n, k).1.mul_rat(&w));
    }
    acc.div_rat(&ri(n - 1))
}

fn pred_s_not_zero_not_neg_int(i: &Instance) -> DomainCheck {
    let s = i.extra("s");
    if s.is_zero() {
        return Err(
            "s = 0 excluded; the s -> 0 limit rewrite reduces this instance to the base identity"
                .to_string(),
        );
    }
    if s.is_negative_integer() {
        return Err(format!("s = {s} excluded: negative integer"));
    }
    Ok(())
}

fn r_eq_s_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, s) = (i.n, i.extra("s"));
    let mut acc = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cat(k);
        acc = acc.add(&recip(&(&hi(2 * k) + s), s)?.mul_rat(&w));
    }
    Ok(acc)
}

fn r_eq_s_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, s) = (i.n, i.extra("s"));
    let factor = s.to_rat() / (&hi(n) + s).to_rat();
    let upper = &(&hi(n) - 1) + s;
    let mut acc = ConstExpr::zero();
    for k in 0..=n {
        let w = bi(n, k) * p2(-k) * cat(k + 1);
        acc = acc.add(&recip(&upper, &hi(k))?.mul_rat(&w));
    }
    Ok(acc.mul_rat(&factor))
}

fn four_k_2k_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        acc += bi(n, 2 * k) * p2(2 * k) * cat(k) / cb(2 * k);
    }
    Ok(ce(acc))
}

fn four_k_2k_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let head = p2(n) * ri(3 * n) / (ri(n + 1) * ri(n + 2));
    let mut tail = Rat::zero();
    for k in 0..=n - 2 {
        tail += p2(k) / ri(2 * n - 2 * k - 1) * bi(n, k) * bi(n, k) * cat(k + 1)
            / cb(k)
            / bi(2 * n, 2 * k);
    }
    Ok(ce(head - tail))
}

fn negated_pred(i: &Instance) -> DomainCheck {
    let s = i.extra("s");
    if s.is_integer() {
        return Err(format!(
            "s = {s} excluded: integer s makes a Gamma argument a non-positive integer"
        ));
    }
    Ok(())
}

fn negated_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra_int("r"), i.extra("s"));
    let upper = &(&hi(n) - s) - 1;
    let mut acc = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = bi(n, 2 * k) * p2(-2 * k) * cat(k);
        acc = acc.add(&recip(&upper, &hi(2 * k + r))?.mul_rat(&w));
    }
    Ok(acc)
}

fn negated_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r, s) = (i.n, i.extra_int("r"), i.extra("s"));
    let factor = sg(r - 1) * (&hi(n) - s).to_rat() / (&hi(r) + s).to_rat();
    let upper = &(&hi(r) + s) - 1;
    let mut acc = ConstExpr::zero();
    for k in 0..=n {
        let w = bi(n, k) * p2(-k) * cat(k + 1);
        acc = acc.add(&recip(&upper, &hi(k + r))?.mul_rat(&w));
    }
    Ok(acc.mul_rat(&factor))
}

fn alternating_closed_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    let mut acc = Rat::zero();
    for k in 0..=n / 2 {
        let den = ri(2 * n - 4 * k - 1) * ri(2 * n - 4 * k - 3);
        acc += p2(2 * k) / den * bi(n, 2 * k) * bi(n, 2 * k) * cb(k) / bi(2 * n, 4 * k)
            / cat(2 * k);
    }
    Ok(ce(acc))
}

fn alternating_closed_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let n = i.n;
    Ok(ce(sg(n) * ri(2 * n + 1) / ri(3)))
}

pub(super) fn entries() -> Vec<IdentityEntry> {
    vec![
        IdentityEntry::new(
            "gen-touchard",
            "sum binom(n,2k) 2^(-2k) C_k / binom(2k+r,s) = s/(n+r) \
             sum binom(n,k) 2^(-k) C_(k+1) / binom(n+r-1,k+r-s)",
            ParamSpec::n_range(0, 20)
                .with_extra("r", default_grid())
                .with_extra("s", default_grid())
                .with_predicate(pred_gen_family),
            vec![gen_touchard_lhs, gen_touchard_rhs],
        )
        .with_numeric(vec![gen_touchard_lhs_num, gen_touchard_rhs_num]),
        IdentityEntry::new(
            "beta-lemma-1",
            "s B(r+k-s+1, s) binom(k+r, s) = 1, with B as a Gamma ratio",
            ParamSpec::n_range(0, 20)
                .named("k")
                .with_extra("r", default_grid())
                .with_extra("s", default_grid())
                .with_predicate(beta1_pred),
            vec![beta1_lhs, one_side],
        ),
        IdentityEntry::new(
            "beta-lemma-2",
            "(r+s+1) B(s+k+1, r-k+1) binom(r+s, k+s) = 1, with B as a Gamma ratio",
            ParamSpec::n_range(0, 20)
                .named("k")
                .with_extra("r", default_grid())
                .with_extra("s", default_grid())
                .with_predicate(beta2_pred),
            vec![beta2_lhs, one_side],
        ),
        IdentityEntry::new(
            "prop-ckc2k",
            "sum binom(n,2k) 2^(-6k) C_k C_2k = 1/((n+1) 2^(2n)) \
             sum (2(n-k)+1) binom(2(n-k),n-k) binom(2k,k) 2^(-k) C_(k+1)",
            ParamSpec::n_range(0, 40),
            vec![ckc2k_lhs, ckc2k_rhs],
        ),
        IdentityEntry::new(
            "prop-ck-over-c2k",
            "sum binom(n,2k) 2^(2k) C_k/C_2k = 3/binom(2n,n) \
             sum 2^k (k+1)/((2(n-k)-1)(2(n-k)-3)) binom(2(n-k),n-k) C_(k+1)",
            ParamSpec::n_range(0, 40),
            vec![ck_over_c2k_lhs, ck_over_c2k_rhs],
        ),
        IdentityEntry::new(
            "prop-2k-plus-r",
            "sum binom(n,2k) 2^(-2k)/(2k+r) C_k = 1/((n+r) binom(n+r-1,n)) \
             sum 2^(-k) C_(k+1) binom(k+r-1,k)",
            ParamSpec::n_range(0, 40)
                .with_extra("r", default_grid())
                .with_predicate(pred_r_not_nonpositive_int),
            vec![two_k_plus_r_lhs, two_k_plus_r_rhs],
        ),
        IdentityEntry::new(
            "prop-2k-plus-1",
            "sum binom(n,2k) 2^(-2k)/(2k+1) C_k = 1/(n+1) sum 2^(-k) C_(k+1)",
            ParamSpec::n_range(0, 40),
            vec![two_k_plus_one_lhs, two_k_plus_one_rhs],
        ),
        IdentityEntry::new(
            "prop-4k-plus-1",
            "sum binom(n,2k) 2^(-2k)/(4k+1) C_k = 2^(2n)/((2n+1) binom(2n,n)) \
             sum 2^(-3k) binom(2k,k) C_(k+1)",
            ParamSpec::n_range(0, 40),
            vec![four_k_plus_one_lhs, four_k_plus_one_rhs],
        ),
        IdentityEntry::new(
            "prop-4k-minus-1",
            "sum binom(n,2k) 2^(-2k)/(4k-1) C_k = 2^(2n)/binom(2n,n) \
             (2 sum_{k>=1} 2^(-3k) C_(k-1) C_(k+1) - 1)",
            ParamSpec::n_range(0, 40),
            vec![four_k_minus_one_lhs, four_k_minus_one_rhs],
        ),
        IdentityEntry::new(
            "prop-2k-minus-1",
            "sum binom(n,2k) 2^(-2k)/(2k-1) C_k = n(-1 + sum_{k>=2} 2^(-k) C_(k+1)/(k(k-1)))",
            ParamSpec::n_range(2, 30),
            vec![two_k_minus_one_lhs, two_k_minus_one_rhs],
        ),
        IdentityEntry::new(
            "prop-r-eq-s",
            "sum binom(n,2k) 2^(-2k) C_k / binom(2k+s,s) = s/(n+s) \
             sum binom(n,k) 2^(-k) C_(k+1) / binom(n-1+s,k)",
            ParamSpec::n_range(0, 20)
                .with_extra("s", default_grid())
                .with_predicate(pred_s_not_zero_not_neg_int),
            vec![r_eq_s_lhs, r_eq_s_rhs],
        ),
        IdentityEntry::new(
            "prop-4k-2k",
            "sum binom(n,2k) 2^(2k) C_k / binom(4k,2k) = 2^n 3n/((n+1)(n+2)) \
             - sum_{k<=n-2} 2^k/(2n-2k-1) binom(n,k)^2 C_(k+1)/(binom(2k,k) binom(2n,2k))",
            ParamSpec::n_range(1, 40),
            vec![four_k_2k_lhs, four_k_2k_rhs],
        ),
        IdentityEntry::new(
            "prop-negated",
            "sum binom(n,2k) 2^(-2k) C_k / binom(n-s-1,2k+r) = (-1)^(r-1) (n-s)/(r+s) \
             sum binom(n,k) 2^(-k) C_(k+1) / binom(r+s-1,k+r)",
            ParamSpec::n_range(0, 20)
                .with_extra("r", int_grid(0, 3))
                .with_extra("s", half_odd_grid())
                .with_predicate(negated_pred),
            vec![negated_lhs, negated_rhs],
        ),
        IdentityEntry::new(
            "prop-alternating-closed",
            "sum 2^(2k)/((2n-4k-1)(2n-4k-3)) binom(n,2k)^2 binom(2k,k) \
             / (binom(2n,4k) C_2k) = (-1)^n (2n+1)/3",
            ParamSpec::n_range(0, 40),
            vec![alternating_closed_lhs, alternating_closed_rhs],
        ),
    ]
}
