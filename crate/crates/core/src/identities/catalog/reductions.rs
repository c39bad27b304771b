//! Closed-form reductions of half-integer binomial coefficients to central
//! binomials and Catalan numbers. Each entry checks one quoted reduction as
//! an exact equality of constant-field values over its index grid.

use super::util::*;
use crate::exactnum::{gamma_half, ConstExpr, HalfInt, PoleError};
use crate::identities::{DomainCheck, IdentityEntry, Instance, ParamSpec};

fn hh(n: i64) -> HalfInt {
    HalfInt::half(n)
}

fn pred_k_le_n(i: &Instance) -> DomainCheck {
    let k = i.extra_int("k");
    if k > i.n {
        return Err(format!("k = {k} exceeds n = {}", i.n));
    }
    Ok(())
}

fn pred_2k_le_n(i: &Instance) -> DomainCheck {
    let k = i.extra_int("k");
    if 2 * k > i.n {
        return Err(format!("2k = {} exceeds n = {}", 2 * k, i.n));
    }
    Ok(())
}

// binom(2k+1, 3/2) reductions

fn r1_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    blat(&hi(2 * i.n + 1), &hh(3))
}

fn r1_gamma_ratio(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.n;
    let ratio = gamma_half(&hi(2 * k + 2))?.try_div(&gamma_half(&hh(4 * k + 1))?)?;
    ratio.try_mul(&ConstExpr::term(-1, 0, rat43()))
}

fn r1_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.n;
    Ok(ConstExpr::term(-2, 0, rat43() * p2(4 * k) / cat(2 * k)))
}

fn rat43() -> crate::exactnum::Rat {
    ri(4) / ri(3)
}

// binom(n, k-1/2)

fn r2_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.extra_int("k");
    blat(&hi(i.n), &hh(2 * k - 1))
}

fn r2_gamma_ratio(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k) = (i.n, i.extra_int("k"));
    let den = gamma_half(&hh(2 * k + 1))?.try_mul(&gamma_half(&hh(2 * (n - k) + 3))?)?;
    gamma_half(&hi(n + 1))?.try_div(&den)
}

fn r2_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k) = (i.n, i.extra_int("k"));
    let coeff = p2(2 * n + 1) / ri(2 * (n - k) + 1) * bi(n, k) / cb(n - k) / cb(k);
    Ok(ConstExpr::term(-2, 0, coeff))
}

// binom(2k-1/2, -3/2)

fn r3_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    blat(&hh(4 * i.n - 1), &hh(-3))
}

fn r3_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.n;
    Ok(ce(-p2(-4 * k - 1) * cat(2 * k)))
}

// binom(n-3/2, k+1)

fn r4_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.extra_int("k");
    blat(&hh(2 * i.n - 3), &hi(k + 1))
}

// The last central binomial divides rather than multiplies: the product
// form fails already at n = 1, k = 0, while this form matches the lattice
// evaluation everywhere and is the shape the consequence identity needs.
fn r4_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k) = (i.n, i.extra_int("k"));
    let coeff = p2(-2 * k) / ri(2) * (ri(2 * (n - k) - 1) * ri(2 * (n - k) - 3))
        / (ri(2 * n - 1) * ri(k + 1))
        * cb(n)
        * bi(n, k)
        / cb(n - k);
    Ok(ce(coeff))
}

// binom(k-1/2, k) and binom(k-1/2, k+1)

fn r5_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    blat(&hh(2 * i.n - 1), &hi(i.n))
}

fn r5_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(ce(p2(-2 * i.n) * cb(i.n)))
}

fn r6_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    blat(&hh(2 * i.n - 1), &hi(i.n + 1))
}

fn r6_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(ce(-cat(i.n) * p2(-2 * i.n - 1)))
}

// binom(n+r-1, k+r-1) binom(k+r-1, k) = binom(n,k) binom(n+r-1, n)

fn r7_pred(i: &Instance) -> DomainCheck {
    pred_k_le_n(i)?;
    let r = i.extra("r");
    if r.is_non_positive_integer() {
        return Err(format!("r = {r} excluded: non-positive integer"));
    }
    Ok(())
}

fn r7_product(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k, r) = (i.n, i.extra_int("k"), i.extra("r"));
    let a = blat(&(&(&hi(n) + r) - 1), &(&(&hi(k) + r) - 1))?;
    let b = blat(&(&(&hi(k) + r) - 1), &hi(k))?;
    a.try_mul(&b)
}

fn r7_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k, r) = (i.n, i.extra_int("k"), i.extra("r"));
    Ok(blat(&(&(&hi(n) + r) - 1), &hi(n))?.mul_rat(&bi(n, k)))
}

// binom(2k-1/2, -1/2) = binom(2k-1/2, 2k) = 2^(-4k) binom(4k, 2k)

fn r8_neg_half(i: &Instance) -> Result<ConstExpr, PoleError> {
    blat(&hh(4 * i.n - 1), &hh(-1))
}

fn r8_full_index(i: &Instance) -> Result<ConstExpr, PoleError> {
    blat(&hh(4 * i.n - 1), &hi(2 * i.n))
}

fn r8_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(ce(p2(-4 * i.n) * cb(2 * i.n)))
}

// binom(k, 1/2)

fn r9_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    blat(&hi(i.n), &hh(1))
}

fn r9_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    Ok(ConstExpr::term(-2, 0, p2(2 * i.n + 1) / cb(i.n)))
}

// binom(n-1, 2k-1/2)

fn r10_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.extra_int("k");
    blat(&hi(i.n - 1), &hh(4 * k - 1))
}

fn r10_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k) = (i.n, i.extra_int("k"));
    let coeff = p2(2 * n) / ri(n) * bi(n, 2 * k) / cb(2 * k) / cb(n - 2 * k);
    Ok(ConstExpr::term(-2, 0, coeff))
}

// binom(k+2, 3/2)

fn r11_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    blat(&hi(i.n + 2), &hh(3))
}

fn r11_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.n;
    Ok(ConstExpr::term(-2, 0, ri(16) / ri(3) * p2(2 * k) / cat(k + 1)))
}

// binom(n+1, 2k+1/2)

fn r12_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.extra_int("k");
    blat(&hi(i.n + 1), &hh(4 * k + 1))
}

fn r12_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k) = (i.n, i.extra_int("k"));
    let coeff = p2(2 * n + 2) * ri(n + 1) / (ri(2 * n - 4 * k + 1) * ri(4 * k + 1))
        * bi(n, 2 * k)
        / cb(2 * k)
        / cb(n - 2 * k);
    Ok(ConstExpr::term(-2, 0, coeff))
}

// binom(n-1/2, 2k+2)

fn r13_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.extra_int("k");
    blat(&hh(2 * i.n - 1), &hi(2 * k + 2))
}

fn r13_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k) = (i.n, i.extra_int("k"));
    let coeff = p2(-4 * k) / ri(8) * (ri(2 * n - 4 * k - 1) * ri(2 * n - 4 * k - 3))
        / ri(k + 1)
        * bi(2 * n, 4 * k)
        / bi(n, 2 * k)
        * cat(2 * k);
    Ok(ce(coeff))
}

// binom(1/2, k+2)

fn r14_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    blat(&hh(1), &hi(i.n + 2))
}

fn r14_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.n;
    Ok(ce(sg(k + 1) * p2(-2 * k - 3) * cat(k + 1)))
}

// binom(n-2+1/2, k)

fn r15_pred(i: &Instance) -> DomainCheck {
    let k = i.extra_int("k");
    if k > i.n - 2 {
        return Err(format!("k = {k} exceeds n - 2 = {}", i.n - 2));
    }
    Ok(())
}

fn r15_binom(i: &Instance) -> Result<ConstExpr, PoleError> {
    let k = i.extra_int("k");
    blat(&hh(2 * i.n - 3), &hi(k))
}

fn r15_closed(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k) = (i.n, i.extra_int("k"));
    Ok(ce(p2(-2 * k) * bi(2 * n - 3, 2 * k) * cb(k) / bi(n - 2, k)))
}

// binom(2k+r+s-n, 2k+r) = (-1)^r binom(n-s-1, 2k+r)

fn r16_pred(i: &Instance) -> DomainCheck {
    let s = i.extra("s");
    if s.is_integer() {
        return Err(format!("s = {s} excluded: integer s can cross a Gamma pole"));
    }
    Ok(())
}

fn r16_negated(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k, r, s) = (i.n, i.extra_int("k"), i.extra_int("r"), i.extra("s"));
    let upper = &(&hi(2 * k + r) + s) - n;
    blat(&upper, &hi(2 * k + r))
}

fn r16_reflected(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k, r, s) = (i.n, i.extra_int("k"), i.extra_int("r"), i.extra("s"));
    let upper = &(&hi(n) - s) - 1;
    Ok(blat(&upper, &hi(2 * k + r))?.mul_rat(&sg(r)))
}

// (1+r) / binom(n+r-1, n) = (n+r)(n+r+1)/r / binom(n+r+1, n)

fn r17_pred(i: &Instance) -> DomainCheck {
    let r = i.extra("r");
    if r.is_non_positive_integer() {
        return Err(format!("r = {r} excluded: non-positive integer"));
    }
    Ok(())
}

fn r17_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra("r"));
    let factor = (r + &hi(1)).to_rat();
    Ok(recip(&(&(&hi(n) + r) - 1), &hi(n))?.mul_rat(&factor))
}

fn r17_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, r) = (i.n, i.extra("r"));
    let nr = (&hi(n) + r).to_rat();
    let factor = &nr * (&nr + ri(1)) / r.to_rat();
    Ok(recip(&(&(&hi(n) + r) + 1), &hi(n))?.mul_rat(&factor))
}

// binom(k+r-1, k) / binom(n+r-1, n) = (n+r)/(k+r) binom(n, n+r) / binom(k, k+r)

fn r18_pred(i: &Instance) -> DomainCheck {
    let r = i.extra("r");
    if r.is_integer() {
        return Err(format!(
            "r = {r} excluded: integer r poles Gamma(1-r) or Gamma(r)"
        ));
    }
    Ok(())
}

fn r18_lhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k, r) = (i.n, i.extra_int("k"), i.extra("r"));
    let head = blat(&(&(&hi(k) + r) - 1), &hi(k))?;
    head.try_mul(&recip(&(&(&hi(n) + r) - 1), &hi(n))?)
}

fn r18_rhs(i: &Instance) -> Result<ConstExpr, PoleError> {
    let (n, k, r) = (i.n, i.extra_int("k"), i.extra("r"));
    let factor = (&hi(n) + r).to_rat() / (&hi(k) + r).to_rat();
    let head = blat(&hi(n), &(&hi(n) + r))?;
    head.try_mul(&recip(&hi(k), &(&hi(k) + r))?)
        .map(|v| v.mul_rat(&factor))
}

pub(super) fn entries() -> Vec<IdentityEntry> {
    let k20 = || ParamSpec::n_range(0, 20).named("k");
    let k40 = || ParamSpec::n_range(0, 40).named("k");
    let nk = |n_min: i64| {
        ParamSpec::n_range(n_min, 20)
            .with_extra("k", int_grid(0, 20))
            .with_predicate(pred_k_le_n)
    };
    let n2k = |n_min: i64| {
        ParamSpec::n_range(n_min, 20)
            .with_extra("k", int_grid(0, 10))
            .with_predicate(pred_2k_le_n)
    };
    vec![
        IdentityEntry::new(
            "red-2kplus1-threehalf",
            "binom(2k+1, 3/2) = 4/(3 sqrt(pi)) Gamma(2k+2)/Gamma(2k+1/2) = 4/(3 pi) 2^(4k)/C_2k",
            k20(),
            vec![r1_binom, r1_gamma_ratio, r1_closed],
        ),
        IdentityEntry::new(
            "red-n-kminushalf",
            "binom(n, k-1/2) = Gamma(n+1)/(Gamma(k+1/2) Gamma(n-k+3/2)) \
             = 2^(2n+1)/(pi (2(n-k)+1)) binom(n,k) / (binom(2(n-k),n-k) binom(2k,k))",
            nk(0),
            vec![r2_binom, r2_gamma_ratio, r2_closed],
        ),
        IdentityEntry::new(
            "red-2kminushalf-neg3half",
            "binom(2k-1/2, -3/2) = -2^(-4k-1) C_2k",
            k20(),
            vec![r3_binom, r3_closed],
        ),
        IdentityEntry::new(
            "red-nminus3half-kplus1",
            "binom(n-3/2, k+1) = 2^(-2k)/2 (2(n-k)-1)(2(n-k)-3)/((2n-1)(k+1)) \
             binom(2n,n) binom(n,k) / binom(2(n-k),n-k)",
            nk(0),
            vec![r4_binom, r4_closed],
        ),
        IdentityEntry::new(
            "red-kminushalf-k",
            "binom(k-1/2, k) = 2^(-2k) binom(2k,k)",
            k40(),
            vec![r5_binom, r5_closed],
        ),
        IdentityEntry::new(
            "red-kminushalf-kplus1",
            "binom(k-1/2, k+1) = -C_k / 2^(2k+1)",
            k40(),
            vec![r6_binom, r6_closed],
        ),
        IdentityEntry::new(
            "red-trinomial",
            "binom(n+r-1, k+r-1) binom(k+r-1, k) = binom(n,k) binom(n+r-1, n)",
            ParamSpec::n_range(0, 20)
                .with_extra("k", int_grid(0, 20))
                .with_extra("r", default_grid())
                .with_predicate(r7_pred),
            vec![r7_product, r7_closed],
        ),
        IdentityEntry::new(
            "red-2kminushalf-2k",
            "binom(2k-1/2, -1/2) = binom(2k-1/2, 2k) = 2^(-4k) binom(4k,2k)",
            k20(),
            vec![r8_neg_half, r8_full_index, r8_closed],
        ),
        IdentityEntry::new(
            "red-k-half",
            "binom(k, 1/2) = 2^(2k+1)/pi / binom(2k,k)",
            k40(),
            vec![r9_binom, r9_closed],
        ),
        IdentityEntry::new(
            "red-nminus1-2kminushalf",
            "binom(n-1, 2k-1/2) = 2^(2n)/(n pi) binom(n,2k) / (binom(4k,2k) binom(2(n-2k),n-2k))",
            n2k(1),
            vec![r10_binom, r10_closed],
        ),
        IdentityEntry::new(
            "red-kplus2-threehalf",
            "binom(k+2, 3/2) = 16/(3 pi) 2^(2k)/C_(k+1)",
            k40(),
            vec![r11_binom, r11_closed],
        ),
        IdentityEntry::new(
            "red-nplus1-2kplushalf",
            "binom(n+1, 2k+1/2) = 2^(2n+2)/pi (n+1)/((2n-4k+1)(4k+1)) \
             binom(n,2k) / (binom(4k,2k) binom(2(n-2k),n-2k))",
            n2k(0),
            vec![r12_binom, r12_closed],
        ),
        IdentityEntry::new(
            "red-nminushalf-2kplus2",
            "binom(n-1/2, 2k+2) = 2^(-4k)/8 (2n-4k-1)(2n-4k-3)/(k+1) \
             binom(2n,4k) C_2k / binom(n,2k)",
            n2k(0),
            vec![r13_binom, r13_closed],
        ),
        IdentityEntry::new(
            "red-half-kplus2",
            "binom(1/2, k+2) = (-1)^(k+1) 2^(-2k-3) C_(k+1)",
            k40(),
            vec![r14_binom, r14_closed],
        ),
        IdentityEntry::new(
            "red-nminus2plushalf-k",
            "binom(n-2+1/2, k) = 2^(-2k) binom(2n-3,2k) binom(2k,k) / binom(n-2,k)",
            ParamSpec::n_range(2, 20)
                .with_extra("k", int_grid(0, 18))
                .with_predicate(r15_pred),
            vec![r15_binom, r15_closed],
        ),
        IdentityEntry::new(
            "red-negation-sign",
            "binom(2k+r+s-n, 2k+r) = (-1)^r binom(n-s-1, 2k+r)",
            ParamSpec::n_range(0, 20)
                .with_extra("k", int_grid(0, 8))
                .with_extra("r", int_grid(0, 3))
                .with_extra("s", half_odd_grid())
                .with_predicate(r16_pred),
            vec![r16_negated, r16_reflected],
        ),
        IdentityEntry::new(
            "red-limit-support",
            "(1+r)/binom(n+r-1, n) = (n+r)(n+r+1)/r / binom(n+r+1, n)",
            ParamSpec::n_range(0, 20)
                .with_extra("r", default_grid())
                .with_predicate(r17_pred),
            vec![r17_lhs, r17_rhs],
        ),
        IdentityEntry::new(
            "red-limit-support-ratio",
            "binom(k+r-1,k)/binom(n+r-1,n) = (n+r)/(k+r) binom(n,n+r)/binom(k,k+r)",
            ParamSpec::n_range(0, 20)
                .with_extra("k", int_grid(0, 20))
                .with_extra("r", half_odd_grid())
                .with_predicate(r18_pred),
            vec![r18_lhs, r18_rhs],
        ),
    ]
}
