//! Exact univariate polynomials over the rationals, and the x-dependent
//! master identities verified as coefficient-wise equalities for each n.
//!
//! Since both sides of every master identity have degree at most n,
//! coefficient equality is a complete proof for that n; no sampling is
//! involved anywhere in this module.

use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::{binom_int, pow2, sign_pow, Rat};
use crate::sequences::{catalan, central_binomial};

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`, trailing zeros
/// trimmed, the zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `1 - x`.
    pub fn one_minus_x() -> Self {
        Poly::from_coeffs(vec![Rat::one(), -Rat::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a rational point (Horner).
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// `x^n p(1/x)`: the coefficient reversal of a polynomial of degree at
    /// most `n`, padded to length `n + 1`.
    pub fn reversed(&self, n: usize) -> Poly {
        assert!(
            self.degree().map_or(true, |d| d <= n),
            "degree exceeds reversal length"
        );
        let coeffs = (0..=n).map(|i| self.coeff(n - i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Coefficient-wise equality; trailing zeros are already trimmed so this is
/// structural equality.
pub fn poly_equal(p: &Poly, q: &Poly) -> bool {
    p == q
}

/// The x-dependent identities verified per-n as exact polynomial equalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MasterIdentity {
    /// `sum binom(n,2k) 2^{-2k} C_k (1-x)^{2k}
    ///  = sum binom(n,k) 2^{-k} C_{k+1} (1-x)^k x^{n-k}`
    CatalanMaster,
    /// `sum binom(n,2k) 2^{-2k} C_k x^{n-2k}
    ///  = sum (-1)^{n-k} binom(n,k) 2^{-k} C_{k+1} (1-x)^{n-k}`
    CatalanMasterRecip,
    /// `sum (-1)^{n-k} binom(n,k) 2^{-k} binom(2k,k) (1-x)^{n-k}
    ///  = sum binom(n,2k) 2^{-2k} binom(2k,k) x^{n-2k}`
    KnuthMaster,
    /// `sum (-1)^{n-k} binom(n,k) 2^{-k} binom(2k,k) x^{n-k}
    ///  = sum binom(n,2k) 2^{-2k} binom(2k,k) (1-x)^{n-2k}`
    KnuthMasterVariant,
    /// `sum (-1)^{n-k} binom(n,k) 2^{-k} C_{k+1} x^{n-k}
    ///  = sum binom(n,2k) 2^{-2k} C_k (1-x)^{n-2k}`
    CatalanBtForm,
}

pub const MASTER_IDENTITIES: [MasterIdentity; 5] = [
    MasterIdentity::CatalanMaster,
    MasterIdentity::CatalanMasterRecip,
    MasterIdentity::KnuthMaster,
    MasterIdentity::KnuthMasterVariant,
    MasterIdentity::CatalanBtForm,
];

impl MasterIdentity {
    pub fn id(self) -> &'static str {
        match self {
            MasterIdentity::CatalanMaster => "catalan-master",
            MasterIdentity::CatalanMasterRecip => "catalan-master-recip",
            MasterIdentity::KnuthMaster => "knuth-master",
            MasterIdentity::KnuthMasterVariant => "knuth-master-variant",
            MasterIdentity::CatalanBtForm => "catalan-bt-form",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        MASTER_IDENTITIES.iter().copied().find(|m| m.id() == id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

/// Powers of a base polynomial, built incrementally: `out[k] = base^k`.
fn power_table(base: &Poly, up_to: usize) -> Vec<Poly> {
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(Poly::constant(Rat::one()));
    for _ in 0..up_to {
        let next = table.last().unwrap().mul(base);
        table.push(next);
    }
    table
}

/// Build one side of a master identity as an exact polynomial in x.
pub fn build_master_side(identity: MasterIdentity, side: Side, n: u64) -> Poly {
    let n = n as usize;
    let omx = power_table(&Poly::one_minus_x(), n);
    let xs = power_table(&Poly::x(), n);
    let acc;
    let even_sum = |weight: &dyn Fn(usize) -> Rat, factor: &dyn Fn(usize) -> Poly| {
        let mut acc = Poly::zero();
        for k in 0..=n / 2 {
            let w = weight(k);
            if w.is_zero() {
                continue;
            }
            acc = acc.add(&factor(k).scale(&w));
        }
        acc
    };
    let full_sum = |weight: &dyn Fn(usize) -> Rat, factor: &dyn Fn(usize) -> Poly| {
        let mut acc = Poly::zero();
        for k in 0..=n {
            let w = weight(k);
            if w.is_zero() {
                continue;
            }
            acc = acc.add(&factor(k).scale(&w));
        }
        acc
    };
    match (identity, side) {
        (MasterIdentity::CatalanMaster, Side::Lhs) => {
            acc = even_sum(
                &|k| binom_int(n as i64, 2 * k as i64) * pow2(-2 * k as i64) * catalan(k as u64),
                &|k| omx[2 * k].clone(),
            );
        }
        (MasterIdentity::CatalanMaster, Side::Rhs) => {
            acc = full_sum(
                &|k| binom_int(n as i64, k as i64) * pow2(-(k as i64)) * catalan(k as u64 + 1),
                &|k| omx[k].mul(&xs[n - k]),
            );
        }
        (MasterIdentity::CatalanMasterRecip, Side::Lhs) => {
            acc = even_sum(
                &|k| binom_int(n as i64, 2 * k as i64) * pow2(-2 * k as i64) * catalan(k as u64),
                &|k| xs[n - 2 * k].clone(),
            );
        }
        (MasterIdentity::CatalanMasterRecip, Side::Rhs) => {
            acc = full_sum(
                &|k| {
                    sign_pow((n - k) as i64)
                        * binom_int(n as i64, k as i64)
                        * pow2(-(k as i64))
                        * catalan(k as u64 + 1)
                },
                &|k| omx[n - k].clone(),
            );
        }
        (MasterIdentity::KnuthMaster, Side::Lhs) => {
            acc = full_sum(
                &|k| {
                    sign_pow((n - k) as i64)
                        * binom_int(n as i64, k as i64)
                        * pow2(-(k as i64))
                        * central_binomial(k as u64)
                },
                &|k| omx[n - k].clone(),
            );
        }
        (MasterIdentity::KnuthMaster, Side::Rhs) => {
            acc = even_sum(
                &|k| {
                    binom_int(n as i64, 2 * k as i64)
                        * pow2(-2 * k as i64)
                        * central_binomial(k as u64)
                },
                &|k| xs[n - 2 * k].clone(),
            );
        }
        (MasterIdentity::KnuthMasterVariant, Side::Lhs) => {
            acc = full_sum(
                &|k| {
                    sign_pow((n - k) as i64)
                        * binom_int(n as i64, k as i64)
                        * pow2(-(k as i64))
                        * central_binomial(k as u64)
                },
                &|k| xs[n - k].clone(),
            );
        }
        (MasterIdentity::KnuthMasterVariant, Side::Rhs) => {
            acc = even_sum(
                &|k| {
                    binom_int(n as i64, 2 * k as i64)
                        * pow2(-2 * k as i64)
                        * central_binomial(k as u64)
                },
                &|k| omx[n - 2 * k].clone(),
            );
        }
        (MasterIdentity::CatalanBtForm, Side::Lhs) => {
            acc = full_sum(
                &|k| {
                    sign_pow((n - k) as i64)
                        * binom_int(n as i64, k as i64)
                        * pow2(-(k as i64))
                        * catalan(k as u64 + 1)
                },
                &|k| xs[n - k].clone(),
            );
        }
        (MasterIdentity::CatalanBtForm, Side::Rhs) => {
            acc = even_sum(
                &|k| binom_int(n as i64, 2 * k as i64) * pow2(-2 * k as i64) * catalan(k as u64),
                &|k| omx[n - 2 * k].clone(),
            );
        }
    }
    acc
}

/// One side of the ascending-powers rearrangement of the Catalan identity:
/// `sum (-1)^k binom(n,k) 2^{-k} C_{k+1} x^k
/// = sum binom(n,2k) 2^{-2k} C_k x^{2k} (1-x)^{n-2k}`.
/// Related to [`MasterIdentity::CatalanBtForm`] by coefficient reversal.
pub fn catalan_ascending_side(side: Side, n: u64) -> Poly {
    let n = n as usize;
    let omx = power_table(&Poly::one_minus_x(), n);
    let xs = power_table(&Poly::x(), n);
    let mut acc = Poly::zero();
    match side {
        Side::Lhs => {
            for k in 0..=n {
                let w = sign_pow(k as i64)
                    * binom_int(n as i64, k as i64)
                    * pow2(-(k as i64))
                    * catalan(k as u64 + 1);
                acc = acc.add(&xs[k].scale(&w));
            }
        }
        Side::Rhs => {
            for k in 0..=n / 2 {
                let w = binom_int(n as i64, 2 * k as i64)
                    * pow2(-2 * k as i64)
                    * catalan(k as u64);
                acc = acc.add(&xs[2 * k].mul(&omx[n - 2 * k]).scale(&w));
            }
        }
    }
    acc
}

/// One side of the ascending-powers rearrangement of the central-binomial
/// identity: `sum (-1)^k binom(n,k) 2^{-k} binom(2k,k) x^k
/// = sum binom(n,2k) 2^{-2k} binom(2k,k) x^{2k} (1-x)^{n-2k}`.
/// Related to [`MasterIdentity::KnuthMasterVariant`] by coefficient reversal.
pub fn knuth_ascending_side(side: Side, n: u64) -> Poly {
    let n = n as usize;
    let omx = power_table(&Poly::one_minus_x(), n);
    let xs = power_table(&Poly::x(), n);
    let mut acc = Poly::zero();
    match side {
        Side::Lhs => {
            for k in 0..=n {
                let w = sign_pow(k as i64)
                    * binom_int(n as i64, k as i64)
                    * pow2(-(k as i64))
                    * central_binomial(k as u64);
                acc = acc.add(&xs[k].scale(&w));
            }
        }
        Side::Rhs => {
            for k in 0..=n / 2 {
                let w = binom_int(n as i64, 2 * k as i64)
                    * pow2(-2 * k as i64)
                    * central_binomial(k as u64);
                acc = acc.add(&xs[2 * k].mul(&omx[n - 2 * k]).scale(&w));
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    #[test]
    fn poly_arith_examples() {
        assert_eq!(
            Poly::one_minus_x().pow(2).coeffs(),
            &[rat_int(1), rat_int(-2), rat_int(1)]
        );
        assert_eq!(
            Poly::x().mul(&Poly::one_minus_x()).coeffs(),
            &[rat_int(0), rat_int(1), rat_int(-1)]
        );
        let one_plus_x = Poly::from_coeffs(vec![rat_int(1), rat_int(1)]);
        assert_eq!(
            one_plus_x.pow(3).coeffs(),
            &[rat_int(1), rat_int(3), rat_int(3), rat_int(1)]
        );
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Poly::from_coeffs(vec![rat_int(1), rat_int(2)]);
        let q = Poly::from_coeffs(vec![rat_int(1), rat_int(2), rat_int(0)]);
        assert!(poly_equal(&p, &q));
        assert!(Poly::from_coeffs(vec![rat_int(0)]).is_zero());
    }

    #[test]
    fn catalan_master_coefficients_at_n2() {
        let expected = [rat(5, 4), rat(-1, 2), rat(1, 4)];
        let lhs = build_master_side(MasterIdentity::CatalanMaster, Side::Lhs, 2);
        let rhs = build_master_side(MasterIdentity::CatalanMaster, Side::Rhs, 2);
        assert_eq!(lhs.coeffs(), &expected);
        assert_eq!(rhs.coeffs(), &expected);
    }

    #[test]
    fn knuth_master_base_case() {
        let lhs = build_master_side(MasterIdentity::KnuthMaster, Side::Lhs, 0);
        assert_eq!(lhs.coeffs(), &[rat_int(1)]);
    }

    #[test]
    fn all_master_identities_hold_up_to_40() {
        for &id in &MASTER_IDENTITIES {
            for n in 0..=40 {
                let lhs = build_master_side(id, Side::Lhs, n);
                let rhs = build_master_side(id, Side::Rhs, n);
                assert!(poly_equal(&lhs, &rhs), "{} fails at n = {n}", id.id());
            }
        }
    }

    #[test]
    fn ascending_form_holds_and_reverses_onto_variant() {
        for n in 0..=20u64 {
            let lhs = knuth_ascending_side(Side::Lhs, n);
            let rhs = knuth_ascending_side(Side::Rhs, n);
            assert!(poly_equal(&lhs, &rhs), "ascending form fails at n = {n}");
            // x^n f(1/x) carries the variant onto the ascending form, up to
            // the shared sign (-1)^n.
            let sign = sign_pow(n as i64);
            for side in [Side::Lhs, Side::Rhs] {
                let variant = build_master_side(MasterIdentity::KnuthMasterVariant, side, n);
                let reversed = variant.reversed(n as usize).scale(&sign);
                let ascending = knuth_ascending_side(side, n);
                assert!(
                    poly_equal(&reversed, &ascending),
                    "reversal map fails at n = {n}"
                );
            }
        }
    }

    #[test]
    fn catalan_ascending_form_holds_and_reverses_onto_bt_form() {
        for n in 0..=20u64 {
            let lhs = catalan_ascending_side(Side::Lhs, n);
            let rhs = catalan_ascending_side(Side::Rhs, n);
            assert!(poly_equal(&lhs, &rhs), "ascending form fails at n = {n}");
            let sign = sign_pow(n as i64);
            for side in [Side::Lhs, Side::Rhs] {
                let bt_form = build_master_side(MasterIdentity::CatalanBtForm, side, n);
                let reversed = bt_form.reversed(n as usize).scale(&sign);
                assert!(
                    poly_equal(&reversed, &catalan_ascending_side(side, n)),
                    "reversal map fails at n = {n}"
                );
            }
        }
    }

    #[test]
    fn variant_is_master_composed_with_one_minus_x() {
        for n in 0..=20u64 {
            for side in [Side::Lhs, Side::Rhs] {
                let master = build_master_side(MasterIdentity::KnuthMaster, side, n);
                let variant = build_master_side(MasterIdentity::KnuthMasterVariant, side, n);
                assert!(
                    poly_equal(&master.compose(&Poly::one_minus_x()), &variant),
                    "substitution map fails at n = {n}"
                );
            }
        }
    }

    #[test]
    fn master_at_zero_gives_scaled_catalan_successor() {
        for n in 0..=40u64 {
            let lhs = build_master_side(MasterIdentity::CatalanMaster, Side::Lhs, n);
            let expected = pow2(-(n as i64)) * catalan(n + 1);
            assert_eq!(lhs.eval(&Rat::zero()), expected, "n = {n}");
        }
    }
}
