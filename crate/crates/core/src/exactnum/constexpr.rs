//! Exact values in the rational vector space spanned by the monomials
//! `(sqrt pi)^a (ln 2)^b` with integer `a` and `b` in {0, 1}: the closure of
//! every exact evaluation performed by the identity engine.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::error::PoleError;
use super::rational::{rat_int, Rat};

/// Monomial key: exponent of `sqrt pi` and exponent of `ln 2`.
pub type Monomial = (i32, u8);

/// A finite rational combination of admissible monomials, kept in normal
/// form: no zero coefficients are ever stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstExpr {
    terms: BTreeMap<Monomial, Rat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl ConstExpr {
    pub fn zero() -> Self {
        ConstExpr::default()
    }

    pub fn one() -> Self {
        ConstExpr::from_rat(Rat::one())
    }

    pub fn from_rat(q: Rat) -> Self {
        ConstExpr::term(0, 0, q)
    }

    pub fn from_int(n: i64) -> Self {
        ConstExpr::from_rat(rat_int(n))
    }

    /// Single term `q * (sqrt pi)^a * (ln 2)^b`.
    pub fn term(a: i32, b: u8, q: Rat) -> Self {
        assert!(b <= 1, "ln2 exponent must be 0 or 1");
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert((a, b), q);
        }
        ConstExpr { terms }
    }

    pub fn sqrt_pi() -> Self {
        ConstExpr::term(1, 0, Rat::one())
    }

    pub fn ln2() -> Self {
        ConstExpr::term(0, 1, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, a: i32, b: u8) -> Rat {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    /// The `(0,0)` component.
    pub fn rational_part(&self) -> Rat {
        self.coeff(0, 0)
    }

    /// The value as a plain rational, if it is one.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.rational_part())
        } else {
            None
        }
    }

    /// All terms with `b = 1`, i.e. the `ln 2` component as a coefficient
    /// expression.
    pub fn ln2_component(&self) -> ConstExpr {
        ConstExpr {
            terms: self
                .terms
                .iter()
                .filter(|((_, b), _)| *b == 1)
                .map(|(&(a, _), q)| ((a, 0), q.clone()))
                .collect(),
        }
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, Rat>, key: Monomial, q: Rat) {
        if q.is_zero() {
            return;
        }
        match terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &ConstExpr) -> ConstExpr {
        let mut terms = self.terms.clone();
        for (&k, q) in &rhs.terms {
            Self::insert_add(&mut terms, k, q.clone());
        }
        ConstExpr { terms }
    }

    pub fn sub(&self, rhs: &ConstExpr) -> ConstExpr {
        let mut terms = self.terms.clone();
        for (&k, q) in &rhs.terms {
            Self::insert_add(&mut terms, k, -q.clone());
        }
        ConstExpr { terms }
    }

    pub fn neg(&self) -> ConstExpr {
        ConstExpr {
            terms: self.terms.iter().map(|(&k, q)| (k, -q.clone())).collect(),
        }
    }

    /// Scale by a rational; always representable.
    pub fn mul_rat(&self, q: &Rat) -> ConstExpr {
        if q.is_zero() {
            return ConstExpr::zero();
        }
        ConstExpr {
            terms: self.terms.iter().map(|(&k, c)| (k, c * q)).collect(),
        }
    }

    pub fn div_rat(&self, q: &Rat) -> Result<ConstExpr, PoleError> {
        if q.is_zero() {
            return Err(PoleError::division("division by rational zero"));
        }
        Ok(self.mul_rat(&q.recip()))
    }

    /// Exact product. Fails only when a term product would need `(ln 2)^2`,
    /// which lies outside the representable field.
    pub fn try_mul(&self, rhs: &ConstExpr) -> Result<ConstExpr, PoleError> {
        let mut terms = BTreeMap::new();
        for (&(a1, b1), q1) in &self.terms {
            for (&(a2, b2), q2) in &rhs.terms {
                let b = b1 + b2;
                if b > 1 {
                    return Err(PoleError::division("product would create (ln 2)^2"));
                }
                Self::insert_add(&mut terms, (a1 + a2, b), q1 * q2);
            }
        }
        Ok(ConstExpr { terms })
    }

    /// Exact division by a single-monomial expression. Division by zero or by
    /// a multi-term expression is undefined, as is any quotient that would
    /// need a negative `ln 2` exponent.
    pub fn try_div(&self, rhs: &ConstExpr) -> Result<ConstExpr, PoleError> {
        if rhs.terms.len() != 1 {
            return Err(PoleError::division(format!(
                "divisor must be a single monomial, got {rhs}"
            )));
        }
        let (&(a, b), q) = rhs.terms.iter().next().unwrap();
        let mut terms = BTreeMap::new();
        for (&(a1, b1), q1) in &self.terms {
            if b1 < b {
                return Err(PoleError::division("quotient would need (ln 2)^-1"));
            }
            Self::insert_add(&mut terms, (a1 - a, b1 - b), q1 / q);
        }
        Ok(ConstExpr { terms })
    }

    /// Multiplicative inverse of a single-monomial expression.
    pub fn try_recip(&self) -> Result<ConstExpr, PoleError> {
        ConstExpr::one().try_div(self)
    }

    /// Internal consistency check used by tests: normal form stores no zero
    /// coefficients and no ln2 exponent above 1.
    pub fn is_normal_form(&self) -> bool {
        self.terms.values().all(|q| !q.is_zero()) && self.terms.keys().all(|&(_, b)| b <= 1)
    }
}

/// Uniform arithmetic entry point over the constant field.
pub fn const_arith(lhs: &ConstExpr, op: ArithOp, rhs: &ConstExpr) -> Result<ConstExpr, PoleError> {
    match op {
        ArithOp::Add => Ok(lhs.add(rhs)),
        ArithOp::Sub => Ok(lhs.sub(rhs)),
        ArithOp::Mul => lhs.try_mul(rhs),
        ArithOp::Div => lhs.try_div(rhs),
    }
}

impl fmt::Display for ConstExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = q.abs();
            let mut wrote_coeff = false;
            if !mag.is_one() || (a == 0 && b == 0) {
                write!(f, "{mag}")?;
                wrote_coeff = true;
            }
            if a != 0 {
                if wrote_coeff {
                    write!(f, "*")?;
                }
                if a == 1 {
                    write!(f, "sqrtpi")?;
                } else {
                    write!(f, "sqrtpi^{a}")?;
                }
                wrote_coeff = true;
            }
            if b == 1 {
                if wrote_coeff {
                    write!(f, "*")?;
                }
                write!(f, "ln2")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &ConstExpr {
    type Output = ConstExpr;
    fn add(self, rhs: &ConstExpr) -> ConstExpr {
        ConstExpr::add(self, rhs)
    }
}

impl std::ops::Sub for &ConstExpr {
    type Output = ConstExpr;
    fn sub(self, rhs: &ConstExpr) -> ConstExpr {
        ConstExpr::sub(self, rhs)
    }
}

impl std::ops::Neg for &ConstExpr {
    type Output = ConstExpr;
    fn neg(self) -> ConstExpr {
        ConstExpr::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    #[test]
    fn sqrt_pi_exponents_cancel_in_products() {
        let lhs = ConstExpr::term(1, 0, rat(3, 4));
        let rhs = ConstExpr::term(-1, 0, rat_int(2));
        assert_eq!(lhs.try_mul(&rhs).unwrap(), ConstExpr::from_rat(rat(3, 2)));
    }

    #[test]
    fn ln2_terms_cancel_in_sums() {
        let a = ConstExpr::one().add(&ConstExpr::term(0, 1, rat_int(-2)));
        let b = ConstExpr::term(0, 1, rat_int(2));
        assert_eq!(a.add(&b), ConstExpr::one());
    }

    #[test]
    fn monomial_division() {
        let lhs = ConstExpr::term(-2, 0, rat(32, 3));
        let rhs = ConstExpr::term(-2, 0, rat(4, 3));
        assert_eq!(
            const_arith(&lhs, ArithOp::Div, &rhs).unwrap(),
            ConstExpr::from_int(8)
        );
    }

    #[test]
    fn division_by_multi_term_is_undefined() {
        let two_terms = ConstExpr::one().add(&ConstExpr::sqrt_pi());
        assert!(ConstExpr::one().try_div(&two_terms).is_err());
        assert!(ConstExpr::one().try_div(&ConstExpr::zero()).is_err());
    }

    #[test]
    fn ln2_square_is_rejected() {
        let l = ConstExpr::ln2();
        assert!(l.try_mul(&l).is_err());
    }

    #[test]
    fn display_formats() {
        assert_eq!(ConstExpr::zero().to_string(), "0");
        assert_eq!(ConstExpr::term(-2, 0, rat(32, 3)).to_string(), "32/3*sqrtpi^-2");
        let v = ConstExpr::from_int(2).add(&ConstExpr::term(0, 1, rat_int(-2)));
        assert_eq!(v.to_string(), "2 - 2*ln2");
        assert_eq!(ConstExpr::term(1, 0, rat_int(-2)).to_string(), "-2*sqrtpi");
        assert_eq!(ConstExpr::sqrt_pi().to_string(), "sqrtpi");
    }
}
