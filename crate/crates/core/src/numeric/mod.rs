//! Arbitrary-precision floating backend: real Gamma and digamma at rational
//! arguments, numeric rendering of exact constant-field values, and
//! tolerance-based verification at non-lattice rational parameters.
//!
//! The backend is tolerance-based, not a rigorous ball arithmetic: every
//! report produced through it states the relative tolerance it used.

mod bigfloat;
mod context;
mod functions;
mod gamma;
mod verify;

pub use bigfloat::BigFloat;
pub use context::{parse_decimal_rat, pow10, NumCtx, NumericConfig};
pub use verify::{verify_instance_numeric, NumericInstance, NumericSideFn};

use crate::exactnum::{ConstExpr, PoleError, Rat};

/// `Gamma(x)` at a rational argument.
pub fn gamma_real(x: &Rat, ctx: &NumCtx) -> Result<BigFloat, PoleError> {
    ctx.gamma(x)
}

/// `psi(x)` at a rational argument.
pub fn digamma_real(x: &Rat, ctx: &NumCtx) -> Result<BigFloat, PoleError> {
    ctx.digamma(x)
}

/// `H_x = psi(x+1) + gamma` at a rational argument.
pub fn harmonic_real(x: &Rat, ctx: &NumCtx) -> Result<BigFloat, PoleError> {
    ctx.harmonic(x)
}

/// Numeric image of an exact constant-field value.
pub fn eval_constexpr(e: &ConstExpr, ctx: &NumCtx) -> BigFloat {
    ctx.eval_constexpr(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int, ConstExpr};
    use crate::rng::{SplitMix64, PROPERTY_SEED};
    use crate::sequences::harmonic;

    fn ctx() -> NumCtx {
        NumCtx::default()
    }

    #[test]
    fn gamma_at_half_matches_sqrt_pi() {
        let c = ctx();
        let g = gamma_real(&rat(1, 2), &c).unwrap();
        assert!(g.to_decimal(30).starts_with("1.77245385090551602729"));
        assert!(c.within_tolerance(&g, c.sqrt_pi()));
    }

    #[test]
    fn gamma_at_integers_is_factorial() {
        let c = ctx();
        let g = gamma_real(&rat_int(5), &c).unwrap();
        assert!(c.within_tolerance(&g, &c.from_rat(&rat_int(24))));
    }

    #[test]
    fn gamma_at_negative_half() {
        let c = ctx();
        let g = gamma_real(&rat(-1, 2), &c).unwrap();
        assert!(g.to_decimal(30).starts_with("-3.54490770181103205459"));
    }

    #[test]
    fn gamma_poles() {
        let c = ctx();
        assert!(gamma_real(&rat_int(0), &c).is_err());
        assert!(gamma_real(&rat_int(-3), &c).is_err());
    }

    #[test]
    fn gamma_recurrence_at_random_rationals() {
        let c = ctx();
        let mut rng = SplitMix64::new(PROPERTY_SEED);
        let four_tol = NumCtx::new(NumericConfig::new(
            256,
            c.config().rel_tolerance.scale2(2),
        )
        .unwrap());
        for _ in 0..50 {
            let x = rng.positive_rational_below(20);
            let lhs = gamma_real(&(&x + rat_int(1)), &c).unwrap();
            let rhs = c.mul(&c.from_rat(&x), &gamma_real(&x, &c).unwrap());
            assert!(
                four_tol.within_tolerance(&lhs, &rhs),
                "recurrence fails at x = {x}"
            );
        }
    }

    #[test]
    fn harmonic_values() {
        let c = ctx();
        let h3 = harmonic_real(&rat_int(3), &c).unwrap();
        assert!(c.within_tolerance(&h3, &c.from_rat(&rat(11, 6))));
        let h_half = harmonic_real(&rat(1, 2), &c).unwrap();
        assert!(h_half.to_decimal(30).starts_with("6.13705638880109381165"));
        let h0 = harmonic_real(&rat_int(0), &c).unwrap();
        assert!(h0.is_zero() || h0.below_pow2(-280));
        assert!(harmonic_real(&rat_int(-1), &c).is_err());
    }

    #[test]
    fn harmonic_matches_exact_up_to_30() {
        let c = ctx();
        for n in 0..=30 {
            let num = harmonic_real(&rat_int(n), &c).unwrap();
            let exact = c.from_rat(&harmonic(n as u64));
            assert!(c.within_tolerance(&num, &exact), "n = {n}");
        }
    }

    #[test]
    fn eval_constexpr_examples() {
        let c = ctx();
        let sp = eval_constexpr(&ConstExpr::sqrt_pi(), &c);
        assert_eq!(&sp.to_decimal(11)[..12], "1.7724538509");
        let two_minus_2ln2 =
            ConstExpr::from_int(2).add(&ConstExpr::term(0, 1, rat_int(-2)));
        let v = eval_constexpr(&two_minus_2ln2, &c);
        assert_eq!(&v.to_decimal(11)[..12], "6.1370563888");
        assert!(eval_constexpr(&ConstExpr::zero(), &c).is_zero());
    }

    #[test]
    fn touchard_numeric_matches_exact_at_n10() {
        let c = ctx();
        let entry = crate::identities::lookup("touchard").unwrap();
        let inst = crate::identities::Instance::n_only(10);
        let exact = entry.lhs(&inst).unwrap();
        let ninst = inst.to_numeric();
        let numeric = (entry.numeric_sides.as_ref().unwrap()[0])(&ninst, &c).unwrap();
        assert!(c.within_tolerance(&c.eval_constexpr(&exact), &numeric));
        let verdict = verify_instance_numeric(entry, &ninst, &c);
        assert_eq!(verdict.outcome, crate::identities::Outcome::Equal);
    }

    #[test]
    fn euler_constant_digits() {
        let c = ctx();
        assert_eq!(&c.euler().to_decimal(21)[..22], "5.77215664901532860607");
    }

    #[test]
    fn constexpr_numeric_image_respects_field_structure() {
        // (q1 + q2 sqrtpi)^2 evaluated two ways agrees numerically.
        let c = ctx();
        let x = ConstExpr::from_rat(rat(3, 7)).add(&ConstExpr::term(1, 0, rat(2, 5)));
        let square = x.try_mul(&x).unwrap();
        let direct = eval_constexpr(&square, &c);
        let via_float = c.mul(&eval_constexpr(&x, &c), &eval_constexpr(&x, &c));
        assert!(c.within_tolerance(&direct, &via_float));
    }
}
