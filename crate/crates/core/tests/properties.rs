//! Randomized property coverage for the algebraic kernels, complementing
//! the deterministic sweeps in the self-test suite.

use proptest::prelude::*;

use touchard::exactnum::{
    binom_rational_lower_int, const_arith, rat, ArithOp, ConstExpr, Rat,
};
use touchard::numeric::BigFloat;
use touchard::polynomials::{poly_equal, Poly};
use touchard::transforms::binomial_transform;

fn rational() -> impl Strategy<Value = Rat> {
    (-200i64..=200, 1i64..=60).prop_map(|(n, d)| rat(n, d))
}

/// Constant-field values without an `ln 2` part, where multiplication is
/// total.
fn pi_expr() -> impl Strategy<Value = ConstExpr> {
    prop::collection::vec(((-3i32..=3), rational()), 0..4).prop_map(|terms| {
        let mut acc = ConstExpr::zero();
        for (a, q) in terms {
            acc = acc.add(&ConstExpr::term(a, 0, q));
        }
        acc
    })
}

/// General constant-field values, possibly carrying `ln 2`.
fn full_expr() -> impl Strategy<Value = ConstExpr> {
    (pi_expr(), prop::option::of(rational())).prop_map(|(base, ln2)| match ln2 {
        Some(q) => base.add(&ConstExpr::term(0, 1, q)),
        None => base,
    })
}

proptest! {
    #[test]
    fn constexpr_addition_is_a_commutative_group(a in full_expr(), b in full_expr(), c in full_expr()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.sub(&a), ConstExpr::zero());
        prop_assert_eq!(a.add(&ConstExpr::zero()), a.clone());
        prop_assert!(a.add(&b).is_normal_form());
    }

    #[test]
    fn constexpr_multiplication_is_commutative_and_distributive(
        a in pi_expr(), b in pi_expr(), c in pi_expr()
    ) {
        let ab = a.try_mul(&b).unwrap();
        let ba = b.try_mul(&a).unwrap();
        prop_assert_eq!(&ab, &ba);
        prop_assert!(ab.is_normal_form());
        let left = a.try_mul(&b.add(&c)).unwrap();
        let right = a.try_mul(&b).unwrap().add(&a.try_mul(&c).unwrap());
        prop_assert_eq!(left, right);
        let assoc_l = ab.try_mul(&c).unwrap();
        let assoc_r = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(assoc_l, assoc_r);
    }

    #[test]
    fn constexpr_division_inverts_monomials(a in pi_expr(), e in -3i32..=3, q in rational()) {
        prop_assume!(q != rat(0, 1));
        let m = ConstExpr::term(e, 0, q);
        let quotient = const_arith(&a, ArithOp::Div, &m).unwrap();
        prop_assert_eq!(const_arith(&quotient, ArithOp::Mul, &m).unwrap(), a);
    }

    #[test]
    fn pascal_rule_for_random_rational_upper_index(r in rational(), k in 0i64..=20) {
        let one = Rat::from_integer(1.into());
        let lhs = binom_rational_lower_int(&r, k);
        let rhs = binom_rational_lower_int(&(&r - &one), k - 1)
            + binom_rational_lower_int(&(&r - &one), k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_transform_is_an_involution(values in prop::collection::vec(rational(), 1..24)) {
        let seq: Vec<ConstExpr> = values.into_iter().map(ConstExpr::from_rat).collect();
        prop_assert_eq!(binomial_transform(&binomial_transform(&seq)), seq);
    }

    #[test]
    fn poly_ring_laws(a in prop::collection::vec(rational(), 0..6),
                      b in prop::collection::vec(rational(), 0..6),
                      c in prop::collection::vec(rational(), 0..6)) {
        let p = Poly::from_coeffs(a);
        let q = Poly::from_coeffs(b);
        let r = Poly::from_coeffs(c);
        prop_assert!(poly_equal(&p.mul(&q), &q.mul(&p)));
        prop_assert!(poly_equal(&p.mul(&q.add(&r)), &p.mul(&q).add(&p.mul(&r))));
        prop_assert!(poly_equal(&p.sub(&p), &Poly::zero()));
        // evaluation is a ring homomorphism
        let x = rat(3, 7);
        prop_assert_eq!(p.mul(&q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!(p.add(&q).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn bigfloat_tracks_exact_rational_arithmetic(a in rational(), b in rational()) {
        const P: u32 = 160;
        let fa = BigFloat::from_rat(&a, P);
        let fb = BigFloat::from_rat(&b, P);
        let sum = fa.add(&fb, P);
        let exact_sum = BigFloat::from_rat(&(&a + &b), P);
        // three correctly rounded steps; cancellation bounds the absolute
        // error by the larger input's magnitude, not the sum's
        let diff = sum.sub(&exact_sum, P).abs();
        let scale = fa
            .abs()
            .log2_floor()
            .unwrap_or(0)
            .max(fb.abs().log2_floor().unwrap_or(0))
            .max(exact_sum.abs().log2_floor().unwrap_or(0));
        prop_assert!(diff.below_pow2(scale - P as i64 + 3));
        let prod = fa.mul(&fb, P);
        let exact_prod = BigFloat::from_rat(&(&a * &b), P);
        let diff = prod.sub(&exact_prod, P).abs();
        let scale = exact_prod.abs().log2_floor().unwrap_or(0);
        prop_assert!(diff.below_pow2(scale - P as i64 + 3));
    }
}
