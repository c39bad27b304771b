//! The alternating binomial transform, its involution, the built-in
//! transform pairs, and evaluators for both transform-theorem shapes plus
//! the central-binomial analogue.

use std::sync::Arc;


use crate::exactnum::{binom_int, pow2, rat_int, sign_pow, ConstExpr, PoleError, Rat};
use crate::sequences::{catalan, central_binomial, harmonic, odd_harmonic};

/// `out[n] = sum_{k=0}^{n} (-1)^k binom(n, k) seq[k]`.
///
/// Applying the transform twice returns the original sequence.
pub fn binomial_transform(seq: &[ConstExpr]) -> Vec<ConstExpr> {
    (0..seq.len())
        .map(|n| {
            let mut acc = ConstExpr::zero();
            for (k, v) in seq.iter().enumerate().take(n + 1) {
                let w = sign_pow(k as i64) * binom_int(n as i64, k as i64);
                acc = acc.add(&v.mul_rat(&w));
            }
            acc
        })
        .collect()
}

type SeqFn = Arc<dyn Fn(u64) -> Result<ConstExpr, PoleError> + Send + Sync>;

/// Two sequences related by the alternating binomial transform:
/// `a(n) = sum_k (-1)^k binom(n, k) alpha(k)` (and conversely, since the
/// transform is an involution).
#[derive(Clone)]
pub struct TransformPair {
    pub name: &'static str,
    a: SeqFn,
    alpha: SeqFn,
    /// What the pair encodes, for reports.
    pub description: &'static str,
}

impl TransformPair {
    pub fn new(
        name: &'static str,
        description: &'static str,
        a: SeqFn,
        alpha: SeqFn,
    ) -> Self {
        TransformPair {
            name,
            a,
            alpha,
            description,
        }
    }

    /// Build a pair from explicit finite sequences; `alpha` is derived by
    /// the transform, so the pair relation holds by construction.
    pub fn from_sequence(name: &'static str, seq: Vec<ConstExpr>) -> Self {
        let alpha_vals = binomial_transform(&seq);
        let a_vals = seq;
        let a_arc: SeqFn = {
            let vals = a_vals;
            Arc::new(move |n| Ok(vals[n as usize].clone()))
        };
        let alpha_arc: SeqFn = {
            let vals = alpha_vals;
            Arc::new(move |n| Ok(vals[n as usize].clone()))
        };
        TransformPair::new(name, "finite sequence pair", a_arc, alpha_arc)
    }

    pub fn a(&self, n: u64) -> Result<ConstExpr, PoleError> {
        (self.a)(n)
    }

    pub fn alpha(&self, n: u64) -> Result<ConstExpr, PoleError> {
        (self.alpha)(n)
    }

    /// Check the defining relation at one index.
    pub fn satisfies_defining_relation(&self, n: u64) -> Result<bool, PoleError> {
        let mut acc = ConstExpr::zero();
        for k in 0..=n {
            let w = sign_pow(k as i64) * binom_int(n as i64, k as i64);
            acc = acc.add(&self.alpha(k)?.mul_rat(&w));
        }
        Ok(acc == self.a(n)?)
    }
}

/// The three built-in pairs:
/// 1. `a_k = 1`, `alpha_k = delta_{k0}`;
/// 2. `a_k = 2^k/(k+1)`, `alpha_k = (1+(-1)^k)/(2(k+1))`;
/// 3. `a_k = 2^k H_k/(k+1)`, `alpha_k = -(1-(-1)^k)/(k+1) O_{(k+1)/2}`.
pub fn builtin_pairs() -> Vec<TransformPair> {
    let delta = TransformPair::new(
        "delta",
        "constant sequence paired with the Kronecker delta",
        Arc::new(|_| Ok(ConstExpr::one())),
        Arc::new(|n| {
            Ok(if n == 0 {
                ConstExpr::one()
            } else {
                ConstExpr::zero()
            })
        }),
    );
    let parity = TransformPair::new(
        "geometric-over-index",
        "a_k = 2^k/(k+1) paired with its even-index survivor",
        Arc::new(|k| Ok(ConstExpr::from_rat(pow2(k as i64) / rat_int(k as i64 + 1)))),
        Arc::new(|k| {
            Ok(if k % 2 == 0 {
                ConstExpr::from_rat(Rat::new(1.into(), (k as i64 + 1).into()))
            } else {
                ConstExpr::zero()
            })
        }),
    );
    let harmonic_pair = TransformPair::new(
        "harmonic-geometric",
        "a_k = 2^k H_k/(k+1) paired with odd-index odd-harmonic values",
        Arc::new(|k| {
            Ok(ConstExpr::from_rat(
                pow2(k as i64) * harmonic(k) / rat_int(k as i64 + 1),
            ))
        }),
        Arc::new(|k| {
            Ok(if k % 2 == 1 {
                let o = odd_harmonic((k + 1) / 2);
                ConstExpr::from_rat(rat_int(-2) * o / rat_int(k as i64 + 1))
            } else {
                ConstExpr::zero()
            })
        }),
    );
    vec![delta, parity, harmonic_pair]
}

/// Both sides of the Catalan transform theorem:
/// `sum_k (-1)^{n-k} binom(n,k) 2^{-k} C_{k+1} a(n-k)
///  = sum_k binom(n,2k) 2^{-2k} C_k alpha(n-2k)`.
pub fn eval_bt1(pair: &TransformPair, n: u64) -> Result<(ConstExpr, ConstExpr), PoleError> {
    let mut lhs = ConstExpr::zero();
    for k in 0..=n {
        let w = sign_pow((n - k) as i64)
            * binom_int(n as i64, k as i64)
            * pow2(-(k as i64))
            * catalan(k + 1);
        lhs = lhs.add(&pair.a(n - k)?.mul_rat(&w));
    }
    let mut rhs = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = binom_int(n as i64, 2 * k as i64) * pow2(-2 * k as i64) * catalan(k);
        rhs = rhs.add(&pair.alpha(n - 2 * k)?.mul_rat(&w));
    }
    Ok((lhs, rhs))
}

/// Both sides of the even/odd-split rearrangement:
/// `sum_k binom(n,2k) 2^{n-2k} C_k a(n-2k)
///  = sum_k binom(n,2k) 2^{2k} C_{n-2k+1} alpha(2k)
///    - sum_{k>=1} binom(n,2k-1) 2^{2k-1} C_{n-2k+2} alpha(2k-1)`.
pub fn eval_bt2(pair: &TransformPair, n: u64) -> Result<(ConstExpr, ConstExpr), PoleError> {
    let mut lhs = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = binom_int(n as i64, 2 * k as i64) * pow2(n as i64 - 2 * k as i64) * catalan(k);
        lhs = lhs.add(&pair.a(n - 2 * k)?.mul_rat(&w));
    }
    let mut rhs = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = binom_int(n as i64, 2 * k as i64) * pow2(2 * k as i64) * catalan(n - 2 * k + 1);
        rhs = rhs.add(&pair.alpha(2 * k)?.mul_rat(&w));
    }
    for k in 1..=n.div_ceil(2) {
        let w = binom_int(n as i64, 2 * k as i64 - 1)
            * pow2(2 * k as i64 - 1)
            * catalan(n + 2 - 2 * k);
        rhs = rhs.sub(&pair.alpha(2 * k - 1)?.mul_rat(&w));
    }
    Ok((lhs, rhs))
}

/// Both sides of the central-binomial analogue of the transform theorem:
/// `sum_k (-1)^{n-k} binom(n,k) 2^{-k} binom(2k,k) a(n-k)
///  = sum_k binom(n,2k) 2^{-2k} binom(2k,k) alpha(n-2k)`.
pub fn eval_knuth_bt(pair: &TransformPair, n: u64) -> Result<(ConstExpr, ConstExpr), PoleError> {
    let mut lhs = ConstExpr::zero();
    for k in 0..=n {
        let w = sign_pow((n - k) as i64)
            * binom_int(n as i64, k as i64)
            * pow2(-(k as i64))
            * central_binomial(k);
        lhs = lhs.add(&pair.a(n - k)?.mul_rat(&w));
    }
    let mut rhs = ConstExpr::zero();
    for k in 0..=n / 2 {
        let w = binom_int(n as i64, 2 * k as i64) * pow2(-2 * k as i64) * central_binomial(k);
        rhs = rhs.add(&pair.alpha(n - 2 * k)?.mul_rat(&w));
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::rng::{SplitMix64, PROPERTY_SEED};

    fn ce_ints(vals: &[i64]) -> Vec<ConstExpr> {
        vals.iter().map(|&v| ConstExpr::from_int(v)).collect()
    }

    #[test]
    fn transform_examples() {
        assert_eq!(
            binomial_transform(&ce_ints(&[1, 1, 1, 1])),
            ce_ints(&[1, 0, 0, 0])
        );
        assert_eq!(
            binomial_transform(&ce_ints(&[1, 2, 4, 8])),
            ce_ints(&[1, -1, 1, -1])
        );
        let twice = binomial_transform(&binomial_transform(&ce_ints(&[1, 2, 4, 8])));
        assert_eq!(twice, ce_ints(&[1, 2, 4, 8]));
    }

    #[test]
    fn involution_on_seeded_random_sequences() {
        let mut rng = SplitMix64::new(PROPERTY_SEED);
        for _ in 0..100 {
            let len = rng.below(32) as usize + 1;
            let seq: Vec<ConstExpr> = (0..len)
                .map(|_| ConstExpr::from_rat(rng.small_rational()))
                .collect();
            let back = binomial_transform(&binomial_transform(&seq));
            assert_eq!(back, seq);
        }
    }

    #[test]
    fn builtin_pair_spot_values() {
        let pairs = builtin_pairs();
        assert_eq!(pairs[1].a(3).unwrap(), ConstExpr::from_int(2));
        assert_eq!(pairs[1].alpha(2).unwrap(), ConstExpr::from_rat(rat(1, 3)));
        assert_eq!(pairs[2].alpha(3).unwrap(), ConstExpr::from_rat(rat(-2, 3)));
        assert_eq!(pairs[0].alpha(0).unwrap(), ConstExpr::one());
        assert_eq!(pairs[0].alpha(5).unwrap(), ConstExpr::zero());
    }

    #[test]
    fn builtin_pairs_satisfy_defining_relation() {
        for pair in builtin_pairs() {
            for n in 0..=40 {
                assert!(
                    pair.satisfies_defining_relation(n).unwrap(),
                    "{} fails at n = {n}",
                    pair.name
                );
            }
        }
    }

    #[test]
    fn bt1_examples() {
        let pairs = builtin_pairs();
        let quarter = ConstExpr::from_rat(rat(1, 4));
        assert_eq!(eval_bt1(&pairs[0], 2).unwrap(), (quarter.clone(), quarter));
        let (l, r) = eval_bt1(&pairs[0], 3).unwrap();
        assert!(l.is_zero() && r.is_zero());
        let sev = ConstExpr::from_rat(rat(7, 12));
        assert_eq!(eval_bt1(&pairs[1], 2).unwrap(), (sev.clone(), sev));
    }

    #[test]
    fn bt2_examples() {
        let pairs = builtin_pairs();
        let v = ConstExpr::from_rat(rat(19, 3));
        assert_eq!(eval_bt2(&pairs[1], 2).unwrap(), (v.clone(), v));
        let (l, r) = eval_bt2(&pairs[0], 1).unwrap();
        assert_eq!(l, r);
        let (l, r) = eval_bt2(&pairs[2], 3).unwrap();
        assert_eq!(l, r);
        assert!(l.is_rational(), "ln2 parts cancel by pair construction");
    }

    #[test]
    fn transform_theorems_hold_for_random_pairs() {
        let mut rng = SplitMix64::new(PROPERTY_SEED);
        for trial in 0..25 {
            let seq: Vec<ConstExpr> = (0..25)
                .map(|_| ConstExpr::from_rat(rng.small_rational()))
                .collect();
            let pair = TransformPair::from_sequence("random", seq);
            for n in 0..=24 {
                let (l, r) = eval_bt1(&pair, n).unwrap();
                assert_eq!(l, r, "catalan form fails: trial {trial}, n = {n}");
                let (l, r) = eval_knuth_bt(&pair, n).unwrap();
                assert_eq!(l, r, "central form fails: trial {trial}, n = {n}");
            }
        }
    }

    #[test]
    fn bt2_holds_for_builtin_pairs() {
        for pair in builtin_pairs() {
            for n in 0..=40 {
                let (l, r) = eval_bt2(&pair, n).unwrap();
                assert_eq!(l, r, "{} fails at n = {n}", pair.name);
            }
        }
    }
}
