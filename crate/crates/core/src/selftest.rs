//! The property suite behind the `selftest` command: every module invariant
//! plus the default catalog sweep, reported one line per check.
//!
//! The acceptance tests and the CLI share these checks, so there is exactly
//! one place that defines what "everything passes" means.

use crate::exactnum::{
    binom_lattice, binom_rational_lower_int, gamma_half, limit_rewrite_s0, pow2, rat_int,
    ConstExpr, HalfInt, Rat,
};
use crate::identities::{
    list_catalog, lookup, verify_instance, verify_range, Instance, Outcome, Overrides,
};
use crate::numeric::{gamma_real, harmonic_real, NumCtx};
use crate::polynomials::{
    build_master_side, catalan_ascending_side, knuth_ascending_side, poly_equal, MasterIdentity,
    Poly, Side, MASTER_IDENTITIES,
};
use crate::rng::{SplitMix64, PROPERTY_SEED};
use crate::sequences::{
    catalan, harmonic, harmonic_ext, odd_harmonic, stirling2, stirling2_oracle, stirling_gf_check,
};
use crate::transforms::{binomial_transform, builtin_pairs, eval_bt1, eval_knuth_bt, TransformPair};

use num_traits::One;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            passed: false,
            detail: detail.into(),
        }
    }
}

fn check(name: &'static str, run: impl FnOnce() -> Result<String, String>) -> CheckResult {
    match run() {
        Ok(d) => CheckResult::pass(name, d),
        Err(d) => CheckResult::fail(name, d),
    }
}

fn hh(n: i64) -> HalfInt {
    HalfInt::half(n)
}

fn gamma_recurrence() -> Result<String, String> {
    let mut checked = 0;
    for d in -19..=19 {
        let z = hh(d);
        if z.is_non_positive_integer() {
            continue;
        }
        let stepped = gamma_half(&z.succ()).map_err(|e| e.to_string())?;
        let direct = gamma_half(&z).map_err(|e| e.to_string())?.mul_rat(&z.to_rat());
        if stepped != direct {
            return Err(format!("recurrence fails at z = {z}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} lattice points"))
}

fn gamma_closed_forms() -> Result<String, String> {
    for z in 0..=12i64 {
        let dup = gamma_half(&hh(2 * z + 1)).map_err(|e| e.to_string())?;
        let dup_expect = ConstExpr::term(
            1,
            0,
            pow2(-2 * z)
                * crate::exactnum::binom_int(2 * z, z)
                * Rat::from_integer(crate::exactnum::factorial(z as u64)),
        );
        if dup != dup_expect {
            return Err(format!("duplication form fails at z = {z}"));
        }
        let refl = gamma_half(&hh(1 - 2 * z)).map_err(|e| e.to_string())?;
        let sign = if z % 2 == 0 { Rat::one() } else { -Rat::one() };
        let refl_expect = ConstExpr::term(
            1,
            0,
            sign * pow2(2 * z)
                / crate::exactnum::binom_int(2 * z, z)
                / Rat::from_integer(crate::exactnum::factorial(z as u64)),
        );
        if refl != refl_expect {
            return Err(format!("reflection form fails at z = {z}"));
        }
    }
    Ok("z in [0, 12], both closed forms".to_string())
}

fn binom_lattice_properties() -> Result<String, String> {
    let mut checked = 0;
    for rd in -7..=10 {
        for sd in -7..=10 {
            let r = hh(rd);
            let s = hh(sd);
            if let (Ok(a), Ok(b)) = (binom_lattice(&r, &s), binom_lattice(&r, &(&r - &s))) {
                if a != b {
                    return Err(format!("symmetry fails at r = {r}, s = {s}"));
                }
                checked += 1;
            }
        }
    }
    for rd in -5..=10 {
        let r = hh(rd);
        if r.is_negative_integer() {
            continue;
        }
        for s in 0..=6i64 {
            let expect = binom_rational_lower_int(&r.to_rat(), s);
            let got = binom_lattice(&r, &HalfInt::int(s)).map_err(|e| e.to_string())?;
            if got != ConstExpr::from_rat(expect) {
                return Err(format!("regime consistency fails at r = {r}, s = {s}"));
            }
        }
    }
    Ok(format!("{checked} symmetric pairs + integer-lower-index agreement"))
}

fn pascal_rule_random() -> Result<String, String> {
    let mut rng = SplitMix64::new(PROPERTY_SEED ^ 0x1);
    for _ in 0..40 {
        let r = rng.small_rational();
        for k in 0..=20 {
            let lhs = binom_rational_lower_int(&r, k);
            let one = Rat::one();
            let rhs = binom_rational_lower_int(&(&r - &one), k - 1)
                + binom_rational_lower_int(&(&r - &one), k);
            if lhs != rhs {
                return Err(format!("Pascal rule fails at r = {r}, k = {k}"));
            }
        }
    }
    Ok("40 random rational upper indices, k <= 20".to_string())
}

fn stirling_oracle_agreement() -> Result<String, String> {
    for m in 0..=40 {
        for n in 0..=40 {
            if stirling2(m, n) != stirling2_oracle(m, n) {
                return Err(format!("explicit formula disagrees with recurrence at ({m}, {n})"));
            }
        }
    }
    Ok("m, n in [0, 40]".to_string())
}

fn stirling_gf() -> Result<String, String> {
    for n in 0..=25 {
        for m in 0..=25 {
            let (lhs, rhs) = stirling_gf_check(n, m);
            if lhs != rhs {
                return Err(format!("generating-function identity fails at n = {n}, m = {m}"));
            }
        }
    }
    Ok("n, m in [0, 25]".to_string())
}

fn catalan_ballot() -> Result<String, String> {
    for k in 0..=40i64 {
        let expect = crate::exactnum::binom_int(2 * k, k) - crate::exactnum::binom_int(2 * k, k + 1);
        if catalan(k as u64) != expect || !catalan(k as u64).is_integer() {
            return Err(format!("ballot form fails at k = {k}"));
        }
    }
    Ok("k <= 40, integral and equal to the ballot difference".to_string())
}

fn half_harmonic_theorem() -> Result<String, String> {
    for n in 1..=30i64 {
        let lhs = harmonic_ext(&hh(2 * n - 1)).map_err(|e| e.to_string())?;
        let rhs = ConstExpr::from_rat(rat_int(2) * odd_harmonic(n as u64))
            .add(&ConstExpr::term(0, 1, rat_int(-2)));
        if lhs != rhs {
            return Err(format!("half-integer harmonic form fails at n = {n}"));
        }
    }
    Ok("n in [1, 30]".to_string())
}

fn polynomial_masters() -> Result<String, String> {
    for &id in &MASTER_IDENTITIES {
        for n in 0..=40 {
            let lhs = build_master_side(id, Side::Lhs, n);
            let rhs = build_master_side(id, Side::Rhs, n);
            if !poly_equal(&lhs, &rhs) {
                return Err(format!("{} fails at n = {n}", id.id()));
            }
        }
    }
    Ok("5 identities, n in [0, 40], exact coefficients".to_string())
}

fn polynomial_substitutions() -> Result<String, String> {
    for n in 0..=20u64 {
        for side in [Side::Lhs, Side::Rhs] {
            let master = build_master_side(MasterIdentity::KnuthMaster, side, n);
            let variant = build_master_side(MasterIdentity::KnuthMasterVariant, side, n);
            if !poly_equal(&master.compose(&Poly::one_minus_x()), &variant) {
                return Err(format!("1-x substitution fails at n = {n}"));
            }
            let sign = crate::exactnum::sign_pow(n as i64);
            let reversed = variant.reversed(n as usize).scale(&sign);
            if !poly_equal(&reversed, &knuth_ascending_side(side, n)) {
                return Err(format!("reversal substitution fails at n = {n}"));
            }
            let bt_form = build_master_side(MasterIdentity::CatalanBtForm, side, n);
            let reversed = bt_form.reversed(n as usize).scale(&sign);
            if !poly_equal(&reversed, &catalan_ascending_side(side, n)) {
                return Err(format!("Catalan reversal fails at n = {n}"));
            }
        }
    }
    Ok("both variation maps plus the Catalan reversal, n in [0, 20]".to_string())
}

fn polynomial_x0_crosscheck() -> Result<String, String> {
    let touchard = lookup("touchard").map_err(|e| e.to_string())?;
    for n in 0..=40 {
        let at_zero = build_master_side(MasterIdentity::CatalanMaster, Side::Lhs, n)
            .eval(&Rat::from_integer(0.into()));
        let inst = Instance::n_only(n as i64);
        let registry = touchard
            .rhs(&inst)
            .map_err(|e| e.to_string())?
            .as_rat()
            .expect("rational");
        if at_zero != pow2(-(n as i64)) * registry {
            return Err(format!("x = 0 cross-check fails at n = {n}"));
        }
    }
    Ok("n in [0, 40] against the registry entry".to_string())
}

fn transform_involution() -> Result<String, String> {
    let mut rng = SplitMix64::new(PROPERTY_SEED);
    for trial in 0..100 {
        let len = rng.below(32) as usize + 1;
        let seq: Vec<ConstExpr> = (0..len)
            .map(|_| ConstExpr::from_rat(rng.small_rational()))
            .collect();
        if binomial_transform(&binomial_transform(&seq)) != seq {
            return Err(format!("involution fails on sequence {trial}"));
        }
    }
    Ok("100 seeded sequences, length <= 32".to_string())
}

fn builtin_pair_relations() -> Result<String, String> {
    for pair in builtin_pairs() {
        for n in 0..=40 {
            if !pair
                .satisfies_defining_relation(n)
                .map_err(|e| e.to_string())?
            {
                return Err(format!("pair {} fails its relation at n = {n}", pair.name));
            }
        }
    }
    Ok("3 built-in pairs, n <= 40".to_string())
}

fn random_pair_theorems() -> Result<String, String> {
    let mut rng = SplitMix64::new(PROPERTY_SEED);
    for trial in 0..25 {
        let seq: Vec<ConstExpr> = (0..25)
            .map(|_| ConstExpr::from_rat(rng.small_rational()))
            .collect();
        let pair = TransformPair::from_sequence("random", seq);
        for n in 0..=24 {
            let (l, r) = eval_bt1(&pair, n).map_err(|e| e.to_string())?;
            if l != r {
                return Err(format!("Catalan transform theorem fails: trial {trial}, n = {n}"));
            }
            let (l, r) = eval_knuth_bt(&pair, n).map_err(|e| e.to_string())?;
            if l != r {
                return Err(format!("central transform theorem fails: trial {trial}, n = {n}"));
            }
        }
    }
    Ok("25 seeded pairs, n <= 24, both theorem shapes".to_string())
}

fn catalog_sweep() -> Result<String, String> {
    let mut equal = 0;
    let mut skipped = 0;
    for entry in list_catalog() {
        let report = verify_range(entry, &Overrides::default());
        if !report.passed() {
            let bad = report
                .verdicts
                .iter()
                .find(|v| v.is_failure())
                .map(|v| format!("{:?} -> {:?}", v.params, v.outcome))
                .unwrap_or_default();
            return Err(format!("{} failed: {bad}", entry.id));
        }
        equal += report.counts.equal;
        skipped += report.counts.skipped;
    }
    Ok(format!(
        "{} identities, {equal} instances equal, {skipped} skipped by predicate, 0 unequal, 0 predicate-gap",
        list_catalog().len()
    ))
}

fn limit_coherence_s0() -> Result<String, String> {
    // At s = 0 only the k = n term of the right side survives, carrying the
    // limit value of s / binom(n+r-1, n+r-s); with that rewrite both sides
    // reduce to the base identity scaled by 2^-n.
    let r = HalfInt::int(1);
    for n in 0..=40i64 {
        let mut lhs = Rat::from_integer(0.into());
        for k in 0..=n / 2 {
            lhs += crate::exactnum::binom_int(n, 2 * k) * pow2(-2 * k) * catalan(k as u64);
        }
        let limit = limit_rewrite_s0(&(&HalfInt::int(n) + &r));
        let rhs = limit
            .mul_rat(&(pow2(-n) * catalan(n as u64 + 1)))
            .mul_rat(&(&HalfInt::int(n) + &r).to_rat().recip());
        if ConstExpr::from_rat(lhs.clone()) != rhs {
            return Err(format!("limit rewrite fails at n = {n}"));
        }
        if lhs != pow2(-n) * catalan(n as u64 + 1) {
            return Err(format!("scaled base value fails at n = {n}"));
        }
    }
    Ok("n in [0, 40] through the s -> 0 rewrite".to_string())
}

fn specialization_coherence() -> Result<String, String> {
    let gen = lookup("gen-touchard").map_err(|e| e.to_string())?;
    let special = lookup("prop-2k-plus-1").map_err(|e| e.to_string())?;
    for n in 0..=40i64 {
        let inst = Instance {
            n,
            extras: vec![("r", HalfInt::int(1)), ("s", HalfInt::int(1))],
        };
        let plain = Instance::n_only(n);
        let g_l = gen.lhs(&inst).map_err(|e| e.to_string())?;
        let g_r = gen.rhs(&inst).map_err(|e| e.to_string())?;
        let s_l = special.lhs(&plain).map_err(|e| e.to_string())?;
        let s_r = special.rhs(&plain).map_err(|e| e.to_string())?;
        if g_l != s_l || g_r != s_r {
            return Err(format!("r = s = 1 specialization mismatch at n = {n}"));
        }
    }
    Ok("instance-for-instance at r = s = 1, n in [0, 40]".to_string())
}

fn numeric_gamma_recurrence(ctx: &NumCtx) -> Result<String, String> {
    let mut rng = SplitMix64::new(PROPERTY_SEED ^ 0x2);
    let bound = ctx.config().rel_tolerance.scale2(2);
    for _ in 0..50 {
        let x = rng.positive_rational_below(20);
        let lhs = gamma_real(&(&x + rat_int(1)), ctx).map_err(|e| e.to_string())?;
        let rhs = ctx.mul(&ctx.from_rat(&x), &gamma_real(&x, ctx).map_err(|e| e.to_string())?);
        let diff = ctx.sub(&lhs, &rhs).abs();
        let mut scale = ctx.one();
        if lhs.abs().cmp_signed(&scale) == std::cmp::Ordering::Greater {
            scale = lhs.abs();
        }
        let limit = ctx.mul(&bound, &scale);
        if diff.cmp_signed(&limit) == std::cmp::Ordering::Greater {
            return Err(format!("recurrence out of tolerance at x = {x}"));
        }
    }
    Ok("50 seeded rationals in (0, 20), within 4x tolerance".to_string())
}

fn numeric_harmonic_agreement(ctx: &NumCtx) -> Result<String, String> {
    for n in 0..=30 {
        let num = harmonic_real(&rat_int(n), ctx).map_err(|e| e.to_string())?;
        let exact = ctx.from_rat(&harmonic(n as u64));
        if !ctx.within_tolerance(&num, &exact) {
            return Err(format!("harmonic mismatch at n = {n}"));
        }
    }
    Ok("n <= 30 against exact values".to_string())
}

/// Entries with a numeric backend, checked on lattice instances against the
/// exact evaluation.
fn numeric_backend_agreement(ctx: &NumCtx) -> Result<String, String> {
    let ids = ["gen-touchard", "knuth-gen", "mzx3fur"];
    let mut checked = 0;
    for id in ids {
        let entry = lookup(id).map_err(|e| e.to_string())?;
        let overrides = Overrides {
            n_max: Some(12),
            ..Default::default()
        };
        for inst in crate::identities::instances(entry, &overrides) {
            if (entry.params.predicate)(&inst).is_err() {
                continue;
            }
            let exact = verify_instance(entry, &inst);
            if exact.outcome != Outcome::Equal {
                return Err(format!("{id}: exact verdict not Equal at {:?}", inst));
            }
            let ninst = inst.to_numeric();
            let numeric = crate::numeric::verify_instance_numeric(entry, &ninst, ctx);
            if numeric.outcome != Outcome::Equal {
                return Err(format!("{id}: numeric verdict differs at {:?}", inst));
            }
            // The numeric image of the exact value must agree with the
            // numeric evaluation path itself.
            let exact_lhs = entry.lhs(&inst).map_err(|e| e.to_string())?;
            let num_lhs = (entry.numeric_sides.as_ref().unwrap()[0])(&ninst, ctx)
                .map_err(|e| e.to_string())?;
            if !ctx.within_tolerance(&ctx.eval_constexpr(&exact_lhs), &num_lhs) {
                return Err(format!("{id}: cross-backend value drift at {:?}", inst));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} lattice instances across {} entries", ids.len()))
}

/// Ten non-lattice rational parameter points for each numeric-capable
/// generalization.
pub fn nonlattice_points() -> Vec<(Rat, Rat)> {
    [
        (1, 3, 2, 5),
        (3, 7, 1, 3),
        (2, 7, 3, 5),
        (5, 3, 1, 7),
        (1, 6, 5, 7),
        (4, 9, 2, 3),
        (7, 5, 2, 9),
        (1, 8, 3, 8),
        (9, 4, 1, 5),
        (11, 6, 7, 6),
    ]
    .into_iter()
    .map(|(a, b, c, d)| (crate::exactnum::rat(a, b), crate::exactnum::rat(c, d)))
    .collect()
}

fn numeric_nonlattice(ctx: &NumCtx) -> Result<String, String> {
    let ids = ["gen-touchard", "knuth-gen", "mzx3fur"];
    let points = nonlattice_points();
    let mut checked = 0;
    for id in ids {
        let entry = lookup(id).map_err(|e| e.to_string())?;
        for (r, s) in &points {
            for n in 0..=12 {
                let inst = crate::numeric::NumericInstance {
                    n,
                    extras: vec![("r", r.clone()), ("s", s.clone())],
                };
                let verdict = crate::numeric::verify_instance_numeric(entry, &inst, ctx);
                if verdict.outcome != Outcome::Equal {
                    return Err(format!(
                        "{id} fails at n = {n}, r = {r}, s = {s}: {:?}",
                        verdict.outcome
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} instances: 10 points x 3 identities x n <= 12"
    ))
}

/// Run every check; the numeric context is built once at the configured
/// default precision.
pub fn run_all() -> Vec<CheckResult> {
    let ctx = NumCtx::default();
    vec![
        check("exactnum/gamma-recurrence", gamma_recurrence),
        check("exactnum/gamma-closed-forms", gamma_closed_forms),
        check("exactnum/binomial-lattice", binom_lattice_properties),
        check("exactnum/pascal-rule", pascal_rule_random),
        check("sequences/stirling-oracle", stirling_oracle_agreement),
        check("sequences/stirling-generating-function", stirling_gf),
        check("sequences/catalan-ballot", catalan_ballot),
        check("sequences/half-integer-harmonic", half_harmonic_theorem),
        check("polynomials/master-identities", polynomial_masters),
        check("polynomials/variation-substitutions", polynomial_substitutions),
        check("polynomials/x0-crosscheck", polynomial_x0_crosscheck),
        check("transforms/involution", transform_involution),
        check("transforms/builtin-pairs", builtin_pair_relations),
        check("transforms/random-pair-theorems", random_pair_theorems),
        check("identities/limit-coherence-s0", limit_coherence_s0),
        check("identities/specialization-r1s1", specialization_coherence),
        check("identities/catalog-sweep", catalog_sweep),
        check("numeric/gamma-recurrence", || numeric_gamma_recurrence(&ctx)),
        check("numeric/harmonic-agreement", || {
            numeric_harmonic_agreement(&ctx)
        }),
        check("numeric/backend-agreement", || {
            numeric_backend_agreement(&ctx)
        }),
        check("numeric/non-lattice-points", || numeric_nonlattice(&ctx)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_selftest_check_passes() {
        for result in run_all() {
            assert!(result.passed, "{}: {}", result.name, result.detail);
        }
    }
}
