//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured evidence. Run with
//! `cargo test -p touchard-cli --test acceptance` (add `-- --nocapture`
//! to see the evidence lines).

use std::process::Command;
use std::time::Instant;

use touchard::exactnum::{rat, rat_int, ConstExpr, HalfInt};
use touchard::identities::{
    list_catalog, lookup, verify_instance, verify_range, Instance, Outcome, Overrides,
};
use touchard::numeric::{pow10, NumCtx, NumericConfig, NumericInstance};
use touchard::polynomials::{
    build_master_side, poly_equal, MasterIdentity, Side, MASTER_IDENTITIES,
};
use touchard::rng::{SplitMix64, PROPERTY_SEED};
use touchard::selftest::nonlattice_points;
use touchard::sequences::{
    catalan, harmonic_ext, odd_harmonic, stirling2, stirling2_oracle, stirling_gf_check,
};
use touchard::transforms::{binomial_transform, builtin_pairs, eval_bt1, TransformPair};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_touchard"))
}

#[test]
fn criterion_1_catalog_sweep_is_clean_and_fast() {
    let start = Instant::now();
    let mut total_equal = 0u64;
    for entry in list_catalog() {
        let report = verify_range(entry, &Overrides::default());
        assert_eq!(
            report.counts.unequal, 0,
            "{} has unequal instances",
            entry.id
        );
        assert_eq!(
            report.counts.predicate_gap, 0,
            "{} has predicate gaps",
            entry.id
        );
        total_equal += report.counts.equal;
        // Documented grids: two-parameter identities reach n = 20 on the
        // half-integer grid; single-parameter ones reach n = 40 except the
        // few whose derivations bound the range.
        if entry
            .params
            .extras
            .iter()
            .any(|e| e.name == "r" || e.name == "s")
        {
            assert!(entry.params.n_max >= 20, "{} grid too small", entry.id);
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "catalog sweep took {elapsed:?}, budget is 60 s"
    );
    println!(
        "criterion 1: PASS: {} identities, {total_equal} equal instances, 0 unequal, 0 predicate-gap, {:.1} s",
        list_catalog().len(),
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_2_touchard_base_case() {
    let entry = lookup("touchard").unwrap();
    let report = verify_range(entry, &Overrides::default());
    assert_eq!(report.counts.equal, 41);
    assert_eq!(report.counts.total(), 41);
    let inst = Instance::n_only(4);
    assert_eq!(entry.lhs(&inst).unwrap(), ConstExpr::from_int(42));
    assert_eq!(entry.rhs(&inst).unwrap(), ConstExpr::from_int(42));
    assert_eq!(catalan(5), rat_int(42));
    println!("criterion 2: PASS: 41/41 equal over n in [0, 40]; n = 4 gives 42 on both sides");
}

#[test]
fn criterion_3_polynomial_masters() {
    for &id in &MASTER_IDENTITIES {
        for n in 0..=40 {
            let lhs = build_master_side(id, Side::Lhs, n);
            let rhs = build_master_side(id, Side::Rhs, n);
            assert!(poly_equal(&lhs, &rhs), "{} at n = {n}", id.id());
        }
    }
    let expected = [rat(5, 4), rat(-1, 2), rat(1, 4)];
    let lhs = build_master_side(MasterIdentity::CatalanMaster, Side::Lhs, 2);
    let rhs = build_master_side(MasterIdentity::CatalanMaster, Side::Rhs, 2);
    assert_eq!(lhs.coeffs(), &expected);
    assert_eq!(rhs.coeffs(), &expected);
    println!(
        "criterion 3: PASS: 5 master identities coefficient-equal for n <= 40; n = 2 spot check [5/4, -1/2, 1/4]"
    );
}

#[test]
fn criterion_4_limit_coherence() {
    use touchard::exactnum::{binom_int, limit_rewrite_s0, pow2};
    // s -> 0: with the limit value substituted for the surviving term, both
    // sides of the generalization collapse onto the base identity.
    let r = HalfInt::int(1);
    for n in 0..=40i64 {
        let mut lhs = rat_int(0);
        for k in 0..=n / 2 {
            lhs += binom_int(n, 2 * k) * pow2(-2 * k) * catalan(k as u64);
        }
        let limit = limit_rewrite_s0(&(&HalfInt::int(n) + &r));
        let rhs = limit
            .mul_rat(&(pow2(-n) * catalan(n as u64 + 1)))
            .mul_rat(&(&HalfInt::int(n) + &r).to_rat().recip());
        assert_eq!(ConstExpr::from_rat(lhs.clone()), rhs, "n = {n}");
        assert_eq!(lhs, pow2(-n) * catalan(n as u64 + 1), "n = {n}");
    }
    // r -> -1: the dedicated entry evaluates its right side through the
    // rewrite pair.
    let entry = lookup("prop-2k-minus-1").unwrap();
    let report = verify_range(entry, &Overrides::default());
    assert_eq!(report.counts.equal, 29);
    assert_eq!(report.counts.total(), 29);
    println!(
        "criterion 4: PASS: s -> 0 rewrite matches the base identity for n <= 40; r = -1 rewrite equal on n in [2, 30]"
    );
}

#[test]
fn criterion_5_stirling() {
    for m in 0..=40 {
        for n in 0..=40 {
            assert_eq!(stirling2(m, n), stirling2_oracle(m, n), "({m}, {n})");
        }
    }
    for n in 0..=25 {
        for m in 0..=25 {
            let (lhs, rhs) = stirling_gf_check(n, m);
            assert_eq!(lhs, rhs, "({n}, {m})");
        }
    }
    let entry = lookup("stirling-touchard").unwrap();
    let report = verify_range(entry, &Overrides::default());
    assert_eq!(report.counts.unequal, 0);
    assert_eq!(report.counts.equal, 26 * 9);
    println!(
        "criterion 5: PASS: explicit = recurrence on [0,40]^2; generating function on [0,25]^2; power-weighted sweep 26x9 equal"
    );
}

#[test]
fn criterion_6_transforms() {
    let mut rng = SplitMix64::new(PROPERTY_SEED);
    for _ in 0..100 {
        let len = rng.below(32) as usize + 1;
        let seq: Vec<ConstExpr> = (0..len)
            .map(|_| ConstExpr::from_rat(rng.small_rational()))
            .collect();
        assert_eq!(binomial_transform(&binomial_transform(&seq)), seq);
    }
    let mut rng = SplitMix64::new(PROPERTY_SEED);
    for _ in 0..25 {
        let seq: Vec<ConstExpr> = (0..25)
            .map(|_| ConstExpr::from_rat(rng.small_rational()))
            .collect();
        let pair = TransformPair::from_sequence("random", seq);
        for n in 0..=24 {
            let (l, r) = eval_bt1(&pair, n).unwrap();
            assert_eq!(l, r, "n = {n}");
        }
    }
    for pair in builtin_pairs() {
        for n in 0..=40 {
            assert!(pair.satisfies_defining_relation(n).unwrap(), "n = {n}");
        }
    }
    println!(
        "criterion 6: PASS: involution on 100 seeded sequences; theorem on 25 random pairs to n = 24; 3 built-in pairs to n = 40"
    );
}

#[test]
fn criterion_7_half_integer_harmonic() {
    for n in 1..=30i64 {
        let lhs = harmonic_ext(&HalfInt::half(2 * n - 1)).unwrap();
        let rhs = ConstExpr::from_rat(rat_int(2) * odd_harmonic(n as u64))
            .add(&ConstExpr::term(0, 1, rat_int(-2)));
        assert_eq!(lhs, rhs, "n = {n}");
    }
    println!("criterion 7: PASS: H_(n-1/2) = 2 O_n - 2 ln 2 exactly for n in [1, 30]");
}

#[test]
fn criterion_8_numeric_backend() {
    // Relative error <= 1e-30 at 256-bit precision, as stated.
    let cfg = NumericConfig::new(256, pow10(-30, 256)).unwrap();
    let ctx = NumCtx::new(cfg);
    let ids = ["gen-touchard", "knuth-gen", "mzx3fur"];
    let points = nonlattice_points();
    assert_eq!(points.len(), 10);
    let mut nonlattice_checked = 0;
    for id in ids {
        let entry = lookup(id).unwrap();
        for (r, s) in &points {
            for n in 0..=12 {
                let inst = NumericInstance {
                    n,
                    extras: vec![("r", r.clone()), ("s", s.clone())],
                };
                let v = touchard::numeric::verify_instance_numeric(entry, &inst, &ctx);
                assert_eq!(
                    v.outcome,
                    Outcome::Equal,
                    "{id} at n = {n}, r = {r}, s = {s}"
                );
                nonlattice_checked += 1;
            }
        }
    }
    // Exact-vs-numeric agreement on lattice instances.
    let mut lattice_checked = 0;
    for id in ids {
        let entry = lookup(id).unwrap();
        let overrides = Overrides {
            n_max: Some(12),
            ..Default::default()
        };
        for inst in touchard::identities::instances(entry, &overrides) {
            if (entry.params.predicate)(&inst).is_err() {
                continue;
            }
            assert_eq!(verify_instance(entry, &inst).outcome, Outcome::Equal);
            let ninst = inst.to_numeric();
            let nv = touchard::numeric::verify_instance_numeric(entry, &ninst, &ctx);
            assert_eq!(nv.outcome, Outcome::Equal, "{id} numeric at {inst:?}");
            let exact_lhs = ctx.eval_constexpr(&entry.lhs(&inst).unwrap());
            let num_lhs = (entry.numeric_sides.as_ref().unwrap()[0])(&ninst, &ctx).unwrap();
            assert!(
                ctx.within_tolerance(&exact_lhs, &num_lhs),
                "{id} cross-backend drift at {inst:?}"
            );
            lattice_checked += 1;
        }
    }
    println!(
        "criterion 8: PASS: {nonlattice_checked} non-lattice instances within 1e-30; {lattice_checked} lattice instances agree across backends"
    );
}

#[test]
fn criterion_9_determinism_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("run1.json");
    let p2 = dir.path().join("run2.json");
    for p in [&p1, &p2] {
        let status = bin()
            .args([
                "verify",
                "--ids",
                "all",
                "--n-max",
                "10",
                "--backend",
                "exact",
                "--output",
                "json",
                "--out",
            ])
            .arg(p)
            .env("SOURCE_DATE_EPOCH", "1700000000")
            .status()
            .unwrap();
        assert!(status.success());
    }
    let b1 = std::fs::read(&p1).unwrap();
    let b2 = std::fs::read(&p2).unwrap();
    assert_eq!(b1, b2, "reports differ between identical runs");

    // Fault injection: the deliberately broken entry must drive exit 1 and
    // carry a nonzero exact difference in the failure record.
    let out = bin()
        .args([
            "verify",
            "--ids",
            "fault-injection-demo",
            "--output",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failures = doc["identities"][0]["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    assert_eq!(failures[0]["diff"], "1");

    // Unknown ids are usage errors.
    let status = bin().args(["verify", "--ids", "bogus"]).status().unwrap();
    assert_eq!(status.code(), Some(2));
    println!(
        "criterion 9: PASS: byte-identical reports ({} bytes); fault injection exits 1 with diff 1; unknown id exits 2",
        b1.len()
    );
}
