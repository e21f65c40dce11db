//! Acceptance suite: one test per shipped guarantee, every comparison
//! exact. Each test prints a single `[acceptance] ... PASS` line (visible
//! with `--nocapture`).

use std::collections::BTreeMap;
use std::process::Command;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stirling_lab::bell::{
    bell_factorial_closed_form, bell_partitions, bell_series, factorial_args, lah_a, BellArgs,
};
use stirling_lab::exact::{alt_sign, factorial, Integer, Rational};
use stirling_lab::strategies::{build_table, s_nested_harmonic, s_triangular};
use stirling_lab::table::{SignedStirlingTable, StrategyId};
use stirling_lab::verify::{
    coefficient_vector, log_convexity_check, run_suite, verify_identity, IdentityId, SuiteConfig,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stirling-lab"))
}

#[test]
fn criterion_01_oracle_self_consistency() {
    let table = s_triangular(60);
    assert_eq!(*table.get(0, 0), Integer::from(1));
    for n in 1..=60usize {
        assert_eq!(
            *table.get(n, 1),
            alt_sign(n as i64 - 1) * factorial(n - 1),
            "column k=1 at n={n}"
        );
        assert_eq!(*table.get(n, n), Integer::from(1), "diagonal at n={n}");
        assert!(table.get(n, 0).is_zero(), "s({n},0) must vanish");
        for k in 1..=n {
            let value = table.get(n, k);
            let expected_sign = alt_sign((n - k) as i64);
            assert_eq!(
                value.signum(),
                expected_sign,
                "sign of s({n},{k})"
            );
        }
        if n >= 2 {
            let sum: Integer = (0..=n).map(|k| table.get(n, k).clone()).sum();
            assert!(sum.is_zero(), "row {n} must sum to zero");
        }
    }
    println!("[acceptance] criterion 01: oracle self-consistency to n=60 PASS");
}

#[test]
fn criterion_02_strategy_equivalence() {
    let oracle = s_triangular(60);
    for strategy in [
        StrategyId::Genfun,
        StrategyId::HarmonicRecurrence,
        StrategyId::RowHorizontal,
        StrategyId::RowFromAbove,
        StrategyId::ColumnVertical,
        StrategyId::FaaRoute,
        StrategyId::DiagonalExtension,
        StrategyId::NestedHarmonic,
    ] {
        let table = build_table(strategy, 60);
        assert!(
            table.same_values(&oracle),
            "{strategy} disagrees with the oracle at max_n=60"
        );
    }
    // the per-cell route independently, over its own 2 <= k <= n domain
    for n in 2..=60usize {
        for k in 2..=n {
            assert_eq!(
                s_nested_harmonic(n, k),
                *oracle.get(n, k),
                "nested harmonic at ({n},{k})"
            );
        }
    }
    println!("[acceptance] criterion 02: eight independent routes match the oracle to n=60 PASS");
}

#[test]
fn criterion_03_fifth_recurrence_adjudication() {
    let table = s_triangular(41);
    let corrected = verify_identity(IdentityId::Vf7Corrected, 40, &table);
    assert!(corrected.all_passed(), "corrected sign must match everywhere");
    assert!(corrected.checked > 0);

    let printed = verify_identity(IdentityId::Vf7Printed, 40, &table);
    assert!(
        !printed.failures.is_empty(),
        "printed sign must disagree somewhere"
    );
    for failure in &printed.failures {
        assert_eq!(failure.n % 2, 0, "printed-sign failure at odd n={}", failure.n);
    }
    println!(
        "[acceptance] criterion 03: corrected sign exact to n=41; printed sign fails on {} even-n cells only PASS",
        printed.failures.len()
    );
}

#[test]
fn criterion_04_diagonal_identity_checks() {
    let table = s_triangular(40);
    for id in [
        IdentityId::D10,
        IdentityId::D10K,
        IdentityId::D11,
        IdentityId::U20,
        IdentityId::Case18,
        IdentityId::Case19,
    ] {
        let result = verify_identity(id, 40, &table);
        assert!(result.checked > 0, "{id} checked nothing");
        assert!(
            result.all_passed(),
            "{id} failed at {:?}",
            result.failures.first()
        );
    }
    println!("[acceptance] criterion 04: six diagonal relations exact on 1<=k<=n<=40 PASS");
}

#[test]
fn criterion_05_vacuity_analysis() {
    for n in 1..=30usize {
        for k in 1..=n {
            for variant in [IdentityId::D10, IdentityId::D10K] {
                let coeffs = coefficient_vector(n, k, variant);
                for (offset, value) in &coeffs {
                    let expected = if *offset == 0 {
                        Integer::from(1)
                    } else {
                        Integer::zero()
                    };
                    assert_eq!(
                        *value, expected,
                        "{variant} at ({n},{k}) offset {offset}"
                    );
                }
                assert_eq!(coeffs.get(&0), Some(&Integer::from(1)));
            }
            // the case-split form carries genuine lower-diagonal weight
            if 2 * k > n && n > k {
                let coeffs: BTreeMap<usize, Integer> =
                    coefficient_vector(n, k, IdentityId::Case18);
                let nonzero_shift = coeffs
                    .iter()
                    .any(|(offset, value)| *offset >= 1 && !value.is_zero());
                assert!(
                    nonzero_shift,
                    "case-split coefficients at ({n},{k}) are trivial"
                );
            }
        }
    }
    println!("[acceptance] criterion 05: double-sum forms vacuous, case-split form constructive, to n=30 PASS");
}

#[test]
fn criterion_06_bell_closed_forms() {
    let table = s_triangular(40);
    for id in [IdentityId::Bell8, IdentityId::Bell9] {
        let result = verify_identity(id, 20, &table);
        assert!(result.checked > 0);
        assert!(result.all_passed(), "{id} failed at {:?}", result.failures.first());
    }
    let result = verify_identity(IdentityId::Bell21, 25, &table);
    assert!(result.all_passed());
    for n in 1..=25usize {
        for k in 1..=n {
            let args = factorial_args(n - k + 1);
            let direct = bell_partitions(n, k, &args);
            let closed = bell_factorial_closed_form(n, k);
            let lah = lah_a(n, n - k);
            assert_eq!(closed, lah, "closed form vs a({n},{}) triangle", n - k);
            assert_eq!(direct, Rational::from_integer(closed), "at ({n},{k})");
        }
    }
    println!("[acceptance] criterion 06: Bell closed forms and Lah equality exact PASS");
}

#[test]
fn criterion_07_bell_structural_identities() {
    let table = s_triangular(0);
    for (id, bound) in [(IdentityId::Scale14, 15), (IdentityId::Shift15, 12)] {
        let result = verify_identity(id, bound, &table);
        assert!(result.checked > 0);
        assert!(result.all_passed(), "{id} failed at {:?}", result.failures.first());
    }
    println!("[acceptance] criterion 07: scaling (20 randomized pairs, n<=15) and shift (n<=12) identities exact PASS");
}

#[test]
fn criterion_08_exp_reciprocal_coefficients() {
    let table = s_triangular(0);
    let result = verify_identity(IdentityId::ExpRec, 15, &table);
    assert!(result.checked > 0);
    assert!(result.all_passed(), "failed at {:?}", result.failures.first());
    println!("[acceptance] criterion 08: reciprocal-exponential coefficients match the Bell route, both signs, i<=15 PASS");
}

#[test]
fn criterion_09_log_convexity() {
    for k in 1..=8usize {
        let result = log_convexity_check(k, 30);
        assert_eq!(result.checked, 29, "interior points 1..=29 at k={k}");
        assert!(result.all_passed(), "k={k} failed at {:?}", result.failures.first());
    }
    println!("[acceptance] criterion 09: log-convexity of |s(n+k,k)|/C(n+k,k) for k<=8, n<=29 PASS");
}

#[test]
fn criterion_10_bell_route_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbe11);
    for _ in 0..100 {
        let values: Vec<Rational> = (0..20)
            .map(|_| {
                Rational::new(
                    Integer::from(rng.gen_range(-30i64..=30)),
                    Integer::from(rng.gen_range(1i64..=30)),
                )
            })
            .collect();
        let args = BellArgs::new(values);
        for n in 0..=20usize {
            for k in 0..=n {
                assert_eq!(
                    bell_partitions(n, k, &args),
                    bell_series(n, k, &args),
                    "routes disagree at ({n},{k})"
                );
            }
        }
    }
    println!("[acceptance] criterion 10: partition and series routes agree on 100 random argument vectors, n<=20 PASS");
}

#[test]
fn criterion_11_cli_contract() {
    // table examples
    let out = bin()
        .args(["table", "--max-n", "4", "--strategy", "triangular", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.lines().any(|l| l == "4,2,11"), "missing 4,2,11 in:\n{stdout}");

    let out = bin().args(["table", "--max-n", "1"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0,0,1\n1,0,0\n1,1,1\n");

    let genfun = bin()
        .args(["table", "--max-n", "40", "--strategy", "genfun"])
        .output()
        .unwrap();
    let triangular = bin()
        .args(["table", "--max-n", "40", "--strategy", "triangular"])
        .output()
        .unwrap();
    assert!(genfun.status.success() && triangular.status.success());
    let value_column = |bytes: &[u8]| -> Vec<String> {
        String::from_utf8(bytes.to_vec())
            .unwrap()
            .lines()
            .map(|l| l.rsplit(',').next().unwrap().to_owned())
            .collect()
    };
    assert_eq!(value_column(&genfun.stdout), value_column(&triangular.stdout));

    // bell examples
    for (args, expected) in [
        (vec!["bell", "3", "2", "1", "1"], "3"),
        (vec!["bell", "4", "2", "1", "2", "6"], "36"),
        (vec!["bell", "2", "1", "1/2", "2/3"], "2/3"),
    ] {
        let out = bin().args(&args).output().unwrap();
        assert!(out.status.success(), "bell {args:?}");
        assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), expected);
    }

    // verify exit status
    let out = bin().args(["verify", "--max-n", "40"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "verify --max-n 40 must exit 0");

    // cache round-trip at n = 60
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("table.cache.json");
    let cold = bin()
        .args(["table", "--max-n", "60", "--format", "json"])
        .arg("--cache")
        .arg(&cache)
        .output()
        .unwrap();
    assert!(cold.status.success());
    let warm = bin()
        .args(["table", "--max-n", "60", "--format", "json"])
        .arg("--cache")
        .arg(&cache)
        .output()
        .unwrap();
    assert!(warm.status.success());
    assert_eq!(cold.stdout, warm.stdout, "warm-cache output must be byte-identical");

    let cache_body = std::fs::read_to_string(&cache).unwrap();
    let wrapper: serde_json::Value = serde_json::from_str(&cache_body).unwrap();
    let cached = SignedStirlingTable::from_json(&wrapper["table"].to_string()).unwrap();
    assert!(cached.same_values(&s_triangular(60)), "cache round-trip lost values");

    // full suite sanity via the library entry point the CLI wraps
    let report = run_suite(&SuiteConfig::full(40));
    assert!(report.catalogue_verdict().is_ok());

    println!("[acceptance] criterion 11: CLI contract and lossless n=60 cache round-trip PASS");
}
