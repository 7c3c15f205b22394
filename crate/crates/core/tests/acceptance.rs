//! Acceptance criteria 1-9. Each criterion prints one `PASS`/`FAIL` line to
//! stderr (uncaptured), then the test fails if any criterion did.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{all_valid, racah_oracle, rat, super_oracle, sym, Squared};
use num_rational::{BigRational, Rational64};
use sixj::orbit::closure_size_oracle;
use sixj::regge::{characteristic_polynomial, determinant, identity6, mat_mul, Matrix6};
use sixj::table::parse_line;
use sixj::{
    applicable_set, apply_regge, beta_decomposition, classify, classify_oracle, eval, eval_6j, eval_super_6j, monomial,
    parity_of, regge_matrix, regge_star, run, s4_rearrangements, HalfInt, Mode, Parity, PrimeExponents,
    SqrtRationalValue, TableConfig,
};

/// Exact-equality criteria have no tolerance; only wall-clock budgets are pinned.
const BUDGET_REGGE_SWEEP: Duration = Duration::from_secs(120);
const BUDGET_FULL_TABLE: Duration = Duration::from_secs(60);

/// Doubled spin bounds of the exhaustive scans.
const REGGE_SWEEP_MAX: i64 = 8; // spins <= 4
const STANDARD_SCAN_MAX: i64 = 9; // spins <= 9/2
const SUPER_SCAN_MAX: i64 = 7; // spins <= 7/2
const ROUND_TRIP_MAX: i64 = 12; // spins <= 6
const FULL_TABLE_MAX: i64 = 20; // spins <= 10

fn criterion_1() -> String {
    let worked = sym([18, 16, 12, 3, 9, 13]);
    let v = eval_6j(&worked).unwrap();
    let expect = SqrtRationalValue::from_parts(
        &rat(-1, 2),
        &PrimeExponents::from_pairs([(23, 1), (5, -1), (7, -1), (13, -1), (17, -1)]),
    );
    assert_eq!(v, expect);
    assert_eq!(v.square(), rat(23, 4 * 5 * 7 * 13 * 17));
    for partner in [[20, 16, 10, 5, 9, 11], [20, 14, 12, 5, 7, 13]] {
        assert_eq!(eval_6j(&sym(partner)).unwrap(), v, "{partner:?}");
    }
    format!("value {v}")
}

fn criterion_2() -> String {
    let start = Instant::now();
    let syms = all_valid(REGGE_SWEEP_MAX, Mode::Standard);
    let mut images = 0;
    for s in &syms {
        let v = eval_6j(s).unwrap();
        for k in 1..=5 {
            let img = apply_regge(k, s).unwrap().image().unwrap_or_else(|| panic!("R{k} rejected {s}"));
            assert_eq!(eval_6j(&img).unwrap(), v, "R{k} {s} -> {img}");
            images += 1;
        }
    }
    let took = start.elapsed();
    assert!(took < BUDGET_REGGE_SWEEP, "{took:?}");
    format!("{} symbols, {images} images, {took:.2?}", syms.len())
}

fn criterion_3() -> String {
    let r = |k: usize| -> Matrix6 { regge_matrix(k).unwrap().to_matrix() };
    let ri = Rational64::from_integer;
    let id = identity6();
    for k in 1..=3 {
        assert_eq!(mat_mul(&r(k), &r(k)), id, "R{k}^2");
        assert_eq!(determinant(&r(k)), ri(-1), "det R{k}");
        // eigenvalues {-1, 1^5}: (x+1)(x-1)^5
        assert_eq!(characteristic_polynomial(&r(k)), [-1, 4, -5, 0, 5, -4, 1].map(ri), "R{k}");
    }
    assert_eq!(mat_mul(&r(4), &r(5)), id);
    assert_eq!(mat_mul(&r(5), &r(4)), id);
    for k in 4..=5 {
        assert_eq!(determinant(&r(k)), ri(1), "det R{k}");
        // eigenvalues {1, 1} and two pairs of primitive cube roots: (x-1)^2 (x^2+x+1)^2
        assert_eq!(characteristic_polynomial(&r(k)), [1, 0, 0, -2, 0, 0, 1].map(ri), "R{k}");
    }
    let r12 = mat_mul(&r(1), &r(2));
    assert_eq!(mat_mul(&r(2), &r(3)), r12);
    assert_eq!(mat_mul(&r(3), &r(1)), r12);
    let r21 = mat_mul(&r(2), &r(1));
    assert_eq!(mat_mul(&r(3), &r(2)), r21);
    assert_eq!(mat_mul(&r(1), &r(3)), r21);
    "all identities exact".into()
}

fn criterion_4() -> String {
    let syms = all_valid(STANDARD_SCAN_MAX, Mode::Standard);
    let mut sizes = BTreeMap::new();
    for s in &syms {
        let size = closure_size_oracle(s, Mode::Standard).unwrap();
        assert!(size != 96 && size != 120, "{s}: {size}");
        *sizes.entry(size).or_insert(0usize) += 1;
        assert_eq!(classify(s, Mode::Standard).unwrap(), classify_oracle(s, Mode::Standard).unwrap(), "{s}");
    }
    let seen: BTreeSet<usize> = sizes.keys().copied().collect();
    assert_eq!(seen, BTreeSet::from([24, 48, 72, 144]));
    format!("{} symbols, closure sizes {sizes:?}", syms.len())
}

fn super_scan() -> Vec<sixj::SixJSymbol> {
    all_valid(SUPER_SCAN_MAX, Mode::Super)
}

fn criterion_5() -> String {
    let syms = super_scan();
    let mut sizes: BTreeMap<Parity, BTreeSet<usize>> = BTreeMap::new();
    for s in &syms {
        let parity = parity_of(s).unwrap();
        let set = applicable_set(s, Mode::Super).unwrap();
        let images: Vec<usize> = (1..=5).filter(|&k| apply_regge(k, s).unwrap().image().is_some()).collect();
        assert_eq!(images, set, "{s}");
        match parity {
            Parity::Beta => assert_eq!(set, vec![beta_decomposition(s).unwrap().l_star], "{s}"),
            _ => assert_eq!(set, vec![1, 2, 3, 4, 5], "{s}"),
        }
        let report = regge_star(s, Mode::Super).unwrap();
        assert_eq!(report.closure_size, closure_size_oracle(s, Mode::Super).unwrap(), "{s}");
        for rep in &report.representatives {
            assert_eq!(parity_of(rep).unwrap(), parity, "{s} member {rep}");
        }
        assert_eq!(report.class, classify(s, Mode::Super).unwrap(), "{s}");
        sizes.entry(parity).or_default().insert(report.closure_size);
    }
    let full = BTreeSet::from([24, 48, 72, 144]);
    assert_eq!(sizes[&Parity::Alpha], full);
    assert_eq!(sizes[&Parity::Gamma], full);
    assert_eq!(sizes[&Parity::Beta], BTreeSet::from([24, 48]));
    format!("{} symbols, sizes {sizes:?}", syms.len())
}

fn criterion_6() -> String {
    assert_eq!(eval_super_6j(&sym([0; 6])).unwrap(), SqrtRationalValue::one());
    let gamma = sym([1; 6]);
    let beta = sym([1, 1, 2, 1, 2, 1]);
    assert_eq!(eval_super_6j(&gamma).unwrap(), SqrtRationalValue::from_rational(rat(-3, 2)));
    assert_eq!(
        eval_super_6j(&beta).unwrap(),
        SqrtRationalValue::from_parts(&rat(-1, 2), &PrimeExponents::from_pairs([(3, 1)]))
    );
    assert_eq!(super_oracle(&gamma), Squared { sign: -1, square: rat(9, 4) });
    assert_eq!(super_oracle(&beta), Squared { sign: -1, square: rat(3, 4) });

    let syms = super_scan();
    let mut regge = 0;
    for s in &syms {
        let v = eval_super_6j(s).unwrap();
        for a in s4_rearrangements(s) {
            assert_eq!(eval_super_6j(&a).unwrap(), v, "{s} vs {a}");
        }
        for k in applicable_set(s, Mode::Super).unwrap() {
            let img = apply_regge(k, s).unwrap().image().unwrap();
            assert_eq!(eval_super_6j(&img).unwrap(), v, "R{k} {s}");
            regge += 1;
        }
    }
    format!("{} symbols, {regge} Regge images", syms.len())
}

fn criterion_7() -> String {
    let mut checked = 0;
    for s in &super_scan() {
        let parity = parity_of(s).unwrap();
        // 4 Σ J_k j_k through rationals, against the integer used for the phase.
        let t = s.twice();
        let jj: BigRational = (0..3).map(|i| rat(t[i], 2) * rat(t[i + 3], 2)).sum();
        let four = jj * BigRational::from_integer(4.into());
        assert!(four.is_integer());
        assert_eq!(four.to_integer(), s.four_sum_jj().into());
        if parity != Parity::Alpha {
            monomial(parity, s, 0).unwrap();
        }
        assert_eq!(Squared::of(&eval_super_6j(s).unwrap()), super_oracle(s), "{s}");
        checked += 1;
    }
    for s in &all_valid(STANDARD_SCAN_MAX, Mode::Standard) {
        assert_eq!(Squared::of(&eval_6j(s).unwrap()), racah_oracle(s), "{s}");
        checked += 1;
    }
    format!("{checked} evaluations, no assertion fired, all equal to oracles")
}

fn criterion_8() -> String {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for (dir, workers) in dirs.iter().zip([1, 4]) {
        let mut cfg = TableConfig::new(HalfInt::from_twice(ROUND_TRIP_MAX), Mode::Super, dir.path());
        cfg.classify = true;
        cfg.workers = workers;
        run(&cfg).unwrap();
    }
    let table = fs::read_to_string(dirs[0].path().join("supertable.txt")).unwrap();
    let mut lines = 0;
    for line in table.lines() {
        let entry = parse_line(line).unwrap();
        assert_eq!(entry.value, eval(&entry.symbol, Mode::Super).unwrap(), "{line}");
        assert_eq!(entry.parity, Some(parity_of(&entry.symbol).unwrap()), "{line}");
        lines += 1;
    }
    let mut files = 0;
    for e in fs::read_dir(dirs[0].path()).unwrap() {
        let name = e.unwrap().file_name();
        let a = fs::read(dirs[0].path().join(&name)).unwrap();
        let b = fs::read(dirs[1].path().join(&name)).unwrap();
        assert!(a == b, "{name:?} differs between worker counts");
        files += 1;
    }
    format!("{lines} lines round-trip, {files} files identical for 1 and 4 workers")
}

fn criterion_9() -> String {
    let dir = tempfile::tempdir().unwrap();
    let cfg = TableConfig::new(HalfInt::from_twice(FULL_TABLE_MAX), Mode::Super, dir.path());
    let start = Instant::now();
    let summary = run(&cfg).unwrap();
    let took = start.elapsed();
    let table = fs::read_to_string(dir.path().join("supertable.txt")).unwrap();
    let last = parse_line(table.lines().last().unwrap()).unwrap();
    assert_eq!(last.symbol.twice(), [FULL_TABLE_MAX; 6]);
    assert_eq!(table.lines().next().unwrap().split_whitespace().take(6).collect::<Vec<_>>(), ["0"; 6]);
    assert!(took < BUDGET_FULL_TABLE, "{took:?}");
    format!("{} symbols in {took:.2?} (budget {BUDGET_FULL_TABLE:?})", summary.symbols)
}

type Criterion = (&'static str, fn() -> String);

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("worked value and Regge partners", criterion_1),
        ("Regge invariance sweep, standard spins <= 4", criterion_2),
        ("matrix identities", criterion_3),
        ("partition cardinalities, standard spins <= 9/2", criterion_4),
        ("super parity and Regge reduction, spins <= 7/2", criterion_5),
        ("super values and invariance", criterion_6),
        ("integrality assertions", criterion_7),
        ("table round-trip and determinism, super spins <= 6", criterion_8),
        ("full super table, spins <= 10", criterion_9),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let took = start.elapsed();
        let line = match outcome {
            Ok(detail) => format!("PASS criterion {}: {name} ({detail}) [{took:.2?}]", i + 1),
            Err(e) => {
                failed.push(i + 1);
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL criterion {}: {name}: {msg}", i + 1)
            }
        };
        writeln!(err, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
