use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

use stmult::combinatorics::GroupParams;
use stmult::formulas::{dickson_series, steinberg_multiplicity_series, TensorFactor};
use stmult::series::LaurentSeries;

fn stmult(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stmult")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn series_csv_rows() {
    let o = stmult(&[
        "series", "--n", "2", "--p", "3", "--r", "1", "--factor", "wedge", "--m", "1", "--k", "1", "--trunc", "7",
        "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("degree,coefficient"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 8);
    for row in ["3,1", "5,2", "7,2"] {
        assert!(rows.contains(&row), "{row} missing from {rows:?}");
    }
}

#[test]
fn series_json_for_gl1_of_4() {
    let o = stmult(&[
        "series", "--n", "1", "--p", "2", "--r", "2", "--factor", "wedge", "--m", "0", "--k", "0", "--trunc", "9",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["q"], 4);
    assert_eq!(v["conjecture"], false);
    assert!(v["theorem"].is_string());
    let s = LaurentSeries::from_json_value(&v).unwrap();
    for a in 0..=9 {
        let want = i64::from(a % 3 == 0);
        assert_eq!(s.coefficient_at(a).unwrap(), &want.into(), "a={a}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let missing_m = stmult(&["series", "--n", "2", "--p", "3", "--factor", "wedge", "--k", "1", "--trunc", "7"]);
    assert_eq!(missing_m.status.code(), Some(2));
    assert!(stderr(&missing_m).contains("--m"));
    assert_eq!(stmult(&["series", "--n", "2", "--trunc", "3", "--factor", "none"]).status.code(), Some(2));
    assert_eq!(stmult(&["series", "--n", "2", "--p", "4", "--factor", "none", "--trunc", "3"]).status.code(), Some(2));
    assert_eq!(stmult(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(stmult(&["--help"]).status.code(), Some(0));
}

#[test]
fn precondition_errors_exit_3() {
    let o =
        stmult(&["series", "--n", "2", "--p", "5", "--factor", "wedgenu", "--nu", "1,1", "--k", "3", "--trunc", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("requires"), "{}", stderr(&o));
}

#[test]
fn verify_passes_and_detects_faults() {
    let o = stmult(&["verify", "--n", "2", "--p", "3", "--r", "1", "--amax", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));

    let o = stmult(&[
        "verify", "--n", "3", "--p", "5", "--r", "1", "--factor", "wedgenu", "--nu", "2,1", "--k", "1", "--amax", "30",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS wedgenu(2,1) k=1"));

    let o = stmult(&["verify", "--n", "2", "--p", "3", "--amax", "40", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first failure: factor="));
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["verify", "--n", "3", "--p", "3", "--amax", "25"];
    assert_eq!(stdout(&stmult(&args)), stdout(&stmult(&args)));
}

#[test]
fn pim_entries_and_total() {
    let o = stmult(&["pim", "--n", "2", "--p", "5", "--nu", "1", "--k", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["mult"], 1);

    let o = stmult(&["pim", "--n", "2", "--p", "5", "--nu", "1,1", "--k", "0"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mults: Vec<u64> = v.as_array().unwrap().iter().map(|e| e["mult"].as_u64().unwrap()).collect();
    assert_eq!(mults, vec![1, 2]);
    let total: u64 =
        v.as_array().unwrap().iter().map(|e| e["mult"].as_u64().unwrap() * e["dim"].as_u64().unwrap()).sum();
    assert_eq!(total, 20);
    assert!(stderr(&o).contains("total dim 20 = "));

    let o = stmult(&["pim", "--n", "3", "--p", "2", "--nu", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("requires p > n (Coxeter number)"));
}

#[test]
fn coinv_steinberg_case() {
    let o = stmult(&["coinv", "--n", "2", "--p", "2", "--k", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value_at_1"], 2);
}

#[test]
fn socle_output_and_dickson_reduction() {
    let o = stmult(&["socle-conjecture", "--n", "2", "--p", "3", "--trunc", "30"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["conjecture"], false);
    let g = GroupParams::new(2, 3, 1).unwrap();
    assert_eq!(LaurentSeries::from_json_value(&v).unwrap(), dickson_series(&g, 30).unwrap());

    let o = stmult(&["socle-conjecture", "--n", "2", "--p", "5", "--mu", "1", "--trunc", "30"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["conjecture"], true);
    let pretty = stdout(&stmult(&[
        "socle-conjecture",
        "--n",
        "2",
        "--p",
        "5",
        "--mu",
        "1",
        "--trunc",
        "30",
        "--format",
        "pretty",
    ]));
    assert!(pretty.contains("CONJECTURE"));
}

#[test]
fn table_shape() {
    for (n, trunc) in [(2, 5), (3, 11)] {
        let o = stmult(&["table", "--n", &n.to_string(), "--p", "3", "--k", "1", "--trunc", &trunc.to_string()]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        assert_eq!(out.lines().next(), Some("factor,k,degree,coefficient"));
        assert_eq!(out.lines().count() - 1, (n + 1) * (trunc + 1));
    }
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("stmult-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("series.json");
    let o = stmult(&[
        "series",
        "--n",
        "2",
        "--p",
        "2",
        "--factor",
        "none",
        "--trunc",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let s = LaurentSeries::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let want: Vec<i64> = vec![0, 1, 1, 1, 2, 2];
    assert_eq!(s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>(), want);
    std::fs::remove_dir_all(&dir).unwrap();
}

fn query() -> impl Strategy<Value = (usize, u64, u32, usize, i64, i64)> {
    (1usize..=3, prop::sample::select(vec![(2u64, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)]))
        .prop_flat_map(|(n, (p, r))| (Just(n), Just(p), Just(r), 0..=n, -3i64..10, 0i64..80))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn json_round_trip((n, p, r, m, k, trunc) in query()) {
        let o = stmult(&[
            "series", "--n", &n.to_string(), "--p", &p.to_string(), "--r", &r.to_string(),
            "--factor", "wedge", "--m", &m.to_string(), "--k", &k.to_string(), "--trunc", &trunc.to_string(),
        ]);
        prop_assert_eq!(o.status.code(), Some(0));
        let parsed = LaurentSeries::from_json(&stdout(&o)).unwrap();
        let g = GroupParams::new(n, p, r).unwrap();
        let direct = steinberg_multiplicity_series(&g, &TensorFactor::Wedge(m), k, trunc).unwrap();
        prop_assert_eq!(parsed.to_json(), direct.to_json());
    }
}
