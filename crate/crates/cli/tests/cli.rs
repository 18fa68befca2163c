use std::process::{Command, Output};

use hkmoduli_core::ModuliReport;
use serde_json::Value;

fn hkmoduli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hkmoduli"))
        .args(args)
        .env_remove("HK_ORACLE_BOUNDS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = hkmoduli(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn check_json_report() {
    let v = json(&["check", "--family", "k3n", "--n", "2", "--d", "3", "--t", "2", "--format", "json"]);
    assert_eq!(v["non_empty"], true);
    assert_eq!(v["components"], 1);
    assert_eq!(v["witness"], serde_json::json!([2, 1, 1]));
    assert_eq!(v["bpf_some_component"], false);
    assert_eq!(v["fujita_power"], 4);
    assert_eq!(v["d_min_bpf"], 5);
}

#[test]
fn check_json_is_canonical() {
    for args in [
        ["check", "--family", "k3n", "--n", "10", "--d", "27", "--t", "3", "--format", "json"],
        ["check", "--family", "kum", "--n", "3", "--d", "29", "--t", "4", "--format", "json"],
    ] {
        let text = stdout(&hkmoduli(&args));
        let parsed: ModuliReport = serde_json::from_str(&text).unwrap();
        let mut again = serde_json::to_string_pretty(&parsed).unwrap();
        again.push('\n');
        assert_eq!(again, text);
        assert!(!text.contains('.'), "no floats in {text}");
    }
}

#[test]
fn check_inadmissible_divisibility() {
    let out = hkmoduli(&["check", "--family", "kum", "--n", "2", "--d", "1", "--t", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("non_empty                  false"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["check", "--family", "k3n", "--n", "2", "--d", "0", "--t", "1"],
        vec!["check", "--family", "k3n", "--n", "1", "--d", "3", "--t", "1"],
        vec!["check", "--family", "other", "--n", "2", "--d", "3", "--t", "1"],
        vec!["check", "--family", "k3n", "--n", "2"],
        vec!["table", "--family", "k3n", "--n", "2", "--d-range", "9..1", "--t", "1"],
        vec!["table", "--family", "k3n", "--n", "2", "--d-range", "1..3", "--t", "1,,2"],
        vec!["kva", "--surface", "k3", "--a", "0", "--e", "1"],
        vec!["bogus"],
    ] {
        let out = hkmoduli(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
    assert_eq!(hkmoduli(&["--help"]).status.code(), Some(0));
}

#[test]
fn check_with_oracle_agrees() {
    let v = json(&["check", "--family", "kum", "--n", "3", "--d", "29", "--t", "4", "--format", "json", "--oracle"]);
    assert_eq!(v["oracle"]["agrees"], true);
    assert_eq!(v["oracle"]["non_empty"], v["non_empty"]);
}

#[test]
fn oracle_bounds_from_environment() {
    let run = |bounds: &str| {
        Command::new(env!("CARGO_BIN_EXE_hkmoduli"))
            .args(["witness", "--family", "k3n", "--n", "2", "--d", "3", "--t", "2", "--oracle", "--format", "json"])
            .env("HK_ORACLE_BOUNDS", bounds)
            .output()
            .unwrap()
    };
    let narrow: Value = serde_json::from_slice(&run("1,1,1").stdout).unwrap();
    let wide: Value = serde_json::from_slice(&run("4,12,100").stdout).unwrap();
    let count = |v: &Value| v["oracle_witnesses"].as_array().unwrap().len();
    // Defaults (a ≤ 2, |b| ≤ 4) already give (2, ±1, 1) and (2, ±3, 3); a = 4
    // is never primitive with the right divisibility here, but |b| ≤ 12 adds
    // b = ±5, ±7, ±9, ±11.
    assert_eq!(count(&narrow), 4);
    assert_eq!(count(&wide), 12);
    assert_eq!(run("nonsense").status.code(), Some(1));
}

#[test]
fn table_csv_rows() {
    let out = hkmoduli(&["table", "--family", "k3n", "--n", "2", "--d-range", "1..10", "--t", "2,1", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("family,n,d,t,non_empty,components,bpf,va,witness_a,witness_b,witness_e")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 20);
    let keys: Vec<(i64, i64)> = rows.iter().map(|r| (r[3].parse().unwrap(), r[2].parse().unwrap())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let t2d3 = rows.iter().find(|r| r[3] == "2" && r[2] == "3").unwrap();
    assert_eq!(t2d3[4], "1");
    assert_eq!(&t2d3[8..], ["2", "1", "1"]);
}

#[test]
fn table_degenerate_and_empty() {
    let text = stdout(&hkmoduli(&["table", "--family", "k3n", "--n", "2", "--d-range", "5..5", "--t", "1"]));
    assert_eq!(text.lines().count(), 2);
    let text = stdout(&hkmoduli(&["table", "--family", "k3n", "--n", "2", "--d-range", "1..30", "--t", "7"]));
    let rows: Vec<_> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 30);
    assert!(rows.iter().all(|r| r.split(',').nth(4) == Some("0")));
}

#[test]
fn table_is_deterministic_in_every_format() {
    for format in ["csv", "json", "human"] {
        let args = ["table", "--family", "kum", "--n", "5", "--d-range", "1..40", "--t", "1,2,3,4,6,12", "--format", format];
        assert_eq!(stdout(&hkmoduli(&args)), stdout(&hkmoduli(&args)));
    }
    let v = json(&["table", "--family", "kum", "--n", "5", "--d-range", "1..40", "--t", "1,2,3,4,6,12", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 240);
}

#[test]
fn kva_outputs() {
    let v = json(&["kva", "--surface", "k3", "--a", "1", "--e", "4", "--format", "json"]);
    assert_eq!(v["k_max"], 2);
    let out = hkmoduli(&["kva", "--surface", "abelian", "--a", "1", "--e", "2"]);
    let text = stdout(&out);
    assert!(text.contains("-1") && text.contains("not base point free"), "{text}");
    let v = json(&["kva", "--surface", "k3", "--a", "2", "--e", "3", "--n", "4", "--format", "json"]);
    assert_eq!(v["k_max"], 4);
    assert_eq!(v["induced"]["bpf"], true);
    assert_eq!(v["induced"]["very_ample"], true);
}

#[test]
fn witness_absent_for_empty_space() {
    let v = json(&["witness", "--family", "kum", "--n", "2", "--d", "3", "--t", "3", "--format", "json"]);
    assert_eq!(v["witness"], Value::Null);
    let v = json(&["witness", "--family", "kum", "--n", "2", "--d", "3", "--t", "3", "--format", "json", "--oracle"]);
    assert_eq!(v["oracle_witnesses"], serde_json::json!([]));
}
