use std::process::{Command, Output};

use serde_json::Value;

fn lrclcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrclcd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&lrclcd(args))).unwrap()
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let path = path.to_str().unwrap();
    let args = [
        "construct",
        "--family",
        "t33",
        "--q",
        "37",
        "--n",
        "36",
        "--k",
        "20",
        "--r",
        "5",
        "--out",
        path,
    ];
    assert!(lrclcd(&args).status.success());
    let built: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let checked = json(&["verify", "--file", path]);
    for key in [
        "k",
        "lcd",
        "d_lower",
        "d_upper",
        "optimality",
        "r_verified",
        "defining_set",
    ] {
        assert_eq!(built[key], checked[key], "{key}");
    }
    assert_eq!(checked["optimality"], "optimal");
}

#[test]
fn binary_round_trip_keeps_splitting_modulus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c2.json");
    let path = path.to_str().unwrap();
    assert!(lrclcd(&[
        "construct",
        "--family",
        "c2",
        "--m",
        "4",
        "--r",
        "2",
        "--out",
        path
    ])
    .status
    .success());
    let built: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let checked = json(&["verify", "--file", path]);
    for key in ["k", "lcd", "d_lower", "d_upper", "modulus", "g", "d_true"] {
        assert_eq!(built[key], checked[key], "{key}");
    }
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "construct",
        "--family",
        "t34",
        "--q",
        "17",
        "--n",
        "16",
        "--k",
        "8",
        "--r",
        "3",
    ];
    assert_eq!(lrclcd(&args).stdout, lrclcd(&args).stdout);
    let args = [
        "repair", "--family", "t33", "--q", "13", "--n", "12", "--k", "4", "--r", "2", "--seed",
        "5",
    ];
    assert_eq!(lrclcd(&args).stdout, lrclcd(&args).stdout);
}

#[test]
fn report_fields_are_alphabetical() {
    let text = stdout(&lrclcd(&["example", "3.4"]));
    let keys: Vec<String> = text
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
        .map(|l| l.trim().split('"').nth(1).unwrap().to_string())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(keys.contains(&"d_true".to_string()));
}

#[test]
fn examples_reproduce() {
    for (id, k, d_lower) in [("3.1", 30, 10), ("3.4", 8, 6), ("3.5b", 37, 22)] {
        let v = json(&["example", id]);
        assert_eq!(v["k"], k);
        assert_eq!(v["d_lower"], d_lower);
        assert_eq!(v["lcd"]["is_lcd"], true);
    }
}

#[test]
fn search_rows() {
    let csv = stdout(&lrclcd(&[
        "search", "--q", "37", "--n", "36", "--r", "1..8",
    ]));
    assert!(csv
        .lines()
        .next()
        .unwrap()
        .starts_with("q,n,k,r,construction"));
    assert!(csv.lines().any(|l| l == "37,36,20,5,t33,6,0,14,14,optimal"));
    let csv = stdout(&lrclcd(&["search", "--q", "17", "--n", "16", "--r", "3"]));
    assert!(
        csv.lines().any(|l| l == "17,16,8,3,t34,2,2,6,7,within-one"),
        "{csv}"
    );
    let rows = json(&[
        "search", "--q", "17", "--n", "16", "--r", "3", "--format", "json",
    ]);
    assert!(rows
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["k"] == 8 && r["construction"] == "t34"));
    let empty = lrclcd(&["search", "--q", "37", "--n", "5", "--r", "1..3"]);
    assert_eq!(stdout(&empty).lines().count(), 1);
}

#[test]
fn repair_succeeds() {
    let v = json(&[
        "repair", "--family", "t33", "--q", "37", "--n", "36", "--k", "20", "--r", "5", "--trials",
        "100", "--seed", "7",
    ]);
    assert_eq!(v["successes"], 100);
    assert_eq!(v["trials"], 100);
    assert_eq!(v["symbols_read_mean"], 5.0);
    assert!(v.get("failures").is_none());
}

#[test]
fn coset_command() {
    let v = json(&["coset", "--a", "1", "--n", "63", "--q", "2"]);
    assert_eq!(v["coset"], serde_json::json!([1, 2, 4, 8, 16, 32]));
    assert_eq!(v["negation"], serde_json::json!([31, 47, 55, 59, 61, 62]));
}

#[test]
fn rejections_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"q": 2, "m": 3, "n": 7, "defining_set": [1]}"#).unwrap();
    let out = lrclcd(&["verify", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not closed"));
    assert_eq!(
        lrclcd(&["construct", "--family", "zz", "--r", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(lrclcd(&["bogus"]).status.code(), Some(2));
}

#[test]
fn text_format_has_no_escape_codes() {
    let out = Command::new(env!("CARGO_BIN_EXE_lrclcd"))
        .args(["example", "3.3", "--format", "text"])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.contains("optimality   optimal"));
    assert!(!text.contains('\u{1b}'));
}
