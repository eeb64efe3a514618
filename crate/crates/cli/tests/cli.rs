use std::process::{Command, Output};

use serde_json::Value;

fn cccspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cccspec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn spectrum_of_d14() {
    let out = cccspec(&["spectrum", "--family", "dihedral", "--n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let pairs: Vec<(f64, u64)> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["value"].as_f64().unwrap(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs, vec![(-1.0, 2), (0.0, 1), (2.0, 1)]);
    assert_eq!(v["energy"].as_f64(), Some(4.0));
    assert_eq!(v["classification"], "Subenergetic");
    assert_eq!(v["integral"], true);
}

#[test]
fn predict_g222_energy() {
    let out = cccspec(&["predict", "--theorem", "3.6", "--p", "2", "--m", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["energy"], 24);
}

#[test]
fn verify_semidihedral_range() {
    let out = cccspec(&["verify", "--family", "semidihedral", "--n-range", "2..8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.contains(" Match ")).count(), 7, "{text}");
}

#[test]
fn mismatch_exits_one() {
    let out = cccspec(&["verify", "--family", "unm", "--n", "2", "--m", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("ShapeMismatch"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["spectrum", "--family", "monster", "--n", "3"][..],
        &["spectrum", "--family", "dihedral", "--n", "7", "--format", "dot"],
        &["spectrum", "--family", "dihedral"],
        &["predict", "--theorem", "9.9"],
        &["verify"],
        &["frobnicate"],
    ] {
        let out = cccspec(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn graph_dot_for_d14() {
    let out = cccspec(&["graph", "--family", "dihedral", "--n", "7", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph"), "{text}");
    assert_eq!(text.matches(" -- ").count(), 3, "{text}");
}

#[test]
fn group_census_for_q8() {
    let out = cccspec(&["group", "--witness", "Q8", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["order"], 8);
    assert_eq!(v["center_order"], 2);
    assert_eq!(v["noncentral_class_count"], 3);
}

#[test]
fn spectrum_and_predict_text_agree() {
    let cases: &[&[&str]] = &[
        &["--family", "dihedral", "--n", "9"],
        &["--family", "dicyclic", "--n", "5"],
        &["--family", "semidihedral", "--n", "4"],
        &["--family", "unm", "--n", "3", "--m", "4"],
        &["--family", "u6n", "--n", "4"],
        &["--family", "v8n", "--n", "5"],
        &["--family", "gpmn", "--p", "3", "--m", "2", "--n", "1"],
    ];
    for case in cases {
        let run = |cmd: &str| {
            let mut args = vec![cmd];
            args.extend_from_slice(case);
            args.extend_from_slice(&["--format", "text"]);
            let out = cccspec(&args);
            assert_eq!(out.status.code(), Some(0), "{cmd} {case:?}");
            stdout(&out)
        };
        assert_eq!(run("spectrum"), run("predict"), "{case:?}");
    }
}

#[test]
fn suite_report_round_trips_and_reports_skips() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("suite.json");
    std::fs::write(
        &config,
        r#"{"suites": [
            {"family": "dihedral", "ranges": {"n": [3, 80]}, "cap": 100},
            {"theorem": "3.7", "ranges": {"p": [2, 3], "z": [1, 4]}}
        ]}"#,
    )
    .unwrap();
    let report = dir.path().join("report.json");
    let csv = dir.path().join("report.csv");
    let out = cccspec(&[
        "suite",
        config.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&report).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suites"][0]["over_cap"], 30);
    assert_eq!(v["suites"][0]["records"].as_array().unwrap().len(), 48);
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again, text);
    let rows = std::fs::read_to_string(&csv).unwrap().lines().count();
    assert_eq!(rows as u64, 1 + v["totals"]["records"].as_u64().unwrap());
}

#[test]
fn suite_with_unknown_family_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.json");
    std::fs::write(&config, r#"{"suites": [{"family": "monster", "ranges": {"n": [1, 3]}}]}"#).unwrap();
    let out = cccspec(&["suite", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
