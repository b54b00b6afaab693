use std::process::{Command, Output};

use quartic_circulant::census::{self, CensusRecord};
use serde_json::Value;

fn circnull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circnull"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_six_vertex_text() {
    let out = circnull(&["analyze", "6", "1", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("nullity    3"));
    assert!(text.contains("sum_minus_gcd"));
    assert!(text.contains("nut        false"));
}

#[test]
fn analyze_json_matches_census_row() {
    for (n, p, q) in [(6, 1, 2), (8, 1, 2), (16, 2, 6), (24, 3, 9), (31, 4, 11)] {
        let out = circnull(&[
            "analyze",
            &n.to_string(),
            &p.to_string(),
            &q.to_string(),
            "--format",
            "json",
        ]);
        assert!(out.status.success());
        let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
        let row = census::census(n, n)
            .unwrap()
            .into_iter()
            .find(|r| r.p == p as u64 && r.q == q as u64)
            .unwrap();
        let row = serde_json::to_value(row).unwrap();
        for (key, value) in row.as_object().unwrap() {
            assert_eq!(&json[key], value, "field {key} of Circ({n}, {{{p}, {q}}})");
        }
    }
}

#[test]
fn basis_subcommand_reports_alternating_nut_vector() {
    let out = circnull(&["basis", "8", "1", "2", "--format", "json"]);
    assert!(out.status.success());
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["nullspace"]["kind"], "AlternatingSpan");
    assert_eq!(
        json["nullspace"]["basis"],
        serde_json::json!([[1, -1, 1, -1, 1, -1, 1, -1]])
    );
}

#[test]
fn invalid_graphs_exit_with_two() {
    for args in [
        ["analyze", "7", "3", "2"],
        ["analyze", "4", "1", "2"],
        ["analyze", "10", "2", "5"],
        ["analyze", "9", "-1", "2"],
    ] {
        let out = circnull(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(circnull(&["bogus"]).status.code(), Some(2));
    assert_eq!(circnull(&["analyze", "8"]).status.code(), Some(2));
    assert_eq!(
        circnull(&["census", "--n-min", "6", "--n-max", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        circnull(&["extremal", "--n", "12", "--class", "some"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(circnull(&["--help"]).status.code(), Some(0));
}

#[test]
fn census_csv_round_trips() {
    let out = circnull(&["census", "--n-min", "5", "--n-max", "20"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with(census::CSV_HEADER));
    assert!(text
        .lines()
        .any(|l| l == "6,1,2,3,true,true,false,true,sum_minus_gcd,true,true"));
    let parsed = census::from_csv(&text).unwrap();
    assert_eq!(parsed, census::census(5, 20).unwrap());
}

#[test]
fn census_json_round_trips() {
    let out = circnull(&[
        "census", "--n-min", "5", "--n-max", "20", "--format", "json",
    ]);
    assert!(out.status.success());
    let parsed: Vec<CensusRecord> = census::from_json(&stdout(&out)).unwrap();
    assert_eq!(census::to_json(&parsed), stdout(&out));
}

#[test]
fn census_to_unwritable_path_fails() {
    let out = circnull(&[
        "census",
        "--n-min",
        "5",
        "--n-max",
        "6",
        "--out",
        "/nonexistent-dir/out.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn extremal_min_twelve() {
    let out = circnull(&[
        "extremal", "--n", "12", "--class", "all", "--mode", "min", "--format", "json",
    ]);
    assert!(out.status.success());
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json[0]["value"], 1);
    assert_eq!(json[0]["attaining"], serde_json::json!([[2, 3], [3, 4]]));
}

#[test]
fn extremal_max_multiple_of_eight() {
    let out = circnull(&["extremal", "--n", "16", "--mode", "max", "--format", "json"]);
    assert!(out.status.success());
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let by_class: Vec<(String, u64)> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["class"].as_str().unwrap().to_owned(),
                r["value"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(by_class, vec![("all".into(), 12), ("connected".into(), 10)]);
    assert_eq!(json[0]["attaining"], serde_json::json!([[2, 6]]));
}

#[test]
fn extremal_range_covers_every_order() {
    let out = circnull(&[
        "extremal",
        "--n-min",
        "5",
        "--n-max",
        "9",
        "--class",
        "connected",
        "--mode",
        "max",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1 + 5);
}

#[test]
fn verify_small_range_passes() {
    let out = circnull(&["verify", "--n-max", "24"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));
    for mode in ["formula", "extremal", "bases"] {
        assert!(circnull(&["verify", "--n-max", "16", "--mode", mode])
            .status
            .success());
    }
}
