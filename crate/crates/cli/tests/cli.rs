use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_demazure-pbw")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn sp6_has_eight_inequalities() {
    let v = json(&["--type", "C", "--rank", "3", "--start", "1", "inequalities"]);
    assert_eq!(v.as_array().unwrap().len(), 8);
}

#[test]
fn a3_count_and_points() {
    let v = json(&["count", "--type", "A", "--rank", "3", "--weight", "0,1,0"]);
    assert_eq!(v["count"], 5);
    let p = json(&["points", "--type", "A", "--rank", "3", "--weight", "0,1,0"]);
    assert_eq!(p["points"].as_array().unwrap().len(), 5);
}

#[test]
fn b2_dim_check_passes() {
    let v = json(&["dim-check", "--type", "B", "--rank", "2", "--weight", "1,0"]);
    assert_eq!(v["points"], 5);
    assert_eq!(v["dim"], 5);
    assert_eq!(v["pass"], true);
}

#[test]
fn points_round_trip_through_membership() {
    let base = ["--type", "C", "--rank", "3", "--weight", "1,0,1"];
    let p = json(&[&["points"], &base[..]].concat());
    let pts = p["points"].as_array().unwrap();
    assert!(!pts.is_empty());
    for pt in pts.iter().step_by(7) {
        let s: Vec<String> = pt.as_array().unwrap().iter().map(|x| x.to_string()).collect();
        let joined = s.join(",");
        let m = json(&[&["membership", "--point", joined.as_str()], &base[..]].concat());
        assert_eq!(m["inside"], true);
    }
    let first = pts[0].as_array().unwrap();
    let outside: Vec<String> = (0..first.len()).map(|i| if i == 0 { "9".into() } else { "0".into() }).collect();
    let out = run(&[&["membership", "--point", outside.join(",").as_str()], &base[..]].concat());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        vec!["--bogus"],
        vec!["count", "--type", "A", "--rank", "0", "--weight", "1"],
        vec!["count", "--type", "C", "--rank", "3", "--weight", "1,-1,0"],
        vec!["count", "--type", "C", "--rank", "3", "--weight", "1,0"],
        vec!["count", "--type", "C", "--rank", "3", "--start", "9", "--weight", "1,0,0"],
        vec!["count", "--type", "C", "--rank", "3", "--word", "full", "--weight", "1,0,0"],
        vec!["points", "--type", "A", "--rank", "3"],
        vec!["decompose", "--type", "A", "--rank", "2", "--weight", "1,0", "--point", "5,5"],
        vec!["poset", "--type", "A", "--rank", "3", "--format", "csv"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn csv_points_have_header() {
    let out = run(&["points", "--type", "A", "--rank", "2", "--weight", "1,0", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1 + 3);
    assert!(lines[0].starts_with("a[1,1]"));
}

#[test]
fn d4_full_ideal_check() {
    let v = json(&["ideal-check", "--type", "D", "--rank", "4", "--word", "full", "--weight", "0,1,0,0"]);
    assert_eq!(v["equal"], true);
}

#[test]
fn small_sweep_csv() {
    let out = run(&["sweep", "--types", "A", "--ranks", "2", "--sum-max", "1", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 * 2);
}

#[test]
fn fixtures_run() {
    let out = run(&["fixtures", "--fixture", "intro-sp6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["fixtures", "--fixture", "nope"]).status.code(), Some(2));
}
