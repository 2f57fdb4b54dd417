use std::process::{Command, Output};

use kummer_cli::{Check, Report, Status};
use serde_json::Value;

fn kummer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kummer"))
        .args(args)
        .env_remove("KUMMER_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn check<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

fn without_wall_time(out: &Output) -> Value {
    let mut v = json(out);
    v.as_object_mut().unwrap().remove("wall_time_seconds");
    v
}

#[test]
fn quartic_at_level_seven() {
    let out = kummer(&["quartic-verify", "--sigma-level", "7", "--lambda", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let c = check(&v, "quartic.level7");
    assert_eq!(c["status"], "pass");
    assert_eq!(c["summary"], "zero through order 9");
    assert_eq!(c["validated_order"], 9);
}

#[test]
fn ricci_leading_terms() {
    let out = kummer(&["ricci-leading", "--lambda", "symbolic"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for level in [3, 5, 7] {
        let r = |c: &str| check(&v, &format!("ricci.level{level}.{c}"))["witness"]["lowest_terms"].clone();
        assert_eq!(r("R11"), "-1024*u^5*v^5");
        assert_eq!(r("R12"), "1024*u^5*v^7");
        assert_eq!(r("R22"), "-1024*u^5*v^9 - 1024*u^7*v^7 - 1024*u^9*v^5");
    }
    assert_eq!(v["status"], "pass");
}

#[test]
fn low_order_is_qualified_not_failed() {
    let out = kummer(&["ricci-leading", "--sigma-level", "3", "--max-order", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(check(&v, "ricci.level3.R22")["status"], "qualified");
    assert_eq!(check(&v, "ricci.level3.R11")["status"], "pass");
    assert_eq!(v["status"], "qualified");
}

#[test]
fn chern_within_tolerance() {
    let out = kummer(&["chern", "--tol", "1e-6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let c = check(&v, "chern.value");
    assert!((c["witness"]["value"].as_f64().unwrap() - 2.0).abs() <= 1e-6);
    assert_eq!(c["tolerance"], 1e-6);
}

#[test]
fn config_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["quartic-verify", "--lambda", "1,2,3"],
        &["quartic-verify", "--lambda", "1,2,3,4,5/0"],
        &["quartic-verify", "--lambda", "1,2,3,4,a"],
        &["quartic-verify", "--max-order", "21"],
        &["quartic-verify", "--sigma-level", "7", "--max-order", "8"],
        &["quartic-verify", "--sigma-level", "4"],
        &["dz-check", "--points", "0"],
        &["chern", "--tol", "1e-12"],
    ] {
        let out = kummer(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn env_overrides_default_order() {
    let run = |val: &str| {
        Command::new(env!("CARGO_BIN_EXE_kummer"))
            .args(["quartic-verify", "--sigma-level", "3"])
            .env("KUMMER_MAX_ORDER", val)
            .output()
            .unwrap()
    };
    let out = run("10");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["config"]["max_order"], 10);
    assert_eq!(run("30").status.code(), Some(2));
}

#[test]
fn failing_check_exits_one() {
    let mut r = Report::new("x", Value::Null, vec![Check::new("a", Status::Pass, "")], 0.0);
    assert_eq!(r.exit_code(), 0);
    r.checks.push(Check::new("b", Status::Qualified, ""));
    assert_eq!(r.exit_code(), 0);
    r.checks.push(Check::new("c", Status::Fail, ""));
    assert_eq!(r.exit_code(), 1);
    assert_eq!(r.status(), Status::Fail);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["inversion-verify", "--points", "3", "--seed", "99"][..],
        &["pde-verify", "--sigma-level", "5"],
        &["sphere-verify"],
    ] {
        let a = kummer(args);
        let b = kummer(args);
        assert_eq!(without_wall_time(&a), without_wall_time(&b), "{args:?}");
    }
    let a = kummer(&["ricci-point", "--points", "2", "--seed", "1"]);
    let b = kummer(&["ricci-point", "--points", "2", "--seed", "2"]);
    assert_ne!(without_wall_time(&a), without_wall_time(&b));
}

#[test]
fn json_is_canonical_and_round_trips() {
    let out = kummer(&["dz-check", "--points", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    // re-serializing through sorted maps reproduces the bytes only if the
    // keys were already sorted
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    let r = Report::from_json(&text).unwrap();
    assert_eq!(r.to_json(), text);
    let names: Vec<_> = r.checks.iter().map(|c| c.name.clone()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    // exact values travel as strings
    assert_eq!(check(&v, "dz.witness")["witness"]["dZ_du"], "80/27");
}

#[test]
fn text_table_is_aligned() {
    let out = kummer(&["goepel", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text
        .lines()
        .skip_while(|l| !l.starts_with("CHECK"))
        .take_while(|l| !l.is_empty())
        .collect();
    assert_eq!(rows.len(), 4);
    let col = rows[0].find("STATUS").unwrap();
    for r in &rows[1..] {
        assert!(r[col..].starts_with("pass"), "{r}");
    }
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("kummer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = kummer(&["fresnel", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(Report::from_json(&written).unwrap().checks.len(), 1);
    std::fs::remove_dir_all(dir).unwrap();
}
