use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eislat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("one JSON object")
}

#[test]
fn info_on_two_hyperbolic_planes() {
    let v = json(&["info", "U+U"]);
    assert_eq!(v["signature"], "(2,2)");
    assert_eq!(v["unimodular"], true);
    assert_eq!(v["parity"], "even");
    let text = stdout(&run(&["info", "U+U"]));
    assert!(text.lines().any(|l| l.starts_with("signature") && l.ends_with("(2,2)")));
}

#[test]
fn roots_and_disc() {
    let v = json(&["roots", "E6 + A2"]);
    assert_eq!(v["count"], 78);
    assert_eq!(v["type"], "E6+A2");
    let v = json(&["disc", "U(3) + E6"]);
    assert_eq!(v["elementary_divisors"], serde_json::json!(["3", "3", "3"]));
}

#[test]
fn genus_two_cusps() {
    let v = json(&["cusps", "--family", "2,1"]);
    let cusps = v["cusps"].as_array().unwrap();
    assert_eq!(cusps.len(), 4);
    let starred: Vec<&str> = cusps
        .iter()
        .filter(|c| c["starred"] == true)
        .map(|c| c["root_type"].as_str().unwrap())
        .collect();
    assert_eq!(starred, ["(A2^6)*"]);
    assert!(cusps.iter().all(|c| !c["witnesses"].as_array().unwrap().is_empty()));
}

#[test]
fn order4_suite_passes() {
    let o = run(&["verify", "--suite", "order4"]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn full_verification_is_deterministic_and_well_formed() {
    let a = run(&["--format", "json", "verify", "--suite", "all"]);
    let b = run(&["--format", "json", "verify", "--suite", "all"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    let reports: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(reports.len(), 8);
    for r in &reports {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["items", "suite", "version"]);
        for item in r["items"].as_array().unwrap() {
            let prov = item["provenance"].as_str().unwrap();
            assert!(["paper", "derived", "trivial"].contains(&prov), "{prov}");
            assert_eq!(item["status"], "pass", "{item}");
            let anchor = item["anchor"].as_str().unwrap();
            assert!(!anchor.is_empty());
            if prov == "paper" {
                assert_ne!(anchor, "derived");
            }
        }
    }
    let line = out.lines().next().unwrap();
    assert!(line.starts_with(r#"{"suite":"#));
    assert!(line.contains(r#""id":"#) && line.find(r#""id""#) < line.find(r#""anchor""#));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["info", "E9"]).status.code(), Some(2));
    assert_eq!(run(&["info", "U + D(3)"]).status.code(), Some(2));
    assert_eq!(run(&["cusps", "--family", "3,3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "U"]).status.code(), Some(1));
    assert_eq!(run(&["info", "U"]).status.code(), Some(0));
}

#[test]
fn parse_errors_report_offsets() {
    let o = run(&["info", "U + D(3)"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("byte 6"), "{err}");
}
