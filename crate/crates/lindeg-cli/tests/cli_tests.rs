use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lindeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

#[test]
fn classify_named_m2() {
    let out = run(&["classify", "--named", "M2", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        r#"{"flat":true,"irreducible":false,"iso":false,"normal":false,"pbw":false,"witness":1}"#
    );
}

#[test]
fn count_m2_f2() {
    let out = run(&["count", "--named", "M2", "--n", "2", "--e", "1,2", "--p", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), r#"{"count":33}"#);
}

#[test]
fn rhymes_regular_n4() {
    let out = run(&["rhymes", "--n", "4", "--regular"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 8);
    assert_eq!(v["schemes"].as_array().unwrap().len(), 8);
}

#[test]
fn schubert_n4() {
    let out = run(&["schubert", "--n", "4", "--i", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        r#"{"ell":[1,3,4,5],"h":[0,1,1,1],"length":10,"reduced":true,"word":[2,3,4,5,2,3,4,2,3,1]}"#
    );
}

#[test]
fn demazure_check_n3() {
    let out = run(&["demazure-check", "--n", "3", "--i", "1,2", "--lambda", "1,1,1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["demazure"], v["weyl"]);
}

#[test]
fn tangent_reference_point() {
    let out = run(&[
        "tangent", "--named", "M2", "--n", "4", "--e", "1,2,3,4", "--starts",
        "4,0,3,2,2,0,0,0,0,1,0",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), r#"{"cell_dim":10,"tangent_dim":11}"#);
}

#[test]
fn components_catalan() {
    let out = run(&["components", "--named", "M2", "--n", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 5);
    assert_eq!(v["min_dim"], true);
}

#[test]
fn orbits_census_n4() {
    let out = run(&["orbits", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), r#"{"n":4,"pcal_count":83,"rank_count":77}"#);
}

#[test]
fn rep_json_input() {
    let iso = r#"{"n":2,"m":[{"i":1,"j":1,"mult":1},{"i":1,"j":2,"mult":2},{"i":2,"j":2,"mult":1}]}"#;
    let out = run(&["poincare", "--rep", iso, "--e", "1,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), r#"{"coeffs":[1,2,3,1]}"#);
    let count = run(&["count", "--rep", iso, "--e", "1,2", "--p", "2"]);
    assert_eq!(stdout(&count), r#"{"count":25}"#);
}

#[test]
fn math_error_exit_code_and_shape() {
    let out = run(&["count", "--named", "M2", "--n", "2", "--e", "1,2", "--p", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"], "InvalidParams");
    assert!(v["detail"].is_string());
}

#[test]
fn usage_error_exit_code() {
    let out = run(&["classify", "--named", "M9", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let a = run(&["verify", "--suite", "rhymes"]);
    let b = run(&["verify", "--suite", "rhymes"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["ok"], true);
}

#[test]
fn gamma_check_seeded() {
    let out = run(&["gamma-check", "--n", "3", "--seed", "11", "--samples", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["all_automorphisms"], true);
    assert_eq!(v["stabilizer_consistent"], true);
}

#[test]
fn verify_suite_ses() {
    let out = run(&["verify", "--suite", "ses"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 5);
}
