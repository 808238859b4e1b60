use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn intdef(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intdef")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn verify_int_poly_passes() {
    let o = intdef(&["verify", "--ring", "int-poly", "--bound", "16", "--degree", "2", "--height", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    for suite in ["hypotheses", "geometric-identity", "telescoping-identity", "constant-annihilation"] {
        assert!(text.lines().any(|l| l.starts_with(suite) && l.ends_with("pass")), "{suite}: {text}");
    }
}

#[test]
fn verify_qplane_reports_worked_products() {
    let o = intdef(&["verify", "--ring", "qplane", "--q", "2", "--bound", "8", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    let worked = v["suites"].as_array().unwrap().iter().find(|s| s["name"] == "worked-example").unwrap();
    assert_eq!(worked["status"], "pass");
    assert_eq!(worked["details"]["(3+x)*(2+y)"], "x*y + 2*x + 3*y + 6");
    assert_eq!(worked["details"]["(2+y)*(3+x)"], "2*x*y + 2*x + 3*y + 6");
    let pow = v["suites"].as_array().unwrap().iter().find(|s| s["name"] == "pow-characterization").unwrap();
    assert_eq!(pow["status"], "skipped");
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "--ring", "qplane", "--q", "0"][..],
        &["verify", "--ring", "int-poly", "--q", "2"],
        &["verify", "--bound", "1"],
        &["verify", "--height", "0"],
        &["verify", "--ring", "qplane", "--degree", "2"],
        &["verify", "--bidegree", "1,1"],
        &["frobnicate"],
    ] {
        let o = intdef(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn classify_rational_polynomials() {
    let o = intdef(&["classify", "--ring", "rat-poly", "3", "1/2", "x"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert!(lines[0].starts_with("3: integer: true  natural: true  formula: ProvenTrue"), "{}", lines[0]);
    assert!(lines[0].ends_with("n = 3"));
    assert!(lines[1].starts_with("1/2: integer: false  natural: false  formula: ProvenFalse"));
    assert!(lines[2].starts_with("x: integer: false  natural: false  formula: ProvenFalse"));
}

#[test]
fn classify_json_records() {
    let o = intdef(&["classify", "--json", "0", "1", "-1", "x+1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let records = v["records"].as_array().unwrap();
    let field = |i: usize, k: &str| records[i][k]["member"].clone();
    assert_eq!(records.len(), 4);
    assert_eq!((field(0, "natural"), field(0, "integer")), (Value::Bool(true), Value::Bool(true)));
    assert_eq!((field(1, "natural"), field(1, "integer")), (Value::Bool(true), Value::Bool(true)));
    assert_eq!((field(2, "natural"), field(2, "integer")), (Value::Bool(false), Value::Bool(true)));
    assert_eq!((field(3, "natural"), field(3, "integer")), (Value::Bool(false), Value::Bool(false)));
    assert!(records.iter().all(|r| r["agrees"] == Value::Bool(true)));
}

#[test]
fn classify_quantum_plane_monomial() {
    let o = intdef(&["classify", "--ring", "qplane", "--q", "i", "x*y"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("x*y: integer: false  natural: false"));
}

#[test]
fn classify_all_invalid_is_usage_error() {
    let o = intdef(&["classify", "foo"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("foo"));
}

#[test]
fn eval_divisibility_atom() {
    let o = intdef(&["eval", "--ring", "int-poly", "(x-1)|(t-1)", "--bind", "t=x^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ProvenTrue"));
    let o = intdef(&["eval", "--ring", "int-poly", "(x-1)|(t-1)", "--bind", "t=2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"]["status"], "proven-false");
}

#[test]
fn eval_syntax_error_reports_position() {
    let o = intdef(&["eval", "exists y. y = x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte 8"), "{}", stderr(&o));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "ring = \"rat-poly\"\nbound = 4\ndegree = 0\nheight = 1").unwrap();
    let path = file.path().to_str().unwrap();

    let o = intdef(&["enumerate", "--config", path, "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["config"]["ring"], "rat-poly");
    assert_eq!(v["config"]["bound"], 4);

    let o = intdef(&["enumerate", "--config", path, "--height", "2"]);
    assert_eq!(stdout(&o).lines().count(), 9);
}

#[test]
fn bad_config_file_is_usage_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "ring = 7").unwrap();
    let o = intdef(&["verify", "--config", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["verify", "--ring", "rat-poly", "--degree", "1", "--height", "2", "--bound", "8", "--json"];
    let (a, b) = (intdef(&args), intdef(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn powers_lists_exponents() {
    let o = intdef(&["powers", "--bound", "3"]);
    assert_eq!(stdout(&o), "1: x\n2: x^2\n3: x^3\n");
}
