use std::process::{Command, Output};

use serde_json::Value;

fn run_with(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_schubertine"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_with(args, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn coeff_list(v: &Value) -> Vec<(String, String)> {
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["label"].as_str().unwrap().to_string(), t["c"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn empty_schur_is_one() {
    let v = json_ok(&["giambelli", "--family", "schur", "--k", "0", "--lambda", ""]);
    assert_eq!(v.to_string(), r#"{"terms":[{"c":"1","m":{}}]}"#);
}

#[test]
fn theta_giambelli_has_five_terms() {
    let v = json_ok(&["giambelli", "--family", "theta", "--k", "2", "--lambda", "5,2,1"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 5);
}

#[test]
fn type_c_pieri_coefficients() {
    let v = json_ok(&["pieri", "--group", "c", "--k", "1", "--lambda", "2,1", "--p", "3"]);
    let got = coeff_list(&v);
    let want = [("6", "2"), ("5,1", "4"), ("4,2", "1"), ("4,1,1", "2"), ("3,2,1", "1")];
    let want: Vec<(String, String)> = want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert_eq!(got, want);
}

#[test]
fn rectangle_truncates() {
    let v = json_ok(&["pieri", "--group", "c", "--k", "1", "--lambda", "2,1", "--p", "3", "--rect", "2x5"]);
    let labels: Vec<String> = coeff_list(&v).into_iter().map(|(l, _)| l).collect();
    assert_eq!(labels, ["5,1", "4,2"]);
}

#[test]
fn typed_pieri_in_type_d() {
    let v = json_ok(&["pieri", "--group", "d", "--k", "1", "--lambda", "2,1:2", "--p", "1"]);
    assert!(!coeff_list(&v).is_empty());
    assert_eq!(v["ring"], "B(1)");
}

#[test]
fn json_round_trips_byte_identically() {
    let cases: &[&[&str]] = &[
        &["giambelli", "--family", "eta", "--k", "2", "--lambda", "3,2,2:2"],
        &["pieri", "--group", "a", "--lambda", "2,2,1", "--p", "3"],
        &["series", "--what", "theta", "--lambda", "2,1", "--k", "1", "--z", "3"],
        &["series", "--what", "I", "--w=-2,-1,3", "--k", "1", "--z", "2"],
        &["stanley", "--group", "a", "--w", "2,1,5,4,3", "--tree"],
        &["schubert", "--group", "c", "--w", "2,-1", "--n", "2"],
        &["flag-coeffs", "--group", "a", "--w", "1,3,2", "--a", "1,2"],
        &["index", "--group", "d", "--n", "4", "--k", "1", "--lambda", "2,1:1"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        let text = stdout(&o);
        let text = text.trim_end();
        let v: Value = serde_json::from_str(text).unwrap();
        assert_eq!(v.to_string(), text, "{args:?}");
    }
}

#[test]
fn stanley_matches_series_examples() {
    let v = json_ok(&["stanley", "--group", "c", "--w=3,-1,2,5,4", "--k", "1"]);
    let got = coeff_list(&v);
    assert_eq!(got.len(), 3);
    assert!(got.contains(&("3,1".into(), "2".into())));
    let v = json_ok(&["stanley", "--group", "a", "--w", "2,1,5,4,3"]);
    let labels: Vec<String> = coeff_list(&v).into_iter().map(|(l, _)| l).collect();
    assert_eq!(labels, ["2,1,1", "2,2", "3,1"]);
}

#[test]
fn text_and_latex_formats() {
    let o = run(&["--format", "text", "pieri", "--group", "a", "--lambda", "1", "--p", "1"]);
    assert_eq!(stdout(&o).trim(), "s[2] + s[1,1]");
    let o = run(&["--format", "latex", "pieri", "--group", "a", "--lambda", "1", "--p", "1"]);
    assert_eq!(stdout(&o).trim(), "s_{2} + s_{1,1}");
}

#[test]
fn flag_errors_exit_two_with_usage() {
    for args in [
        &["pieri", "--group", "x", "--lambda", "1", "--p", "1"][..],
        &["pieri", "--group", "a", "--lambda", "1"],
        &["pieri", "--group", "a", "--lambda", "1,x", "--p", "1"],
        &["pieri", "--group", "c", "--lambda", "1", "--p", "1", "--rect", "3by4"],
        &["nonsense"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"), "{args:?}");
    }
}

#[test]
fn precondition_violations_exit_one_with_json() {
    for (args, name) in [
        (&["index", "--group", "c", "--n", "3", "--k", "5", "--lambda", "1"][..], "level"),
        (&["giambelli", "--family", "eta", "--k", "1", "--lambda", "2,1"], "type"),
        (&["stanley", "--group", "c", "--w", "2,1,3", "--k", "2"], "increasing"),
        (&["flag-coeffs", "--group", "a", "--w", "2,1,3", "--a", "2,1"], "sequence"),
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["error"]["kind"], "precondition", "{args:?}");
        assert_eq!(v["error"]["precondition"], name, "{args:?}");
    }
}

fn without_timing(mut v: Value) -> Value {
    for s in v["suites"].as_array_mut().unwrap() {
        s.as_object_mut().unwrap().remove("elapsed_ms");
    }
    v
}

#[test]
fn verify_passes_and_ignores_thread_count() {
    let args = ["verify", "--suite", "trees"];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    let a = without_timing(serde_json::from_str(&stdout(&o)).unwrap());
    let o = run_with(&args, &[("SCHUBERTINE_THREADS", "1")]);
    assert_eq!(o.status.code(), Some(0));
    let b = without_timing(serde_json::from_str(&stdout(&o)).unwrap());
    assert_eq!(a, b);
    assert_eq!(a["passed"], true);
}

#[test]
fn verify_by_criterion_number() {
    let o = run(&["--format", "text", "verify", "--suite", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS criterion  2 [pieri-a]"));
}
