use std::process::{Command, Output};

use serde_json::Value;

fn rankalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = rankalg(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn ascending_dimension() {
    let v = json(&["model", "dim", "--kind", "ascending", "--poset", "boolean:4"]);
    assert_eq!(v["dimension"], 11);
    let text = rankalg(&["model", "dim", "--kind", "ascending", "--poset", "boolean:4"]);
    assert!(String::from_utf8(text.stdout).unwrap().contains("11"));
}

#[test]
fn three_item_inversion_markov() {
    let v = json(&["model", "markov", "--kind", "inversion", "--poset", "antichain:3"]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["degrees"]["2"], 2);
}

#[test]
fn four_item_inversion_hilbert() {
    let v = json(&["model", "hilbert", "--kind", "inversion", "--poset", "antichain:4"]);
    let num: Vec<&str> = v["numerator"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(num, ["1", "17", "72", "72", "17", "1"]);
    assert_eq!(v["k"], 7);
    assert_eq!(v["degree"], "180");
}

#[test]
fn poset_file_matches_shorthand() {
    let dir = std::env::temp_dir().join(format!("rankalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mixed.json");
    std::fs::write(&path, r#"{"n":3,"relations":[[1,2]]}"#).unwrap();
    let a = json(&["model", "markov", "--kind", "inversion", "--poset-file", path.to_str().unwrap()]);
    let b = json(&["model", "markov", "--kind", "inversion", "--poset", "mixed:2,1"]);
    assert_eq!(a["count"], b["count"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(rankalg(&["verify", "--tier", "medium"]).status.code(), Some(2));
    assert_eq!(rankalg(&["model", "dim", "--kind", "ascending", "--poset", "boolean:x"]).status.code(), Some(2));
    assert_eq!(rankalg(&["model", "dim", "--kind", "nope", "--poset", "boolean:3"]).status.code(), Some(2));
    assert_eq!(rankalg(&["pl", "check", "--poset", "antichain:3", "--poly", "p_{123} +"]).status.code(), Some(2));
    assert_eq!(rankalg(&["model", "dim", "--kind", "ascending", "--poset-file", "/nonexistent/p.json"]).status.code(), Some(2));
    assert_eq!(rankalg(&["--help"]).status.code(), Some(0));
}

#[test]
fn cap_abort_exits_3_with_partial_report() {
    let out = rankalg(&["--cap", "5", "--format", "json", "model", "markov", "--kind", "inversion", "--poset", "antichain:4"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["sections"][0]["checks"][0]["status"], "skipped");
}

#[test]
fn failing_check_exits_1() {
    let ok = rankalg(&["pl", "check", "--poset", "antichain:3", "--poly", "p123*p231*p312 - p132*p213*p321"]);
    let bad = rankalg(&["pl", "check", "--poset", "antichain:3", "--poly", "p123 - p132"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_ne!(ok.status.code(), bad.status.code());
}

#[test]
fn verify_exit_code_reflects_failures() {
    let out = rankalg(&["--format", "json", "verify", "--tier", "fast"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let any_fail = v["sections"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|s| s["checks"].as_array().unwrap())
        .any(|c| c["status"] == "fail");
    assert_eq!(out.status.code(), Some(if any_fail { 1 } else { 0 }));
}

#[test]
fn output_is_deterministic_across_runs_and_threads() {
    let cases: [&[&str]; 3] = [
        &["model", "markov", "--kind", "birkhoff", "--poset", "mixed:3,1"],
        &["model", "groebner", "--kind", "ascending", "--poset", "antichain:4"],
        &["pl", "bt", "--poset", "mixed:2,2", "--trials", "5"],
    ];
    for args in cases {
        let mut seq = vec!["--jobs", "1", "--format", "json"];
        seq.extend_from_slice(args);
        let mut par = vec!["--jobs", "4", "--format", "json"];
        par.extend_from_slice(args);
        let a = rankalg(&seq);
        let b = rankalg(&seq);
        let c = rankalg(&par);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        // The echoed command differs only in the job count.
        let strip = |o: &Output| String::from_utf8(o.stdout.clone()).unwrap().replace("\"4\"", "\"1\"");
        assert_eq!(strip(&a), strip(&c), "{args:?}");
    }
}
