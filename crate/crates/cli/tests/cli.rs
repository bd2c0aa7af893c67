//! End-to-end tests of the `braidchar` binary: spec examples, exit codes,
//! determinism and JSON/CSV consistency.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidchar"))
        .args(args)
        .env("BRAIDCHAR_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n'), "JSON output is newline-terminated");
    serde_json::from_str(&text).unwrap()
}

fn coeffs(v: &Value) -> Vec<i64> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect()
}

#[test]
fn hilbert_examples() {
    let v = json(&["hilbert", "--algebra", "pvb-dual", "--n", "4"]);
    assert_eq!(coeffs(&v["coeffs"]), [1, 12, 36, 24]);
    let v = json(&["hilbert", "--algebra", "pfb-dual", "--n", "3"]);
    assert_eq!(coeffs(&v["coeffs"]), [1, 3, 1]);
    let v = json(&["hilbert", "--algebra", "pvb-dual", "--n", "1"]);
    assert_eq!(coeffs(&v["coeffs"]), [1]);
}

#[test]
fn character_examples() {
    let v = json(&[
        "character", "--algebra", "pfb-dual", "--n", "2", "--cycle-type", "2", "--method", "both",
    ]);
    assert_eq!(coeffs(&v["coeffs"]), [1, -1]);
    assert_eq!(v["match"], Value::Bool(true));
    let v = json(&[
        "character", "--algebra", "pvb-dual", "--n", "4", "--cycle-type", "2,2", "--method", "formula",
    ]);
    assert_eq!(coeffs(&v["coeffs"]), [1, 0, -4, 0]);
    assert!(v.get("match").is_none());
    let v = json(&[
        "character", "--algebra", "pvb-dual", "--n", "3", "--cycle-type", "1,1,1", "--method", "oracle",
    ]);
    assert_eq!(coeffs(&v["coeffs"]), [1, 6, 6]);
}

#[test]
fn sigma_is_converted_to_cycle_type() {
    let v = json(&["character", "--algebra", "pfb-dual", "--n", "4", "--sigma", "(1 2)(3 4)"]);
    assert_eq!(v["mu"], "2,2");
    assert_eq!(coeffs(&v["coeffs"]), [1, -2, -1, 1]);
    assert_eq!(v["match"], Value::Bool(true));
}

#[test]
fn default_method_respects_oracle_bounds() {
    let v = json(&["character", "--algebra", "pfb-dual", "--n", "7", "--cycle-type", "4,3"]);
    assert_eq!(v["method"], "both");
    assert!(v.get("warning").is_none());
    let v = json(&["character", "--algebra", "pvb-dual", "--n", "7", "--cycle-type", "4,3"]);
    assert_eq!(v["method"], "formula");
    assert!(v["warning"].as_str().unwrap().contains("oracle"));
}

#[test]
fn decompose_examples() {
    let v = json(&["decompose", "--algebra", "pvb-dual", "--n", "4", "--k", "1", "--method", "both"]);
    assert_eq!(v["summary"], "V(0)+2V(1)+V(2)+V(1,1)");
    assert_eq!(v["match"], Value::Bool(true));
    assert_eq!(v["multiplicities"][1]["lambda"], "3,1");
    assert_eq!(v["multiplicities"][1]["cf"], "V(1)");
    assert_eq!(v["multiplicities"][1]["mult"], 2);
    let v = json(&["decompose", "--algebra", "pfb-dual", "--n", "2", "--k", "1"]);
    assert_eq!(v["summary"], "V(1)");
    let v = json(&["decompose", "--algebra", "pfb-dual", "--n", "5", "--degree", "2", "--method", "both"]);
    assert_eq!(v["match"], Value::Bool(true));
}

#[test]
fn series_examples() {
    let v = json(&["series", "--algebra", "pvb-dual", "--n", "2", "--cycle-type", "1,1", "--trunc", "6"]);
    let strs: Vec<&str> = v["coeffs"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(strs, ["1", "2", "4", "8", "16", "32", "64"]);
    assert_eq!(v["identity_holds"], Value::Bool(true));
    let v = json(&["series", "--algebra", "pfb-dual", "--n", "3", "--trunc", "5"]);
    let strs: Vec<&str> = v["coeffs"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(strs, ["1", "3", "8", "21", "55", "144"]);
}

#[test]
fn verify_suites_pass() {
    let v = json(&["verify", "--suite", "koszul", "--n", "4", "--trunc", "12"]);
    assert_eq!(v["passed"], Value::Bool(true));
    let v = json(&["verify", "--suite", "multiplicities", "--n-max", "7"]);
    assert_eq!(v["passed"], Value::Bool(true));
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.contains("pfb trivial multiplicity all zero")));
    assert!(names.iter().any(|n| n.contains("alternating equal & vanishing")));
    let v = json(&["verify", "--suite", "characters", "--n-max", "6"]);
    assert_eq!(v["passed"], Value::Bool(true));
}

#[test]
fn verify_all_passes() {
    let v = json(&["verify", "--suite", "all"]);
    assert_eq!(v["passed"], Value::Bool(true), "{v}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["hilbert", "--algebra", "nope", "--n", "3"][..],
        &["hilbert", "--algebra", "pvb-dual", "--n", "0"],
        &["character", "--algebra", "pvb-dual", "--n", "4", "--cycle-type", "3"],
        &["character", "--algebra", "pvb-dual", "--n", "2", "--sigma", "(1 2 3)"],
        &["decompose", "--algebra", "pvb-dual", "--n", "3", "--k", "3"],
        &["verify", "--suite", "nope"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["decompose", "--algebra", "pvb-dual", "--n", "6", "--k", "3"];
    let a = run(&args).stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_braidchar"))
        .args(args)
        .env("BRAIDCHAR_THREADS", "1")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, b);
}

#[test]
fn csv_matches_json() {
    let args = ["decompose", "--algebra", "pfb-dual", "--n", "6", "--k", "2", "--method", "both"];
    let v = json(&args);
    let mut with_csv = args.to_vec();
    with_csv.extend(["--output", "csv"]);
    let out = run(&with_csv);
    assert!(out.status.success());
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    let formula: Vec<(String, String, i64)> = rows
        .iter()
        .filter(|r| &r[0] == "formula")
        .map(|r| (r[1].to_string(), r[2].to_string(), r[3].parse().unwrap()))
        .collect();
    let from_json: Vec<(String, String, i64)> = v["multiplicities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| {
            (
                m["lambda"].as_str().unwrap().to_string(),
                m["cf"].as_str().unwrap().to_string(),
                m["mult"].as_i64().unwrap(),
            )
        })
        .collect();
    assert_eq!(formula, from_json);
    assert_eq!(rows.iter().filter(|r| &r[0] == "oracle").count(), from_json.len());

    let h = json(&["hilbert", "--algebra", "pvb-dual", "--n", "5"]);
    let out = run(&["hilbert", "--algebra", "pvb-dual", "--n", "5", "--output", "csv"]);
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let col: Vec<i64> = r.records().map(|r| r.unwrap()[1].parse().unwrap()).collect();
    assert_eq!(col, coeffs(&h["coeffs"]));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("braidchar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h.json");
    let out = run(&["hilbert", "--algebra", "pfb-dual", "--n", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(coeffs(&v["coeffs"]), [1, 6, 7, 1]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn basis_dump_formats() {
    let out = run(&["basis", "--algebra", "pvb-dual", "--n", "3", "--k", "2", "--output", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.starts_with('(') && l.contains(',')));
    let out = run(&["basis", "--algebra", "pfb-dual", "--n", "3", "--k", "0", "--output", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1\n");
}
