use std::process::{Command, Output};

use serde_json::Value;

fn pb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pb"))
        .args(args)
        .env_remove("PB_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn masses_csv_has_four_rows() {
    let o = pb(&["masses", "--alpha-inv", "137.036", "--me", "0.51100", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,label,mass_mev,cumulative_sum");
    assert_eq!(lines.len(), 5);
    let mass = |i: usize| -> f64 { lines[i].split(',').nth(2).unwrap().parse().unwrap() };
    assert_eq!(mass(1), 0.511);
    assert!((mass(2) - 105.55).abs() <= 0.01);
    assert!((mass(3) - 1786.2).abs() <= 0.1);
    assert!((mass(4) - 4622.2).abs() <= 0.1);
    assert!(lines[4].ends_with(",132"));
}

#[test]
fn masses_precision_and_sweep_tables() {
    let o = pb(&["masses", "--format", "csv", "--table", "precision"]);
    let text = stdout(&o);
    assert!(text.starts_with("particle,predicted,experimental,rel_precision\n"));
    assert_eq!(text.lines().count(), 4);

    let o = pb(&["masses", "--format", "csv", "--table", "sweep", "--alpha-sweep", "137.036,135"]);
    let text = stdout(&o);
    let rows: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[1] < rows[0]);
}

#[test]
fn masses_json_overrides_experimental_values() {
    let o = pb(&["masses", "--exp-mu", "105.5", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["inputs"]["exp_mu"], 105.5);
    assert_eq!(v["precision"][0]["experimental"], 105.5);
    assert_eq!(v["masses"].as_array().unwrap().len(), 4);
}

#[test]
fn closure_json_reports_dimension() {
    let o = pb(&["closure", "--s", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["algebra_dim"], 8);
    assert_eq!(v["command"], "closure");
    assert_eq!(v["pass"], true);
}

#[test]
fn closure_emits_basis() {
    let o = pb(&["closure", "--s", "1", "--emit", "json"]);
    let v = json(&o);
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    assert_eq!(v["dim_space"], 2);
}

#[test]
fn susy_k2_all_relations_pass() {
    let o = pb(&["susy", "--k", "2", "--nmax", "24", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 13);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    assert_eq!(v["doublet_coefficients"][0], 1);
    assert_eq!(v["doublet_coefficients"][22], 276);
}

#[test]
fn susy_complex_coupling() {
    let o = pb(&["susy", "--k", "1", "--nmax", "6", "--g", "-0.5,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn ops_emits_operator_set() {
    let o = pb(&["ops", "--s", "2", "--emit", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let set = pbosc::io::parse_operator_set(text.trim()).unwrap();
    assert_eq!(set, pbosc::operators::derived_generators(pbosc::operators::Cutoff::new(2).unwrap()));
}

#[test]
fn gellmann_oscillator_flags_lambda8() {
    let o = pb(&["gellmann", "--paper-su3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["lambda8_reconstructed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 8);
    assert_eq!(pb(&["gellmann", "--n", "5"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["closure"],
        &["closure", "--s", "2", "--bogus"],
        &["masses", "--format", "xml"],
        &["masses", "--me", "-1"],
        &["gellmann", "--n", "4", "--paper-su3"],
        &["susy", "--k", "1", "--nmax", "4", "--g", "1"],
    ] {
        let o = pb(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["susy", "--k", "3", "--nmax", "2"][..],
        &["ops", "--s", "0"],
        &["verify-all", "--max-s", "0"],
        &["susy", "--k", "1", "--nmax", "3", "--g", "0,0"],
    ] {
        let o = pb(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("pb: "));
    }
}

#[test]
fn injected_fault_exits_one_with_named_check() {
    let o = pb(&["verify-all", "--max-s", "2", "--inject-fault", "lambda8-zero", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["pass"], false);
    let failed: Vec<&Value> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["name"], "gellmann[s=2] oscillator vs standard");
}

#[test]
fn tight_tolerance_fails_with_exit_one() {
    let o = pb(&["susy", "--k", "2", "--nmax", "24", "--tol", "1e-18"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn tolerance_is_recorded() {
    let o = pb(&["closure", "--s", "2", "--tol", "1e-6", "--format", "json"]);
    assert_eq!(json(&o)["tolerance"], 1e-6);
    let o = Command::new(env!("CARGO_BIN_EXE_pb"))
        .args(["ops", "--s", "3", "--format", "json"])
        .env("PB_TOL", "1e-7")
        .output()
        .unwrap();
    assert_eq!(json(&o)["tolerance"], 1e-7);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["verify-all", "--format", "json"];
    let a = pb(&args);
    let b = pb(&args);
    let c = pb(&["verify-all", "--format", "json", "--sequential"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn json_report_round_trips() {
    let o = pb(&["closure", "--s", "3", "--format", "json"]);
    let text = stdout(&o);
    let r = pbosc::report::Report::from_json(&text).unwrap();
    assert_eq!(r.to_json(), text);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let o = pb(&["verify-all", "--max-s", "1", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("check,residual,tolerance,status,note\n"));
}
