use std::process::{Command, Output};

use serde_json::Value;

fn relrisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relrisk")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn close(v: &Value, x: f64, tol: f64) -> bool {
    (v.as_f64().unwrap() - x).abs() < tol
}

const TABLE: &str = r#"{"a1_y1":20,"a1_y0":80,"a0_y1":40,"a0_y0":60}"#;

#[test]
fn measure_on_a_table() {
    let out = relrisk(&["measure", "--table", TABLE, "--scales", "rr,sr,grrr,switch"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(close(&v[0]["value"], 0.5, 1e-12));
    assert!(close(&v[1]["value"], 4.0 / 3.0, 1e-12));
    assert!(close(&v[2]["value"], 0.5, 1e-12));
    assert_eq!(v[3]["selected"], "rr");
    assert!(v[0]["ci_low"].as_f64().unwrap() < 0.5);
}

#[test]
fn table_file_matches_inline_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    std::fs::write(&path, TABLE).unwrap();
    let a = relrisk(&["measure", "--table-file", path.to_str().unwrap()]);
    let b = relrisk(&["measure", "--table", TABLE]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_and_json_agree_at_the_requested_precision() {
    let j = json(&relrisk(&["measure", "--p0", "0.37", "--p1", "0.11"]));
    let c = relrisk(&["--output", "csv", "--precision", "5", "measure", "--p0", "0.37", "--p1", "0.11"]);
    let text = String::from_utf8(c.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    for (rec, obj) in rdr.records().zip(j.as_array().unwrap()) {
        let rec = rec.unwrap();
        assert_eq!(&rec[0], obj["scale"].as_str().unwrap());
        let expected = format!("{:.5}", obj["value"].as_f64().unwrap());
        assert_eq!(&rec[1], expected);
    }
}

#[test]
fn undefined_scales_are_reported_not_dropped() {
    let out = relrisk(&["measure", "--p0", "0", "--p1", "0.2", "--scales", "rr,rd"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v[0]["value"].is_null());
    assert_eq!(v[0]["reason"], "UndefinedMeasure");
    assert!(close(&v[1]["value"], 0.2, 1e-12));
}

#[test]
fn transport_closed_and_not_closed() {
    let ok = relrisk(&["transport", "--p0", "0.8", "--scale", "grrr", "--value", "-0.5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(close(&json(&ok)["p1"], 0.9, 1e-12));
    let bad = relrisk(&["transport", "--p0", "0.8", "--scale", "rr", "--value", "2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(close(&json(&bad)["implied"], 1.6, 1e-12));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("NotClosed"));
}

#[test]
fn interpret_benefit() {
    let out = relrisk(&["interpret", "--p0", "0.3", "--p1", "0.1", "--direction", "benefit"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(close(&v["value"], 2.0 / 3.0, 1e-12));
    assert!(v["interpretation"].as_str().unwrap().contains("prevented"));
    let harm = relrisk(&["interpret", "--p0", "0.3", "--p1", "0.1", "--direction", "harm"]);
    assert_eq!(harm.status.code(), Some(2));
}

#[test]
fn fit_saturated_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    std::fs::write(&path, "a,y\n1,1\n1,0\n1,0\n1,0\n0,1\n0,1\n0,0\n0,0\n").unwrap();
    let out = relrisk(&["fit", "--csv", path.to_str().unwrap(), "--link", "log"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[1]["term"], "a");
    assert!(close(&v[1]["exp_estimate"], 0.5, 1e-9));
    assert_eq!(v[1]["effect"], "adjusted RR");
}

#[test]
fn auto_link_picks_complement_on_sufficient_causal_rows() {
    let dir = tempfile::tempdir().unwrap();
    let rows = dir.path().join("rows.csv");
    let sim = relrisk(&[
        "--seed", "11", "simulate", "--pattern", "sufficient-causal", "--q", "0.4", "--r", "0.3",
        "--n", "4000", "--rows", rows.to_str().unwrap(),
    ]);
    assert_eq!(sim.status.code(), Some(0));
    let out = relrisk(&["fit", "--csv", rows.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[1]["reference_level"], "complement");
    assert_eq!(v[1]["effect"], "adjusted SR");
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = relrisk(&[
        "--output", "csv", "--out", path.to_str().unwrap(), "sweep", "--pattern",
        "sufficient-preventive", "--q", "0.25", "--r", "0.2,0.4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("r,p0,p1,rr,sr,rd,or,grrr,stable_scale_value"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn simulate_needs_a_seed() {
    let out = relrisk(&["simulate", "--pattern", "sufficient-causal", "--q", "0.3", "--r", "0.2", "--n", "10"]);
    assert_eq!(out.status.code(), Some(1));
}
