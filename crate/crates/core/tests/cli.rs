use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn superq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superq"))
        .args(args)
        .env("SUPERQ_SEED", "5")
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn diagram_examples() {
    let o = superq(&["diagram", "--m", "2", "--weight", "1,1/-1", "--output", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["vee"], 0);
    assert_eq!(v["crosses"], serde_json::json!([1]));
    let o = superq(&["diagram", "--weight", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tensor_is_deterministic() {
    let args = ["tensor", "roof@-2:1/block=0", "1,0/0", "--method", "all", "--output", "json"];
    let (a, b) = (superq(&args), superq(&args));
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["agree"], true);
    assert!(v["oracle_summands"].as_array().is_some_and(|s| !s.is_empty()));
}

#[test]
fn oracle_limits_are_usage_errors() {
    let o = superq(&["tensor", "roof@-3:3/block=0", "1,0/0", "--method", "oracle"]);
    assert_eq!(o.status.code(), Some(2));
    let o = superq(&["tensor", "irr@0/block=1,2,3", "irr@0/block=1,2,3", "--method", "oracle"]);
    assert_eq!(o.status.code(), Some(2));
    let o = superq(&["tensor", "1,0/0", "1,0/0", "--method", "oracle", "--oracle-dim-bound", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_writes_calibration_once() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-calibration.json");
    let _ = std::fs::remove_file(&path);
    let p = path.to_str().unwrap();
    let o = superq(&["check", "sl21-rules", "--calibration-out", p, "--output", "json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["passed"], true);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["delta_ber"], 1);
    let o = superq(&["check", "bogus", "--calibration-out", p]);
    assert_eq!(o.status.code(), Some(2));
}
