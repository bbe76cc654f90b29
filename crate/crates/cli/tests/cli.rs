use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn hhcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hhcalc")).args(args).output().expect("binary runs")
}

fn run_fixture(cmd: &[&str], name: &str, extra: &[&str]) -> Output {
    let path = fixture(name);
    let mut args: Vec<&str> = cmd.to_vec();
    args.push(path.to_str().unwrap());
    args.extend_from_slice(extra);
    hhcalc(&args)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn dims(table: &Value) -> Vec<u64> {
    table["entries"].as_array().unwrap().iter().map(|e| e["dim"].as_u64().unwrap()).collect()
}

#[test]
fn validate_sweedler_fixture() {
    let out = run_fixture(&["validate"], "sweedler4.json", &[]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["passed"], Value::Bool(true));
    assert_eq!(r["command"], "validate");
    assert_eq!(r["validation"].as_array().unwrap().len(), 4);
}

#[test]
fn homology_over_trivial_b_is_ordinary_hochschild() {
    // HH_0(k[y]/y²) = k[y]/y², HH_n = k for n ≥ 1 in characteristic zero
    let out = run_fixture(&["homology"], "trivial.json", &["--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(dims(&r["tables"][0]), vec![2, 1, 1, 1]);
    assert_eq!(r["tables"][0]["entries"][0], serde_json::json!({"degree": 0, "dim": 2}));
}

#[test]
fn main_iso_on_group_fixture() {
    let out = run_fixture(&["oracle", "main-iso"], "z2.json", &[]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["oracles"][0]["oracle"], "main-iso");
}

#[test]
fn every_oracle_passes_on_sweedler() {
    for which in ["main-iso", "tor-ext", "dgm-homotopy"] {
        let out = run_fixture(&["oracle", which], "sweedler4.json", &["--max-degree", "2"]);
        assert_eq!(out.status.code(), Some(0), "{which}");
    }
    for which in ["cofinal", "free-gen"] {
        let out = run_fixture(&["oracle", which], "sweedler4_fp.json", &["--max-degree", "1"]);
        assert_eq!(out.status.code(), Some(0), "{which}");
    }
}

#[test]
fn compare_and_twist() {
    let out = run_fixture(&["compare", "--against", "ordinary"], "z2.json", &[]);
    assert_eq!(out.status.code(), Some(0));
    let out = run_fixture(&["compare", "--against", "ordinary"], "sweedler4.json", &["--max-degree", "1"]);
    assert_eq!(out.status.code(), Some(1), "sweedler4 is not cocommutative");
    let out = run_fixture(&["twist"], "z2_explicit.json", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(dims(&json(&out)["tables"][0]), vec![1, 1, 1, 1]);
}

#[test]
fn missing_unit_is_a_shape_error() {
    let out = run_fixture(&["validate"], "bad_missing_unit.json", &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("shape error at algebra") && err.contains("unit"), "{err}");
}

#[test]
fn composite_modulus_is_rejected() {
    let out = run_fixture(&["validate"], "bad_prime.json", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("p must be prime"));
    let out = run_fixture(&["validate"], "sweedler4.json", &["--field", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_json_reports_position() {
    let dir = std::env::temp_dir().join(format!("hhcalc-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("broken.json");
    std::fs::write(&p, "{\n  \"bialgebra\": \"trivial\",,\n}").unwrap();
    let out = hhcalc(&["validate", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn failing_validation_exits_one_with_witness() {
    let out = run_fixture(&["validate"], "bad_action.json", &[]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let failed: Vec<&Value> = r["validation"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|v| v["checks"].as_array().unwrap())
        .filter(|c| c["passed"] == Value::Bool(false))
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_string()));
}

#[test]
fn rationals_are_num_den_strings() {
    let out = run_fixture(&["crossed-product"], "half.json", &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let entries = r["algebra"]["mult"]["sparse"].as_array().unwrap();
    assert!(entries.iter().any(|e| e[3] == "1/2"));
    assert!(entries.iter().any(|e| e[3] == "1/4"));
}

#[test]
fn crossed_product_round_trips_as_an_algebra_block() {
    let out = run_fixture(&["crossed-product"], "sweedler4.json", &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["algebra"]["names"].as_array().unwrap().len(), 16);
    let doc = serde_json::json!({
        "field": "rational",
        "bialgebra": "trivial",
        "algebra": r["algebra"],
        "action": "trivial",
    });
    let dir = std::env::temp_dir().join(format!("hhcalc-rt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("e.json");
    std::fs::write(&p, doc.to_string()).unwrap();
    let out = hhcalc(&["validate", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let algebra = &json(&out)["validation"][0];
    assert_eq!(algebra["subject"], "algebra");
    assert!(algebra["checks"].as_array().unwrap().iter().all(|c| c["passed"] == Value::Bool(true)));
}

#[test]
fn csv_and_text_formats() {
    let out = run_fixture(&["homology"], "trivial.json", &["--format", "csv", "--max-degree", "2"]);
    let s = String::from_utf8(out.stdout).unwrap();
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("complex,degree,dim"));
    assert_eq!(lines.map(|l| l.rsplit(',').next().unwrap().to_string()).collect::<Vec<_>>(), ["2", "1", "1"]);
    let out = run_fixture(&["validate"], "z2.json", &["--format", "text"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("validate over Q"));
}

#[test]
fn field_override_and_out_file() {
    let dir = std::env::temp_dir().join(format!("hhcalc-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("report.json");
    let out = run_fixture(&["homology"], "z2.json", &["--field", "32003", "--out", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(r["field"], "F_32003");
}

#[test]
fn reports_are_byte_identical() {
    for (cmd, name) in [(vec!["homology"], "sweedler4.json"), (vec!["oracle", "main-iso"], "z2.json")] {
        let a = run_fixture(&cmd, name, &["--max-degree", "2"]);
        let b = run_fixture(&cmd, name, &["--max-degree", "2"]);
        assert_eq!(a.stdout, b.stdout);
    }
}
