use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn smallsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smallsub"))
        .args(args)
        .env_remove("SMALLSUB_MAX_PAIRS")
        .env_remove("SMALLSUB_MAX_ENUMERATION")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gb_reports_x2_cubed() {
    let out = smallsub(&["gb", "--field", "p=5", "--gens", "x1^2+x2^2; x1*x2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "gb");
    assert!(v["result"]["basis"].as_array().unwrap().contains(&"x2^3".into()));
}

#[test]
fn pdim_of_three_variables() {
    let out = smallsub(&["pdim", "--field", "p=2", "--gens", "x1; x2; x3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["pdim"], 3);
    assert_eq!(v["result"]["ranks"], serde_json::json!([1, 3, 3, 1]));
}

#[test]
fn bounds_tables() {
    let v = json(&smallsub(&["bounds", "--table", "quadric-B", "--n", "3"]));
    assert_eq!(v["result"]["value"], 20);
    let v = json(&smallsub(&["bounds", "--table", "cubic", "--char", "0", "--eta", "1", "--delta", "0,0,1"]));
    assert_eq!(v["result"]["value"], serde_json::json!([0, 2, 14]));
    assert!(v["result"]["provenance"].as_str().unwrap().contains("R(b)"));
    let v = json(&smallsub(&["bounds", "--table", "cubic", "--char", "3", "--eta", "1", "--delta", "0,0,1"]));
    assert_eq!(v["result"]["value"], serde_json::json!([0, 2, 15]));
    let out = smallsub(&["bounds", "--table", "quadric-thresholds", "--n", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reports_are_byte_identical() {
    let args = ["descend", "--field", "p=3", "--gens", "x1^2+x2^2; x1*x2*x3", "--seed", "7"];
    let a = smallsub(&args);
    let b = smallsub(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["config"]["seed"], 7);
}

#[test]
fn exit_code_contract() {
    assert_eq!(smallsub(&["certify", "--field", "p=5", "--gens", "x1^2+x2^2+x3^2", "--eta", "1"]).status.code(), Some(0));
    assert_eq!(smallsub(&["certify", "--field", "p=5", "--gens", "x1*x2", "--eta", "1"]).status.code(), Some(1));
    let out = smallsub(&["gb", "--field", "p=5", "--gens", "x1; x2^^2"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "parse");
    assert!(v["error"]["position"].as_u64().unwrap() > 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("gens[1]"));
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_smallsub"))
        .args(["collapse", "--field", "p=2", "--gens", "x1*x2 + x3*x4", "--k", "2"])
        .env("SMALLSUB_MAX_ENUMERATION", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["config"]["budget"]["max_enumeration"], 1);
    assert_eq!(v["error"]["kind"], "budget");
}

#[test]
fn file_and_stdin_input() {
    let dir = std::env::temp_dir().join(format!("smallsub-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gens.txt");
    std::fs::write(&path, "# two quadrics\nx1^2 + x2^2  # first\n\nx1*x2\n").unwrap();
    let from_file = smallsub(&["gb", "--field", "p=5", "--file", path.to_str().unwrap()]);
    let inline = smallsub(&["gb", "--field", "p=5", "--gens", "x1^2 + x2^2; x1*x2"]);
    assert_eq!(json(&from_file)["result"], json(&inline)["result"]);

    let mut child = Command::new(env!("CARGO_BIN_EXE_smallsub"))
        .args(["strength", "--field", "p=2", "--file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"x1*x2 + x3*x4\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(json(&out)["result"]["forms"][0]["exact"], 1);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn minors_check_from_matrix_file() {
    let dir = std::env::temp_dir().join(format!("smallsub-matrix-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    std::fs::write(&path, r#"{"rows": [["x1", "x2", "x3"], ["x1^2", "x2^2", "x3^2"]]}"#).unwrap();
    let out = smallsub(&["certify", "--field", "p=5", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["holds"], true);
    assert_eq!(v["result"]["b"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn ideal_operations() {
    let v = json(&smallsub(&["sat", "--field", "p=5", "--gens", "x1*x2; x1*x3", "--by", "x1"]));
    assert_eq!(v["result"]["ideal"], serde_json::json!(["x3", "x2"]));
    let v = json(&smallsub(&["colon", "--field", "p=5", "--gens", "x1*x2", "--by", "x1"]));
    assert_eq!(v["result"]["ideal"], serde_json::json!(["x2"]));
    let v = json(&smallsub(&["intersect", "--field", "p=5", "--gens", "x1", "--with", "x2"]));
    assert_eq!(v["result"]["ideal"], serde_json::json!(["x1*x2"]));
    let v = json(&smallsub(&["leading-ideal", "--field", "p=5", "--gens", "x1; x1*x2 + x2^2"]));
    assert_eq!(v["result"]["ideal"], serde_json::json!(["x1", "x2^2"]));
}

#[test]
fn text_output_and_selftest() {
    let out = smallsub(&["--format", "text", "pdim", "--field", "p=2", "--gens", "x1; x2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pdim: 2"), "{text}");
    let out = smallsub(&["selftest", "--only", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["passed"], 1);
}
