//! End-to-end tests of the `crossed-forge` binary: exit codes, the spec
//! file format, and the machine output.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU64, Ordering};

static COUNTER: AtomicU64 = AtomicU64::new(0);

fn write_temp(content: &str) -> PathBuf {
    let id = COUNTER.fetch_add(1, Ordering::Relaxed);
    let path = std::env::temp_dir().join(format!(
        "crossed-forge-test-{}-{id}.txt",
        std::process::id()
    ));
    std::fs::write(&path, content).expect("write temp file");
    path
}

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crossed-forge"))
        .args(args)
        .env_remove("CROSSED_FORGE_BUDGET")
        .output()
        .expect("run binary")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn classify_infinite_twisted_profile() {
    let file = write_temp("m = 3\nn = inf\nphi = [0, 1, 1]\n");
    let out = forge(&["classify", file.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("cyclic: true"), "{text}");
    assert!(text.contains("(0, 2)"), "{text}");

    let out = forge(&["--format", "json", "classify", file.to_str().unwrap()]);
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(doc["cyclic"], serde_json::json!(true));
    assert_eq!(doc["witness"]["generator"], serde_json::json!([0, 2]));
    assert_eq!(doc["family"], serde_json::json!("twisted_infinite"));
}

#[test]
fn generator_prints_the_witness() {
    let file = write_temp("m = 3\nn = inf\nphi = [0, 1, 1]\n");
    let out = forge(&["generator", file.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("generator (0, 2)"));
}

#[test]
fn classify_klein_four_is_a_negative_verdict() {
    let file = write_temp("family = holder(n=2, m=2, i=0, j=1)\n");
    let out = forge(&["classify", file.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    let text = stdout_of(&out);
    assert!(text.contains("cyclic: false"), "{text}");
    assert!(text.contains("gcd"), "{text}");
}

#[test]
fn validate_exit_codes() {
    let good = write_temp("family = holder(n=4, m=2, i=2, j=3)\n");
    assert_eq!(code_of(&forge(&["validate", good.to_str().unwrap()])), 0);

    // fails i(j-1) = 0 (mod n)
    let bad = write_temp("family = holder(n=4, m=2, i=1, j=3)\n");
    let out = forge(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stdout_of(&out).contains("invalid"));

    // syntax error: exit 2 with a position
    let broken = write_temp("family = holder(n=4,\n");
    let out = forge(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code_of(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    // phi(0) != 0 is a semantic error: exit 2
    let semantic = write_temp("m = 2\nn = 2\nphi = [1, 0]\n");
    assert_eq!(code_of(&forge(&["validate", semantic.to_str().unwrap()])), 2);

    let missing = std::env::temp_dir().join("crossed-forge-does-not-exist.txt");
    assert_eq!(code_of(&forge(&["validate", missing.to_str().unwrap()])), 2);
}

#[test]
fn validate_reports_corrupted_group_tables() {
    // C_4 with entry (2,3) corrupted: breaks associativity only
    let file = write_temp(
        "table = [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 2], [3, 0, 1, 2]]\n",
    );
    let out = forge(&["validate", file.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stdout_of(&out).contains("associativity"));

    let good = write_temp("group = cyclic(4)\n");
    assert_eq!(code_of(&forge(&["validate", good.to_str().unwrap()])), 0);
}

#[test]
fn validate_crossed_system_files() {
    let good = write_temp(
        "h = cyclic(2)\ng = cyclic(2)\nalpha = [[0, 1], [0, 1]]\nf = [[0, 0], [0, 1]]\n",
    );
    let out = forge(&["validate", good.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("twisted"));

    // f(1,1) != 1: not normalized
    let bad = write_temp(
        "h = cyclic(2)\ng = cyclic(2)\nalpha = [[0, 1], [0, 1]]\nf = [[1, 0], [0, 0]]\n",
    );
    let out = forge(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stdout_of(&out).contains("normalized"));
}

#[test]
fn cocycles_enumerate_lists_and_filters() {
    let out = forge(&["cocycles", "enumerate", "--m", "2", "--n", "2", "--cyclic-only"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("phi")).collect();
    assert_eq!(lines.len(), 1, "{text}");
    assert!(lines[0].contains("[0, 1]"));

    let out = forge(&[
        "--format", "json", "cocycles", "enumerate", "--m", "2", "--n", "4",
    ]);
    let docs: Vec<serde_json::Value> = stdout_of(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(docs.len(), 4);
    let cyclic_count = docs.iter().filter(|d| d["cyclic"] == true).count();
    assert_eq!(cyclic_count, 2); // exactly the odd phi(1)
}

#[test]
fn budget_exceeded_is_exit_3() {
    let out = forge(&["cocycles", "enumerate", "--m", "12", "--n", "7"]);
    assert_eq!(code_of(&out), 3);

    // the default budget can be overridden by flag and environment
    let out = forge(&["--budget", "2", "cocycles", "enumerate", "--m", "2", "--n", "3"]);
    assert_eq!(code_of(&out), 3);
    let out = Command::new(env!("CARGO_BIN_EXE_crossed-forge"))
        .args(["cocycles", "enumerate", "--m", "2", "--n", "3"])
        .env("CROSSED_FORGE_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn iso_twisted_against_holder_presentation() {
    let twisted = write_temp("family = twisted(n=2, m=2, phi=[0, 1])\n");
    let holder = write_temp("family = holder(n=2, m=2, i=1, j=1)\n");
    let out = forge(&["iso", twisted.to_str().unwrap(), holder.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("isomorphic"));

    let klein = write_temp("family = holder(n=2, m=2, i=0, j=1)\n");
    let out = forge(&["iso", twisted.to_str().unwrap(), klein.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stdout_of(&out).contains("not isomorphic"));
}

#[test]
fn extract_output_reparses_and_validates() {
    let c4 = write_temp("group = cyclic(4)\n");
    let out = forge(&["extract", "--group", c4.to_str().unwrap(), "--normal", "0,2"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    // the extracted cocycle hits a^2 (local index 1) exactly at (x, x)
    assert!(text.contains("f = [[0, 0], [0, 1]]"), "{text}");

    let spec: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    let extracted = write_temp(&spec);
    assert_eq!(code_of(&forge(&["validate", extracted.to_str().unwrap()])), 0);

    // rebuilt product is C_4 again
    let out = forge(&["iso", extracted.to_str().unwrap(), c4.to_str().unwrap()]);
    assert_eq!(code_of(&out), 0);
}

#[test]
fn extract_rejects_bad_subgroups() {
    let c4 = write_temp("group = cyclic(4)\n");
    let out = forge(&["extract", "--group", c4.to_str().unwrap(), "--normal", "0,1"]);
    assert_eq!(code_of(&out), 2);

    let out = forge(&[
        "extract",
        "--group",
        c4.to_str().unwrap(),
        "--normal",
        "0,2",
        "--transversal",
        "1,0",
    ]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn product_of_infinite_family_is_invalid_input() {
    let file = write_temp("family = klein_bottle\n");
    let out = forge(&["product", file.to_str().unwrap()]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn product_json_shape() {
    let file = write_temp("family = twisted(n=2, m=2, phi=[0, 1])\n");
    let out = forge(&[
        "--format", "json", "product", file.to_str().unwrap(), "--table", "--order-profile",
    ]);
    assert_eq!(code_of(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(doc["order"], 4);
    assert_eq!(doc["cyclic"], true);
    assert_eq!(doc["order_profile"], serde_json::json!([1, 2, 4, 4]));
    assert_eq!(doc["table"].as_array().unwrap().len(), 4);
}

#[test]
fn oracle_sweep_small() {
    let out = forge(&["oracle", "sweep", "--max-order", "8"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("sweep PASS"));
}

#[test]
fn oracle_enumerate_streams_systems() {
    let out = forge(&["--format", "json", "oracle", "enumerate", "--h", "3", "--g", "2"]);
    assert_eq!(code_of(&out), 0);
    let docs: Vec<serde_json::Value> = stdout_of(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(docs.len(), 4);
    let semidirect = docs
        .iter()
        .filter(|d| d["special_case"] == "semidirect")
        .count();
    assert_eq!(semidirect, 1);
}

#[test]
fn classify_semidirect_system_reports_the_action() {
    let s3 = write_temp(
        "h = cyclic(3)\ng = cyclic(2)\nalpha = [[0, 1, 2], [0, 2, 1]]\nf = [[0, 0], [0, 0]]\n",
    );
    let out = forge(&["classify", s3.to_str().unwrap()]);
    assert_eq!(code_of(&out), 1);
    assert!(stdout_of(&out).contains("non-trivial"));
}
