use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn biorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("biorder-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn analyze_six_two_json() {
    let out = biorder(&[
        "analyze",
        "corpus:6_2",
        "--max-level",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["outcome"], "NOT_BIORDERABLE");
    assert_eq!(v["verdict"]["rule"], "R3");
    assert_eq!(v["verdict"]["level"], 1);
    let level1 = &v["levels"][1];
    assert_eq!(
        level1["charpoly"],
        serde_json::json!([1, -3, 8, -12, 8, -3, 1])
    );
    assert_eq!(
        level1["factors"][1]["coeffs"],
        serde_json::json!([1, -1, 5, -1, 1])
    );
    assert_eq!(level1["factors"][1]["pos_real_roots"], 0);
    assert_eq!(level1["matrix"].as_array().unwrap().len(), 6);
    assert!(level1["flags"]["some_factor_all_lambda"].as_bool().unwrap());
}

#[test]
fn analyze_figure_eight_text() {
    let out = biorder(&["analyze", "corpus:figure8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: BIORDERABLE by R4"));
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(biorder(&["analyze", "missing.knot"]).status.code(), Some(2));
    assert_eq!(biorder(&["analyze", "corpus:9_42"]).status.code(), Some(2));
    let bad = scratch(
        "bad.knot",
        "name: k\nfibered: true\ngenerators: a b\nmap:\n  a -> b\n",
    );
    let out = biorder(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
    // Level 1 of a rank-4 map has rank 6, beyond a cap of 5.
    let capped = biorder(&["analyze", "corpus:6_2", "--max-degree", "5"]);
    assert_eq!(capped.status.code(), Some(3));
    assert_eq!(
        biorder(&["analyze", "corpus:6_2", "--max-level", "9"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(biorder(&["analyze"]).status.code(), Some(4));
}

#[test]
fn analyze_a_user_file() {
    let text = "name: swap\nfibered: false\ngenerators: a b\nmap:\n  a -> b\n  b -> a\n";
    let path = scratch("swap.knot", text);
    let out = biorder(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["premises"]["automorphism"], "NECESSARY_ONLY");
    // λ² − 1 has rational roots, so R2 is gated off; on γ₂/γ₃ the swap
    // sends [a,b] to its inverse, a block with eigenvalue −1.
    assert_eq!(v["premises"]["r2_no_rational_root"], false);
    assert_eq!(v["levels"][1]["charpoly"], serde_json::json!([1, 1]));
    assert_eq!(v["verdict"]["outcome"], "NOT_BIORDERABLE");
    assert_eq!(v["verdict"]["rule"], "R3");
}

#[test]
fn corpus_commands() {
    let list = biorder(&["corpus", "list"]);
    let names: Vec<String> = stdout(&list)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(names, ["trefoil", "figure8", "6_2", "7_6"]);

    let show = biorder(&["corpus", "show", "6_2"]);
    let text = stdout(&show);
    assert!(text.contains("  a -> B X\n"));
    let path = scratch("6_2.knot", &text);
    let again = biorder(&["analyze", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(json(&again)["verdict"]["rule"], "R3");

    let verify = biorder(&["corpus", "verify", "--format", "json"]);
    assert_eq!(verify.status.code(), Some(0));
    assert_eq!(json(&verify)["all_passed"], true);
}

#[test]
fn probe_examples() {
    let out = biorder(&[
        "probe",
        "subgroup",
        "--g",
        "x",
        "--seed",
        "7",
        "--samples",
        "1000",
        "--format",
        "json",
    ]);
    assert_eq!(json(&out)["status"], "PASS");

    let out = biorder(&[
        "probe",
        "dominance",
        "--g",
        "y",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    let v = json(&out);
    assert_eq!(v["status"], "COUNTEREXAMPLE");
    assert_eq!(v["failures"][0], serde_json::json!(["x"]));

    assert_eq!(biorder(&["probe", "nosuch"]).status.code(), Some(4));
    assert_eq!(biorder(&["probe", "invariance"]).status.code(), Some(4));
    assert_eq!(
        biorder(&["probe", "normality", "--g", "y", "--samples", "10"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        biorder(&["probe", "subgroup", "--samples", "0"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn probe_output_is_reproducible() {
    let args = [
        "probe",
        "commutator",
        "--seed",
        "99",
        "--samples",
        "200",
        "--format",
        "json",
    ];
    assert_eq!(biorder(&args).stdout, biorder(&args).stdout);
}

#[test]
fn weak_comparability() {
    let found = biorder(&[
        "probe",
        "weak-comparability",
        "--f",
        "x",
        "--g",
        "x",
        "--format",
        "json",
    ]);
    assert_eq!(json(&found)["witness"], "e");
    let missing = biorder(&[
        "probe",
        "weak-comparability",
        "--f",
        "x",
        "--g",
        "y",
        "--format",
        "json",
    ]);
    let v = json(&missing);
    assert_eq!(v["result"], "NOT_FOUND_WITHIN_BOUND");
    assert_eq!(v["searched"], 53);
}

#[test]
fn order_preservation_with_a_map() {
    let swap = scratch(
        "swap2.knot",
        "name: swap\nfibered: false\ngenerators: x y\nmap:\n  x -> y\n  y -> x\n",
    );
    let p = swap.to_str().unwrap();
    let out = biorder(&[
        "probe",
        "order-preservation",
        "--map",
        p,
        "--samples",
        "50",
        "--format",
        "json",
    ]);
    assert_eq!(json(&out)["failures"][0], serde_json::json!(["Y x"]));
    assert_eq!(
        biorder(&["probe", "invariance", "--map", p, "--samples", "50"])
            .status
            .code(),
        Some(3)
    );
}
