//! End-to-end tests of the binary: output shapes, exit codes, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use skewbrace::json::{BraceJson, ExactFactorizationJson, GroupJson};
use skewbrace::{fixtures, SkewBrace, Subgroup};

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_skewbrace"))
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn report_rump8_json_shape() {
    let out = run(&["report", "--fixture", "rump8"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["stable"], 4);
    assert_eq!(v["subgroups"], 10);
    assert_eq!(v["ratio"], "2/5");
    assert_eq!(v["stable_list"][1], serde_json::json!([0, 7]));
}

#[test]
fn report_a35_values() {
    let out = run(&["report", "--fixture", "a35", "--p", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["stable"], 7);
    assert_eq!(v["subgroups"], 19);
    assert_eq!(v["ratio"], "7/19");
}

#[test]
fn report_is_byte_deterministic() {
    let a = run(&["report", "--fixture", "heis_fpf", "--p", "3"]);
    let b = run(&["report", "--fixture", "heis_fpf", "--p", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_trivial_brace_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trivial_z6.json");
    let brace = SkewBrace::trivial(fixtures::cyclic_group(6).unwrap());
    std::fs::write(
        &path,
        serde_json::to_string(&BraceJson::from_brace(&brace)).unwrap(),
    )
    .unwrap();
    let out = run(&["report", "--in", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["stable"], 4);
    assert_eq!(v["subgroups"], 4);
    assert_eq!(v["ratio"], "1/1");
}

#[test]
fn validate_detects_kind_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();

    let good = dir.path().join("z2.json");
    std::fs::write(&good, r#"{"order":2,"table":[[0,1],[1,0]]}"#).unwrap();
    let out = run(&["validate", "--in", good.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"kind":"group","order":2,"valid":true}"#
    );

    // Broken table: parses as JSON, fails validation -> exit 1, no stdout.
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"order":2,"table":[[0,1],[1,1]]}"#).unwrap();
    let out = run(&["validate", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    // Unparseable JSON -> exit 2.
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    let out = run(&["validate", "--in", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Missing file -> exit 2.
    let out = run(&["validate", "--in", "/nonexistent/nope.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_rejects_non_brace_axiom_pair() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("not_a_brace.json");
    // Z4 star with a relabeled-Z4 circle that is not a brace.
    std::fs::write(
        &path,
        r#"{"order":4,"star":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],"circ":[[0,1,2,3],[1,3,0,2],[2,0,3,1],[3,2,1,0]]}"#,
    )
    .unwrap();
    let out = run(&["validate", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("brace axiom"), "stderr: {stderr}");
}

#[test]
fn subgroups_counts() {
    let out = run(&["subgroups", "--fixture", "heisenberg", "--p", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 19);

    // Circle table of the rump8 brace is D4 with its ten subgroups.
    let out = run(&["subgroups", "--fixture", "rump8", "--of", "circ"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 10);
}

#[test]
fn max_order_cap_is_enforced() {
    let out = run(&[
        "subgroups",
        "--fixture",
        "heisenberg",
        "--p",
        "7",
        "--max-order",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("cap"), "stderr: {stderr}");
}

#[test]
fn env_var_cap_fallback_and_flag_override() {
    let out = Command::new(bin())
        .args(["subgroups", "--fixture", "heisenberg", "--p", "3"])
        .env("BRACE_MAX_ORDER", "20")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    // The flag wins over the environment.
    let out = Command::new(bin())
        .args(["subgroups", "--fixture", "heisenberg", "--p", "3", "--max-order", "30"])
        .env("BRACE_MAX_ORDER", "20")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn stable_and_ideals_commands() {
    let out = run(&["stable", "--fixture", "zp_hol", "--p", "7"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 5);

    let out = run(&["ideals", "--fixture", "a34", "--p", "3", "--delta", "0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 10);

    let out = run(&["ideals", "--fixture", "a35", "--p", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 9);
}

#[test]
fn brace_build_from_exact_factorization() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3_factorization.json");
    let g = fixtures::symmetric_group(3).unwrap();
    let evens = vec![0usize, 3, 4]; // identity and the two 3-cycles in lex order
    let h = Subgroup::new(&g, evens).unwrap();
    let j = Subgroup::new(&g, vec![0, 2]).unwrap(); // identity and a transposition
    let ef = skewbrace::ExactFactorization::new(g, h, j).unwrap();
    std::fs::write(
        &path,
        serde_json::to_string(&ExactFactorizationJson::from_factorization(&ef)).unwrap(),
    )
    .unwrap();
    let out = run(&[
        "brace",
        "build",
        "--exact-factorization",
        "--in",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let raw: BraceJson = serde_json::from_str(&stdout(&out)).unwrap();
    let brace = raw.validate().unwrap();
    // Circle group of the S3 = A3 · C2 factorization is cyclic of order 6.
    assert!(brace.circ().is_abelian());
    assert_eq!(brace.circ().exponent(), 6);
}

#[test]
fn brace_build_requires_a_source_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let g = fixtures::cyclic_group(4).unwrap();
    std::fs::write(&path, serde_json::to_string(&GroupJson::from_table(&g)).unwrap()).unwrap();
    let out = run(&["brace", "build", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_green_targets_pass() {
    let out = run(&["reproduce", "heis-fpf", "--p", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["all_pass"], true);

    let out = run(&["reproduce", "sn", "--n", "5"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    // The stable-set claim only holds from n = 5 up; smaller n is rejected.
    let out = run(&["reproduce", "sn", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["reproduce", "a35-ideals", "--p", "3", "--format", "text"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn reproduce_rump8_reports_known_discrepancy() {
    // The pinned expectation for the stable count is 3; the valid brace has 4.
    let out = run(&["reproduce", "rump8"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["all_pass"], false);
    assert_eq!(v["results"][0]["expected"], 3);
    assert_eq!(v["results"][0]["computed"], 4);
    assert_eq!(v["results"][1]["pass"], true); // circle subgroup count 10
}

#[test]
fn reproduce_unknown_target_is_usage_error() {
    let out = run(&["reproduce", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_fixture_is_usage_error() {
    let out = run(&["report", "--fixture", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_format_report() {
    let out = run(&["report", "--fixture", "rump8", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("stable subgroups: 4"));
    assert!(text.contains("ratio: 2/5"));
}
