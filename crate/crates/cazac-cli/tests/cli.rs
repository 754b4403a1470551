//! End-to-end tests of the command-line surface: output formats, exit
//! codes, gating, and the reproduction registry.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cazac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cazac"))
        .args(args)
        .output()
        .expect("spawning the binary")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_seq(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let mut full = args.to_vec();
    let path_str = path.to_str().unwrap().to_string();
    full.extend_from_slice(&["--out", &path_str]);
    let out = cazac(&full);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    path_str
}

#[test]
fn gen_zc_emits_sequence_json() {
    let doc = stdout_json(&cazac(&["gen-zc", "--n", "9", "--u", "1"]));
    assert_eq!(doc["n"], 9);
    assert_eq!(doc["root"], 1);
    assert_eq!(doc["exps"].as_array().unwrap().len(), 9);
}

#[test]
fn gen_zc_out_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_seq(dir.path(), "s.json", &["gen-zc", "--n", "16", "--u", "3"]);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["n"], 16);
}

#[test]
fn gen_zc_render_is_csv() {
    let out = cazac(&["gen-zc", "--n", "9", "--u", "1", "--render"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "re,im");
    assert_eq!(lines.len(), 10);
    assert!(lines[1].starts_with("1.0000000000"));
}

#[test]
fn pp_test_methods_agree() {
    for (poly, expected) in [("35:0,20,0,0,0,0,0,1", false), ("35:0,10,0,0,0,0,0,1", true)] {
        for method in ["brute", "lemma"] {
            let doc = stdout_json(&cazac(&[
                "pp-test", "--n", "35", "--poly", poly, "--method", method,
            ]));
            assert_eq!(doc["is_pp"], expected, "poly={poly} method={method}");
        }
    }
}

#[test]
fn pp_test_rejects_modulus_mismatch() {
    let out = cazac(&["pp-test", "--n", "9", "--poly", "35:0,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pp_family_counts() {
    let doc = stdout_json(&cazac(&["pp-family", "--n", "150", "--p", "5"]));
    assert_eq!(doc["count"], 30);
    assert_eq!(doc["polys"][0], "150:0,6,0,0,0,1");
    let doc = stdout_json(&cazac(&["pp-family", "--n", "9", "--qpp"]));
    assert_eq!(doc["count"], 12);
}

#[test]
fn interleave_then_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let base = write_seq(dir.path(), "base.json", &["gen-zc", "--n", "9", "--u", "1"]);
    let mixed = dir.path().join("mixed.json");
    let mixed = mixed.to_str().unwrap();
    let out = cazac(&[
        "interleave", "--seq", &base, "--perm", "9:0,1,0,1", "--out", mixed,
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&cazac(&["cazac", "--seq", mixed]));
    assert_eq!(doc["is_ca"], true);
    assert_eq!(doc["is_zac"], true);
    assert_eq!(doc["zcz_length"], 8);
    assert_eq!(doc["failing_shift"], Value::Null);
}

#[test]
fn interleave_accepts_permutation_array_file() {
    let dir = tempfile::tempdir().unwrap();
    let base = write_seq(dir.path(), "base.json", &["gen-zc", "--n", "4", "--u", "1"]);
    let perm_path = dir.path().join("perm.json");
    std::fs::write(&perm_path, "[0, 2, 1, 3]").unwrap();
    let doc = stdout_json(&cazac(&[
        "interleave", "--seq", &base, "--perm", perm_path.to_str().unwrap(),
    ]));
    assert_eq!(doc["n"], 4);
}

#[test]
fn autocorr_csv_has_profile_columns() {
    let dir = tempfile::tempdir().unwrap();
    let base = write_seq(dir.path(), "base.json", &["gen-zc", "--n", "7", "--u", "1"]);
    let out = cazac(&[
        "autocorr", "--seq", &base, "--exact", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "d,re,im,abs,exact_zero");
    assert_eq!(lines.len(), 8);
    assert!(lines[1].ends_with(",false"));
    assert!(lines[2].ends_with(",true"));
}

#[test]
fn autocorr_aperiodic_conflicts_with_exact() {
    let dir = tempfile::tempdir().unwrap();
    let base = write_seq(dir.path(), "base.json", &["gen-zc", "--n", "7", "--u", "1"]);
    let out = cazac(&["autocorr", "--seq", &base, "--aperiodic", "--exact"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn equiv_detects_offset_pair() {
    let dir = tempfile::tempdir().unwrap();
    let s1 = write_seq(dir.path(), "s1.json", &["gen-zc", "--n", "9", "--u", "1"]);
    let s2 = write_seq(dir.path(), "s2.json", &["gen-zc", "--n", "9", "--u", "1", "--l", "3"]);
    let doc = stdout_json(&cazac(&["equiv", "--seq1", &s1, "--seq2", &s2]));
    assert_eq!(doc["equivalent"], true);
    assert!(doc["witness"].is_object());
}

#[test]
fn census_small_exhaustive() {
    let doc = stdout_json(&cazac(&[
        "census", "--n", "9", "--candidates", "xp-ax:3", "--references", "zc",
    ]));
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["total"], 18);
    assert_eq!(doc["inequivalent"], 18);
    assert_eq!(doc["proportion"]["num"], 1);
    assert_eq!(doc["proportion"]["den"], 1);
}

#[test]
fn census_gating() {
    let out = cazac(&[
        "census", "--n", "16", "--candidates", "deg4-grid", "--references", "qpp-both",
        "--mode", "sampled:10:1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = cazac(&[
        "census", "--n", "150", "--candidates", "xp-ax:5", "--references", "qpp-both",
        "--mode", "sampled:200:1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_gating_and_shape() {
    let out = cazac(&["aperiodic-scan", "--nmin", "4", "--nmax", "13", "--qpp", "2,1", "--u", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = stdout_json(&cazac(&[
        "aperiodic-scan", "--nmin", "4", "--nmax", "6", "--qpp", "2,1", "--u", "1",
    ]));
    assert_eq!(doc["points"].as_array().unwrap().len(), 3);
    assert!(doc["slope"].is_number());
}

#[test]
fn reproduce_matches_and_is_stable() {
    let first = cazac(&["reproduce", "--id", "example1-n9"]);
    assert!(first.status.success());
    let doc: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["match"], true);
    let second = cazac(&["reproduce", "--id", "example1-n9"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn reproduce_unknown_id_lists_registry() {
    let out = cazac(&["reproduce", "--id", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("registered ids"));
    assert!(stderr.contains("example1-n9"));
    assert!(stderr.contains("zc-aperiodic-sanity"));
}

#[test]
fn reproduce_long_experiment_is_gated() {
    let out = cazac(&["reproduce", "--id", "census-n150-sampled"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("--allow-long"));
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    assert_eq!(cazac(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(cazac(&["gen-zc", "--n", "9"]).status.code(), Some(1));
    assert_eq!(cazac(&["--help"]).status.code(), Some(0));
}
