use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hopfq::catalog::{loop7, s3};
use hopfq::formats::parse_cayley;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn hopfq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfq"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is a report document")
}

fn law<'a>(doc: &'a serde_json::Value, id: &str) -> &'a serde_json::Value {
    doc["laws"].as_array().unwrap().iter().find(|l| l["id"] == id).unwrap_or_else(|| panic!("no law {id}"))
}

#[test]
fn cayley_fixtures_match_catalog() {
    let text = std::fs::read_to_string(fixtures().join("s3.cayley")).unwrap();
    assert_eq!(parse_cayley(&text).unwrap(), s3());
    let text = std::fs::read_to_string(fixtures().join("loop7.cayley")).unwrap();
    assert_eq!(parse_cayley(&text).unwrap(), loop7());
}

#[test]
fn verify_group_algebra_passes() {
    let o = hopfq(&["verify", "c2.hq"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    assert_eq!(doc["verdict"], "pass");
    assert!(doc["laws"].as_array().unwrap().iter().all(|l| l["status"] == "pass"));
}

#[test]
fn verify_corrupted_fails_with_witness() {
    let o = hopfq(&["verify", "corrupted.hq"]);
    assert_eq!(code(&o), 1);
    let doc = json(&o);
    let l = law(&doc, "bialg.delta_mult");
    assert_eq!(l["status"], "fail");
    assert_eq!(l["witness"]["index"], serde_json::json!([1, 1]));
    assert!(!l["witness"]["lhs"].as_array().unwrap().is_empty());
}

#[test]
fn verify_loop7_notes_associativity_as_informational() {
    let o = hopfq(&["verify", "loop7.hq"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let assoc = law(&doc, "assoc");
    assert_eq!(assoc["status"], "fail");
    assert_eq!(assoc["informational"], true);
    assert_eq!(doc["verdict"], "pass");
}

#[test]
fn verify_as_other_kind() {
    // a group algebra is both
    assert_eq!(code(&hopfq(&["verify", "--kind", "coquasigroup", "s3.hq"])), 0);
    let o = hopfq(&["verify", "--kind", "coquasigroup", "loop7.hq"]);
    assert_eq!(code(&o), 1);
    assert_eq!(law(&json(&o), "assoc")["status"], "fail");
}

#[test]
fn reports_are_byte_identical() {
    let a = hopfq(&["verify", "corrupted.hq"]);
    let b = hopfq(&["verify", "corrupted.hq"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.json");
    let r = r.to_str().unwrap();
    assert_eq!(code(&hopfq(&["--report", r, "verify", "corrupted.hq"])), 1);
    assert_eq!(std::fs::read(r).unwrap(), a.stdout);
}

#[test]
fn parse_and_io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hq");
    std::fs::write(&bad, "hopfqg\nfield Q\ndim 2\nmu:\n0 0 0 1\n5 0 0 1\n").unwrap();
    let o = hopfq(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("bad.hq:6"), "{err}");
    assert_eq!(code(&hopfq(&["verify", "no-such-file.hq"])), 2);
    assert_eq!(code(&hopfq(&["verify", "c2-on-c3.act"])), 2);
    assert_eq!(code(&hopfq(&["--field", "F 5", "verify", "c2.hq"])), 2);
    assert_eq!(code(&hopfq(&["frobnicate"])), 2);
    assert_eq!(code(&hopfq(&["--field", "F 4", "verify", "c2.hq"])), 2);
}

#[test]
fn loop_algebra_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    for (name, field) in [("c2", "Q"), ("s3", "Q"), ("s3", "F 5"), ("loop7", "F 7")] {
        let out = dir.path().join(format!("{name}.hq"));
        let o = hopfq(&["--field", field, "loop-algebra", &format!("{name}.cayley"), "-o", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{name}");
        assert_eq!(code(&hopfq(&["verify", out.to_str().unwrap()])), 0, "{name}");
    }
    let o = hopfq(&["loop-algebra", "not-latin.cayley", "-o", dir.path().join("x.hq").to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("ip.left1: fail at [2, 1]"), "{err}");
}

#[test]
fn smash_recovers_s3_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.hq");
    let o = hopfq(&["smash", "c2-on-c3.bundle", "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("theorem: consistent"));
    assert_eq!(code(&hopfq(&["verify", out.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfq(&["verify", "c2-on-c3.bundle"])), 0);
}

#[test]
fn cosmash_builds_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.hcq");
    assert_eq!(code(&hopfq(&["cosmash", "c2dual-on-c3.bundle", "-o", out.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfq(&["verify", out.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfq(&["verify", "c2dual-on-c3.bundle"])), 0);
}

#[test]
fn sweeps_from_the_cli() {
    let o = hopfq(&["--seed", "7", "smash", "--sweep", "12"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("discrepancies: []"));
    let o = hopfq(&["--seed", "7", "cosmash", "--sweep", "12"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&hopfq(&["smash"])), 2);
}

#[test]
fn dequation_trivial_bundle() {
    let o = hopfq(&["dequation", "h-mu-trivial.bundle"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("R = identity; D-equation: pass\n"), "{out}");
    assert!(out.contains("4x4"));
    assert_eq!(code(&hopfq(&["verify", "h-mu-trivial.bundle"])), 0);
}

#[test]
fn search_then_loop_algebra_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = hopfq(&["search-loops", "7", "--nonassoc", "--limit", "1", "--out-dir", d]);
    assert_eq!(code(&o), 0);
    let files: Vec<_> = std::fs::read_dir(d).unwrap().collect();
    assert_eq!(files.len(), 1);
    let cayley = dir.path().join("loop7-0.cayley");
    let alg = dir.path().join("l.hq");
    assert_eq!(code(&hopfq(&["loop-algebra", cayley.to_str().unwrap(), "-o", alg.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfq(&["verify", alg.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfq(&["verify", cayley.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfq(&["--budget", "3", "search-loops", "7", "--out-dir", d])), 2);
}

#[test]
fn dual_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.hcq");
    let b = dir.path().join("b.hq");
    assert_eq!(code(&hopfq(&["dual", "loop7.hq", "-o", a.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfq(&["verify", a.to_str().unwrap()])), 0);
    assert_eq!(code(&hopfq(&["dual", a.to_str().unwrap(), "-o", b.to_str().unwrap()])), 0);
    let orig = std::fs::read(fixtures().join("loop7.hq")).unwrap();
    assert_eq!(std::fs::read(b).unwrap(), orig);
}
