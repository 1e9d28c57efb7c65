mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::corpus_dir;

fn aml(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aml")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn corpus(rel: &str) -> String {
    corpus_dir().join(rel).to_string_lossy().into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn tautologies_exit_zero() {
    let out = aml(&["taut", &corpus("patterns/excluded-middle.pat")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("tautology"));
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("p.pat");
    fs::write(&f, "c -> d\n").unwrap();
    assert_eq!(code(&aml(&["taut", path(&f)])), 1);
}

#[test]
fn check_against_a_model() {
    let out = aml(&["check", &corpus("patterns/exists-x-x.pat"), "--model", &corpus("models/two-points.json")]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = aml(&["check", &corpus("patterns/exists-x-x.pat"), "--max-size", "2"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn audit_output_is_reproducible() {
    let f = corpus("proofs/p11-kt-then-frame.prf");
    let a = aml(&["proof", "check", &f, "--audit"]);
    let b = aml(&["proof", "check", &f, "--audit"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("RESULT: accepted"));
    let n = aml(&["proof", "check", &corpus("proofs-negative/n01-not-tautology.prf")]);
    assert_eq!(code(&n), 1);
    assert!(stdout(&n).contains("not-tautology"));
}

#[test]
fn counterexamples_replay() {
    let dir = tempfile::tempdir().unwrap();
    let (hyp, concl) = (corpus("patterns/or-hyp.pat"), corpus("patterns/and-concl.pat"));
    let out = aml(&["consequence", &concl, "--gamma", &hyp, "--kind", "local", "--cex-dir", path(dir.path())]);
    assert_eq!(code(&out), 1);
    let model = dir.path().join("consequence-model.json");
    let valuation = dir.path().join("consequence-valuation.json");
    assert!(model.exists() && valuation.exists());
    let eval = |f: &str| code(&aml(&["eval", f, "--model", path(&model), "--valuation", path(&valuation)]));
    assert_eq!(eval(&hyp), 0);
    assert_eq!(eval(&concl), 1);
    let global = aml(&["consequence", &concl, "--gamma", &hyp, "--kind", "global"]);
    assert_eq!(code(&global), 0);
}

#[test]
fn errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.pat");
    fs::write(&f, "c\n\nc ->\n").unwrap();
    let out = aml(&["parse", path(&f)]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains(&format!("{}:3", f.display())), "{err}");
    assert_eq!(code(&aml(&["taut", path(&dir.path().join("missing.pat"))])), 2);
    assert_eq!(code(&aml(&["consequence", path(&f), "--kind", "sideways"])), 2);
}

#[test]
fn generated_models_load_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("suite");
    assert_eq!(code(&aml(&["gen-models", "--out", path(&out), "--max-size", "1"])), 0);
    assert_eq!(fs::read_dir(&out).unwrap().count(), 2);
    let check = aml(&["check", &corpus("patterns/exists-x-x.pat"), "--models", path(&out)]);
    assert_eq!(code(&check), 0);
}

#[test]
fn json_output_parses() {
    let out = aml(&["--json", "taut", &corpus("patterns/excluded-middle.pat")]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["tautology"] == true));
    let out = aml(&["--json", "proof", "check", &corpus("proofs/p01-existence-weakening.prf"), "--audit"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.is_object());
    let out = aml(&["--json", "analyze", &corpus("patterns/fixpoints.pat")]);
    serde_json::from_slice::<serde_json::Value>(&out.stdout).unwrap();
}
