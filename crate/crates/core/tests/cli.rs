use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

use supermin::algebra::AlgScalar;
use supermin::catalog::example_family;
use supermin::io::write_curve;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supermin")).args(args).output().expect("binary runs")
}

fn gen(dir: &TempDir, k1: u32, k2: u32) -> PathBuf {
    let path = dir.path().join(format!("curve_{k1}_{k2}.json"));
    let out = run(&["gen", "--k1", &k1.to_string(), "--k2", &k2.to_string(), "--out", path_str(&path)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn gen_then_verify() {
    let dir = TempDir::new().unwrap();
    let path = gen(&dir, 1, 1);
    let out = run(&["verify", path_str(&path)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 6);
}

#[test]
fn report_values() {
    let dir = TempDir::new().unwrap();
    let path = gen(&dir, 1, 2);
    let out = run(&["report", path_str(&path), "--grid", "16", "--tol", "1e-2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["delta"], serde_json::json!([8, 14, 16, 16, 14, 8]));
    assert_eq!(v["type0"], serde_json::json!([0, 1, 0, 0, 1, 0]));
    assert_eq!(v["area_pi"], "32");
    assert_eq!(v["degreesAgree"], true);
}

#[test]
fn integrate_and_its_failure_mode() {
    let dir = TempDir::new().unwrap();
    let path = gen(&dir, 1, 1);
    let ok = run(&["integrate", path_str(&path), "--p", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("p 2 estimate "));
    let starved = run(&["integrate", path_str(&path), "--p", "2", "--tol", "1e-9", "--grid", "8"]);
    assert_eq!(starved.status.code(), Some(1));
}

#[test]
fn sample_formats() {
    let dir = TempDir::new().unwrap();
    let path = gen(&dir, 1, 1);
    let csv = run(&["sample", path_str(&path), "--grid", "8", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&csv.stdout).lines().count(), 1 + 128);
    let obj = run(&["sample", path_str(&path), "--grid", "8", "--format", "obj"]);
    let text = String::from_utf8_lossy(&obj.stdout).into_owned();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 128);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 122);
    let js = json(&run(&["sample", path_str(&path), "--grid", "8"]));
    assert_eq!(js["points"].as_array().unwrap().len(), 128);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["gen", "--k1", "0", "--k2", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "/nonexistent/curve.json"]).status.code(), Some(3));
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(run(&["verify", path_str(&bad)]).status.code(), Some(2));
    assert_eq!(run(&["report", path_str(&bad)]).status.code(), Some(2));
}

#[test]
fn perturbed_curves_fail_verify() {
    let dir = TempDir::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 0..5 {
        let mut f = example_family(1, 1).unwrap();
        let comp = rng.gen_range(0..7);
        let exp = rng.gen_range(0..=6);
        f.0[comp].add_term(exp, &AlgScalar::from_ratio(rng.gen_range(1..10), rng.gen_range(1..10)));
        let path = dir.path().join(format!("perturbed_{n}.json"));
        write_curve(&path, None, &f).unwrap();
        let out = run(&["verify", path_str(&path)]);
        assert_eq!(out.status.code(), Some(1), "perturbation of e{} at z^{exp} passed", comp + 1);
        assert_eq!(json(&out)["pass"], false);
    }
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let path = gen(&dir, 2, 3);
    let a = std::fs::read(&path).unwrap();
    let again = run(&["gen", "--k1", "2", "--k2", "3"]);
    assert_eq!(again.stdout, a);
    for args in [vec!["report", path_str(&path), "--grid", "16"], vec!["sample", path_str(&path), "--grid", "8", "--format", "csv"]] {
        let x = run(&args);
        let y = run(&args);
        assert_eq!(x.status.code(), Some(0));
        assert_eq!(x.stdout, y.stdout);
    }
}
