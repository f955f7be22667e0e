use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn linsys(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linsys"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn gen(dir: &Path, args: &[&str], file: &str) -> PathBuf {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", file]);
    let out = linsys(&full, dir);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    dir.join(file)
}

fn counts(path: &Path) -> (u64, usize) {
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    (v["points"].as_u64().unwrap(), v["lines"].as_array().unwrap().len())
}

#[test]
fn gen_writes_instance_and_labels() {
    let dir = TempDir::new().unwrap();
    let c34 = gen(dir.path(), &["cnn", "--n", "3"], "c34.json");
    assert_eq!(counts(&c34), (8, 8));
    let labels: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("c34.labels.json")).unwrap()).unwrap();
    assert_eq!(labels["points"].as_array().unwrap().len(), 8);
    assert_eq!(labels["lines"].as_array().unwrap().len(), 8);

    let pg3 = gen(dir.path(), &["plane", "--q", "3"], "pg3.json");
    assert_eq!(counts(&pg3), (13, 13));
    let c = gen(dir.path(), &["C"], "c.json");
    assert_eq!(counts(&c), (10, 10));
    let padded = gen(dir.path(), &["pad", "--input", "c34.json", "--r", "4"], "c34p.json");
    assert_eq!(counts(&padded), (16, 8));
    let random = gen(
        dir.path(),
        &["random", "--points", "9", "--lines", "5", "--seed", "3"],
        "rand.json",
    );
    assert_eq!(counts(&random), (9, 5));
}

#[test]
fn gen_rejects_bad_parameters() {
    let dir = TempDir::new().unwrap();
    let out = linsys(&["gen", "cnn", "--n", "4", "--out", "x.json"], dir.path());
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd"));
    assert!(!dir.path().join("x.json").exists());
    let out = linsys(&["gen", "star", "--r", "3", "--out", "x.json"], dir.path());
    assert_eq!(code(&out), 2);
    let out = linsys(&["gen", "cnn", "--n", "3", "--bogus", "1", "--out", "x.json"], dir.path());
    assert_eq!(code(&out), 2);
}

#[test]
fn gen_c44_directory() {
    let dir = TempDir::new().unwrap();
    let out = linsys(&["gen", "c44", "--out", "family"], dir.path());
    assert_eq!(code(&out), 0);
    let instances = fs::read_dir(dir.path().join("family"))
        .unwrap()
        .filter(|e| !e.as_ref().unwrap().file_name().to_string_lossy().contains("labels"))
        .count();
    assert_eq!(instances, 8);
}

#[test]
fn solve_reports_optima() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), &["cnn", "--n", "3"], "c34.json");
    let out = linsys(&["solve", "c34.json", "--what", "both", "--deterministic"], dir.path());
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("tau=4 (proven)"), "{text}");
    assert!(text.contains("nu2=4 (proven)"), "{text}");

    gen(dir.path(), &["star", "--k", "5", "--r", "3"], "star.json");
    let out = linsys(&["solve", "star.json", "--what", "tau"], dir.path());
    assert!(stdout(&out).contains("tau=1 (proven)"));
    assert!(!stdout(&out).contains("nu2"));

    gen(dir.path(), &["plane", "--q", "2"], "pg2.json");
    let out = linsys(&["solve", "pg2.json", "--format", "json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["tau"]["optimum"], 3);
    assert_eq!(v["nu2"]["optimum"], 4);
    assert_eq!(v["tau"]["proven_optimal"], true);
}

#[test]
fn solve_budget_exhaustion_exits_3() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), &["cnn", "--n", "5"], "c56.json");
    let out = linsys(&["solve", "c56.json", "--budget", "2"], dir.path());
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("budget exceeded"));
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("bad.json"), "{\"points\":3,\"lines\":[[0,1],[1,2,2]]}").unwrap();
    fs::write(dir.path().join("junk.json"), "not json").unwrap();
    for args in [
        vec!["solve", "bad.json"],
        vec!["verify", "junk.json"],
        vec!["canon", "junk.json"],
        vec!["iso", "bad.json", "junk.json"],
        vec!["solve", "missing.json"],
        vec!["verify"],
    ] {
        let out = linsys(&args, dir.path());
        assert_eq!(code(&out), 2, "{args:?}");
    }
}

#[test]
fn verify_families() {
    let dir = TempDir::new().unwrap();
    let out = linsys(&["verify", "--family", "cnn", "--range", "3..7"], dir.path());
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: pass (3 instances"));

    let out = linsys(&["verify", "--family", "c44", "--format", "json", "--jobs", "2"], dir.path());
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "pass");
    for inst in v["instances"].as_array().unwrap() {
        assert_eq!(inst["summary"]["tau"]["value"], 4);
        assert_eq!(inst["summary"]["nu2"]["value"], 4);
    }

    let out = linsys(&["verify", "--family", "cnn", "--range", "5..5", "--budget", "3"], dir.path());
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_files() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), &["cnn", "--n", "3"], "c34.json");
    gen(dir.path(), &["pad", "--input", "c34.json", "--r", "4"], "c34p.json");
    let out = linsys(&["verify", "c34.json", "c34p.json"], dir.path());
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("hy.bound                       4 <= 4  equality"), "{text}");
    assert!(text.contains("4 <= 24/5  pass"), "{text}");
}

#[test]
fn iso_exit_codes() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), &["cnn", "--n", "3"], "c34.json");
    gen(dir.path(), &["pad", "--input", "c34.json", "--r", "5"], "c34p.json");
    gen(dir.path(), &["star", "--k", "3", "--r", "3"], "star.json");
    gen(dir.path(), &["matching", "--m", "3", "--r", "3"], "matching.json");
    let out = linsys(&["iso", "c34.json", "c34p.json"], dir.path());
    assert_eq!((code(&out), stdout(&out).trim()), (0, "isomorphic"));
    let out = linsys(&["iso", "star.json", "matching.json"], dir.path());
    assert_eq!((code(&out), stdout(&out).trim()), (1, "not-isomorphic"));

    gen(dir.path(), &["plane", "--q", "5"], "pg5.json");
    let out = linsys(&["iso", "pg5.json", "pg5.json", "--budget", "3"], dir.path());
    assert_eq!((code(&out), stdout(&out).trim()), (3, "undecided"));
}

#[test]
fn canon_ignores_labeling() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), &["plane", "--q", "2"], "pg2.json");
    fs::write(
        dir.path().join("pg2b.json"),
        "{\"points\":7,\"lines\":[[0,1,3],[1,2,4],[2,3,5],[3,4,6],[0,4,5],[1,5,6],[0,2,6]]}",
    )
    .unwrap();
    let a = linsys(&["canon", "pg2.json"], dir.path());
    let b = linsys(&["canon", "pg2b.json"], dir.path());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), &["cnn", "--n", "5"], "c56.json");
    gen(dir.path(), &["plane", "--q", "3"], "pg3.json");
    for args in [
        vec!["solve", "c56.json", "--deterministic"],
        vec!["solve", "pg3.json", "--deterministic", "--format", "json"],
        vec!["canon", "c56.json"],
        vec!["canon", "pg3.json"],
    ] {
        let first = linsys(&args, dir.path());
        let second = linsys(&args, dir.path());
        assert_eq!(code(&first), 0);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
    let a = fs::read(dir.path().join("c56.json")).unwrap();
    gen(dir.path(), &["cnn", "--n", "5"], "c56.json");
    assert_eq!(a, fs::read(dir.path().join("c56.json")).unwrap());
}
