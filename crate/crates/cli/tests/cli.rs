use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn trd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = trd(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn generate(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", s(&path)]);
    assert!(trd(&full).status.success());
    path
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    // the figure's pentagon numbering
    let c5 = write(&dir, "c5.txt", "0 1\n1 3\n3 4\n4 2\n2 0\n");
    let good = write(&dir, "good.txt", "3 0 0 2 2\n");
    assert_eq!(trd(&["verify", s(&c5), s(&good)]).status.code(), Some(0));

    let p3 = write(&dir, "p3.txt", "0 1\n1 2\n");
    let bad = write(&dir, "bad.txt", "1 3 0\n");
    let out = trd(&["verify", s(&p3), s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("vertex 2"));
    let report = {
        let out = trd(&["--json", "verify", s(&p3), s(&bad)]);
        serde_json::from_slice::<Value>(&out.stdout).unwrap()
    };
    assert_eq!(report["result"]["violations"][0]["vertex"], 2);

    let missing = dir.path().join("missing.txt");
    assert_eq!(trd(&["verify", s(&missing), s(&good)]).status.code(), Some(2));
    let garbage = write(&dir, "garbage.txt", "0 1\n1 1\n");
    assert_eq!(trd(&["verify", s(&garbage), s(&good)]).status.code(), Some(2));
}

#[test]
fn solve_examples() {
    let dir = TempDir::new().unwrap();
    let p10 = generate(&dir, "p10.txt", &["path", "10"]);
    let r = json(&["solve", s(&p10)]);
    assert_eq!(r["result"]["weight"], 15);
    assert_eq!(r["result"]["method"], "closedform");

    let c10 = generate(&dir, "c10.txt", &["cycle", "10"]);
    assert_eq!(json(&["solve", s(&c10)])["result"]["weight"], 14);
    assert_eq!(json(&["solve", "--method", "bnb", s(&c10)])["result"]["weight"], 14);

    let f2 = generate(&dir, "f2.txt", &["family-f", "2", "--attach", "0-1"]);
    let r = json(&["solve", s(&f2)]);
    assert_eq!(r["result"]["weight"], 14);
    assert_eq!(r["result"]["method"], "treedp");

    let c7 = generate(&dir, "c7.txt", &["cycle", "7"]);
    assert_eq!(json(&["solve", s(&c7)])["result"]["weight"], 10);
    let k = json(&["solve", "--method", "bruteforce", "--k", "1", s(&c7)]);
    assert_eq!(k["result"]["weight"], 5);
}

#[test]
fn solve_guards_and_errors() {
    let dir = TempDir::new().unwrap();
    let p70 = generate(&dir, "p70.txt", &["path", "70"]);
    let out = trd(&["solve", "--method", "bnb", s(&p70)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit is 64"));
    let p15 = generate(&dir, "p15.txt", &["path", "15"]);
    assert_eq!(trd(&["solve", "--method", "bruteforce", s(&p15)]).status.code(), Some(3));
    let c5 = generate(&dir, "c5.txt", &["cycle", "5"]);
    assert_eq!(trd(&["solve", "--method", "treedp", s(&c5)]).status.code(), Some(2));
    let k4 = generate(&dir, "k4.txt", &["complete", "4"]);
    assert_eq!(trd(&["solve", "--method", "closedform", s(&k4)]).status.code(), Some(2));
}

#[test]
fn bound_examples() {
    let dir = TempDir::new().unwrap();
    let c9 = generate(&dir, "c9.txt", &["cycle", "9"]);
    let r = json(&["bound", s(&c9)]);
    let entry = |name: &str| {
        r["result"]["entries"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["name"] == name)
            .unwrap()
            .clone()
    };
    assert_eq!(entry("probabilistic")["value"], 21);
    assert_eq!(entry("max_degree")["value"], 22);

    let s5 = generate(&dir, "s5.txt", &["star", "5"]);
    let r = json(&["bound", s(&s5)]);
    assert_eq!(r["result"]["best_lower"], 4);
    assert_eq!(r["result"]["best_upper"], 4);

    let p4 = generate(&dir, "p4.txt", &["path", "4"]);
    let r = json(&["bound", s(&p4)]);
    let md = r["result"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "max_degree")
        .unwrap()
        .clone();
    assert_eq!(md["value"], 7);
    assert_eq!(md["tight"], true);
}

#[test]
fn gen_then_solve_and_chain() {
    let out = trd(&["gen", "cycle", "7"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("p 7\n"));
    let dir = TempDir::new().unwrap();
    let c5 = generate(&dir, "c5.txt", &["cycle", "5"]);
    let r = json(&["chain", s(&c5)]);
    let v = &r["result"];
    assert_eq!(
        (v["gamma"].clone(), v["gamma_r"].clone(), v["gamma_dr"].clone(), v["gamma_3r"].clone()),
        (2.into(), 4.into(), 6.into(), 7.into())
    );
    assert_eq!(v["chain_holds"], true);
    let p13 = generate(&dir, "p13.txt", &["path", "13"]);
    assert_eq!(trd(&["chain", s(&p13)]).status.code(), Some(3));
}

#[test]
fn reduce_writes_sidecar() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "x.txt", "1 1\n0 1 2\n");
    let out = dir.path().join("gadget.txt");
    assert!(trd(&["reduce", s(&inst), "--out", s(&out)]).status.success());
    let map: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("gadget.txt.map.json")).unwrap())
            .unwrap();
    assert_eq!(map["threshold"], 15);
    let r = json(&["solve", s(&out)]);
    assert_eq!(r["result"]["weight"], 15);

    let chordal = dir.path().join("chordal.txt");
    let inst2 = write(&dir, "x2.txt", "1 2\n0 1 2\n0 1 2\n");
    let r = json(&["reduce", s(&inst2), "--variant", "chordal", "--out", s(&chordal)]);
    assert_eq!(r["result"]["threshold"], 19);
    assert_eq!(r["result"]["order"], 16);
    let bad = write(&dir, "bad.txt", "1 1\n0 0 1\n");
    assert_eq!(trd(&["reduce", s(&bad)]).status.code(), Some(2));
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "g.txt", &["--seed", "17", "gnp", "22", "0.2"]);
    let base = json(&["solve", "--method", "bnb", s(&g)]);
    for threads in ["1", "2", "4"] {
        let other = json(&["--threads", threads, "solve", "--method", "bnb", s(&g)]);
        assert_eq!(other["digest"], base["digest"]);
        assert_eq!(other["result"]["witness"], base["result"]["witness"]);
    }
    let again = json(&["solve", "--method", "bnb", s(&g)]);
    assert_eq!(without_timing(again), without_timing(base.clone()));

    let b1 = json(&["--seed", "5", "bound", s(&g)]);
    let b3 = json(&["--seed", "5", "--threads", "3", "bound", s(&g)]);
    assert_eq!(b1["digest"], b3["digest"]);
    let other_seed = json(&["--seed", "6", "bound", s(&g)]);
    assert_eq!(other_seed["seed"], 6);
    assert_eq!(base["command"], "solve");
    assert_eq!(base["inputs"].as_array().unwrap().len(), 1);
}
