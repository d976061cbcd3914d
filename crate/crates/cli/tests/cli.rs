use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wormhole")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", &fixture("z2.wh")]), "1\n");
    assert_eq!(stdout(&["eval", &fixture("z1.wh")]), "0\n");
    assert_eq!(stdout(&["eval", &fixture("z6.wh")]), "5\n");
    assert_eq!(stdout(&["eval", &fixture("k_fig1.wh")]), "1/(-A^2 - A^-2)\n");
    assert_eq!(stdout(&["eval", &fixture("single_strand_colored.wh")]), "0\n");
}

#[test]
fn oracle_agrees_on_every_closed_fixture() {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures"].iter().collect();
    let mut checked = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path().to_string_lossy().into_owned();
        let fast = run(&["eval", &path]);
        if !fast.status.success() {
            continue;
        }
        let slow = run(&["eval", "--oracle", &path]);
        assert!(slow.status.success(), "{path}");
        assert_eq!(fast.stdout, slow.stdout, "{path}");
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn eval_json_follows_the_schema() {
    let out = stdout(&["eval", "--json", "--r-range", "3..5", &fixture("k_fig1_color2.wh")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["input", "invariant", "pretty", "wrt"]);
    assert_eq!(v["pretty"], "1/(A^4 + 1 + A^-4)");
    let inv = wormhole_core_value(&v["invariant"]);
    assert_eq!(inv.to_string(), "1/(A^4 + 1 + A^-4)");
    let rows = v["wrt"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["status"], "skip");
    for row in &rows[1..] {
        assert_eq!(row["status"], "pass");
        assert_eq!(row["lhs"].as_array().unwrap().len(), 2);
        assert!(row["abs_err"].as_f64().unwrap() < 1e-9);
    }
    // byte-stable output
    assert_eq!(out, stdout(&["eval", "--json", "--r-range", "3..5", &fixture("k_fig1_color2.wh")]));
}

fn wormhole_core_value(v: &serde_json::Value) -> wormhole_core::RatFn {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn dim_examples() {
    assert_eq!(stdout(&["dim", "--points", "1,1,1,1,1,1"]), "5\n");
    assert_eq!(stdout(&["dim", "--points", "1,1,1"]), "0\n");
    assert_eq!(stdout(&["dim", "--points", "2,2"]), "1\n");
    assert_eq!(run(&["dim", "--points", "1,x"]).status.code(), Some(1));
}

#[test]
fn gram_examples() {
    assert_eq!(stdout(&["gram", "-n", "1"]), "[-A^2 - A^-2]\n");
    let out = stdout(&["gram", "-n", "2", "--det"]);
    assert!(out.contains("det = A^8 + 3A^4 + 4 + 3A^-4 + A^-8"), "{out}");
    assert!(out.ends_with("degree in d = 4\n"));
    assert_eq!(run(&["gram", "-n", "0"]).status.code(), Some(1));
}

#[test]
fn matrix_examples() {
    let id = stdout(&["matrix", &fixture("id4.wh"), "--points", "1,1,1,1"]);
    assert_eq!(id, "dimension 2\n[1, 0]\n[0, 1]\ntrace = 2\n");
    let id = stdout(&["matrix", &fixture("id4.wh"), "--basis", "catalan"]);
    assert!(id.ends_with("trace = 2\n"));
    let x = stdout(&["matrix", &fixture("crossing4.wh"), "--basis", "catalan"]);
    assert_eq!(x, "dimension 2\n[A, 0]\n[A^-1, -A^-3]\ntrace = A - A^-3\n");
    assert_eq!(run(&["matrix", &fixture("id4.wh"), "--points", "1,1"]).status.code(), Some(1));
    assert_eq!(run(&["matrix", &fixture("bad_boundary.wh")]).status.code(), Some(1));
}

#[test]
fn wrt_check_examples() {
    let out = stdout(&["wrt-check", &fixture("z4.wh"), "--r-range", "5..10"]);
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().all(|l| l.ends_with("pass")), "{out}");
    let out = stdout(&["wrt-check", &fixture("z1.wh"), "--r-range", "5..8"]);
    assert!(out.lines().all(|l| l.ends_with("pass")));
    let out = stdout(&["wrt-check", &fixture("k_fig1_color2.wh"), "--r-range", "3..5"]);
    assert!(out.lines().next().unwrap().contains("skip (PoleAtPoint)"), "{out}");
    // an impossible tolerance fails every row
    let fail = run(&["wrt-check", &fixture("z2.wh"), "--r-range", "5..5", "--tol", "0"]);
    assert_eq!(fail.status.code(), Some(3));
}

#[test]
fn parse_prints_canonical_form() {
    let out = stdout(&["parse", &fixture("z2.wh")]);
    assert_eq!(out, "cup 0 1\ncup 1 1\ndisk D 0 2\ncap 1\ncap 0\n");
    assert_eq!(stdout(&["parse", &fixture("id4.wh")]), "bottom 1 1 1 1\ntop 1 1 1 1\n");
}

#[test]
fn exit_codes() {
    let bad = run(&["eval", &fixture("bad_boundary.wh")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 4"));
    assert_eq!(run(&["eval", "/nonexistent.wh"]).status.code(), Some(1));
    assert_eq!(run(&["eval", &fixture("id4.wh")]).status.code(), Some(1));
    assert_eq!(run(&["wrt-check", &fixture("z2.wh"), "--r-range", "2..5"]).status.code(), Some(1));
    assert_eq!(run(&["wrt-check", &fixture("z2.wh"), "--r-range", "five"]).status.code(), Some(1));
}
