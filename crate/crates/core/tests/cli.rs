use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str], input: &str) -> Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(input.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let mut full: Vec<&str> = args.to_vec();
    full.push(&path);
    Command::new(env!("CARGO_BIN_EXE_betti-bounds")).args(&full).output().unwrap()
}

#[test]
fn betti_of_two_squares() {
    let out = run(&["betti"], "ring 2 32003 x y\nx^2\ny^2\n");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total:  1  2  1"), "{text}");
    assert!(text.contains("    2:  .  .  1"), "{text}");
}

#[test]
fn gb_has_three_elements() {
    let out = run(&["gb"], "ring 2 32003 x y\nx^2+y^2\nx*y\n");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines, ["x*y", "x^2 + y^2", "y^3"]);
}

#[test]
fn check_thm_lc_exits_zero() {
    let out = run(&["check", "--name", "thm_lc"], "ring 2 32003 x y\nx^2\ny^2\n");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.contains("\"verdict\":\"pass\"")), "{text}");
}

#[test]
fn invariants_as_json() {
    let out = run(&["invariants"], "ring 3 32003\nx1*x2\nx2*x3\n");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["depth"], 1);
    assert_eq!(v["pd"], 2);
}

#[test]
fn parse_error_exits_two() {
    let out = run(&["betti"], "ring 2 32003\nx1^2+\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));
}
