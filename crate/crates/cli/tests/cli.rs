//! The built binary, driven as a user would.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn olps(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_olps"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn reads_standard_input() {
    let o = olps(&["--mode", "preferred", "-"], Some("A { a. } B { -a. } A < B\n"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{ a }\n");
}

#[test]
fn default_mode_is_proper() {
    let o = olps(&["ex1b.olp"], None);
    assert_eq!(stdout(&o), "{ -a, b, c }\n{ a, -b, c }\n");
}

#[test]
fn exit_codes() {
    assert_eq!(olps(&["ex9.olp"], None).status.code(), Some(1));
    assert_eq!(olps(&["missing.olp"], None).status.code(), Some(2));
    let o = olps(&["-"], Some("a :- b\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(olps(&["--help"], None).status.code(), Some(0));
    assert_eq!(olps(&[], None).status.code(), Some(2));
}

#[test]
fn dialect_flag_overrides_directive() {
    let o = olps(&["--dialect", "lpod", "-"], Some("b * c * d.\nc * a * d.\n-c :- b.\n"));
    assert_eq!(stdout(&o), "{ a, b, -c }\n{ c }\n");
}

#[test]
fn json_reports_reduct_and_defeated_rules() {
    let o = olps(&["--mode", "preferred", "--format", "json", "ex1.olp"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dialect"], "olp");
    assert_eq!(v["solver"], "aset");
    assert_eq!(v["count"], 1);
    let m = &v["answer_sets"][0];
    assert_eq!(m["literals"], serde_json::json!(["b", "-f", "p"]));
    assert_eq!(m["defeated"], serde_json::json!(["Default.1"]));
    assert_eq!(m["reduct"], serde_json::json!(["Facts.1", "Facts.2", "Exception.1"]));
}

#[test]
fn print_is_canonical() {
    let once = stdout(&olps(&["--print", "exercise.olp"], None));
    let twice = stdout(&olps(&["--print", "-"], Some(&once)));
    assert_eq!(once, twice);
    assert!(once.contains("Required < SkipA < SkipB < Do"));
}

#[test]
fn oracle_and_max() {
    let o = olps(&["--oracle", "--mode", "preferred", "--format", "json", "light_ranked.olp"], None);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["solver"], "oracle");
    assert_eq!(v["count"], 2);
    let o = olps(&["--mode", "extended", "--max", "1", "ex0.olp"], None);
    assert_eq!(stdout(&o).lines().count(), 1);
}
