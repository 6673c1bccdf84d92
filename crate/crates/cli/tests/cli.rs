use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const EXAMPLE: &str = "3\n0 0 2\n1 1 1\n0 2 2\n";

fn zbin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zbin"))
        .args(args)
        .env("ZBIN_THREADS", "1")
        .output()
        .unwrap()
}

fn zbin_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zbin"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn classify_example() {
    let out = zbin_stdin(&["classify", "-"], EXAMPLE);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "order: 3\n\
         idempotent: yes\n\
         commutative: no\n\
         associative: no (witness 0 1 2)\n\
         left-zero: no\n\
         right-zero: no\n\
         orientation: yes\n\
         travel: no\n\
         locally-zero: yes\n\
         mask: LRL\n\
         central: no (brute force)\n"
    );
}

#[test]
fn classify_left_zero_is_central() {
    let out = zbin_stdin(&["classify", "-"], "2\n0 0\n1 1\n");
    let text = stdout(&out);
    assert!(text.contains("associative: yes\n"));
    assert!(text.contains("mask: L\n"));
    assert!(text.ends_with("central: yes (brute force)\n"));
}

#[test]
fn classify_large_order_uses_screen() {
    let rows: String = (0..4).map(|x| format!("{x} {x} {x} {x}\n")).collect();
    let out = zbin_stdin(&["classify", "-"], &format!("4\n{rows}"));
    assert!(stdout(&out).ends_with("central: no witness found (sampled screen)\n"));
}

#[test]
fn box_of_tables() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", EXAMPLE);
    let rz = write(dir.path(), "rz.txt", "3\n0 1 2\n0 1 2\n0 1 2\n");
    let out = zbin(&["box", &a, &rz]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n0 1 0\n0 1 2\n2 1 2\n");
}

#[test]
fn output_file_flag() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", EXAMPLE);
    let lz = write(dir.path(), "lz.txt", "3\n0 0 0\n1 1 1\n2 2 2\n");
    let target = dir.path().join("out.txt");
    let out = zbin(&["box", &lz, &a, "-o", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(target).unwrap(), EXAMPLE);
}

#[test]
fn center_commands() {
    let out = zbin(&["center", "count", "3"]);
    assert_eq!(stdout(&out), "8\n");
    let out = zbin(&["center", "count", "4", "--iso"]);
    assert_eq!(stdout(&out), "64 total, 11 classes\n");
    let out = zbin(&["center", "enumerate", "2", "--masks"]);
    assert_eq!(stdout(&out), "2:L\n2:R\n");
    let out = zbin(&["center", "enumerate", "2"]);
    assert_eq!(stdout(&out), "2\n0 0\n1 1\n\n2\n0 1\n0 1\n");
    let out = zbin(&["center", "bruteforce", "3", "--masks"]);
    assert_eq!(stdout(&out), "3:RRR\n3:LLL\n");
}

#[test]
fn center_guards() {
    assert_eq!(zbin(&["center", "bruteforce", "4"]).status.code(), Some(2));
    assert_eq!(
        zbin(&["center", "count", "6", "--iso"]).status.code(),
        Some(2)
    );
}

#[test]
fn linear_compose() {
    let out = zbin(&[
        "linear", "compose", "2", "3", "1", "1", "4", "2", "--mod", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "4 1 2\n");
    let out = zbin(&[
        "linear", "compose", "0", "1", "0", "0", "1", "0", "--mod", "7",
    ]);
    assert_eq!(stdout(&out), "1 0 0\n");
    assert_eq!(
        zbin(&["linear", "compose", "1", "2", "3", "--mod", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        zbin(&["linear", "compose", "1", "2", "3", "4", "5", "6", "--mod", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes() {
    let out = zbin(&["verify", "P3.5", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "PASS P3.5 n=4 exhaustive cases=64 (2 of 64 associative)\n"
    );

    let out = zbin(&["verify", "t3.1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL T3.1 n=3 exhaustive"));
    assert!(stdout(&out).contains("counterexample:"));

    let out = zbin(&["verify", "T1.1-assoc", "--sample", "50", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "PASS T1.1-assoc n=3 sampled seed=9 cases=50\n"
    );

    assert_eq!(zbin(&["verify", "T3.1", "--n", "9"]).status.code(), Some(2));
    assert_eq!(zbin(&["verify", "X9.9"]).status.code(), Some(2));
}

#[test]
fn verify_all_summary() {
    let out = zbin(&["verify", "all", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.ends_with("18 of 19 checks passed\n"));
    assert!(text.contains("FAIL E2.6"));
}

#[test]
fn parse_errors_exit_two() {
    for bad in ["", "2\n0 0\n", "2\n0 2\n1 1\n", "2\n0 0\n1 1\n1 1\n", "x\n"] {
        let out = zbin_stdin(&["classify", "-"], bad);
        assert_eq!(out.status.code(), Some(2), "input {bad:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(
        zbin(&["classify", "/nonexistent/table"]).status.code(),
        Some(2)
    );
    assert_eq!(zbin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(zbin(&[]).status.code(), Some(2));
}

#[test]
fn bad_thread_count() {
    let out = Command::new(env!("CARGO_BIN_EXE_zbin"))
        .args(["center", "count", "2"])
        .env("ZBIN_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_succeeds() {
    assert_eq!(zbin(&["--help"]).status.code(), Some(0));
}
