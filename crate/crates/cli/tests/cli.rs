use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperarr"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn forbidden_lists_the_twelve_pairs() {
    let o = run(&["forbidden", "2", "4", "7"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 12);
    assert!(stdout(&o).lines().any(|l| l == "(3, 3)"));
}

#[test]
fn forbidden_with_equal_roots_is_empty() {
    let o = run(&["forbidden", "1", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "none");
}

#[test]
fn forbidden_test_exits_one_when_forbidden() {
    assert_eq!(
        code(&run(&["forbidden", "2", "4", "7", "--test", "3", "3"])),
        1
    );
    assert_eq!(
        code(&run(&["forbidden", "2", "4", "7", "--test", "1", "7"])),
        0
    );
}

#[test]
fn chi_prints_factored_polynomial() {
    let o = run(&["chi", "catalog:paper-mult13"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("(t - 1)(t^2 - 8t + 13)"), "{out}");
    assert!(out.contains("{1, 6}"), "{out}");
    let er = stdout(&run(&["chi", "catalog:edelman-reiner"]));
    assert!(er.contains("(t - 1)(t - 5)^4"), "{er}");
}

#[test]
fn triple_on_the_last_coordinate() {
    let o = run(&["triple", "catalog:edelman-reiner", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("chi(A^H)      (t - 1)(t - 3)^2(t - 5)"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(code(&run(&["triple", "catalog:boolean-3", "9"])), 2);
    assert_eq!(code(&run(&["chi", "catalog:no-such-entry"])), 2);
    assert_eq!(code(&run(&["chi", "/nonexistent/file.txt"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["forbidden"])), 2);
    let bad = temp_file("dim 3\n1 2\n");
    assert_eq!(code(&run(&["chi", bad.path().to_str().unwrap()])), 2);
}

#[test]
fn json_output_is_valid_and_deterministic() {
    for args in [
        &["--json", "chi", "catalog:paper-ex9"][..],
        &["--json", "freeness", "catalog:paper-ex9"],
        &["--json", "scan", "catalog:braid-4"],
    ] {
        let first = run(args);
        let second = run(args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        serde_json::from_slice::<serde_json::Value>(&first.stdout).unwrap();
    }
}

#[test]
fn catalog_emit_round_trips_through_a_file() {
    let emitted = stdout(&run(&["catalog", "emit", "paper-ex9"]));
    let f = temp_file(&emitted);
    let from_file = run(&["chi", f.path().to_str().unwrap()]);
    assert_eq!(code(&from_file), 0);
    let line = |s: &str| {
        s.lines()
            .find(|l| l.starts_with("chi "))
            .unwrap()
            .to_string()
    };
    assert_eq!(
        line(&stdout(&from_file)),
        line(&stdout(&run(&["chi", "catalog:paper-ex9"])))
    );
}

#[test]
fn freeness_reports_exponents() {
    let o = run(&["freeness", "catalog:paper-ex9"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("Free(1,3,5)"));
}

#[test]
fn selftest_exit_codes() {
    assert_eq!(code(&run(&["selftest", "--entry", "boolean-3"])), 0);
    let fixture = temp_file(r#"[{"entry":"paper-ex9","chiRoots":[1,3,4]}]"#);
    let o = run(&[
        "selftest",
        "--entry",
        "paper-ex9",
        "--fixture",
        fixture.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
}
