use std::process::{Command, Output};

fn hopfcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcheck")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn graded_suite_on_abc_exits_0() {
    let o = hopfcheck(&["verify", "--algebra", "abc", "--ring", "Z", "--maxdeg", "5", "--suite", "graded-hopf"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("3 passed, 0 failed"));
}

#[test]
fn abc_lowered_exponent_exits_2_with_witness() {
    let o = hopfcheck(&["verify", "--algebra", "abc", "--suite", "lowered-exponent", "--p", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let entries = v["reports"][0]["entries"].as_array().unwrap();
    let fail = entries.iter().find(|e| e["status"] == "fail").unwrap();
    assert_eq!(fail["witness"]["input"], "(id−S²)(c)");
    assert_eq!(fail["witness"]["display"], "ab - ba");
    assert_eq!(v["summary"]["fail"], 1);
}

#[test]
fn fqsym_lowered_exponent_exits_0() {
    let o = hopfcheck(&["verify", "--algebra", "fqsym", "--maxdeg", "5", "--suite", "lowered-exponent", "--p", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn configuration_errors_exit_1() {
    for args in [
        &["verify", "--algebra", "nope"][..],
        &["verify", "--algebra", "abc", "--suite", "bogus"],
        &["verify", "--algebra", "fqsym", "--maxdeg", "9"],
        &["verify", "--algebra", "abc", "--ring", "Z/"],
        &["verify", "--algebra", "taft", "--n", "4"],
    ] {
        let o = hopfcheck(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

#[test]
fn bad_spec_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.hopf");
    std::fs::write(&path, "ring Z\nmaxdeg 2\nbasis 0 1\nbasis 1 x x\n").unwrap();
    let o = hopfcheck(&["verify", "--spec", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn list_suites_shows_anchors() {
    let o = hopfcheck(&["list-suites"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for (id, anchor) in [
        ("graded-hopf", "Cor. id-S2.gr1"),
        ("theorem1", "Theorem thm.id-f.gen"),
        ("binomial-identity", "§3.1 proof"),
    ] {
        assert!(text.lines().any(|l| l.starts_with(id) && l.ends_with(anchor)), "{id}");
    }
}

#[test]
fn export_then_verify_matches_zoo() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("fqsym.hopf");
    let o = hopfcheck(&["export", "--algebra", "fqsym", "--maxdeg", "3", "--out", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let from_zoo = hopfcheck(&["verify", "--algebra", "fqsym", "--maxdeg", "3", "--format", "json"]);
    let from_spec = hopfcheck(&["verify", "--spec", spec.to_str().unwrap(), "--format", "json"]);
    assert_eq!(from_zoo.status.code(), Some(0));
    assert_eq!(from_zoo.stdout, from_spec.stdout);
}

#[test]
fn seeded_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = hopfcheck(&[
            "verify", "--algebra", "shuffle", "--maxdeg", "4", "--suite", "reduced", "--seed", "9", "--format", "json", "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read(out).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn taft_defaults_pass_with_nonidentities() {
    let o = hopfcheck(&["verify", "--algebra", "taft"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("[NONID] (id−S²)^k(x) ≠ 0"));
    let o = hopfcheck(&["verify", "--algebra", "taft", "--suite", "connected"]);
    assert_eq!(o.status.code(), Some(2));
}
