use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn recolor(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recolor"))
        .args(args)
        .current_dir(dir)
        .env_remove("RECOLOR_SEED")
        .env_remove("RECOLOR_MAX_N")
        .env_remove("RECOLOR_MAX_K")
        .env_remove("RECOLOR_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn separating_example_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, opt) in [("triangle-fix", 3), ("triangle-swap", 2)] {
        let o = recolor(&["gen", "--kind", kind, "--out", "."], dir.path());
        assert!(o.status.success());
        let file = format!("{kind}-0.json");
        let o = recolor(&["solve", "--input", &file, "--promise"], dir.path());
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        assert!(out.contains(&format!("optimum: {opt}")), "{out}");
        assert!(out.contains("decision: yes"));

        let cert: String = out.lines().skip_while(|l| *l != "certificate:").skip(1).map(|l| format!("{}\n", l.trim())).collect();
        fs::write(dir.path().join("cert.txt"), cert).unwrap();
        let o = recolor(&["verify", "--input", &file, "--certificate", "cert.txt"], dir.path());
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("accepted: yes"));
    }
}

#[test]
fn rejected_certificate_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    recolor(&["gen", "--kind", "triangle-fix", "--out", "."], dir.path());
    fs::write(dir.path().join("cert.txt"), "R 0 1\n").unwrap();
    let o = recolor(&["verify", "--input", "triangle-fix-0.json", "--certificate", "cert.txt"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("accepted: no"));
}

#[test]
fn generation_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let a = recolor(&["gen", "--kind", "prext", "--seed", "9", "--count", "3"], dir.path());
    let b = recolor(&["gen", "--kind", "prext", "--seed", "9", "--count", "3"], dir.path());
    let c = recolor(&["gen", "--kind", "prext", "--seed", "10", "--count", "3"], dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn reduce_then_replay_indset() {
    let dir = tempfile::tempdir().unwrap();
    let src = r#"{"format_version": 1, "kind": "indset", "n": 4, "edges": [[0,1],[1,2],[2,3],[0,3]], "k": 2}"#;
    fs::write(dir.path().join("src.json"), src).unwrap();
    let o = recolor(&["reduce", "--reduction", "indset-3swap", "--input", "src.json", "--out", "red.json"], dir.path());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(dir.path().join("red.json")).unwrap();
    assert!(text.contains("\"trace\""));
    let o = recolor(&["verify", "--replay", "indset", "--source", "src.json", "--input", "red.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("moves: 4 (budget 4)"));
}

#[test]
fn reduce_rejects_wrong_source_kind() {
    let dir = tempfile::tempdir().unwrap();
    recolor(&["gen", "--kind", "indset", "--out", "."], dir.path());
    let o = recolor(&["reduce", "--reduction", "prext-fix", "--input", "indset-0.json"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_writes_jsonl_and_report_reads_it() {
    let dir = tempfile::tempdir().unwrap();
    let o = recolor(&["verify", "--sweep", "prext-swap", "--max-n", "3", "--jsonl", "s.jsonl"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let lines = fs::read_to_string(dir.path().join("s.jsonl")).unwrap();
    let last: serde_json::Value = serde_json::from_str(lines.lines().last().unwrap()).unwrap();
    assert_eq!(last["type"], "summary");
    assert_eq!(last["summary"]["disagree"], 0);
    let o = recolor(&["report", "s.jsonl"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).contains("prext-swap"));
}

#[test]
fn sweep_reads_environment_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_recolor"))
        .args(["verify", "--sweep", "prext-fix", "--jsonl", "s.jsonl"])
        .current_dir(dir.path())
        .env("RECOLOR_MAX_N", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    let lines = fs::read_to_string(dir.path().join("s.jsonl")).unwrap();
    let last: serde_json::Value = serde_json::from_str(lines.lines().last().unwrap()).unwrap();
    assert_eq!(last["max_n"], 2);
}

#[test]
fn gadget_check_passes() {
    let o = recolor(&["verify", "--gadget"], Path::new("."));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("P1: holds"));
}

#[test]
fn errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(recolor(&["solve", "--input", "missing.json"], dir.path()).status.code(), Some(2));
    assert_eq!(recolor(&["frobnicate"], dir.path()).status.code(), Some(2));
    fs::write(dir.path().join("bad.json"), "{\"format_version\": 1,\n \"kind\": }").unwrap();
    let o = recolor(&["solve", "--input", "bad.json"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}
