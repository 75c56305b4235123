use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn basesize(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_basesize")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn base_size_of_dpq_file() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "dpq.txt", "# D_15 on 3 + 5 points\ndegree 8\n(0 1 2)(3 4 5 6 7)\n(0 1)(3 7)(4 6)\n");
    let o = basesize(&["base-size", &f]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("base size: 3\n"), "{text}");
    assert!(text.contains("group order: 30\n"));
}

#[test]
fn base_size_of_a_transposition() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "t.txt", "degree 4\n(1 3)\n");
    assert_eq!(stdout(&basesize(&["--quiet", "base-size", &f])), "1\n");
}

#[test]
fn malformed_files_exit_2_with_line_number() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "bad.txt", "degree 3\n\n(0 1\n");
    let o = basesize(&["base-size", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 3"));
    let g = file(&dir, "bad-graph.txt", "3 2\n0 1\n1 1\n");
    assert_eq!(basesize(&["determining-number", &g]).status.code(), Some(2));
    assert_eq!(basesize(&["base-size", "/no/such/file"]).status.code(), Some(2));
}

#[test]
fn determining_numbers_of_graph_files() {
    let dir = TempDir::new().unwrap();
    let c7 = file(&dir, "c7.txt", "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n");
    let text = stdout(&basesize(&["determining-number", &c7]));
    assert!(text.contains("determining number: 2\n") && text.contains("automorphism group order: 14\n"), "{text}");

    let mut p2c9 = String::from("11 10\n0 1\n");
    for i in 0..9 {
        p2c9.push_str(&format!("{} {}\n", 2 + i, 2 + (i + 1) % 9));
    }
    let f = file(&dir, "p2c9.txt", &p2c9);
    assert_eq!(stdout(&basesize(&["--quiet", "determining-number", &f])), "3\n");

    let one = file(&dir, "one.txt", "1 0\n");
    assert_eq!(stdout(&basesize(&["--quiet", "determining-number", &one])), "0\n");
}

#[test]
fn vertex_budget_exits_3() {
    let dir = TempDir::new().unwrap();
    let f = file(&dir, "c7.txt", "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n");
    assert_eq!(basesize(&["--vertex-budget", "5", "determining-number", &f]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(basesize(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(basesize(&["bss", "D:1"]).status.code(), Some(2));
    assert_eq!(basesize(&["bss"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_same_text() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("bss.txt");
    let o = basesize(&["bss", "Z:2,2", "--max-points", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), stdout(&o));
    assert!(stdout(&o).contains("base size set: {1,2}\n"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = basesize(&["bss", "D:15"]);
    let b = basesize(&["bss", "D:15"]);
    assert_eq!(a.stdout, b.stdout);
    let a = basesize(&["dss-evidence", "D:6"]);
    let b = basesize(&["dss-evidence", "D:6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_quick_writes_json_mirror() {
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("report.json");
    let o = basesize(&["verify", "quick", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("CLAIM THM-3-NOT-IN-D EVIDENCE")));
    let mirror = std::fs::read_to_string(Path::new(&json)).unwrap();
    assert!(mirror.contains("\"claim_id\": \"THM-3-NOT-IN-D\"") && mirror.contains("\"status\": \"EVIDENCE\""));
}

#[test]
fn printed_reading_fails_the_suite() {
    let o = basesize(&["verify", "quick", "--reading", "printed"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("CLAIM PROP-D15 FAIL")));
}
