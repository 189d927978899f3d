use std::process::{Command, Output};

use qcongruence::congruence::Status;
use qcongruence::harness::{reports_from_json, run_sweep, Overrides};

fn qcong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcong")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn odd_and_even_n() {
    let o = qcong(&["verify", "--case", "thm1.5", "--n", "1..9", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let reports = reports_from_json(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 9);
    let verified: Vec<i64> = reports.iter().filter(|r| r.status == Status::Verified).map(|r| r.params.n).collect();
    assert_eq!(verified, [1, 3, 5, 7, 9]);
    assert!(reports.iter().filter(|r| r.params.n % 2 == 0).all(|r| r.is_expected_skip()));
}

#[test]
fn json_matches_library_reports() {
    let o = qcong(&["verify", "--case", "thm4.6-plus,rv-int", "--n", "1,3,5", "--p", "3,5", "--format", "json", "--workers", "1"]);
    assert_eq!(code(&o), 0);
    let mut parsed = reports_from_json(&stdout(&o)).unwrap();
    let overrides = Overrides { n: Some(vec![1, 3, 5]), p: Some(vec![3, 5]), ..Overrides::default() };
    let mut direct = run_sweep(&["thm4.6-plus", "rv-int"], &overrides, 1).unwrap().reports;
    for r in parsed.iter_mut().chain(direct.iter_mut()) {
        r.ms = 0;
    }
    assert_eq!(parsed, direct);
}

#[test]
fn perturbed_rhs_exits_one() {
    let o = qcong(&["verify", "--case", "thm1.5", "--n", "5", "--perturb-rhs", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let reports = reports_from_json(&stdout(&o)).unwrap();
    assert_eq!(reports[0].status, Status::Failed);
    assert!(reports[0].witness.as_deref().is_some_and(|w| w != "0"));
}

#[test]
fn unknown_case_exits_two() {
    let o = qcong(&["verify", "--case", "nonexistent"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown case"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&qcong(&["verify", "--case", "thm1.5", "--n", "9..1"])), 2);
    assert_eq!(code(&qcong(&["verify", "--case", "thm1.5", "--n", "x"])), 2);
    assert_eq!(code(&qcong(&["verify"])), 2);
    assert_eq!(code(&qcong(&["frobnicate"])), 2);
    assert_eq!(code(&qcong(&["identity", "--name", "no-such-identity"])), 2);
}

#[test]
fn identity_suite() {
    let o = qcong(&["identity", "--name", "andrews-q-watson", "--n", "1..8"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with("holds")).count(), 8);
}

#[test]
fn list_shows_quotes() {
    let o = qcong(&["list", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cases = v.as_array().unwrap();
    assert!(cases.len() >= 16);
    assert!(cases.iter().all(|c| c["quote"].as_str().is_some_and(|q| !q.is_empty())));
}

#[test]
fn writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = qcong(&["verify", "--case", "sun-tauraso", "--p", "3", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("case,n,d,r,s,p,k,modulus,status,reason,witness,strategy,ms\n"));
    assert_eq!(text.lines().count(), 3);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn table_has_summary_lines() {
    let o = qcong(&["verify", "--case", "cor4.3", "--n", "1..5"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("cor4.3: 3 verified, 0 failed, 2 skipped (0 unexpected)"), "{out}");
    assert!(out.contains("total: 3 verified"));
}
