//! End-to-end checks of the binary: exit codes, JSON anchors, format
//! plumbing, config precedence, and scan determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn bchkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bchkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .expect("utf8 stdout")
        .lines()
        .map(str::to_owned)
        .collect()
}

fn json_line(out: &Output) -> Value {
    let lines = stdout_lines(out);
    assert_eq!(lines.len(), 1, "expected exactly one record, got {lines:?}");
    serde_json::from_str(&lines[0]).expect("valid JSON")
}

#[test]
fn code_record_anchors() {
    let out = bchkit(&["code", "15", "2", "1", "3"]);
    assert!(out.status.success());
    let rec = json_line(&out);
    assert_eq!(rec["schema"], 1);
    assert_eq!(rec["k"], 11);
    assert_eq!(rec["dual_containing"], true);
    assert_eq!(rec["defining_set"], serde_json::json!([1, 2, 4, 8]));

    let rec = json_line(&bchkit(&["code", "15", "2", "1", "4"]));
    assert_eq!(rec["k"], 7);
    assert_eq!(rec["dual_containing"], false);
}

#[test]
fn code_rejects_delta_below_two() {
    let out = bchkit(&["code", "15", "2", "1", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn code_with_generator_emits_coefficients() {
    let rec = json_line(&bchkit(&["code", "7", "2", "1", "3", "--with-generator"]));
    // x³ + x + 1 generates the [7,4] Hamming code.
    assert_eq!(rec["generator"], serde_json::json!([1, 1, 0, 1]));
}

#[test]
fn hermitian_code_uses_squared_alphabet() {
    let rec = json_line(&bchkit(&["code", "15", "2", "1", "3", "--hermitian"]));
    assert_eq!(rec["alphabet"], 4);
    assert_eq!(rec["k"], 11);
    assert_eq!(rec["dual_containing"], true);
    assert_eq!(rec["flavor"], "hermitian");
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(bchkit(&["--help"]).status.code(), Some(0));
    assert_eq!(bchkit(&["--version"]).status.code(), Some(0));
    assert_eq!(bchkit(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn noncoprime_length_is_an_input_error() {
    let out = bchkit(&["code", "16", "2", "1", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("coprime"), "stderr: {err}");
}

#[test]
fn thresholds_anchor() {
    let rec = json_line(&bchkit(&["thresholds", "15", "2"]));
    assert_eq!(rec["sufficient"], 3);
    assert_eq!(rec["necessary"], 7);
    assert_eq!(rec["exact"], 3);
    assert_eq!(rec["kappa"]["num"], "3");
    assert_eq!(rec["kappa"]["den"], "1");

    let rec = json_line(&bchkit(&["thresholds", "15", "2", "--flavor", "hermitian"]));
    assert_eq!(rec["alphabet"], 4);
    assert_eq!(rec["sufficient"], 5);
}

#[test]
fn quantum_family_anchors() {
    let rec = json_line(&bchkit(&["quantum", "--family", "hermitian", "15", "2", "3"]));
    assert_eq!(rec["n"], 15);
    assert_eq!(rec["k"], 7);
    assert_eq!(rec["d_low"], 3);
    assert_eq!(rec["q"], 2);

    let rec = json_line(&bchkit(&["quantum", "--family", "euclid", "31", "2", "7"]));
    assert_eq!(rec["k"], 1);
    assert_eq!(rec["d_low"], 7);

    let rec = json_line(&bchkit(&["quantum", "--family", "nested", "31", "2", "3", "5"]));
    assert_eq!(rec["k"], 5);
    assert_eq!(rec["d_low"], 3);
    assert_eq!(rec["pure_to"], 5);
}

#[test]
fn quantum_out_of_range_exits_two() {
    let out = bchkit(&["quantum", "--family", "euclid", "15", "2", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("hypothesis violated"), "stderr: {err}");
}

#[test]
fn quantum_wrong_arity_is_usage() {
    let out = bchkit(&["quantum", "--family", "euclid", "15", "2", "3", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = bchkit(&["quantum", "--family", "nested", "31", "2", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_csv_has_header_and_rows() {
    let out = bchkit(&[
        "scan", "--q", "2", "--n-min", "3", "--n-max", "15", "--delta", "2..3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(
        lines[0],
        "q,alphabet,n,b,delta,m,k,narrow_sense,primitive,flavor,dual_containing,d_bound"
    );
    assert!(lines.contains(&"2,2,15,1,3,4,11,true,true,euclidean,true,3".to_string()));
}

#[test]
fn scan_json_rows_parse_and_sort() {
    let out = bchkit(&[
        "scan", "--q", "3,2", "--n-min", "3", "--n-max", "13", "--delta", "2..4",
    ]);
    let rows: Vec<Value> = stdout_lines(&out)
        .iter()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect();
    assert!(!rows.is_empty());
    let keys: Vec<(u64, u64, u64, u64)> = rows
        .iter()
        .map(|r| {
            (
                r["q"].as_u64().unwrap(),
                r["n"].as_u64().unwrap(),
                r["b"].as_u64().unwrap(),
                r["delta"].as_u64().unwrap(),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted, "rows must come out in (q, n, b, delta) order");
}

#[test]
fn scan_is_deterministic_across_parallelism() {
    let base = [
        "scan", "--q", "2,3", "--n-min", "2", "--n-max", "30", "--delta", "all", "--b", "0,1,2",
    ];
    let one = bchkit(&[&base[..], &["--parallelism", "1"]].concat());
    let eight = bchkit(&[&base[..], &["--parallelism", "8"]].concat());
    assert!(one.status.success() && eight.status.success());
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn scan_quantum_emits_family_rows() {
    let out = bchkit(&[
        "scan", "--q", "2", "--n-min", "3", "--n-max", "31", "--emit", "quantum", "--format",
        "csv",
    ]);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "q,n,delta,k,d_low,pure_to,construction");
    assert!(lines.contains(&"2,31,7,1,7,8,euclidean_css".to_string()));
}

#[test]
fn scan_table_aligns_columns() {
    let out = bchkit(&[
        "scan", "--q", "2", "--n-min", "7", "--n-max", "7", "--delta", "2..3", "--format",
        "table",
    ]);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("q  alphabet"));
}

#[test]
fn scan_config_file_supplies_grid_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.toml");
    std::fs::write(&path, "q = [2]\nn_max = 15\ndelta = \"2..3\"\nformat = \"csv\"\n").unwrap();
    let cfg = path.to_str().unwrap();

    let from_file = bchkit(&["scan", "--config", cfg]);
    assert!(stdout_lines(&from_file)[0].starts_with("q,alphabet"));

    let overridden = bchkit(&["scan", "--config", cfg, "--format", "json"]);
    assert!(stdout_lines(&overridden)[0].starts_with('{'));

    std::fs::write(&path, "qq = [2]\n").unwrap();
    assert_eq!(bchkit(&["scan", "--config", cfg]).status.code(), Some(1));
}

#[test]
fn scan_env_sets_parallelism() {
    let out = Command::new(env!("CARGO_BIN_EXE_bchkit"))
        .args(["scan", "--q", "2", "--n-min", "3", "--n-max", "15"])
        .env("BCHKIT_PARALLELISM", "1")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(!stdout_lines(&out).is_empty());
}

#[test]
fn scan_without_field_sizes_is_usage() {
    let out = bchkit(&["scan", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_clean_grid_exits_zero() {
    let out = bchkit(&["verify", "--q", "2", "--n-min", "3", "--n-max", "15"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_lines(&out).is_empty(), "clean run should emit no records");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("0 mismatches"), "stderr: {err}");
}

#[test]
fn verify_starved_budget_reports_inconclusive() {
    let out = bchkit(&[
        "verify", "--q", "2", "--n-min", "15", "--n-max", "15", "--delta", "3..3", "--checks",
        "bch_bound", "--max-messages", "4", "--max-weight", "1",
    ]);
    assert_eq!(out.status.code(), Some(0), "inconclusive is not a mismatch");
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    let rec: Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(rec["type"], "inconclusive");
    assert_eq!(rec["check"], "bch_bound");
}

#[test]
fn verify_rejects_unknown_check() {
    let out = bchkit(&["verify", "--q", "2", "--n-max", "15", "--checks", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
}
