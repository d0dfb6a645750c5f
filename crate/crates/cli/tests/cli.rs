//! End-to-end tests of the `permcycle` binary: output formats and the exit
//! code contract (0 ok, 1 mismatch, 2 usage, 3 resource).

use std::path::PathBuf;
use std::process::{Command, Output};

fn permcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permcycle"))
        .args(args)
        .env_remove("PERMCYCLE_MAX_N")
        .output()
        .expect("binary runs")
}

fn permcycle_with_cap(cap: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permcycle"))
        .args(args)
        .env("PERMCYCLE_MAX_N", cap)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn enumerate_cycle_rows_csv() {
    let out = permcycle(&[
        "enumerate", "--class", "312,4321", "--n", "3", "--stats", "cyc", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "n,k,count\n3,1,1\n3,2,3\n3,3,1\n");
}

#[test]
fn enumerate_size_one() {
    let out = permcycle(&["enumerate", "--class", "321,4123", "--n", "1", "--stats", "cyc"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "n,k,count\n1,1,1\n");
}

#[test]
fn enumerate_involutions_totals() {
    let out = permcycle(&[
        "enumerate", "--class", "312,4321", "--n", "5", "--stats", "cyc", "--involutions",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let total: i64 = stdout_of(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<i64>().unwrap())
        .sum();
    assert_eq!(total, 13); // tribonacci value at n = 5
}

#[test]
fn enumerate_empty_size_emits_unit_row() {
    let out = permcycle(&["enumerate", "--n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "n,k,m,l,j,count\n0,0,0,0,0,1\n");
}

#[test]
fn enumerate_respects_env_cap() {
    let out = permcycle_with_cap("4", &["enumerate", "--class", "312,4321", "--n", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("cap"));
    let out = permcycle(&["enumerate", "--class", "312,4321", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let out = permcycle(&["enumerate", "--class", "312,4321", "--n", "12"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("12"));
}

#[test]
fn enumerate_threads_do_not_change_output() {
    let one = permcycle(&["enumerate", "--class", "321,4123", "--n", "7", "--threads", "1"]);
    let three = permcycle(&["enumerate", "--class", "321,4123", "--n", "7", "--threads", "3"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(three.status.code(), Some(0));
    assert_eq!(stdout_of(&one), stdout_of(&three));
}

#[test]
fn csv_and_json_carry_identical_records() {
    let args = ["enumerate", "--class", "312,4321", "--n", "4", "--stats", "cyc,inv"];
    let csv = permcycle(&[&args[..], &["--format", "csv"]].concat());
    let json = permcycle(&[&args[..], &["--format", "json"]].concat());
    assert_eq!(csv.status.code(), Some(0));
    assert_eq!(json.status.code(), Some(0));

    let mut csv_records: Vec<(u64, u64, u64, String)> = stdout_of(&csv)
        .lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            assert_eq!(f.len(), 4); // n,k,j,count
            (
                f[0].parse().unwrap(),
                f[1].parse().unwrap(),
                f[2].parse().unwrap(),
                f[3].to_string(),
            )
        })
        .collect();
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    let mut json_records: Vec<(u64, u64, u64, String)> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|rec| {
            (
                rec["n"].as_u64().unwrap(),
                rec["k"].as_u64().unwrap(),
                rec["j"].as_u64().unwrap(),
                rec["count"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    csv_records.sort();
    json_records.sort();
    assert_eq!(csv_records, json_records);
}

#[test]
fn expand_first_order_of_a() {
    let out = permcycle(&["expand", "--gf", "A", "--max-n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "n,k,count\n1,1,1\n");
}

#[test]
fn expand_f_matches_printed_row() {
    let out = permcycle(&["expand", "--gf", "F", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "n,k,count");
    assert!(rows.contains(&"3,1,2"));
    assert!(rows.contains(&"3,2,2"));
    assert!(rows.contains(&"3,3,1"));
}

#[test]
fn expand_h_includes_the_z4_numerator_term() {
    let out = permcycle(&["expand", "--gf", "H", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    // t^2 x^2 y^4 z^4 with count 1: columns n,k,m,l,j,count
    assert!(stdout_of(&out).lines().any(|l| l == "4,2,0,2,4,1"));
}

#[test]
fn verify_passes_on_valid_ranges() {
    let out = permcycle(&["verify", "--bijection", "phi", "--n", "4..8"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stderr_of(&out);
    for size in ["multiset=13", "multiset=34", "multiset=89", "multiset=233", "multiset=610"] {
        assert!(report.contains(size), "missing {size} in: {report}");
    }
    let out = permcycle(&["verify", "--bijection", "psi", "--n", "4..4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr_of(&out).contains("multiset=13"));
}

#[test]
fn verify_rejects_range_below_threshold() {
    let out = permcycle(&["verify", "--bijection", "phi", "--n", "3..5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = permcycle(&["verify", "--bijection", "phi", "--n", "6..4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_range_above_cap_is_a_resource_error() {
    let out = permcycle_with_cap("6", &["verify", "--bijection", "psi", "--n", "4..8"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn crosscheck_accepts_matching_pairs() {
    for (gf, class, max_n) in [
        ("G", "321,4123", "8"),
        ("D", "312,4321", "10"),
        ("H", "321,4123", "8"),
    ] {
        let out = permcycle(&["crosscheck", "--gf", gf, "--class", class, "--max-n", max_n]);
        assert_eq!(out.status.code(), Some(0), "{gf} vs {class}");
        assert!(stderr_of(&out).contains("identical"));
    }
}

#[test]
fn crosscheck_reports_first_mismatch() {
    let out = permcycle(&["crosscheck", "--gf", "A", "--class", "321,4123", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let report = stderr_of(&out);
    assert!(report.contains("mismatch at n=3"), "report: {report}");
    assert!(report.contains("oracle=2"), "report: {report}");
}

#[test]
fn oeis_matches_fixtures() {
    let out = permcycle(&[
        "oeis", "--file", &fixture("b028495.txt"), "--source", "cyclic-321-4123", "--max-n", "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr_of(&out).contains("matches"));
    let out = permcycle(&[
        "oeis", "--file", &fixture("b000073.txt"), "--source", "tribonacci", "--max-n", "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn oeis_detects_wrong_sequence() {
    let out = permcycle(&[
        "oeis", "--file", &fixture("b000073.txt"), "--source", "cyclic-312-4321", "--max-n", "8",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oeis_file_errors_are_resource_errors() {
    let out = permcycle(&[
        "oeis", "--file", "/nonexistent/bfile.txt", "--source", "totals", "--max-n", "5",
    ]);
    assert_eq!(out.status.code(), Some(3));

    let dir = std::env::temp_dir().join("permcycle-empty-bfile-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.txt");
    std::fs::write(&path, "# only a comment\n\n").unwrap();
    let out = permcycle(&[
        "oeis", "--file", path.to_str().unwrap(), "--source", "totals", "--max-n", "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(permcycle(&["enumerate"]).status.code(), Some(2)); // missing --n
    assert_eq!(
        permcycle(&["enumerate", "--n", "3", "--class", "123"]).status.code(),
        Some(2)
    );
    assert_eq!(
        permcycle(&["expand", "--gf", "E", "--max-n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        permcycle(&["enumerate", "--n", "3", "--stats", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(permcycle(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(permcycle(&["--help"]).status.code(), Some(0));
}
