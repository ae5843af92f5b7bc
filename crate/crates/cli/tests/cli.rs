use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_platycosm"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_text_matches_golden_file() {
    let out = run(&["table"]);
    assert!(out.status.success());
    let golden = include_str!("data/table1.txt");
    assert_eq!(stdout(&out), golden);
}

#[test]
fn table_default_is_sixteen_columns() {
    let out = run(&["table"]);
    let text = stdout(&out);
    let header = text.lines().next().unwrap();
    assert!(header.trim_end().ends_with("16"));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn table_csv_has_header_and_explicit_zeros() {
    let out = run(&["table", "--format", "csv", "--n-max", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("row,n,value"));
    let rest: Vec<&str> = lines.collect();
    assert_eq!(rest.len(), 40);
    assert!(rest.contains(&"s_G2_G2,4,28"));
    // Blank cells are explicit zeros in structured output.
    assert!(rest.contains(&"s_Z3_G4,2,0"));
    assert!(rest.contains(&"c_Z3_G4,4,1"));
}

#[test]
fn table_json_round_trips() {
    let out = run(&["table", "--format", "json", "--n-max", "3"]);
    assert!(out.status.success());
    let cells: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cells.len(), 30);
    let cell = cells
        .iter()
        .find(|c| c["row"] == "c_G2_G2" && c["n"] == 3)
        .unwrap();
    assert_eq!(cell["value"], 5);
}

#[test]
fn count_single_index() {
    let out = run(&["count", "--ambient", "g4", "--type", "g4", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "s n=5 11\nc n=5 3\n");
}

#[test]
fn count_accepts_uppercase_and_ranges() {
    let out = run(&["count", "--ambient", "G2", "--type", "Z3", "--kind", "s", "--range", "2..6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "s n=2 1\ns n=3 0\ns n=4 7\ns n=5 0\ns n=6 13\n");
}

#[test]
fn count_g1_defaults_to_z3() {
    let out = run(&["count", "--ambient", "g1", "--kind", "s", "--n", "6"]);
    assert!(out.status.success());
    // omega(6) = sublattice count of Z^3 at index 6.
    assert_eq!(stdout(&out), "s n=6 91\n");
}

#[test]
fn illegal_pair_is_a_usage_error() {
    let out = run(&["count", "--ambient", "g1", "--type", "g4", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("do not exist"));
}

#[test]
fn missing_type_is_a_usage_error() {
    let out = run(&["count", "--ambient", "g2", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_range_is_a_usage_error() {
    let out = run(&["count", "--ambient", "g2", "--type", "g2", "--range", "9..2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_on_small_range() {
    let out = run(&["verify", "--max-n", "12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 12);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_low_index_oracle() {
    let out = run(&["verify", "--max-n", "1", "--low-index", "--low-max-n", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS n=4 presentation=G4 low-index oracle"));
}

#[test]
fn low_index_reports_counts() {
    let out = run(&["low-index", "--group", "g2", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "subgroups 7\nclasses 7\n");
}

#[test]
fn low_index_dump_lists_tables() {
    let out = run(&["low-index", "--group", "g4", "--n", "2", "--dump"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("subgroups 3\nclasses 3\n"));
    assert_eq!(text.matches("table ").count(), 3);
}

#[test]
fn low_index_bound_is_enforced() {
    let out = run(&["low-index", "--group", "g2", "--n", "9", "--bound", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dirichlet_identities_pass() {
    let out = run(&["dirichlet", "--N", "32", "--tau-terms", "128"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS entry")).count(), 10);
    assert!(text.contains("PASS tau Euler product to N=128"));
}
