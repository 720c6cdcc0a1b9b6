use std::io::Write;
use std::process::{Command, Output};

use pdom::io::ResultRecord;

fn pdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_json_round_trips() {
    let out = pdom(&["compute", "--parts", "2,2,10,17", "--p", "14", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    let rec = ResultRecord::from_json_line(&text).unwrap();
    assert_eq!(rec.gamma, 14);
    assert_eq!(rec.witness_counts.total(), 14);
}

#[test]
fn compute_agrees_with_oracle() {
    for p in 1..=9 {
        let p = p.to_string();
        let c = stdout(&pdom(&["compute", "--parts", "1,3,4", "--p", &p, "--json"]));
        let gamma = ResultRecord::from_json_line(&c).unwrap().gamma;
        for engine in ["counts", "generic"] {
            let o = stdout(&pdom(&["oracle", "--parts", "1,3,4", "--p", &p, "--engine", engine]));
            assert_eq!(o.lines().next().unwrap(), format!("value: {gamma}"), "{engine} p={p}");
        }
    }
}

#[test]
fn witness_explicit() {
    let out = pdom(&["witness", "--parts", "2,2,10,17", "--p", "6", "--explicit"]);
    assert_eq!(
        stdout(&out),
        "counts: 2,2,2,2\ntotal: 8\nvertices: 0,1,2,3,4,5,14,15\n"
    );
}

#[test]
fn verify_exit_codes() {
    let ok = pdom(&["verify", "--parts", "2,3", "--set", "0,1", "--p", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    let no = pdom(&["verify", "--parts", "2,3", "--set", "0", "--p", "2"]);
    assert_eq!(no.status.code(), Some(2));
    let bad = pdom(&["verify", "--parts", "2,3", "--set", "7", "--p", "2"]);
    assert_eq!(bad.status.code(), Some(1));
    let both = pdom(&["verify", "--set", "0", "--p", "2"]);
    assert_eq!(both.status.code(), Some(1));
}

#[test]
fn graph_file_input() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "# 4-cycle\r\n4 4\r\n0 1\r\n1\t2\r\n2 3\r\n3 0\r\n").unwrap();
    let path = file.path().to_str().unwrap();
    let out = pdom(&["oracle", "--graph", path, "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "value: 2\nvertices: 0,2\n");
    let v = pdom(&["verify", "--graph", path, "--set", "0,2", "--p", "2"]);
    assert_eq!(v.status.code(), Some(0));
    let v = pdom(&["verify", "--graph", path, "--set", "0,1", "--p", "2"]);
    assert_eq!(v.status.code(), Some(2));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, "2 1\n0 0\n").unwrap();
    let out = pdom(&["oracle", "--graph", bad.path().to_str().unwrap(), "--p", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn counts_engine_needs_parts() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, "2 1\n0 1\n").unwrap();
    let path = file.path().to_str().unwrap();
    let out = pdom(&["oracle", "--graph", path, "--p", "1", "--engine", "counts"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_csv() {
    let out = pdom(&["table", "--parts", "2,2,10,17", "--p-range", "5..6", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "p,s1,s2,gamma,case\n5,10,1,6,balanced\n6,10,2,8,balanced\n"
    );
}

#[test]
fn usage_and_parse_errors_exit_one() {
    for args in [
        &["compute", "--parts", "3,0,2", "--p", "1"][..],
        &["compute", "--parts", "3", "--p", "0"],
        &["compute", "--parts", "3", "--p", "x"],
        &["compute", "--parts", "3"],
        &["table", "--parts", "3", "--p-range", "4..2"],
        &["frobnicate"],
        &["oracle", "--parts", "9,9,9,9,9,9,9,9,9", "--p", "3", "--max-states", "10"],
    ] {
        assert_eq!(pdom(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(pdom(&["--help"]).status.code(), Some(0));
}
