use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn quartic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic")).args(args).output().unwrap()
}

fn grid_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_constant_grid() {
    let f = grid_file(&"00000000\n".repeat(8));
    let o = quartic(&["count", path(&f)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "16\n");
}

#[test]
fn list_without_quartics_is_empty() {
    let f = grid_file("2 2\n1 2\n2 1\n");
    let o = quartic(&["list", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn list_records_use_one_based_witnesses() {
    let f = grid_file("abab\nabab\n");
    let tsv = stdout(&quartic(&["list", path(&f)]));
    let fields: Vec<&str> = tsv.trim_end().split('\t').collect();
    assert_eq!(&fields[..4], &["2", "4", "1", "1"][..], "{tsv}");
    assert_eq!(fields[4].len(), 16);

    let f = grid_file("aa\naa\n");
    let json = stdout(&quartic(&["list", "--format", "json-lines", path(&f)]));
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["height"], 2);
    assert_eq!(v["witness_row"], 1);
    assert_eq!(v["witness_col"], 1);
}

#[test]
fn count_equals_list_length() {
    let gen = quartic(&["gen", "--family", "tiled", "--rows", "14", "--sigma", "2", "--seed", "5"]);
    let f = grid_file(&stdout(&gen));
    let count: usize = stdout(&quartic(&["count", path(&f)])).trim().parse().unwrap();
    let list = stdout(&quartic(&["list", path(&f)]));
    assert_eq!(list.lines().count(), count);
}

#[test]
fn verify_generated_grids() {
    for (family, seed) in [("random", "1"), ("tiled", "2"), ("nested", "3"), ("triangle", "4")] {
        let gen = quartic(&["gen", "--family", family, "--rows", "12", "--seed", seed]);
        let f = grid_file(&stdout(&gen));
        let o = quartic(&["verify", path(&f)]);
        assert_eq!(o.status.code(), Some(0), "{family}");
        assert!(stdout(&o).starts_with("PASS"));
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let gen = quartic(&["gen", "--family", "nested", "--rows", "20", "--seed", "8"]);
    let f = grid_file(&stdout(&gen));
    let one = quartic(&["list", "--threads", "1", path(&f)]);
    let four = quartic(&["list", "--threads", "4", "--mode", "tabulated", path(&f)]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn stats_totals() {
    let f = grid_file(&"0000\n".repeat(4));
    let out = stdout(&quartic(&["stats", path(&f)]));
    assert!(out.contains("1\t1\t1\n") && out.contains("2\t2\t1\n"), "{out}");
    assert!(out.contains("total\t4\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(quartic(&["count", "/nonexistent/grid.txt"]).status.code(), Some(2));
    assert_eq!(quartic(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(quartic(&["count", "--threads", "0", "x"]).status.code(), Some(64));
    let f = grid_file(&"01\n".repeat(3));
    assert_eq!(quartic(&["verify", "--oracle-cap", "2", path(&f)]).status.code(), Some(64));
    let ragged = grid_file("ab\na\n");
    assert_eq!(quartic(&["count", path(&ragged)]).status.code(), Some(2));
}

#[test]
fn bench_reports_phases() {
    let out = stdout(&quartic(&["bench", "--size", "16", "--threads", "1"]));
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("rows\tcols\tpreprocess_s"));
    assert_eq!(lines.len(), 2);
}
