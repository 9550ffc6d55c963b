use std::path::Path;
use std::process::{Command, Output};

use cyclodet::record::ResultRecord;
use cyclodet::store::read_store;
use serde_json::Value;

fn cyclodet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclodet")).args(args).output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_b_small_range_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.jsonl");
    let res = cyclodet(&["verify", "--theorem", "B", "--q-min", "7", "--q-max", "49", "--out", p(&out)]);
    assert_eq!(res.status.code(), Some(0), "{}", String::from_utf8_lossy(&res.stderr));
    let recs = read_store(&out).unwrap();
    let qs: Vec<u64> = recs.iter().map(|r| r.q).collect();
    assert_eq!(qs, vec![7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49]);
    assert!(recs.iter().all(|r| r.status != "fail"));
    let r11 = recs.iter().find(|r| r.q == 11).unwrap();
    assert_eq!(r11.status, "skipped");
    assert!(r11.reason.is_some());
}

#[test]
fn existing_store_needs_resume() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.jsonl");
    let args = ["verify", "--theorem", "A", "--q-min", "5", "--q-max", "13", "--out", p(&out)];
    assert_eq!(cyclodet(&args).status.code(), Some(0));
    let res = cyclodet(&args);
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains("--resume"));
}

#[test]
fn resume_fills_exactly_the_gap() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.jsonl");
    let args = ["verify", "--theorem", "A", "--q-min", "5", "--q-max", "25", "--no-timing", "--out", p(&out)];
    assert_eq!(cyclodet(&args).status.code(), Some(0));
    let full = std::fs::read_to_string(&out).unwrap();
    let without_13: String = full.lines().filter(|l| !l.contains("\"q\":13,")).map(|l| format!("{l}\n")).collect();
    assert_eq!(without_13.lines().count() + 1, full.lines().count());
    std::fs::write(&out, without_13).unwrap();

    let mut resume = args.to_vec();
    resume.push("--resume");
    let res = cyclodet(&resume);
    assert_eq!(res.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&res.stderr).starts_with("1 new records"));
    let res = cyclodet(&resume);
    assert!(String::from_utf8_lossy(&res.stderr).starts_with("0 new records"));

    let mut a: Vec<String> = full.lines().map(String::from).collect();
    let mut b: Vec<String> = std::fs::read_to_string(&out).unwrap().lines().map(String::from).collect();
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn stored_failure_keeps_exit_code_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.jsonl");
    let edge = ["verify", "--theorem", "A", "--q-min", "3", "--q-max", "3", "--include-edge", "--out", p(&out)];
    assert_eq!(cyclodet(&edge).status.code(), Some(1));
    let res = cyclodet(&["verify", "--theorem", "A", "--q-min", "3", "--q-max", "7", "--include-edge", "--resume", "--out", p(&out)]);
    assert_eq!(res.status.code(), Some(1));
    assert_eq!(read_store(&out).unwrap().len(), 3);
}

#[test]
fn corrupt_store_is_an_error_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.jsonl");
    assert_eq!(cyclodet(&["verify", "--theorem", "A", "--q-min", "5", "--q-max", "7", "--out", p(&out)]).status.code(), Some(0));
    let mut text = std::fs::read_to_string(&out).unwrap();
    text.push_str("{\"schema_version\":1,\"identity\"\n");
    std::fs::write(&out, text).unwrap();
    let res = cyclodet(&["verify", "--theorem", "A", "--q-min", "5", "--q-max", "9", "--resume", "--out", p(&out)]);
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains(":3:"), "{}", String::from_utf8_lossy(&res.stderr));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(cyclodet(&["verify", "--q-min", "5"]).status.code(), Some(2));
    assert_eq!(cyclodet(&["det", "--q", "15"]).status.code(), Some(2));
    assert_eq!(cyclodet(&["det", "--q", "4"]).status.code(), Some(2));
    assert_eq!(cyclodet(&["--max-q", "100", "det", "--q", "121"]).status.code(), Some(2));
    assert_eq!(cyclodet(&["carlitz", "--p", "9"]).status.code(), Some(2));
    assert_eq!(cyclodet(&["trinomial", "--n", "4", "--mod", "4"]).status.code(), Some(2));
    assert_eq!(cyclodet(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn export_projects_rows() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    let csv_path = dir.path().join("empty.csv");
    let res = cyclodet(&["export", "--in", p(&empty), "--out", p(&csv_path)]);
    assert_eq!(res.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&csv_path).unwrap(), "identity,q,p,deg,status,lhs,rhs,witness,elapsed_ms\n");

    let store = dir.path().join("s.jsonl");
    cyclodet(&["verify", "--theorem", "B", "--q-min", "7", "--q-max", "13", "--out", p(&store)]);
    let csv_path = dir.path().join("s.csv");
    let res = cyclodet(&["export", "--in", p(&store), "--out", p(&csv_path)]);
    assert_eq!(String::from_utf8_lossy(&res.stdout).trim(), "4");
    let mut rdr = csv::Reader::from_path(&csv_path).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4);
    let gf9 = rows.iter().find(|r| &r[1] == "9").unwrap();
    assert_eq!(&gf9[2], "3");
    assert_eq!(&gf9[3], "2");
    assert_eq!(&gf9[7], "0");
}

#[test]
fn det_query() {
    let v = stdout_json(&cyclodet(&["det", "--q", "7"]));
    assert_eq!(v["det"], 5);
    assert_eq!(v["det_circulant"], v["det"]);
    assert_eq!(v["rank"], 6);
    assert_eq!(v["singular"], false);
    let v = stdout_json(&cyclodet(&["det", "--q", "9"]));
    assert_eq!(v["modulus"], serde_json::json!([1, 0, 1]));
    assert_eq!(v["singular"], true);
    assert!(v["rank"].as_u64().unwrap() < 8);
}

#[test]
fn trinomial_query() {
    let v = stdout_json(&cyclodet(&["trinomial", "--n", "3"]));
    let row: Vec<&str> = v["row"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(row, ["1", "3", "6", "7", "6", "3", "1"]);
    let v = stdout_json(&cyclodet(&["trinomial", "--n", "3", "--k", "-1"]));
    assert_eq!(v["value"], "6");
    let v = stdout_json(&cyclodet(&["trinomial", "--n", "5", "--k", "0", "--mod", "7"]));
    assert_eq!(v["value"], "2");
}

#[test]
fn carlitz_and_singular_scan() {
    let res = cyclodet(&["carlitz", "--p", "7"]);
    assert_eq!(res.status.code(), Some(0));
    let rec = ResultRecord::from_line(String::from_utf8_lossy(&res.stdout).trim()).unwrap();
    assert_eq!(rec.status, "pass");

    let res = cyclodet(&["singular-scan", "--q-min", "7", "--q-max", "27", "--confirm"]);
    assert_eq!(res.status.code(), Some(0));
    let recs: Vec<ResultRecord> =
        String::from_utf8_lossy(&res.stdout).lines().map(|l| ResultRecord::from_line(l).unwrap()).collect();
    let qs: Vec<u64> = recs.iter().map(|r| r.q).collect();
    assert_eq!(qs, vec![7, 9, 13, 17, 19, 23, 25, 27]);
    assert!(recs.iter().all(|r| r.status == "pass" && r.lhs == r.rhs));

    let res = cyclodet(&["singular-scan", "--q-min", "7", "--q-max", "13"]);
    let recs: Vec<ResultRecord> =
        String::from_utf8_lossy(&res.stdout).lines().map(|l| ResultRecord::from_line(l).unwrap()).collect();
    assert!(recs.iter().all(|r| r.status == "skipped"));
}
