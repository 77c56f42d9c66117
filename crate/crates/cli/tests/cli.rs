use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn cyclespan() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cyclespan"));
    for (k, _) in std::env::vars() {
        if k.starts_with("CYCLESPAN_") {
            c.env_remove(k);
        }
    }
    c
}

fn run(args: &[&str]) -> Output {
    cyclespan().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn petersen_spectrum() {
    let doc = json_of(&run(&["spectrum", "--family", "petersen", "--exact"]));
    assert_eq!(doc["result"]["lengths"], serde_json::json!([5, 6, 8, 9]));
    assert_eq!(doc["result"]["exact"], true);
    assert_eq!(doc["seed"], 0);
}

#[test]
fn exact_path_backends_agree() {
    let doc = json_of(&run(&[
        "exact-path", "--family", "complete_bipartite", "5", "5", "--from", "0", "--to", "5", "--length", "7",
        "--backend", "both",
    ]));
    assert_eq!(doc["verdict"], "found");
    assert_eq!(doc["result"]["agreement"], true);
    let path = doc["result"]["constructive"]["value"].as_array().unwrap();
    assert_eq!(path.len(), 8);
}

#[test]
fn empty_input_exits_two() {
    let f = tempfile::NamedTempFile::new().unwrap();
    let out = run(&["spectrum", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty"));
}

#[test]
fn usage_error_exits_two() {
    assert_eq!(run(&["spectrum", "--no-such-flag"]).status.code(), Some(2));
}

#[test]
fn capacity_error_exits_three() {
    let out = run(&["spectrum", "--family", "cycle", "40", "--exact"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn not_found_is_success() {
    let doc = json_of(&run(&["tk", "--family", "path", "6", "--k", "3", "--ell-min", "1", "--ell-max", "3"]));
    assert_eq!(doc["verdict"], "not_found");
}

#[test]
fn labels_from_edge_list_are_honoured() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "10 20\n20 30\n30 40\n40 10").unwrap();
    let p = f.path().to_str().unwrap();
    let doc = json_of(&run(&["connect", "--input", p, "--from-set", "10", "--to-set", "30", "--avoid", "20"]));
    assert_eq!(doc["labels"], serde_json::json!([10, 20, 30, 40]));
    assert_eq!(doc["result"]["path"]["value"], serde_json::json!([0, 3, 2]));
    let out = run(&["connect", "--input", p, "--from-set", "1", "--to-set", "30"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_env_and_command_line_precedence() {
    let mut cfg = tempfile::NamedTempFile::new().unwrap();
    writeln!(cfg, "# defaults\nseed = 11\nexact = true").unwrap();
    let cfg = cfg.path().to_str().unwrap();
    let base = ["--config", cfg, "spectrum", "--family", "random_gnp", "9", "0.5"];
    assert_eq!(json_of(&run(&base))["seed"], 11);
    let out = cyclespan().args(base).env("CYCLESPAN_SEED", "12").output().unwrap();
    assert_eq!(json_of(&out)["seed"], 12);
    let mut args = base.to_vec();
    args.extend(["--seed", "13"]);
    let out = cyclespan().args(&args).env("CYCLESPAN_SEED", "12").output().unwrap();
    assert_eq!(json_of(&out)["seed"], 13);
}

#[test]
fn malformed_config_exits_two() {
    let mut cfg = tempfile::NamedTempFile::new().unwrap();
    writeln!(cfg, "this is not a pair").unwrap();
    let out = run(&["--config", cfg.path().to_str().unwrap(), "spectrum", "--family", "petersen"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn random_family_is_reproducible() {
    let args = ["spectrum", "--family", "random_gnp", "14", "0.3", "--seed", "5"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_has_one_row_per_cell() {
    let mut corpus = tempfile::NamedTempFile::new().unwrap();
    writeln!(corpus, "petersen\ncycle 7\n# comment\ncomplete_bipartite 3 4\ncycle 0").unwrap();
    let out = run(&[
        "sweep", "--corpus", corpus.path().to_str().unwrap(), "--commands", "spectrum; tk --k 3 --ell-min 1 --ell-max 2",
        "--workers", "2", "--seed", "4",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 4 * 2);
    assert!(rows.iter().any(|r| &r[6] == "error"));
    let again = run(&[
        "sweep", "--corpus", corpus.path().to_str().unwrap(), "--commands", "spectrum; tk --k 3 --ell-min 1 --ell-max 2",
        "--workers", "3", "--seed", "4",
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn json_output_round_trips_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = run(&["expander-check", "--family", "hypercube", "3", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let doc: Value = serde_json::from_str(&text).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(doc, again);
    assert!(["certified", "witness"].contains(&doc["verdict"].as_str().unwrap()));
}

#[test]
fn dot_output_for_paths() {
    let out = run(&[
        "exact-path", "--family", "cycle", "8", "--from", "0", "--to", "2", "--length", "6", "--format", "dot",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph G {"), "{text}");
}
