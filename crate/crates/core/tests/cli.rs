use serde_json::Value;
use std::fs;
use std::process::{Command, Output};

fn ipart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ipart")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn count_and_enumerate() {
    let out = ipart(&["count", "10", "3"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["count"], "8");
    assert_eq!(json(&ipart(&["count", "30"]))["count"], "5604");

    let out = ipart(&["enumerate", "6", "3", "--format", "table"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(1,1,4)\n(1,2,3)\n(2,2,2)\n");
    let listed = json(&ipart(&["enumerate", "7", "3"]));
    assert_eq!(listed.as_array().unwrap().len(), 4);
    assert_eq!(listed[0], serde_json::json!([1, 1, 5]));
}

#[test]
fn max_family_reports_counterexample_with_exit_code() {
    let out = ipart(&["max-family", "--n", "10", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["max_size"], 4);
    assert_eq!(v["unique"], false);

    let out = ipart(&["max-family", "--n", "8", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["star_size"], 3);
    assert_eq!(v["max_size"], 4);
    assert_eq!(v["witness"], serde_json::json!(["(1,2,5)", "(1,3,4)", "(2,2,4)", "(2,3,3)"]));

    let v = json(&ipart(&["max-family", "--n", "9", "--t", "1"]));
    assert_eq!(v["max_size"], 22);
    assert_eq!(v["unique"], true);
}

#[test]
fn resource_guard_and_bad_input_exit_2() {
    let out = ipart(&["--max-vertices", "10", "enumerate", "20", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(ipart(&["max-family", "--n", "8", "--relation", "weird"]).status.code(), Some(2));
}

#[test]
fn verify_formats() {
    let grid = ["--n-min", "6", "--n-max", "9", "--k-min", "3", "--k-max", "3"];
    let mut args = vec!["verify", "strong", "--format", "csv"];
    args.extend(grid);
    let out = ipart(&args);
    assert_eq!(out.status.code(), Some(1), "(8,3) is refuted");
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,k,t,relation,star_size,max_size,star_is_maximum,unique,witness_digest,elapsed,status"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[2].starts_with("8,3,1,multiset,3,4,false,"));
    assert!(rows[2].ends_with(",counterexample"));

    let mut args = vec!["verify", "strong", "--format", "table"];
    args.extend(grid);
    assert!(String::from_utf8(ipart(&args).stdout).unwrap().contains("counterexample"));

    let out = ipart(&["verify", "weak", "--n-max", "8"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["summary"]["verified"], 8);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["elapsed"].is_null()));
}

#[test]
fn timings_only_when_not_deterministic() {
    let out = ipart(&["--deterministic", "false", "verify", "weak", "--n-max", "5"]);
    let v = json(&out);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["elapsed"].is_number()));
}

#[test]
fn lemmas_and_ekr_succeed() {
    let out = ipart(&["lemmas", "--trials", "50", "--format", "table"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert!(text.contains("lemma3/cover_size_at_most_3r_2t_1 50/50"));

    let out = ipart(&["ekr-check", "--n-max", "8", "--k-max", "3"]);
    assert!(out.status.success());
}

#[test]
fn cache_round_trip_stats_and_clear() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("rows.jsonl");
    let cache = cache.to_str().unwrap();
    let sweep = ["--cache", cache, "verify", "t-proper", "--n-max", "10", "--k-max", "5", "--t-max", "2"];

    let first = ipart(&sweep);
    assert!(first.status.success());
    let stats = json(&ipart(&["--cache", cache, "cache", "stats"]));
    let entries = stats["entries"].as_u64().unwrap();
    assert!(entries > 0);
    assert_eq!(stats["stale"], 0);

    let second = ipart(&sweep);
    assert_eq!(first.stdout, second.stdout, "cached rows reproduce the report");
    assert_eq!(json(&ipart(&["--cache", cache, "cache", "stats"]))["entries"].as_u64().unwrap(), entries);

    // a record from another engine version and a corrupt line are ignored
    let mut text = fs::read_to_string(cache).unwrap();
    let foreign = text.lines().next().unwrap().replace("\"engine_version\":\"1\"", "\"engine_version\":\"0\"");
    text.push_str(&foreign);
    text.push_str("\nnot json\n");
    fs::write(cache, text).unwrap();
    let stats = json(&ipart(&["--cache", cache, "cache", "stats"]));
    assert_eq!(stats["entries"].as_u64().unwrap(), entries);
    assert_eq!(stats["stale"], 2);
    assert_eq!(ipart(&sweep).stdout, first.stdout);

    assert!(ipart(&["--cache", cache, "cache", "clear"]).status.success());
    assert!(!std::path::Path::new(cache).exists());
    assert_eq!(json(&ipart(&["--cache", cache, "cache", "stats"]))["entries"], 0);
}

#[test]
fn tampered_cache_row_is_caught_by_audit() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("rows.jsonl");
    let cache = cache.to_str().unwrap();
    let sweep = ["--cache", cache, "verify", "strong", "--n-min", "7", "--n-max", "7", "--k-min", "3", "--k-max", "3"];
    assert!(ipart(&sweep).status.success());
    let text = fs::read_to_string(cache).unwrap().replace("\"max_size\":3", "\"max_size\":2");
    fs::write(cache, text).unwrap();
    let out = ipart(&sweep);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cache"));
}
