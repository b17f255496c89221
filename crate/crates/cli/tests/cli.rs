use std::process::{Command, Output};

fn sumfree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumfree"))
        .args(args)
        .env_remove("SUMFREE_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_examples() {
    let o = sumfree(&["count", "--n", "4", "--maximal"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
    assert_eq!(stdout(&sumfree(&["count", "--n", "4"])), "9\n");
    assert_eq!(stdout(&sumfree(&["count", "--n", "4", "--algorithm", "oracle"])), "9\n");
}

#[test]
fn usage_errors_exit_2() {
    let o = sumfree(&["count"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(sumfree(&["count", "--n", "4", "--bogus"]).status.code(), Some(2));
    assert_eq!(sumfree(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(sumfree(&["construct", "quarter", "--n", "10"]).status.code(), Some(2));
    assert_eq!(sumfree(&["classify", "--set", "1,2", "--epsilon", "1.5"]).status.code(), Some(2));
    assert_eq!(sumfree(&["growth", "--from", "5", "--to", "3"]).status.code(), Some(2));
}

#[test]
fn resource_limits_exit_3() {
    let o = sumfree(&["count", "--n", "40", "--maximal"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(sumfree(&["count", "--n", "30", "--algorithm", "oracle"]).status.code(), Some(3));
}

#[test]
fn verify_prints_summary_and_exits_0() {
    let o = sumfree(&["verify", "claim12", "--n", "40", "--trials", "500", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("suite=claim12 n=40 trials=500 seed=7\n"));
    assert!(out.contains("check blue-count-0-or-2:"));
    assert!(out.ends_with("result: PASS\n"));
}

#[test]
fn construct_quarter_certifies() {
    let o = sumfree(&["construct", "quarter", "--n", "8"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "# family=quarter n=8 size=4");
    assert_eq!(lines.len(), 6);
    assert!(lines[5].contains("distinct_maximal=4"));
}

#[test]
fn classify_reports_flags() {
    let out = stdout(&sumfree(&["classify", "--set", "3,4", "--n", "5"]));
    assert!(out.contains("alt_small=true alt_odd=false alt_min=true"));
    let json = stdout(&sumfree(&["classify", "--set", "1,3,5", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["structure"]["alt_odd"], true);
}

#[test]
fn enumerate_lists_in_order() {
    let out = stdout(&sumfree(&["enumerate", "--n", "4", "--maximal"]));
    assert_eq!(out, "3,4\n2,3\n1,4\n1,3\n");
    let csv = stdout(&sumfree(&["enumerate", "--n", "3", "--maximal", "--format", "csv"]));
    assert_eq!(csv, "set\n\"2,3\"\n\"1,3\"\n");
}

#[test]
fn growth_csv_format() {
    let out = stdout(&sumfree(&["growth", "--from", "4", "--to", "5", "--format", "csv"]));
    assert_eq!(out, "n,f,fmax,log2fmax_over_n\n4,9,4,0.500000\n5,16,5,0.464386\n");
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let p = path.to_str().unwrap();
    let run = |extra: &[&str]| {
        let mut args = vec!["count", "--n", "20", "--maximal", "--format", "json", "--cache", p];
        args.extend_from_slice(extra);
        let v: serde_json::Value = serde_json::from_str(&stdout(&sumfree(&args))).unwrap();
        v
    };
    let first = run(&[]);
    assert_eq!(first["cached"], false);
    assert!(first["nodes_explored"].as_u64().unwrap() > 0);
    let second = run(&[]);
    assert_eq!(second["cached"], true);
    assert_eq!(second["nodes_explored"], 0);
    assert_eq!(second["count"], first["count"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 1);

    // the environment variable supplies the default path
    let o = Command::new(env!("CARGO_BIN_EXE_sumfree"))
        .args(["count", "--n", "20", "--maximal", "--format", "json"])
        .env("SUMFREE_CACHE", &path)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cached"], true);
}

#[test]
fn cache_latest_record_wins() {
    use sumfree_cli::{Cache, CacheKey};
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path().join("c.jsonl"));
    let key = CacheKey {
        command: "count".into(),
        n: 3,
        mode: "all_sum_free".into(),
        algorithm: "backtracking".into(),
        version: "x".into(),
    };
    assert_eq!(cache.get(&key).unwrap(), None);
    cache.put(key.clone(), serde_json::json!(1)).unwrap();
    cache.put(key.clone(), serde_json::json!(2)).unwrap();
    assert_eq!(cache.get(&key).unwrap(), Some(serde_json::json!(2)));
}
