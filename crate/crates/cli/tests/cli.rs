use std::process::{Command, Output};

use serde_json::Value;

fn fixture_path(name: &str) -> String {
    format!("{}/../core/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn fixture(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grothlib")).args(args).env_remove("GROTHLIB_JOBS").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn records(args: &[&str]) -> Vec<Value> {
    stdout(args).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn poly_latex() {
    let out =
        stdout(&["poly", "--variant", "1A", "--shape", "1", "--nvars", "2", "--degree", "2", "--format", "latex"]);
    assert_eq!(out, "x_1+x_2-z_1x_1x_2\n");
    let out = stdout(&["poly", "--variant", "1A", "--shape", "1", "--nvars", "2", "--degree", "2", "--z-one"]);
    assert_eq!(out, "x1 + x2 - x1*x2\n");
}

#[test]
fn poly_json() {
    let v: Value =
        serde_json::from_str(&stdout(&["--format", "json", "poly", "--variant", "2B", "--shape", "1", "--nvars", "1"]))
            .unwrap();
    assert_eq!(v, serde_json::json!([{"xe": [1], "ye": [], "ze": [], "c": 1}]));
}

#[test]
fn poly_needs_a_degree_for_overfull_variants() {
    let out = run(&["poly", "--variant", "1B", "--shape", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enum_counts() {
    let r = records(&["enum", "--family", "PT", "--shape", "1", "--max", "2", "--format", "json"]);
    assert_eq!(r.len(), 5);
    assert_eq!(r[4], serde_json::json!({"count": 4}));
    let r = records(&["enum", "--family", "PFT", "--outer", "2", "--inner", "1", "--format", "json"]);
    assert_eq!(r.last().unwrap()["count"], 2);
    let r = records(&["enum", "--family", "UFT", "--outer", "2,1", "--inner", "2,1", "--format", "json"]);
    assert_eq!(r.last().unwrap()["count"], 1);
    let r = records(&["enum", "--family", "PT", "--shape", "-", "--format", "json"]);
    assert_eq!(r.last().unwrap()["count"], 1);
}

#[test]
fn enum_stream_contains_flagged_example() {
    let p = fixture("oft_example.json");
    let r = records(&["enum", "--family", "OFT", "--outer", "6,6,5,4", "--inner", "4,3,2,1", "--format", "json"]);
    assert!(r.contains(&p));
    let q = fixture("uft_example.json");
    let r = records(&["enum", "--family", "UFT", "--outer", "6,6,5,4", "--inner", "4,3,2,1", "--format", "json"]);
    assert!(r.contains(&q));
}

#[test]
fn enum_under_an_order() {
    let r =
        records(&["enum", "--family", "PT", "--shape", "2", "--order", "1,2,1',2'", "--max", "2", "--format", "json"]);
    let standard = records(&["enum", "--family", "PT", "--shape", "2", "--max", "2", "--format", "json"]);
    assert_eq!(r.last(), standard.last());
}

#[test]
fn expand_dual_row() {
    let v: Value = serde_json::from_str(&stdout(&[
        "expand",
        "--variant",
        "2B",
        "--shape",
        "2",
        "--nvars",
        "2",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(
        v,
        serde_json::json!({
            "basis": "schur",
            "alphabet": "x",
            "terms": [
                {"partition": [1], "z": [{"e": [1], "c": 1}]},
                {"partition": [2], "z": [{"e": [], "c": 1}]}
            ]
        })
    );
    let flags = stdout(&["expand", "--variant", "2B", "--shape", "2", "--flags", "--format", "json"]);
    assert_eq!(serde_json::from_str::<Value>(&flags).unwrap(), v);
    let text = stdout(&["expand", "--variant", "2B", "--shape", "2", "--nvars", "2"]);
    assert_eq!(text, "s(1)(x): z1\ns(2)(x): 1\n");
}

#[test]
fn expand_both_alphabets() {
    let v: Value = serde_json::from_str(&stdout(&[
        "expand",
        "--variant",
        "Gdual",
        "--shape",
        "1",
        "--nvars",
        "1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["basis"], "schur-schur");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn biject_rsk_trace() {
    let ex = fixture("rsk_example.json");
    let path = fixture_path("rsk_example.json");
    let v: Value =
        serde_json::from_str(&stdout(&["biject", "rsk", "--input", &path, "--trace", "--format", "json"])).unwrap();
    assert_eq!(v["trace"], ex["trace"]);
    assert_eq!(v["trace"].as_array().unwrap().len(), 7);
    assert_eq!(v["p"], ex["p"]);
    assert_eq!(v["q"], ex["q"]);

    let pair = std::env::temp_dir().join("grothlib-cli-rsk-pair.json");
    std::fs::write(&pair, serde_json::json!({"p": ex["p"], "q": ex["q"]}).to_string()).unwrap();
    let back: Value = serde_json::from_str(&stdout(&[
        "biject",
        "rsk",
        "--backward",
        "--input",
        pair.to_str().unwrap(),
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(back["output"], ex["input"]);
}

#[test]
fn biject_jdt_trace() {
    let ex = fixture("jdt_example.json");
    let path = fixture_path("jdt_example.json");
    let v: Value =
        serde_json::from_str(&stdout(&["biject", "jdt", "--input", &path, "--trace", "--format", "json"])).unwrap();
    assert_eq!(v["trace"], ex["trace"]);
    assert_eq!(v["trace"].as_array().unwrap().len(), 9);
}

#[test]
fn biject_swap_and_iota() {
    let ex = fixture("swap_example.json");
    let s = std::env::temp_dir().join("grothlib-cli-swap.json");
    std::fs::write(&s, ex["s"].to_string()).unwrap();
    let v: Value = serde_json::from_str(&stdout(&[
        "biject",
        "swap",
        "--input",
        s.to_str().unwrap(),
        "--from",
        ex["prec"].as_str().unwrap(),
        "--to",
        ex["lhd"].as_str().unwrap(),
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["output"], ex["t"]);

    let ex = fixture("iota_example.json");
    let a = std::env::temp_dir().join("grothlib-cli-iota.json");
    std::fs::write(&a, ex["a"].to_string()).unwrap();
    let v: Value =
        serde_json::from_str(&stdout(&["biject", "iota", "--input", a.to_str().unwrap(), "--format", "json"])).unwrap();
    assert_eq!(v["output"], ex["b"]);
    assert_eq!(v["box"], serde_json::json!({"row": ex["row"], "col": ex["col"]}));
}

#[test]
fn biject_split_then_superimpose() {
    let pair = std::env::temp_dir().join("grothlib-cli-flags.json");
    let small_p =
        serde_json::json!({"outer": [2], "inner": [1], "cells": [{"row": 1, "col": 2, "primed": [], "unprimed": [1]}]});
    let small_q =
        serde_json::json!({"outer": [3], "inner": [2], "cells": [{"row": 1, "col": 3, "primed": [2], "unprimed": []}]});
    std::fs::write(&pair, serde_json::json!({"p": small_p, "q": small_q}).to_string()).unwrap();
    let r: Value = serde_json::from_str(&stdout(&[
        "biject",
        "superimpose",
        "--input",
        pair.to_str().unwrap(),
        "--format",
        "json",
    ]))
    .unwrap();
    let joined = std::env::temp_dir().join("grothlib-cli-joined.json");
    std::fs::write(&joined, r["output"].to_string()).unwrap();
    let back: Value =
        serde_json::from_str(&stdout(&["biject", "split", "--input", joined.to_str().unwrap(), "--format", "json"]))
            .unwrap();
    assert_eq!(back["p"], small_p);
    assert_eq!(back["q"], small_q);
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "fact1", "--size", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("fact1 PASS"));
    for (identity, size) in [("fact2", "5"), ("duo2", "3")] {
        let v: Value =
            serde_json::from_str(&stdout(&["verify", identity, "--max-size", size, "--format", "json"])).unwrap();
        assert_eq!(v["status"], "PASS", "{identity}");
        assert_eq!(v["failures"], serde_json::json!([]));
        assert!(v["instances"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verify_sample_is_seeded() {
    let a = stdout(&["--seed", "7", "--format", "json", "verify", "lemma-z", "--sample", "5"]);
    let b = stdout(&["--seed", "7", "--format", "json", "verify", "lemma-z", "--sample", "5"]);
    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed");
        v
    };
    assert_eq!(strip(&a), strip(&b));
    let full = strip(&stdout(&["--format", "json", "verify", "lemma-z"]));
    assert!(strip(&a)["instances"].as_u64() < full["instances"].as_u64());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["enum", "--family", "OT", "--shape", "2,3"],
        vec!["enum", "--family", "XT", "--shape", "1"],
        vec!["enum", "--family", "OT", "--outer", "2", "--inner", "1"],
        vec!["verify", "fact3"],
        vec!["--jobs", "0", "verify", "fact1"],
        vec!["biject", "rsk", "--input", "/nonexistent/file.json"],
        vec!["poly", "--variant", "1C", "--shape", "1"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn jobs_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_grothlib"))
        .args(["verify", "fact1", "--max-size", "2"])
        .env("GROTHLIB_JOBS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_grothlib"))
        .args(["verify", "fact1"])
        .env("GROTHLIB_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["enum", "--family", "OT", "--shape", "2,1", "--max", "2", "--extra", "1", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["expand", "--variant", "1B", "--shape", "2,1", "--nvars", "3", "--degree", "5"];
    assert_eq!(stdout(&args), stdout(&args));
}
