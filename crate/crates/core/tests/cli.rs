use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use stsflow::designs::{bose, read_sts, write_sts};
use stsflow::FlowCertificate;

const BIN: &str = env!("CARGO_BIN_EXE_stsflow");
const BASE: &str = "json-schema:///";

fn manifest(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn schema(name: &str) -> Value {
    let text = std::fs::read_to_string(manifest(&format!("schemas/{name}.schema.json"))).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn validate(name: &str, doc: &Value) {
    let registry = jsonschema::Registry::new()
        .add(format!("{BASE}common.schema.json"), schema("common"))
        .unwrap()
        .prepare()
        .unwrap();
    let validator = jsonschema::options().with_base_uri(BASE).with_registry(&registry).build(&schema(name)).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{doc}");
}

/// Runs with `--json --quiet`, checks the envelope and exit code, returns the payload.
fn run_json(args: &[&str], status: &str, code: i32) -> Value {
    let mut all = vec!["--json", "--quiet"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(out.stderr.is_empty(), code != 1);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    validate("envelope", &doc);
    assert_eq!(doc["status"], status);
    doc["payload"].clone()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_commands() {
    let dir = tempfile::tempdir().unwrap();
    let s51 = dir.path().join("s51.txt");
    let p = run_json(&["gen", "bose", "--m", "17", "-o", path_str(&s51)], "ok", 0);
    validate("gen", &p);
    assert_eq!((p["n"].as_u64(), p["b"].as_u64()), (Some(51), Some(425)));
    assert_eq!(read_sts(&s51).unwrap().block_count(), 425);

    let s103 = dir.path().join("s103.txt");
    let p = run_json(&["gen", "am", "--base", path_str(&s51), "--tau", "seed:7", "-o", path_str(&s103)], "ok", 0);
    validate("gen", &p);
    assert_eq!((p["n"].as_u64(), p["b"].as_u64()), (Some(103), Some(1751)));

    let p = run_json(&["gen", "hamming", "--r", "6"], "ok", 0);
    validate("gen", &p);
    assert_eq!((p["n"].as_u64(), p["b"].as_u64()), (Some(63), Some(651)));
    assert_eq!(p["blocks"].as_array().unwrap().len(), 651);

    let p = run_json(&["gen", "read", path_str(&manifest("fixtures/sts13a.txt"))], "ok", 0);
    assert_eq!(p["binary_rank"].as_u64(), Some(13));

    let p = run_json(&["gen", "bose", "--m", "4"], "error", 1);
    validate("common", &p);
    assert!(p["error"].as_str().unwrap().contains("odd"));
}

#[test]
fn random_tau_uses_global_seed() {
    let dir = tempfile::tempdir().unwrap();
    let s9 = dir.path().join("s9.txt");
    write_sts(&bose(3).unwrap(), &s9).unwrap();
    let a = run(&["--quiet", "--seed", "3", "gen", "am", "--base", path_str(&s9), "--tau", "random"]);
    let b = run(&["--quiet", "--seed", "3", "gen", "am", "--base", path_str(&s9), "--tau", "random"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--quiet", "--seed", "4", "gen", "am", "--base", path_str(&s9), "--tau", "random"]);
    assert!(c.status.success());
}

#[test]
fn johnson_commands() {
    let p = run_json(&["johnson", "bounds", "--n", "64", "--k", "3"], "ok", 0);
    validate("johnson-bounds", &p);
    assert_eq!((p["upper"].as_u64(), p["lower"].as_u64(), p["exact"].as_u64()), (Some(4), Some(4), Some(4)));

    let p = run_json(&["johnson", "bounds", "--n", "65", "--k", "3"], "ok", 0);
    validate("johnson-bounds", &p);
    assert_eq!((p["upper"].as_u64(), p["lower"].as_u64()), (Some(7), Some(4)));
    assert!(p["note"].is_string());

    let p = run_json(&["johnson", "min", "--n", "10", "--k", "3", "--cap", "6"], "ok", 0);
    validate("johnson-min", &p);
    assert_eq!(p["scope"], "exact within cap");
    assert!(p["min"].as_u64().unwrap() <= 4);

    let p = run_json(&["johnson", "witness", "--n", "81", "--k", "3"], "ok", 0);
    validate("johnson-witness", &p);
    assert_eq!(p["norm"].as_u64(), Some(5));

    run_json(&["johnson", "bounds", "--n", "4", "--k", "3"], "error", 1);
}

#[test]
fn flow_commands() {
    let dir = tempfile::tempdir().unwrap();
    let s51 = dir.path().join("s51.txt");
    write_sts(&bose(17).unwrap(), &s51).unwrap();
    let cert = dir.path().join("cert.json");
    let p = run_json(&["flow", "am", "--base", path_str(&s51), "--tau", "zero", "-o", path_str(&cert)], "ok", 0);
    validate("flow-certificate", &p);
    assert!(p["value"].as_i64().unwrap() <= 5);
    assert_eq!(p["kind"], "am5");
    let text = std::fs::read_to_string(&cert).unwrap();
    let c = FlowCertificate::from_json(&text).unwrap();
    assert_eq!(c.to_json(), text);
    validate("flow-certificate", &serde_json::from_str(&text).unwrap());

    let p = run_json(&["flow", "verify", path_str(&cert)], "ok", 0);
    validate("flow-verify", &p);
    assert_eq!(p["value"], c.value());

    let fano = dir.path().join("fano.txt");
    write_sts(&stsflow::designs::hamming_sts(3).unwrap(), &fano).unwrap();
    let p = run_json(&["flow", "search", "--sts", path_str(&fano), "--max-value", "5"], "infeasible", 2);
    validate("flow-none", &p);
    let p = run_json(&["flow", "resolvable", "--sts", path_str(&fano)], "infeasible", 2);
    validate("flow-none", &p);

    let s9 = dir.path().join("s9.txt");
    write_sts(&bose(3).unwrap(), &s9).unwrap();
    let p = run_json(&["flow", "resolvable", "--sts", path_str(&s9)], "ok", 0);
    validate("flow-certificate", &p);
    assert_eq!(p["value"], 2);
    let p = run_json(&["flow", "search", "--sts", path_str(&s9), "--max-value", "3"], "ok", 0);
    validate("flow-certificate", &p);
    assert_eq!(p["value"], 2);
    let eig = dir.path().join("eig.json");
    let p = run_json(&["flow", "firsteig", "--sts", path_str(&s9), "-o", path_str(&eig)], "ok", 0);
    validate("flow-certificate", &p);
    assert_eq!(p["kind"], "firsteig");
    run_json(&["flow", "verify", path_str(&eig)], "ok", 0);

    // a tampered certificate is rejected
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    doc["v"][0] = serde_json::json!(-doc["v"][0].as_i64().unwrap());
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, doc.to_string()).unwrap();
    run_json(&["flow", "verify", path_str(&bad)], "error", 1);
}

#[test]
fn crc_commands() {
    let sts13 = manifest("fixtures/sts13a.txt");
    let p = run_json(&["crc", "enumerate", "--sts", path_str(&sts13), "--eigenvalue", "first"], "ok", 0);
    validate("crc-enumerate", &p);
    assert_eq!(p["partition_count"], 13);
    assert_eq!(p["expected_count"], 13);
    assert_eq!(p["complete"], true);
    for part in p["partitions"].as_array().unwrap() {
        assert!(part["tags"].as_array().unwrap().iter().all(|t| t["kind"] == "C1"));
    }
    let p = run_json(&["crc", "enumerate", "--sts", path_str(&sts13), "--eigenvalue", "-3"], "ok", 0);
    validate("crc-enumerate", &p);
    assert!(p.get("expected_count").is_none());

    let dir = tempfile::tempdir().unwrap();
    let s9 = dir.path().join("s9.txt");
    let sts9 = bose(3).unwrap();
    write_sts(&sts9, &s9).unwrap();
    let class = stsflow::designs::find_parallel_class(&sts9).unwrap();
    let code = class.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    let p = run_json(&["crc", "check", "--sts", path_str(&s9), "--code", &code], "ok", 0);
    validate("crc-check", &p);
    assert_eq!((p["rho"].as_u64(), p["eigenvalue"].as_i64()), (Some(1), Some(-3)));
    let p = run_json(&["crc", "check", "--sts", path_str(&s9), "--code", "0,1"], "infeasible", 2);
    validate("crc-check", &p);

    let h15 = dir.path().join("h15.txt");
    write_sts(&stsflow::designs::hamming_sts(4).unwrap(), &h15).unwrap();
    let p = run_json(&["crc", "construct", "--kind", "3", "--sts", path_str(&h15), "--point", "8"], "ok", 0);
    validate("crc-construct", &p);
    assert_eq!(p["report"]["rho"], 1);
    let p = run_json(&["crc", "construct", "--kind", "2", "--sts", path_str(&sts13)], "infeasible", 2);
    validate("crc-construct", &p);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let s27 = dir.path().join("s27.txt");
    write_sts(&bose(9).unwrap(), &s27).unwrap();
    let sts13 = manifest("fixtures/sts13b.txt");
    let cases: Vec<Vec<&str>> = vec![
        vec!["flow", "am", "--base", path_str(&s27), "--tau", "seed:7"],
        vec!["crc", "enumerate", "--sts", path_str(&sts13)],
        vec!["johnson", "min", "--n", "9", "--k", "3"],
        vec!["--json", "flow", "firsteig", "--sts", path_str(&sts13)],
    ];
    for args in cases {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(String::from_utf8_lossy(&a.stderr).contains("elapsed"));
    }
}

#[test]
fn pretty_output_without_json_flag() {
    let out = run(&["--quiet", "johnson", "bounds", "--n", "64", "--k", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\n  \""));
    let doc: Value = serde_json::from_str(&text).unwrap();
    validate("johnson-bounds", &doc);
}
