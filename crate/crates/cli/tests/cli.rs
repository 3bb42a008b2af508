use std::process::{Command, Output};

use serde_json::{json, Value};

fn cosetkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cosetkit"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("COSETKIT_GROUP")
        .env_remove("COSETKIT_JSON")
        .output()
        .expect("binary runs")
}

/// Parsed JSON output with timings removed.
fn golden(out: &Output) -> Value {
    let mut v: Value = serde_json::from_slice(&out.stdout).expect("json on stdout");
    for claim in v.as_array_mut().unwrap() {
        claim.as_object_mut().unwrap().remove("elapsed_ms");
    }
    v
}

#[test]
fn coset_homology_of_s3() {
    let out = cosetkit(&["--json", "coset-homology", "--group", "../core/data/s3.grp"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        golden(&out),
        json!([{
            "claim_id": "coset-homology",
            "details": {
                "betti": [0, 0, 8],
                "euler": "-8",
                "faces": ["1", "17", "24"],
                "field": "Q",
                "minus_p_at_minus_one": "-8",
                "modular_check": true
            },
            "status": "PASS"
        }])
    );
}

#[test]
fn zsigmondy_exception() {
    let out = cosetkit(&["--json", "zsigmondy", "--q", "2", "--e", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        golden(&out),
        json!([{
            "claim_id": "zsigmondy.2.6",
            "details": {"exception": true, "primes": []},
            "status": "PASS"
        }])
    );
}

#[test]
fn gl62_certificate() {
    let out = cosetkit(&["--json", "lemma6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = golden(&out);
    assert_eq!(v[0]["status"], "PASS");
    assert_eq!(v[0]["details"]["subspaces"], 2825);
    assert_eq!(v[0]["details"]["parabolics_divisible_by_31"], json!([1, 5]));
}

#[test]
fn sporadic_row() {
    let out = cosetkit(&["--json", "table1", "--name", "J1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = golden(&out);
    assert_eq!(v[0]["claim_id"], "table1.J1");
    assert_eq!(v[0]["details"]["order"], "175560");
    assert_eq!(v[0]["status"], "PASS");
}

#[test]
fn failing_claim_exits_one() {
    // 11 * 5 divides |L2(11)|, a maximal subgroup of J1
    let out = cosetkit(&["table1", "--name", "J1", "--p", "11", "--r", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("FAIL table1.J1"));
}

#[test]
fn skip_exits_zero() {
    let out = cosetkit(&["table2", "--family", "A-", "--n", "2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("SKIP"));
}

#[test]
fn errors_exit_two() {
    assert_eq!(cosetkit(&["no-such-command"]).status.code(), Some(2));
    let out = cosetkit(&["coset-homology", "--group", "NoSuchGroup"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(cosetkit(&["coset-homology"]).status.code(), Some(2));
}

#[test]
fn environment_supplies_options() {
    let out = Command::new(env!("CARGO_BIN_EXE_cosetkit"))
        .args(["coset-homology"])
        .env("COSETKIT_GROUP", "S3")
        .env("COSETKIT_JSON", "1")
        .env("COSETKIT_FIELD", "F2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = golden(&out);
    assert_eq!(v[0]["details"]["betti"], json!([0, 0, 8]));
    assert_eq!(v[0]["details"]["field"], "F2");
}

#[test]
fn invgen_reports_a_witness() {
    // two 3-cycles fixing a common point stay inside A4
    let out = cosetkit(&["--json", "invgen", "--group", "A5", "--left", "(0 1 2)", "--right", "(1 2 3)"]);
    assert_eq!(out.status.code(), Some(1));
    let v = golden(&out);
    assert_eq!(v[0]["details"]["verdict"]["holds"], false);
    let out = cosetkit(&["invgen", "--group", "A5", "--left", "(0 1 2 3 4)", "--right", "(0 1 2)"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn selected_criteria_run() {
    let out = cosetkit(&["--json", "corpus", "--criteria", "6,9"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let numbers: Vec<u64> = v.as_array().unwrap().iter().map(|c| c["number"].as_u64().unwrap()).collect();
    assert_eq!(numbers, [6, 9]);
}
