//! End-to-end tests for the `galoisazu` binary: exact output, exit codes,
//! byte stability, and golden-file comparisons.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const FIXTURES: [&str; 5] = [
    "hamilton",
    "symbol-7-3",
    "trivial-5-6",
    "char2-f2",
    "tensor-square",
];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galoisazu"))
        .args(args)
        .output()
        .expect("binary executes")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process exited normally")
}

fn json_of(output: &Output) -> Value {
    serde_json::from_str(&stdout_of(output)).expect("stdout is JSON")
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/goldens")
        .join(name)
}

fn read_golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name))
        .unwrap_or_else(|e| panic!("golden file {name} must exist: {e}"))
}

/// Blanks out the wall-clock line, which is the only run-dependent output.
fn normalize_elapsed(text: &str) -> String {
    let mut out = String::new();
    for line in text.lines() {
        if line.starts_with("elapsed: ") && line.ends_with(" ms") {
            out.push_str("elapsed: _ ms");
        } else {
            out.push_str(line);
        }
        out.push('\n');
    }
    out
}

#[test]
fn hilbert_at_the_real_place_prints_the_bare_symbol() {
    let output = run(&["hilbert", "-1", "-1", "--place", "inf"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), "-1\n");
}

#[test]
fn hilbert_table_covers_every_candidate_place() {
    let output = run(&["hilbert", "-1", "-1", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let table = json_of(&output);
    let symbols = table["symbols"].as_array().expect("symbols array");
    let pairs: Vec<(String, i64)> = symbols
        .iter()
        .map(|s| {
            (
                s["place"].as_str().unwrap().to_string(),
                s["symbol"].as_i64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        pairs,
        vec![("2".to_string(), -1), ("inf".to_string(), -1)],
        "(-1, -1) ramifies exactly at 2 and the real place"
    );

    let wide = run(&["hilbert", "3/5", "7", "--format", "json"]);
    assert_eq!(exit_code(&wide), 0);
    let places: Vec<String> = json_of(&wide)["symbols"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["place"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(places, vec!["2", "3", "5", "7", "inf"]);
}

#[test]
fn class_output_is_exact_json() {
    let output = run(&["class", "-1", "-1"]);
    assert_eq!(exit_code(&output), 0);
    let class = json_of(&output);
    assert_eq!(class["ramified"], serde_json::json!(["2", "inf"]));
    assert_eq!(class["split"], serde_json::json!(false));

    let squared = run(&["class-product", "-1", "-1", "-1", "-1"]);
    assert_eq!(exit_code(&squared), 0);
    let product = json_of(&squared);
    assert_eq!(product["ramified"], serde_json::json!([]));
    assert_eq!(product["split"], serde_json::json!(true));
}

#[test]
fn certify_hamilton_matches_golden_and_is_byte_stable() {
    let first = run(&["certify", "--fixture", "hamilton"]);
    let second = run(&["certify", "--fixture", "hamilton"]);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(
        stdout_of(&first),
        stdout_of(&second),
        "repeated runs must be byte-identical"
    );
    assert_eq!(stdout_of(&first), read_golden("hamilton_certificate.json"));

    let cert = json_of(&first);
    assert!(cert["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"].as_bool().unwrap()));
    assert_eq!(cert["group"], "Z2xZ2");
    assert_eq!(cert["gamma"].as_array().unwrap().len(), 16);
}

#[test]
fn saved_certificates_are_reverified_before_use() {
    let dir = tempfile::tempdir().expect("temp dir");
    let cert_path = dir.path().join("hamilton.json");
    let certify = run(&["certify", "--fixture", "hamilton"]);
    std::fs::write(&cert_path, stdout_of(&certify)).expect("write certificate");

    let frobenius = run(&["frobenius", "--cert", cert_path.to_str().unwrap()]);
    assert_eq!(exit_code(&frobenius), 0);
    let dto = json_of(&frobenius);
    assert_eq!(dto["nakayama"]["is_identity"], serde_json::json!(true));
    assert_eq!(dto["symmetry"]["trace_symmetric"], serde_json::json!(true));
    assert_eq!(
        dto["separability"]["azumaya_over_ground"],
        serde_json::json!(true)
    );

    // A single altered coefficient must be caught by the re-verification.
    let mut tampered: Value = serde_json::from_str(&stdout_of(&certify)).unwrap();
    tampered["eta"][0]["tensor"][0] = Value::String("1/3".into());
    let tampered_path = dir.path().join("tampered.json");
    std::fs::write(&tampered_path, serde_json::to_string(&tampered).unwrap()).unwrap();
    let rejected = run(&["frobenius", "--cert", tampered_path.to_str().unwrap()]);
    assert_eq!(exit_code(&rejected), 1);
    assert!(stderr_of(&rejected).contains("integrity"));
}

#[test]
fn rmatrix_reports_blocks_and_braid_for_quaternions() {
    let output = run(&[
        "rmatrix",
        "--fixture",
        "hamilton",
        "--blocks",
        "--braid",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&output), 0);
    let dto = json_of(&output);
    assert_eq!(dto["fs_holds"], serde_json::json!(true));
    assert_eq!(dto["yang_baxter_holds"], serde_json::json!(true));
    assert_eq!(dto["operator_invertible"], serde_json::json!(true));
    assert_eq!(dto["space_dim"], serde_json::json!(16));
    assert_eq!(
        dto["blocks"]["subspaces"][0],
        serde_json::json!([[0, 0], [1, 1], [2, 2], [3, 3]])
    );
    assert_eq!(
        dto["braid"]["braid_relations_hold"],
        serde_json::json!(true)
    );
    assert_eq!(dto["braid"]["space_dim"], serde_json::json!(64));
}

#[test]
fn singular_operator_is_reported_but_not_a_failure() {
    let output = run(&["rmatrix", "--fixture", "trivial-5-6", "--format", "json"]);
    assert_eq!(exit_code(&output), 0, "a singular operator is a finding");
    let dto = json_of(&output);
    assert_eq!(dto["operator_invertible"], serde_json::json!(false));
    assert_eq!(dto["operator_rank"], serde_json::json!(6));
    assert_eq!(dto["fs_holds"], serde_json::json!(true));

    let blocks = run(&["rmatrix", "--fixture", "trivial-5-6", "--blocks"]);
    assert_eq!(
        exit_code(&blocks),
        2,
        "block decomposition only applies to quaternion algebras"
    );
}

#[test]
fn report_text_matches_goldens() {
    for fixture in FIXTURES {
        let output = run(&["report", "--fixture", fixture]);
        assert_eq!(exit_code(&output), 0, "report on {fixture} must pass");
        let expected = read_golden(&format!("report_{fixture}.txt"));
        assert_eq!(
            normalize_elapsed(&stdout_of(&output)),
            normalize_elapsed(&expected),
            "report for {fixture} diverged from the golden file"
        );
    }
}

#[test]
fn report_json_has_all_checks_passing() {
    let output = run(&["report", "--fixture", "symbol-7-3", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let report = json_of(&output);
    assert!(report["tool"].as_str().unwrap().starts_with("galoisazu "));
    assert_eq!(report["field"], "Fp:7");
    assert_eq!(report["algebra_dim"], serde_json::json!(9));
    assert_eq!(report["group"], "Z3xZ3");
    assert!(report["elapsed_ms"].is_u64());
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 19);
    assert!(checks.iter().all(|c| c["pass"].as_bool().unwrap()));
}

#[test]
fn fixtures_can_be_listed_printed_and_written() {
    let listing = run(&["fixtures"]);
    assert_eq!(exit_code(&listing), 0);
    let text = stdout_of(&listing);
    for fixture in FIXTURES {
        assert!(text.contains(fixture), "listing must mention {fixture}");
    }

    let single = run(&["fixtures", "hamilton"]);
    assert_eq!(exit_code(&single), 0);
    let bundle = json_of(&single);
    assert_eq!(bundle["name"], "hamilton");
    assert_eq!(bundle["algebra"]["dim"], serde_json::json!(4));

    let dir = tempfile::tempdir().expect("temp dir");
    let write = run(&["fixtures", "--write", dir.path().to_str().unwrap()]);
    assert_eq!(exit_code(&write), 0);
    for fixture in FIXTURES {
        let path = dir.path().join(format!("{fixture}.json"));
        let text = std::fs::read_to_string(&path).expect("fixture file written");
        let parsed: Value = serde_json::from_str(&text).expect("fixture file is JSON");
        assert_eq!(parsed["name"], *fixture);
    }
}

#[test]
fn written_fixture_files_certify_through_the_document_interface() {
    let dir = tempfile::tempdir().expect("temp dir");
    run(&["fixtures", "--write", dir.path().to_str().unwrap()]);
    let bundle: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("hamilton.json")).unwrap())
            .unwrap();
    let algebra_path = dir.path().join("algebra.json");
    let action_path = dir.path().join("action.json");
    std::fs::write(&algebra_path, bundle["algebra"].to_string()).unwrap();
    std::fs::write(&action_path, bundle["action"].to_string()).unwrap();

    let output = run(&[
        "certify",
        "--algebra",
        algebra_path.to_str().unwrap(),
        "--action",
        action_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    let cert = json_of(&output);
    assert_eq!(cert["group"], "Z2xZ2");
}

#[test]
fn construct_verbs_emit_the_same_documents_as_the_fixtures() {
    let constructed = run(&[
        "construct",
        "symbol",
        "--field",
        "Fp:7",
        "--degree",
        "3",
        "--a",
        "3",
        "--b",
        "5",
        "--zeta",
        "2",
    ]);
    assert_eq!(exit_code(&constructed), 0);
    let bundle = run(&["fixtures", "symbol-7-3"]);
    assert_eq!(json_of(&constructed), json_of(&bundle)["algebra"]);
}

#[test]
fn fixed_ring_tower_certifies_both_steps() {
    let output = run(&[
        "fixed-ring",
        "--fixture",
        "symbol-7-3",
        "--subgroup",
        "0,1",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&output), 0);
    let dto = json_of(&output);
    assert_eq!(dto["subgroup_order"], serde_json::json!(3));
    assert_eq!(dto["intermediate_dimension"], serde_json::json!(3));
    assert_eq!(dto["quotient_group"], "Z3");
    assert_eq!(dto["upper"]["group"], "Z3");
    assert_eq!(dto["lower"]["group"], "Z3");
    assert_eq!(
        dto["centralizer_equals_intermediate"],
        serde_json::json!(true)
    );
}

#[test]
fn base_change_preserves_the_galois_basis() {
    let output = run(&[
        "base-change",
        "--fixture",
        "hamilton",
        "--to",
        "Qzeta:4",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&output), 0);
    let dto = json_of(&output);
    assert_eq!(dto["source_field"], "Q");
    assert_eq!(dto["target_field"], "Qzeta:4");
    assert_eq!(dto["eta_preserved"], serde_json::json!(true));
}

#[test]
fn tensor_square_certifies_with_trivial_centre() {
    let output = run(&["tensor", "--fixture", "hamilton", "--format", "json"]);
    assert_eq!(exit_code(&output), 0);
    let dto = json_of(&output);
    assert_eq!(dto["dim"], serde_json::json!(16));
    assert_eq!(dto["summary"]["group"], "Z2xZ2xZ2xZ2");
    assert_eq!(dto["centre_dimension"], serde_json::json!(1));
}

#[test]
fn invalid_inputs_exit_with_code_two() {
    let unknown = run(&["certify", "--fixture", "nope"]);
    assert_eq!(exit_code(&unknown), 2);
    assert!(stderr_of(&unknown).contains("unknown fixture"));

    let zero = run(&["hilbert", "0", "1"]);
    assert_eq!(exit_code(&zero), 2);

    let no_action = run(&["certify", "--fixture", "char2-f2"]);
    assert_eq!(exit_code(&no_action), 2);
    assert!(stderr_of(&no_action).contains("no group action"));

    let bad_place = run(&["hilbert", "-1", "-1", "--place", "six"]);
    assert_eq!(exit_code(&bad_place), 2);

    let usage = run(&["no-such-verb"]);
    assert_eq!(exit_code(&usage), 2);
}
