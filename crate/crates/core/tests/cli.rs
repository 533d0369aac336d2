use std::process::Command;

use serde_json::Value;
use stringy_core::cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, MAX_N_VAR};
use stringy_core::exactalg::LPoly;
use stringy_core::stringy::stringy_e;

fn call(args: &[&str]) -> (i32, String, String) {
    call_with(args, None)
}

fn call_with(args: &[&str], max_n: Option<&str>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stringy").chain(args.iter().copied());
    let code = run(argv, max_n, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn compute_text() {
    let (code, out, _) = call(&["compute", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "L^7 + 3L^6 + 5L^5 + 2L^4\n");
}

#[test]
fn compute_json_prefix() {
    let (code, out, _) = call(&["compute", "--n", "2", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with(r#"{"n":2,"total":[0,0,0,1,2,1],"#), "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["untwisted"], serde_json::json!([0, 0, 0, 0, 1, 1]));
    assert_eq!(v["sector_count"], 2);
}

#[test]
fn json_coefficients_round_trip() {
    for n in 2..=5 {
        let (_, out, _) = call(&["compute", "--n", &n.to_string(), "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        let total: LPoly = serde_json::from_value(v["total"].clone()).unwrap();
        let untwisted: LPoly = serde_json::from_value(v["untwisted"].clone()).unwrap();
        let direct = stringy_e(n).unwrap();
        assert_eq!(total, direct.total);
        assert_eq!(untwisted, direct.untwisted);
    }
}

#[test]
fn out_of_range_is_usage_error() {
    for args in [
        &["compute", "--n", "1"][..],
        &["compute", "--n", "9"],
        &["sectors", "--n", "0"],
        &["character", "--n", "0"],
        &["fan-check", "--n", "7"],
        &["oracle", "--r", "6"],
        &["table", "--n-max", "1"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains("error"), "{err}");
    }
}

#[test]
fn parse_errors_and_help() {
    assert_eq!(call(&[]).0, EXIT_USAGE);
    assert_eq!(call(&["compute"]).0, EXIT_USAGE);
    assert_eq!(call(&["compute", "--n", "x"]).0, EXIT_USAGE);
    assert_eq!(call(&["compute", "--n", "2", "--format", "yaml"]).0, EXIT_USAGE);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("fan-check"));
}

#[test]
fn max_n_variable_raises_bounds() {
    assert_eq!(call(&["oracle", "--r", "6"]).0, EXIT_USAGE);
    let (code, out, _) = call_with(&["character", "--n", "13"], Some("13"));
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("h13"));
    assert_eq!(call_with(&["compute", "--n", "2"], Some("lots")).0, EXIT_USAGE);
    assert_eq!(call_with(&["compute", "--n", "2"], Some("")).0, EXIT_OK);
}

#[test]
fn character_rendering() {
    assert_eq!(call(&["character", "--n", "1"]).1, "h1\n");
    assert_eq!(call(&["character", "--n", "3"]).1, "h3 + (h1*h2 + h3)*q + h3*q^2\n");
    assert_eq!(
        call(&["character", "--n", "4"]).1,
        "h4 + (h2^2 + h1*h3 + h4)*q + (h2^2 + h1*h3 + h4)*q^2 + h4*q^3\n"
    );
}

#[test]
fn sector_table_rows() {
    let (code, out, _) = call(&["sectors", "--n", "4"]);
    assert_eq!(code, EXIT_OK);
    let row = out
        .lines()
        .find(|l| l.starts_with("(2,1,1)") && l.contains("(1/2,0,0)") && l.contains("[2,1,3]"))
        .unwrap();
    let cells: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(cells[cells.len() - 1], "L^7");
    assert!(out.contains("subtotal (4): L^6 + 3L^5\n"));

    let (_, out, _) = call(&["sectors", "--n", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sectors"].as_array().unwrap().len(), 2);
    assert_eq!(v["sectors"][1]["theta"], serde_json::json!(["1/2"]));
}

#[test]
fn reports_pass() {
    let (code, out, _) = call(&["fan-check", "--n", "3"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("6 maximal cones"));
    assert_eq!(call(&["fan-check", "--n", "6"]).0, EXIT_OK);
    let (code, out, _) = call(&["oracle", "--r", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("11 of 11 quotients agree"));
    let (_, out, _) = call(&["fan-check", "--n", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_ne!(EXIT_CHECK_FAILED, EXIT_OK);
}

#[test]
fn orbifold_oracle_agrees() {
    let (code, out, _) = call(&["orbifold", "--n", "4", "--format", "json"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 5);
    assert_eq!(v["oracle_total"], v["total"]);
    assert_eq!(call(&["orbifold", "--n", "6"]).0, EXIT_USAGE);
}

#[test]
fn table_rows() {
    let (code, out, _) = call(&["table", "--n-max", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "n = 2: L^5 + 2L^4 + L^3\nn = 3: L^7 + 3L^6 + 5L^5 + 2L^4\nn = 4: L^9 + 4L^8 + 11L^7 + 14L^6 + 4L^5\n"
    );
}

#[test]
fn output_is_deterministic_and_parallel_invariant() {
    for cmd in [["sectors", "--n", "5"], ["table", "--n-max", "6"]] {
        for format in ["text", "json"] {
            let mut args = cmd.to_vec();
            args.extend(["--format", format]);
            let first = call(&args).1;
            assert_eq!(call(&args).1, first);
            args.push("--parallel");
            assert_eq!(call(&args).1, first);
        }
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["compute", "--n", "4", "--format", "json", "--out", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, call(&["compute", "--n", "4", "--format", "json"]).1);

    let missing = dir.path().join("no/such/dir/x");
    assert_eq!(call(&["compute", "--n", "2", "--out", missing.to_str().unwrap()]).0, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_stringy");
    let ok = Command::new(bin).args(["compute", "--n", "2"]).env_remove(MAX_N_VAR).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "L^5 + 2L^4 + L^3\n");
    let bad = Command::new(bin).args(["compute", "--n", "1"]).env_remove(MAX_N_VAR).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let raised = Command::new(bin).args(["character", "--n", "13"]).env(MAX_N_VAR, "13").output().unwrap();
    assert_eq!(raised.status.code(), Some(EXIT_OK));
}
