use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn veritas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_veritas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

const MODEL: &str = r#"{
  "domain_size": 3,
  "relations": { "P": { "arity": 1, "tuples": [[0], [2]] }, "R": { "arity": 2, "tuples": [[0, 1]] } },
  "constants": { "c": 0, "d": 1 }
}"#;

#[test]
fn lfp_on_the_worked_universe() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.json");
    fs::write(&model, r#"{"domain_size": 1}"#).unwrap();
    let out = veritas(&["lfp", "--model", model.to_str().unwrap(), "--seed", "T(702)", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("\"stabilized_at\": 2\n}"));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["stabilized_at"], 2);
    let last = &v["stages"][2]["explicit"];
    assert_eq!(last, &serde_json::json!(["702", "248158"]));
}

#[test]
fn lfp_output_is_deterministic() {
    let run = || stdout(&veritas(&["lfp", "--seed", "T(702)", "--seed", "!T(1) | exists x. T(x)", "--json"]));
    assert_eq!(run(), run());
    let verify = || stdout(&veritas(&["verify", "consistency", "--configs", "10", "--rng-seed", "5", "--json"]));
    assert_eq!(verify(), verify());
}

#[test]
fn empty_z_is_a_usage_error() {
    let out = veritas(&["regress", "--z", ""]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Z must be nonempty"));
}

#[test]
fn regress_reports_saturation_only_at_omega() {
    let out = veritas(&["regress", "--omega", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["saturated"], true);
    assert_eq!(v["pivot"], "omega");

    let out = veritas(&["regress", "--z", "4,9", "--omega", "--horizon", "12", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["saturated"], false);
    assert_eq!(v["pivot"], 4);
    assert_eq!(v["truth"][3], true);
    assert_eq!(v["truth"][4], false);
}

#[test]
fn verify_all_with_model_and_seed_file() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.json");
    let seeds = dir.path().join("seeds.txt");
    fs::write(&model, MODEL).unwrap();
    fs::write(
        &seeds,
        "# seeds\nT(702)\n[P(c)] <-> !T(0)\n\nexists x. T(x) & !forall x. T(x)\n[exists v0. R(v0, d)]\n",
    )
    .unwrap();
    let out = veritas(&[
        "verify",
        "all",
        "--model",
        model.to_str().unwrap(),
        "--seed-file",
        seeds.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}{}", stdout(&out), stderr(&out));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("PASS")).count(), 10);
}

#[test]
fn encode_decode_round_trip() {
    let out = veritas(&["encode", "forall v0. v0 = v0"]);
    assert_eq!(stdout(&out).trim(), "702");
    let out = veritas(&["decode", "248158"]);
    assert_eq!(stdout(&out).trim(), "T(702)");
    let out = veritas(&["decode", "45"]);
    assert_eq!(out.status.code(), Some(2));
    let out = veritas(&["decode", "twelve"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_codes_enter_like_text() {
    let by_text = stdout(&veritas(&["eval", "--seed", "T(702)", "--json"]));
    let by_code = stdout(&veritas(&["eval", "--seed-code", "248158", "--json"]));
    assert_eq!(by_text, by_code);
    let v: Value = serde_json::from_str(&by_text).unwrap();
    for item in v["sentences"].as_array().unwrap() {
        assert_eq!(item["grounded"], item["valuation"]);
    }
}

#[test]
fn eval_base_uses_the_model() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.json");
    fs::write(&model, MODEL).unwrap();
    let m = model.to_str().unwrap();
    assert_eq!(stdout(&veritas(&["eval-base", "--model", m, "P(c) & !P(d)"])).trim(), "true");
    assert_eq!(stdout(&veritas(&["eval-base", "--model", m, "forall v0. P(v0)"])).trim(), "false");
    let out = veritas(&["eval-base", "--model", m, "Q(c)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    assert_eq!(veritas(&["lfp", "--model", bad.to_str().unwrap(), "--seed", "T(1)"]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(veritas(&["lfp", "--model", missing.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(veritas(&["lfp", "--seed", "T(x)"]).status.code(), Some(2));
    assert_eq!(veritas(&["lfp", "--seed", "T(1)", "--seed", "T(2)", "--cap", "1"]).status.code(), Some(2));
    assert_eq!(veritas(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(veritas(&["frobnicate"]).status.code(), Some(2));
}
