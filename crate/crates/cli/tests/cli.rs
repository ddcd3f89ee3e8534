use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn predual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_predual")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn check_chain_passes() {
    let o = predual(&["check", &data("c3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn check_m3_fails_distributivity_with_witness() {
    let o = predual(&["check", &data("m3.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("distributive         FAIL  p=x, s=y, t=z, p′=x"));
    let o = predual(&["check", &data("m3.json"), "--bundle", "predomain"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_json_report() {
    let v = json(&predual(&["check", "--json", &data("m3.json")]));
    assert_eq!(v["passes"], false);
    assert_eq!(v["predomain"], true);
    let dist = &v["axioms"][2];
    assert_eq!(dist["name"], "distributive");
    assert_eq!(dist["violation"]["witness"], "p=x, s=y, t=z, p′=x");
}

#[test]
fn malformed_and_usage_errors_exit_two() {
    let o = predual(&["check", &data("malformed.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1 column"));
    assert_eq!(predual(&["check", &data("c3.json"), "--bundle", "nonsense"]).status.code(), Some(2));
    assert_eq!(predual(&["check", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(predual(&["morphism", "compose", &data("leq_c3.json")]).status.code(), Some(2));
    assert_eq!(predual(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(predual(&["search", "no-such-property"]).status.code(), Some(2));
}

#[test]
fn spectrum_of_chain() {
    let v = json(&predual(&["spectrum", "--json", &data("c3.json")]));
    assert_eq!(v["points"], serde_json::json!([["1"], ["a", "1"]]));
    assert_eq!(v["basic_opens"]["a"], serde_json::json!([1]));
    let v = json(&predual(&["spectrum", "--json", &data("m3.json")]));
    assert_eq!(v["points"], serde_json::json!([]));
}

#[test]
fn roundtrip_examples() {
    assert_eq!(predual(&["roundtrip", &data("sierpinski.json")]).status.code(), Some(0));
    assert_eq!(predual(&["roundtrip", &data("chain3_space.json")]).status.code(), Some(0));
    let o = predual(&["roundtrip", &data("non_t0.json")]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("not T0"));
    assert!(text.contains("points u and v"));
}

#[test]
fn dualize_is_inverse_up_to_labels() {
    let dir = tempfile::tempdir().unwrap();
    let o = predual(&["dualize", &data("c3.json")]);
    assert_eq!(o.status.code(), Some(0));
    let space = dir.path().join("space.json");
    std::fs::write(&space, &o.stdout).unwrap();
    assert_eq!(predual(&["roundtrip", space.to_str().unwrap()]).status.code(), Some(0));
    let back = json(&predual(&["dualize", space.to_str().unwrap()]));
    assert_eq!(back["elements"].as_array().unwrap().len(), 3);
    let structure = dir.path().join("structure.json");
    std::fs::write(&structure, serde_json::to_vec(&back).unwrap()).unwrap();
    assert_eq!(predual(&["check", structure.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn compose_of_leq_is_leq() {
    let o = predual(&["morphism", "compose", &data("leq_c3.json"), &data("leq_c3.json")]);
    assert_eq!(o.status.code(), Some(0));
    let input: Value = serde_json::from_str(&std::fs::read_to_string(data("leq_c3.json")).unwrap()).unwrap();
    assert_eq!(json(&o)["pairs"], input["pairs"]);
}

#[test]
fn compose_mismatch_exits_two() {
    let o = predual(&["morphism", "compose", &data("c3_to_two.json"), &data("leq_c3.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn full_relation_fails_faithful() {
    let o = predual(&["morphism", "check", &data("full_c3.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("faithful: FAIL at p=a"));
}

#[test]
fn spectrum_map_of_leq_is_identity() {
    let o = predual(&["morphism", "spectrum-map", &data("leq_c3.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let map = v["map"].as_object().unwrap();
    assert_eq!(map.len(), 2);
    assert!(map.iter().all(|(k, v)| v == k));
}

#[test]
fn vee_closure_of_map_morphism_is_fixed() {
    let o = predual(&["morphism", "vee", &data("c3_to_two.json")]);
    assert_eq!(o.status.code(), Some(0));
    let input: Value = serde_json::from_str(&std::fs::read_to_string(data("c3_to_two.json")).unwrap()).unwrap();
    assert_eq!(json(&o)["pairs"], input["pairs"]);
}

#[test]
fn search_finds_m3() {
    let o = predual(&["search", "prime-extension-without-distributivity", "--max-size", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("witness elements: 0 a b c 1"));
    assert!(text.contains("F={a,1}, I={0}"));
    let v = json(&predual(&["search", "prime-extension-without-distributivity", "--max-size", "5", "--json"]));
    assert_eq!(v["status"], "witness");
    assert_eq!(v["witness"]["elements"].as_array().unwrap().len(), 5);
}

#[test]
fn search_above_bottom_is_exhausted() {
    let o = predual(&["search", "finite-predomain-with-strict-prec-above-bottom", "--max-size", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("status: exhausted\n"));
}

#[test]
fn exemplar_verdicts() {
    let o = predual(&["exemplar", "omega-b", "--window", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("approximating        UNKNOWN  p=ω, q=2"));
    assert!(text.contains("spectrum: 3 points, specialization is a chain"));
    let o = predual(&["exemplar", "intervals", "--window", "3", "--denominator", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_output_marks_prec_dashed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m3.dot");
    let o = predual(&["check", &data("m3.json"), "--dot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph structure {"));
    assert!(dot.contains("\"x\" -> \"1\";"));
    assert!(dot.contains("\"x\" -> \"1\" [style=dashed"));
    let path = dir.path().join("spectrum.dot");
    predual(&["spectrum", &data("c3.json"), "--dot", path.to_str().unwrap()]);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.contains("\"{1}\" -> \"{a,1}\";") || dot.contains("\"{a,1}\" -> \"{1}\";"));
}

#[test]
fn in_process_run_matches_binary() {
    let args = ["predual", "spectrum", &data("c3.json")];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = predual_cli::run(args, &mut out, &mut err);
    let o = predual(&args[1..]);
    assert_eq!(Some(code), o.status.code());
    assert_eq!(out, o.stdout);
}
