//! End-to-end tests of the `lieyam` binary against the committed fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

use lieyam::exact::rank;
use lieyam::io::load_pair;
use lieyam::pair::PairComplex;
use serde_json::Value;

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    root.join(name).to_string_lossy().into_owned()
}

fn lieyam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieyam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = lieyam(&full);
    let text = String::from_utf8(o.stdout.clone()).expect("utf-8");
    assert!(text.ends_with('\n'), "JSON output is newline-terminated");
    (code(&o), serde_json::from_str(&text).expect("valid JSON report"))
}

fn checks(report: &Value) -> &Vec<Value> {
    report["checks"].as_array().expect("checks array")
}

fn status_of<'a>(report: &'a Value, name: &str) -> &'a str {
    checks(report)
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check named {name}"))["status"]
        .as_str()
        .unwrap()
}

/// Every check carries a citation, and a witness exactly when it failed.
fn assert_well_formed(report: &Value) {
    assert!(report["seed"].is_u64());
    assert!(report["runtime_ms"].is_u64());
    for c in checks(report) {
        assert!(c["citation"].as_str().is_some_and(|s| !s.is_empty()), "{c}");
        assert_eq!(c["status"] == "fail", c.get("witness").is_some(), "{c}");
    }
}

#[test]
fn check_algebra_reports_four_axioms() {
    let (code, r) = json(&["check", "algebra", &fixture("A2.json")]);
    assert_eq!(code, 0);
    assert_well_formed(&r);
    let names: Vec<_> = checks(&r).iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["LY1", "LY2", "LY3", "LY4"]);
    assert!(checks(&r).iter().all(|c| c["status"] == "pass"));
}

#[test]
fn check_pairs_include_implied_identities() {
    for f in ["A2-adjoint.json", "A2-coadjoint.json", "sl2-coadjoint.json"] {
        let (code, r) = json(&["check", "pair", &fixture(f)]);
        assert_eq!(code, 0, "{f}");
        for name in ["RLYb", "RLYd", "RLYe", "RYT4", "RLY5", "RLYc", "RLY5a", "RLY6"] {
            assert_eq!(status_of(&r, name), "pass", "{f} {name}");
        }
    }
}

#[test]
fn cohomology_dimension_matches_rank_nullity() {
    let (code, r) = json(&["cohomology", "--pair", &fixture("A2-adjoint.json"), "--degree", "2"]);
    assert_eq!(code, 0);
    // Rank-nullity on the coboundary matrices assembled independently.
    let pair = load_pair(fixture("A2-adjoint.json")).unwrap();
    let c = PairComplex::new(&pair).unwrap();
    let d1 = c.delta_matrix(1).unwrap();
    let d2 = c.delta_matrix(2).unwrap();
    let expected = c.cochain_len(2) - rank(&d2) - rank(&d1);
    assert_eq!(r["values"]["dim"], expected);
    assert_eq!(status_of(&r, "delta-squared"), "pass");
    assert_eq!(status_of(&r, "direct-vs-lifted"), "pass");
}

#[test]
fn cohomology_respects_the_degree_cap() {
    let o = lieyam(&["cohomology", "--pair", &fixture("A2-adjoint.json"), "--degree", "3", "--cap", "2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn rota_baxter_nijenhuis_structure_lists_consequences() {
    let (code, r) = json(&[
        "verify-rbn",
        "--pair",
        &fixture("A2-adjoint.json"),
        "--T",
        &fixture("A2-R.json"),
        "--S",
        &fixture("A2-N.json"),
        "--N",
        &fixture("A2-N.json"),
    ]);
    assert_eq!(code, 0);
    assert_well_formed(&r);
    for name in [
        "ON1",
        "ON2",
        "ON3",
        "consequence/S-nijenhuis-on-subadjacent",
        "consequence/NT-rb/rb-binary",
        "consequence/s-equals-hat-ternary",
        "consequence/deformed-V-axioms/LY4",
    ] {
        assert_eq!(status_of(&r, name), "pass", "{name}");
    }
}

#[test]
fn diagonal_n_fails_with_a_located_witness() {
    let (code, r) = json(&[
        "verify-rbn",
        "--pair",
        &fixture("A2-adjoint.json"),
        "--T",
        &fixture("A2-R.json"),
        "--S",
        &fixture("A2-N-diag.json"),
        "--N",
        &fixture("A2-N-diag.json"),
    ]);
    assert_eq!(code, 1);
    assert_well_formed(&r);
    let on1 = checks(&r).iter().find(|c| c["name"] == "ON1").unwrap();
    assert_eq!(on1["status"], "fail");
    assert!(!on1["witness"]["tuple"].as_array().unwrap().is_empty());
    // Consequences are not evaluated on input that fails its definition.
    assert!(checks(&r).iter().all(|c| !c["name"].as_str().unwrap().starts_with("consequence/")));
}

#[test]
fn deform_emits_data_and_certificate() {
    let (code, r) = json(&[
        "deform",
        "--pair",
        &fixture("A2-adjoint.json"),
        "--from-nijenhuis",
        "--N",
        &fixture("A2-N.json"),
        "--S",
        &fixture("A2-N.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(status_of(&r, "certificate/equivalence/eqv3"), "pass");
    let d = &r["values"]["deformation"];
    assert_eq!(d["phi"]["shape"], serde_json::json!([2, 2, 2]));
    assert_eq!(d["varrho"].as_array().unwrap().len(), 2);
}

#[test]
fn deform_requires_the_source_flag() {
    let o = lieyam(&["deform", "--pair", &fixture("A2-adjoint.json"), "--N", &fixture("A2-N.json"), "--S", &fixture("A2-N.json")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn strong_condition_yields_compatible_pair() {
    let (code, r) = json(&[
        "verify-strong",
        "--pair",
        &fixture("A2-adjoint.json"),
        "--T",
        &fixture("A2-R.json"),
        "--S",
        &fixture("A2-N.json"),
        "--N",
        &fixture("A2-N.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(status_of(&r, "strong"), "pass");
    assert_eq!(status_of(&r, "T-and-T∘S-compatible"), "pass");
}

#[test]
fn quadratic_conversions_round_trip_on_sl2() {
    let algebra = fixture("sl2.json");
    let b = fixture("sl2-form.json");
    let (code, r) = json(&["quadratic", "rbn-to-rmn", "--algebra", &algebra, "--B", &b, "--R", &fixture("sl2-R.json"), "--N", &fixture("sl2-N.json")]);
    assert_eq!(code, 0);
    let pi = lieyam::io::parse_operator(&r["values"]["pi"].to_string()).unwrap();
    assert_eq!(pi, lieyam::io::load_operator(fixture("sl2-pi.json")).unwrap());
    let (code, r) = json(&["quadratic", "rmn-to-rbn", "--algebra", &algebra, "--B", &b, "--pi", &fixture("sl2-pi.json"), "--N", &fixture("sl2-N.json")]);
    assert_eq!(code, 0);
    let back = lieyam::io::parse_operator(&r["values"]["R"].to_string()).unwrap();
    assert_eq!(back, lieyam::io::load_operator(fixture("sl2-R.json")).unwrap());
}

#[test]
fn a2_has_no_invariant_form_on_the_grid() {
    let (code, r) = json(&["search", "forms", "--algebra", &fixture("A2.json")]);
    assert_eq!(code, 0);
    assert_eq!(r["values"]["count"], 0);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let conflict = dir.path().join("conflict.json");
    std::fs::write(
        &conflict,
        r#"{"dim":2,"binary":[{"i":0,"j":1,"value":{"0":"1"}},{"i":1,"j":0,"value":{"0":"1"}}]}"#,
    )
    .unwrap();
    let syntax = dir.path().join("syntax.json");
    std::fs::write(&syntax, "{\"dim\": 2,\n \"binary\": [}").unwrap();
    let bad_rational = dir.path().join("bad.json");
    std::fs::write(&bad_rational, r#"{"dim":2,"binary":[{"i":0,"j":1,"value":{"0":"1/0"}}]}"#).unwrap();
    for (path, needle) in [(&conflict, "conflicting"), (&syntax, "line 2"), (&bad_rational, "rational")] {
        let o = lieyam(&["check", "algebra", path.to_str().unwrap()]);
        assert_eq!(code(&o), 2);
        assert!(String::from_utf8_lossy(&o.stderr).contains(needle), "{needle}");
    }
    let missing = lieyam(&["check", "algebra", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(code(&missing), 2);
    assert_eq!(code(&lieyam(&["no-such-command"])), 2);
    assert_eq!(code(&lieyam(&["check"])), 2);
}

#[test]
fn invalid_algebra_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // A2 with a perturbed ternary constant: ⟪e₁,e₂,e₂⟫ = e₁ + e₂.
    std::fs::write(
        &path,
        r#"{"dim":2,"binary":[{"i":0,"j":1,"value":{"0":"1"}}],"ternary":[{"i":0,"j":1,"k":1,"value":{"0":"1","1":"1"}}]}"#,
    )
    .unwrap();
    let (code, r) = json(&["check", "algebra", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_well_formed(&r);
    assert_eq!(status_of(&r, "LY3"), "fail");
}

#[test]
fn reports_are_deterministic_for_a_seed() {
    let run = || {
        let (_, mut r) = json(&["--seed", "11", "search", "random", "--count", "4"]);
        r["runtime_ms"] = Value::Null;
        r
    };
    let first = run();
    assert_eq!(first["seed"], 11);
    assert_eq!(first, run());
}

#[test]
fn text_output_ends_with_a_verdict() {
    let o = lieyam(&["check", "algebra", &fixture("A2.json")]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().last().unwrap().starts_with("result: PASS"));
    assert!(text.contains("[pass] LY1"));
}
