use std::process::{Command, Output};

use serde_json::Value;

fn ratell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratell")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn exponents_seven() {
    let o = ratell(&["exponents", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a=() b=(4)\na=(1) b=(2,3)\na=(2) b=(2,4)\na=(1,1) b=(2,2,2)\n");
}

#[test]
fn elliptic_ternary_form() {
    let o = ratell(&["cubic", "elliptic", "--b2", "3", "x*y*z"]);
    assert_eq!(stdout(&o), "elliptic\n");
    let o = ratell(&["cubic", "elliptic", "x^3 + y^3 + z^3"]);
    assert_eq!(stdout(&o), "not elliptic\n");
}

#[test]
fn binary_classes_and_variables() {
    assert_eq!(stdout(&ratell(&["cubic", "classify", "x^2*y - x*y^2"])), "three real roots: x^2*y - x*y^2\n");
    assert_eq!(stdout(&ratell(&["cubic", "classify", "8*x^3", "--vars", "x,y"])), "cube: x^3\n");
    let o = ratell(&["cubic", "classify", "8*x^3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn regular_sequences_depend_on_ambient_ring() {
    assert_eq!(stdout(&ratell(&["regseq", "x^2", "y^2"])), "regular\n");
    assert_eq!(stdout(&ratell(&["regseq", "x^2", "x*y"])), "not regular\n");
    assert_eq!(stdout(&ratell(&["regseq", "x^2", "y^2", "--vars", "x,y,z"])), "regular\n");
}

#[test]
fn groebner_basis_output() {
    let o = ratell(&["groebner", "x*y", "x^2 - y^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^2 - y^2\nx*y\ny^3\n");
}

#[test]
fn check_sac_arguments() {
    let o = ratell(&["check-sac", "1", "2", "--", "2", "2"]);
    assert!(stdout(&o).contains("strong arithmetic condition: violated"));
    let o = ratell(&["check-sac", "1", "--", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("odd exponents"));
}

#[test]
fn cohomology_of_model_file() {
    let o = ratell(&["cohomology", &data("s2.model"), "--max-degree", "4"]);
    assert_eq!(
        stdout(&o),
        "b0 = 1\nb1 = 0\nb2 = 1\nb3 = 0\nb4 = 0\nformal dimension from exponents: 2\npoincare duality: yes\nelliptic (pure criterion): yes\n"
    );
}

#[test]
fn parse_errors_name_the_problem() {
    let o = ratell(&["cohomology", &data("not_minimal.model")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not_minimal.model"), "{}", stderr(&o));
    let o = ratell(&["cohomology", &data("unknown.model")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains('z'), "{}", stderr(&o));
    let o = ratell(&["regseq", "x^2 +* y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("1:6"), "{}", stderr(&o));
    assert_eq!(ratell(&["exponents", "seven"]).status.code(), Some(2));
    assert_eq!(ratell(&["cohomology", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn classifiers_on_files() {
    assert_eq!(stdout(&ratell(&["classify7", &data("n7.model")])), "N^7\n");
    assert_eq!(stdout(&ratell(&["classify8", &data("hp2_hp2.model")])), "HP^2 # HP^2\n");
}

#[test]
fn catalog_build_round_trips_through_classifier() {
    let dir = std::env::temp_dir().join(format!("ratell-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.model");
    let o = ratell(&["catalog", "build", "m-sigma", "-3/4"]);
    std::fs::write(&path, stdout(&o)).unwrap();
    assert_eq!(stdout(&ratell(&["classify7", path.to_str().unwrap()])), "M_sigma[-3]\n");
    assert_eq!(ratell(&["catalog", "build", "m-sigma", "0"]).status.code(), Some(2));
    assert_eq!(ratell(&["catalog", "build", "nothing"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_for_every_subcommand() {
    let s2 = data("s2.model");
    let n7 = data("n7.model");
    let hp = data("hp2_hp2.model");
    let cases: Vec<Vec<&str>> = vec![
        vec!["exponents", "6"],
        vec!["check-sac", "1", "1", "--", "2", "3"],
        vec!["cohomology", &s2],
        vec!["regseq", "x^2", "y^2"],
        vec!["groebner", "x^2", "y^2"],
        vec!["cubic", "classify", "x*y*z"],
        vec!["cubic", "elliptic", "x*y*z"],
        vec!["cubic", "associated", "x*y*z"],
        vec!["cubic", "sigma", "x^3 + y^3 + z^3 + 12*x*y*z"],
        vec!["catalog", "list"],
        vec!["catalog", "build", "b1", "7", "6"],
        vec!["catalog", "build", "sphere", "3"],
        vec!["classify7", &n7],
        vec!["classify8", &hp],
        vec!["verify-paper", "--section", "4"],
    ];
    for args in cases {
        let mut full = vec!["--json"];
        full.extend(&args);
        let o = ratell(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert!(!v.is_null(), "{args:?}");
    }
}

#[test]
fn sigma_recovers_rational_parameter() {
    let o = ratell(&["cubic", "sigma", "x^3 + y^3 + z^3 + 12*x*y*z"]);
    assert!(stdout(&o).lines().any(|l| l == "2"), "{}", stdout(&o));
}

#[test]
fn verification_report_is_complete_and_stable() {
    let all = ratell(&["--json", "verify-paper"]);
    assert_eq!(all.status.code(), Some(0));
    let again = ratell(&["--json", "verify-paper"]);
    assert_eq!(stdout(&all), stdout(&again));
    let records: Vec<Value> = serde_json::from_str(&stdout(&all)).unwrap();
    for r in &records {
        let obj = r.as_object().unwrap();
        let mut keys: Vec<_> = obj.keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["actual", "cite", "expected", "name", "status"]);
        assert_eq!(r["status"], "pass", "{r}");
    }
    let mut parts = Vec::new();
    for s in ["3", "4", "5"] {
        let v: Vec<Value> = serde_json::from_str(&stdout(&ratell(&["--json", "verify-paper", "--section", s]))).unwrap();
        assert!(!v.is_empty());
        parts.extend(v);
    }
    parts.sort_by(|a, b| a["name"].as_str().cmp(&b["name"].as_str()));
    assert_eq!(parts, records);
    assert_eq!(ratell(&["verify-paper", "--section", "6"]).status.code(), Some(2));
}

#[test]
fn text_report_summarizes() {
    let o = ratell(&["verify-paper", "--section", "3"]);
    let out = stdout(&o);
    assert!(out.lines().last().unwrap().ends_with("0 failed"));
    assert!(out.contains("PASS ternary form xyz: regular"));
}
