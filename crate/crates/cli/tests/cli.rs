use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z3du"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    let v = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}{}", stdout(&o), String::from_utf8_lossy(&o.stderr)));
    (v, o.status.code().unwrap())
}

#[test]
fn present_list_names_entries_and_dictionaries() {
    let (v, code) = json(&["present", "list"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["presentations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"z3downup") && names.contains(&"uq_sl2_equitable"));
    let weyl = v["dictionaries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|d| d["name"] == "weyl")
        .unwrap();
    assert_eq!(weyl["beta"], "-xi");
}

#[test]
fn show_save_and_load_round_trip() {
    let dir = std::env::temp_dir().join(format!("z3du-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reduced.json");
    let p = path.display().to_string();
    let (shown, code) = json(&["present", "show", "-p", "reduced", "--save", &p]);
    assert_eq!(code, 0);
    let (loaded, code) = json(&["present", "load", &p]);
    assert_eq!(code, 0);
    assert_eq!(shown, loaded);
    assert_eq!(loaded["format_version"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn normal_forms() {
    let (v, code) = json(&["nf", "-p", "weyl", "A*B - B*A - theta", "B*A"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "confluent");
    assert_eq!(v["results"][0]["normal_form"], "0");
    assert_eq!(v["results"][1]["normal_form"], "A*B - theta");
}

#[test]
fn file_presentations_with_bindings_and_order() {
    let f = fixture("quantum_plane.json");
    let (v, code) = json(&["nf", "--file", &f, "--bind", "q=2", "y*x*y"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["normal_form"], "2*x*y^2");
    let (v, _) = json(&["nf", "--file", &f, "--order", "y,x", "y*x"]);
    assert_eq!(v["results"][0]["normal_form"], "y*x");
}

#[test]
fn hilbert_series_of_the_free_case() {
    let (v, code) = json(&[
        "hilbert",
        "-p",
        "z3downup",
        "--bind",
        "a=0",
        "--bind",
        "b=0",
        "--bind",
        "g=0",
        "--max-deg",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["counts"], serde_json::json!(["1", "3", "9", "21", "51", "123"]));
}

#[test]
fn basis_with_rational_binding() {
    let (v, _) = json(&["basis", "-p", "s_gamma", "--bind", "g=1/2", "--max-deg", "3"]);
    assert_eq!(v["words"], serde_json::json!([["1"], ["D"], ["D^2"], []]));
}

#[test]
fn completion_reports_status() {
    let (v, code) = json(&[
        "complete",
        "-p",
        "z3downup",
        "--bind",
        "a=0",
        "--bind",
        "b=0",
        "--bind",
        "g=1",
        "--max-deg",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "confluent");
    assert_eq!(v["rules"], serde_json::json!(["B -> A", "C -> A", "A^3 -> A"]));
    assert_eq!(v["added"], v["rules"]);
}

#[test]
fn homcheck_exit_codes() {
    let (v, code) = json(&["homcheck", &fixture("onto_weyl.json")]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("verified")));
    let (v, code) = json(&["homcheck", &fixture("wrong_images.json")]);
    assert_eq!((code, v["verdict"].as_str()), (1, Some("refuted")));
    let (v, code) = json(&["homcheck", &fixture("sl2_matrices.json")]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("verified")));
}

#[test]
fn probes() {
    let (v, _) = json(&[
        "probe",
        "finite-dimension",
        "-p",
        "z3downup",
        "--bind",
        "a=0",
        "--bind",
        "b=0",
        "--bind",
        "g=1",
    ]);
    assert_eq!(v["verdict"], "finite-dimension-certified");
    assert_eq!(v["evidence"]["dimension"], 3);
    let (v, _) = json(&[
        "probe",
        "injectivity",
        &fixture("natural_gamma_zero.json"),
        "--max-deg",
        "4",
    ]);
    assert_eq!(v["verdict"], "consistent-with-claim");
    assert_eq!(v["evidence"]["image_rank"], 22);
    let (v, _) = json(&[
        "probe",
        "lie-injectivity",
        &fixture("sl2_matrices.json"),
        "--depth",
        "3",
    ]);
    assert_eq!(v["evidence"]["image_rank"], 3);
    let (v, _) = json(&["probe", "infinite-dimension", "alpha-nonzero"]);
    assert_eq!(v["verdict"], "consistent-with-claim");
}

#[test]
fn verify_claims_scope_and_format() {
    let (v, code) = json(&["verify-claims", "--scope", "symmetries", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["format_version"], 1);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 8);
    for e in entries {
        assert!(e["claim_id"].as_str().unwrap().starts_with("symmetries/"));
        assert_eq!(e["verdict"], "verified");
        for key in ["reference", "detail", "millis"] {
            assert!(e.get(key).is_some(), "{key}");
        }
    }
    let text = stdout(&run(&["verify-claims", "--scope", "grading"]));
    assert!(
        text.contains("grading/odd-relations") && text.ends_with("1 claims: 1 verified\n"),
        "{text}"
    );
    let (list, _) = json(&["verify-claims", "--list"]);
    assert!(list["topics"].as_array().unwrap().len() > 10);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify-claims", "--scope", "bogus"][..],
        &["nf", "-p", "weyl", "--bind", "theta", "A"],
        &["nf", "-p", "weyl", "A^-1"],
        &["hilbert", "-p", "no_such_algebra"],
        &["hilbert"],
        &["probe", "infinite-dimension", "beta-two"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"), "{args:?}");
    }
}
