use std::path::Path;

use super::*;
use crate::catalog::{entries, make_symbolic};
use crate::homcheck::{check_hom, MapTarget};

#[test]
fn every_catalog_entry_round_trips_through_json() {
    for e in entries() {
        let p = make_symbolic(e.name).unwrap();
        let file = PresentationFile::from_presentation(&p);
        let text = serde_json::to_string(&file).unwrap();
        let back = parse_presentation(&text).unwrap();
        assert_eq!(back.alphabet, p.alphabet, "{}", e.name);
        assert_eq!(back.order, p.order, "{}", e.name);
        assert_eq!(back.relations, p.relations, "{}", e.name);
        assert_eq!(back.parameters, p.parameters, "{}", e.name);
    }
}

#[test]
fn handwritten_presentation() {
    let text = r#"{
        "format_version": 1,
        "name": "laurent",
        "params": ["q"],
        "generators": [{"name": "x"}, {"name": "y"}, {"name": "yi", "inverse_of": "y"}],
        "order": ["y", "yi", "x"],
        "relations": ["x*y - q*y*x"]
    }"#;
    let p = parse_presentation(text).unwrap();
    assert_eq!(p.alphabet.inverse_of(1), Some(2));
    assert_eq!(p.order.precedence_names(&p.alphabet), ["y", "yi", "x"]);
    let sys = p.system().unwrap();
    assert_eq!(
        sys.normal_form(&p.parse("y*yi*x").unwrap()).unwrap(),
        p.parse("x").unwrap()
    );
}

#[test]
fn bad_documents_are_rejected() {
    let base = r#"{"format_version": 2, "name": "n", "generators": [{"name": "A"}], "relations": ["A"]}"#;
    assert_eq!(parse_presentation(base).unwrap_err(), FileError::Version { found: 2 });
    let bad_rel = base.replace("2,", "1,").replace("[\"A\"]", "[\"A*Q\"]");
    assert!(matches!(
        parse_presentation(&bad_rel),
        Err(FileError::Relation { index: 0, .. })
    ));
    let bad_param = base.replace("2,", "1, \"params\": [\"zz\"],");
    assert!(matches!(parse_presentation(&bad_param), Err(FileError::Invalid(_))));
    assert!(matches!(parse_presentation("{"), Err(FileError::Json(_))));
    let extra = base.replace("2,", "1, \"colour\": 1,");
    assert!(matches!(parse_presentation(&extra), Err(FileError::Json(_))));
}

#[test]
fn check_spec_with_catalog_references() {
    let text = r#"{
        "format_version": 1,
        "source": {"dictionary": {"name": "weyl"}},
        "target": {"presentation": {"catalog": {"name": "weyl"}}},
        "images": ["A", "B", "-A - B"]
    }"#;
    let spec: CheckSpec = serde_json::from_str(text).unwrap();
    let m = spec.resolve(Path::new(".")).unwrap();
    assert!(check_hom(&m, None).unwrap().is_verified());
}

#[test]
fn check_spec_with_matrices() {
    let text = r#"{
        "format_version": 1,
        "source": {"catalog": {"name": "z3downup", "bindings": {"a": "2", "b": "-1", "g": "2"}}},
        "target": {"matrices": {"size": 2}},
        "images": [["1", "-1", "1", "-1"], ["0", "0", "1", "0"], ["0", "-1", "0", "0"]],
        "direction": "homomorphism"
    }"#;
    let spec: CheckSpec = serde_json::from_str(text).unwrap();
    let m = spec.resolve(Path::new(".")).unwrap();
    assert!(matches!(m.target, MapTarget::Matrix { .. }));
    assert!(check_hom(&m, None).unwrap().is_verified());
    let mut swapped = spec.clone();
    swapped.images[0] = swapped.images[1].clone();
    let bad = swapped.resolve(Path::new(".")).unwrap();
    assert!(!check_hom(&bad, None).unwrap().is_verified());
}

#[test]
fn mismatched_images_are_rejected() {
    let text = r#"{
        "format_version": 1,
        "source": {"catalog": {"name": "weyl"}},
        "target": {"matrices": {"size": 2}},
        "images": ["A", "B"]
    }"#;
    let spec: CheckSpec = serde_json::from_str(text).unwrap();
    assert!(matches!(spec.resolve(Path::new(".")), Err(FileError::Invalid(_))));
}

#[test]
fn files_resolve_relative_to_the_spec() {
    let dir = std::env::temp_dir().join(format!("z3du-lang-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let w = make_symbolic("z3weyl").unwrap();
    save_presentation(&w, &dir.join("w.json")).unwrap();
    let spec = r#"{
        "format_version": 1,
        "source": {"file": {"path": "w.json"}},
        "target": {"presentation": {"file": {"path": "w.json"}}},
        "images": ["B", "C", "A"]
    }"#;
    std::fs::write(dir.join("spec.json"), spec).unwrap();
    let (_, m) = load_check_spec(&dir.join("spec.json")).unwrap();
    assert!(check_hom(&m, None).unwrap().is_verified());
    std::fs::remove_dir_all(&dir).unwrap();
}
