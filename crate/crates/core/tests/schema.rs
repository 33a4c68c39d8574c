//! Reports and sample specs validate against the published JSON schemas.

use std::path::Path;

use serde_json::Value;
use sigma_noether::workbench::{execute, parse_spec, Options, TaskKind};

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(name);
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&value).unwrap()
}

fn sample_specs() -> Vec<(String, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("specs");
    let mut out: Vec<(String, String)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value, what: &str) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{what}: {errors:?}");
}

#[test]
fn sample_specs_match_spec_schema() {
    let v = schema("workbench-spec.v1.schema.json");
    let specs = sample_specs();
    assert!(specs.len() >= 7);
    for (name, text) in &specs {
        let doc: Value = serde_json::from_str(text).unwrap();
        assert_valid(&v, &doc, name);
        parse_spec(text).unwrap();
    }
}

#[test]
fn spec_schema_rejects_unknown_fields() {
    let v = schema("workbench-spec.v1.schema.json");
    let bad: Value = serde_json::from_str(r#"{"task":"census","ring":{"zmod":6},"rings":1}"#).unwrap();
    assert!(!v.is_valid(&bad));
    assert!(parse_spec(r#"{"task":"census","ring":{"zmod":6},"rings":1}"#).is_err());
}

#[test]
fn reports_match_report_schema() {
    let v = schema("report.v1.schema.json");
    let cheap = |name: &str| !name.starts_with("suite_catalogue");
    let mut tasks = std::collections::BTreeSet::new();
    for (name, text) in sample_specs().iter().filter(|(n, _)| cheap(n)) {
        let spec = parse_spec(text).unwrap();
        for timing in [false, true] {
            let outcome = execute(&spec, &Options { timing, ..Options::default() }).unwrap();
            let doc: Value = serde_json::from_str(&outcome.report.to_json()).unwrap();
            assert_valid(&v, &doc, name);
            tasks.insert(outcome.report.task);
        }
    }
    let all: Vec<&str> = [
        TaskKind::Enumerate,
        TaskKind::Partition,
        TaskKind::Closure,
        TaskKind::Certify,
        TaskKind::Suite,
        TaskKind::MonomialDecide,
        TaskKind::Census,
    ]
    .iter()
    .map(|t| t.name())
    .collect();
    assert_eq!(tasks.into_iter().collect::<Vec<_>>(), { let mut a = all; a.sort(); a });
}

#[test]
fn report_schema_rejects_extra_keys() {
    let v = schema("report.v1.schema.json");
    let spec = parse_spec(r#"{"task":"census","ring":{"zmod":6}}"#).unwrap();
    let mut doc: Value = serde_json::from_str(&execute(&spec, &Options::default()).unwrap().report.to_json()).unwrap();
    assert!(v.is_valid(&doc));
    doc["results"]["extra"] = Value::Bool(true);
    assert!(!v.is_valid(&doc));
}

#[test]
fn json_reports_round_trip() {
    for (name, text) in sample_specs().iter().filter(|(n, _)| !n.starts_with("suite")) {
        let json = execute(&parse_spec(text).unwrap(), &Options::default()).unwrap().report.to_json();
        let value: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string_pretty(&value).unwrap(), json, "{name}");
    }
}
