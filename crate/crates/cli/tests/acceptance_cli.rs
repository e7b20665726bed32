//! Command-line contract: schema-valid, byte-stable reports; valid
//! color-annotated mesh export; documented exit codes; no partial files.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_brep-extract")
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(bin())
        .args(args)
        .output()
        .expect("spawn brep-extract");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

/// Minimal validator for the subset of JSON Schema the shipped schema uses:
/// type, properties, required, items, enum, $ref into #/definitions.
fn validate(value: &Value, schema: &Value, root: &Value, path: &str) -> Result<(), String> {
    if let Some(reference) = schema.get("$ref").and_then(Value::as_str) {
        let name = reference.trim_start_matches("#/definitions/");
        let target = root
            .get("definitions")
            .and_then(|d| d.get(name))
            .ok_or_else(|| format!("{path}: unknown $ref {reference}"))?;
        return validate(value, target, root, path);
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{path}: {value} not in enum"));
        }
    }
    match schema.get("type").and_then(Value::as_str) {
        Some("object") => {
            let obj = value
                .as_object()
                .ok_or_else(|| format!("{path}: expected object"))?;
            if let Some(required) = schema.get("required").and_then(Value::as_array) {
                for key in required.iter().filter_map(Value::as_str) {
                    if !obj.contains_key(key) {
                        return Err(format!("{path}: missing required `{key}`"));
                    }
                }
            }
            if let Some(props) = schema.get("properties").and_then(Value::as_object) {
                for (key, sub) in props {
                    if let Some(v) = obj.get(key) {
                        validate(v, sub, root, &format!("{path}.{key}"))?;
                    }
                }
            }
            Ok(())
        }
        Some("array") => {
            let arr = value
                .as_array()
                .ok_or_else(|| format!("{path}: expected array"))?;
            if let Some(items) = schema.get("items") {
                for (i, v) in arr.iter().enumerate() {
                    validate(v, items, root, &format!("{path}[{i}]"))?;
                }
            }
            Ok(())
        }
        Some("string") => value
            .as_str()
            .map(|_| ())
            .ok_or_else(|| format!("{path}: expected string")),
        Some("integer") => {
            if value.as_i64().is_some() || value.as_u64().is_some() {
                Ok(())
            } else {
                Err(format!("{path}: expected integer"))
            }
        }
        Some("number") => value
            .as_f64()
            .map(|_| ())
            .ok_or_else(|| format!("{path}: expected number")),
        Some("boolean") => value
            .as_bool()
            .map(|_| ())
            .ok_or_else(|| format!("{path}: expected boolean")),
        _ => Ok(()),
    }
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/report-schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn mask_timing(raw: &str) -> String {
    let mut out = String::new();
    for line in raw.lines() {
        if line.trim_start().starts_with("\"timing_ms\"") {
            out.push_str("  \"timing_ms\": 0\n");
        } else {
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}

#[test]
fn criterion_10_cli_contract() {
    // Schema-valid report, exit 0 on a clean fixture.
    let report_path = tmp("cube.json");
    let mesh_path = tmp("cube.ply");
    let (code, _) = run(&[
        "--fixture",
        "cube",
        "--out",
        report_path.to_str().unwrap(),
        "--export-mesh",
        mesh_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "clean fixture exits 0");
    let raw = std::fs::read_to_string(&report_path).unwrap();
    let parsed: Value = serde_json::from_str(&raw).unwrap();
    let schema = schema();
    validate(&parsed, &schema, &schema, "$").unwrap();
    assert_eq!(parsed["subgraphs"].as_array().unwrap().len(), 1);
    assert_eq!(parsed["boundaries"].as_array().unwrap().len(), 0);

    // Byte-stable across runs, timing masked.
    let again = tmp("cube2.json");
    run(&["--fixture", "cube", "--out", again.to_str().unwrap()]);
    let raw2 = std::fs::read_to_string(&again).unwrap();
    assert_eq!(
        mask_timing(&raw),
        mask_timing(&raw2),
        "byte-identical reports"
    );

    // Mesh: ASCII polygon file with the blue/yellow/red convention.
    let ply = std::fs::read_to_string(&mesh_path).unwrap();
    assert!(ply.starts_with("ply\nformat ascii 1.0\n"));
    assert!(ply.contains("property uchar red"));
    assert!(ply.contains("70 130 240"), "convex faces blue");

    let hole_mesh = tmp("fig.ply");
    let hole_report = tmp("fig.json");
    let (code, _) = run(&[
        "--fixture",
        "through_rect_hole",
        "--out",
        hole_report.to_str().unwrap(),
        "--export-mesh",
        hole_mesh.to_str().unwrap(),
    ]);
    assert_eq!(
        code, 2,
        "diagnostics present (pruned tree clusters) exits 2"
    );
    let hole: Value =
        serde_json::from_str(&std::fs::read_to_string(&hole_report).unwrap()).unwrap();
    assert_eq!(hole["boundaries"].as_array().unwrap().len(), 2);
    assert_eq!(hole["subgraphs"].as_array().unwrap().len(), 2);
    let ply = std::fs::read_to_string(&hole_mesh).unwrap();
    assert!(ply.contains("235 200 60"), "concave hole walls yellow");
    assert!(ply.contains("255 0 0"), "boundaries red");

    println!(
        "ACCEPTANCE 10 PASS: schema-valid byte-stable reports, valid colored mesh, exit codes"
    );
}

#[test]
fn case_b_report_carries_the_six_edge_boundary() {
    let out = tmp("case_b.json");
    run(&["--fixture", "case_b", "--out", out.to_str().unwrap()]);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let boundaries = report["boundaries"].as_array().unwrap();
    assert!(boundaries
        .iter()
        .any(|b| b["convexity"] == "concave" && b["edges"].as_array().unwrap().len() == 6));
}

#[test]
fn input_file_and_fixture_agree() {
    // Serialize the fixture, run from the file, compare to the fixture run.
    let model = brep_extract::build_fixture(&brep_extract::FixtureSpec::ThroughRectHole {
        block: (4.0, 4.0, 4.0),
        hole: (2.0, 2.0),
    })
    .unwrap();
    let doc = brep_extract::serialize_model(&model).unwrap();
    let nbrep = tmp("fig2.nbrep");
    std::fs::write(&nbrep, doc).unwrap();

    let from_file = tmp("from_file.json");
    let from_fixture = tmp("from_fixture.json");
    let (code, _) = run(&[
        "--input",
        nbrep.to_str().unwrap(),
        "--out",
        from_file.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    run(&[
        "--fixture",
        "through_rect_hole",
        "--out",
        from_fixture.to_str().unwrap(),
    ]);
    let a = mask_timing(&std::fs::read_to_string(&from_file).unwrap());
    let b = mask_timing(&std::fs::read_to_string(&from_fixture).unwrap());
    assert_eq!(
        a, b,
        "parsed input and generated fixture give identical reports"
    );
}

#[test]
fn errors_exit_one_and_leave_no_partial_files() {
    let bad = tmp("bad.nbrep");
    std::fs::write(&bad, "nbrep 1\nsolid broken genus 0\nv 0 oops\n").unwrap();
    let out = tmp("never_written.json");
    let (code, stderr) = run(&[
        "--input",
        bad.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("error:"));
    assert!(!out.exists(), "no partial report on error");

    // Validation failures name the offending entity.
    let cube = brep_extract::build_fixture(&brep_extract::FixtureSpec::Cube { side: 1.0 }).unwrap();
    let doc = brep_extract::serialize_model(&cube)
        .unwrap()
        .replace("genus 0", "genus 1");
    std::fs::write(&bad, doc).unwrap();
    let (code, stderr) = run(&[
        "--input",
        bad.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("EulerMismatch"), "stderr: {stderr}");
    assert!(!out.exists());
}

#[test]
fn usage_errors_exit_one_not_two() {
    let (code, _) = run(&[]);
    assert_eq!(code, 1, "missing flags");
    let out = tmp("u.json");
    let (code, _) = run(&[
        "--fixture",
        "no_such_fixture",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 1, "unknown fixture");
    let (code, _) = run(&["--help"]);
    assert_eq!(code, 0, "help exits cleanly");
}

#[test]
fn quiet_suppresses_the_summary() {
    let out = tmp("quiet.json");
    let (_, stderr) = run(&[
        "--fixture",
        "cube",
        "--out",
        out.to_str().unwrap(),
        "--quiet",
    ]);
    assert!(stderr.is_empty(), "stderr: {stderr}");
}

#[test]
fn tolerance_flag_overrides_classification() {
    // An absurdly large tolerance collapses every edge to transitory, so
    // nothing clusters and a single unlabeled subgraph remains.
    let out = tmp("tol.json");
    let (code, _) = run(&[
        "--fixture",
        "cube",
        "--out",
        out.to_str().unwrap(),
        "--tolerance",
        "10.0",
    ]);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["tolerance"], serde_json::json!(10.0));
    assert!(report["convexity"]["edges"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c == "transitory"));
    assert_eq!(code, 2, "unlabeled subgraph is diagnosed");
}
