//! End-to-end checks of the command-line interface: file and stdin input,
//! both output formats, exit codes, and byte stability of machine output.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_isospectral"))
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn reconstruct_symmetric_pair() {
    let output = run_with_stdin(
        &["reconstruct", "--format", "json"],
        r#"{"lambda": [-1.0, 1.0], "weights": [0.5, 0.5]}"#,
    );
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["diag"][0].as_f64().unwrap(), 0.0);
    assert_eq!(value["diag"][1].as_f64().unwrap(), 0.0);
    assert_eq!(value["offdiag"][0].as_f64().unwrap(), 1.0);
}

#[test]
fn spectrum_splits_blocks() {
    let output = run_with_stdin(
        &["spectrum", "--format", "json"],
        r#"{"diag": [0.0, 1.8, 1.2], "offdiag": [0.0, 0.4]}"#,
    );
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let parts = value["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[0]["support"].as_array().unwrap().len(), 1);
    assert_eq!(parts[1]["support"].as_array().unwrap().len(), 2);
    let lambda = value["lambda"].as_array().unwrap();
    assert!((lambda[0].as_f64().unwrap() - 0.0).abs() < 1e-9);
    assert!((lambda[1].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!((lambda[2].as_f64().unwrap() - 2.0).abs() < 1e-9);
}

#[test]
fn limit_of_the_splitting_curve() {
    let curve = r#"{
        "lambda": [0.0, 1.0, 2.0],
        "parts": [
            {"support": [1], "weights": [1.0]},
            {"support": [2, 3], "weights": [1.0, 1.0]}
        ]
    }"#;
    let output = run_with_stdin(
        &[
            "limit",
            "--format",
            "json",
            "--t-grid",
            "1e-2,1e-4,1e-6,1e-8,1e-10",
        ],
        curve,
    );
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    // The split limit: second part carries weights proportional to (1, 4).
    let tail = value["limit"]["parts"][1]["weights"].as_array().unwrap();
    let ratio = tail[1].as_f64().unwrap() / tail[0].as_f64().unwrap();
    assert!((ratio - 4.0).abs() < 1e-12);
    let matrix = &value["limit_matrix"];
    assert!((matrix["diag"][1].as_f64().unwrap() - 1.8).abs() < 1e-12);
    assert!((matrix["offdiag"][1].as_f64().unwrap() - 0.4).abs() < 1e-12);
    let rows = value["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let last_error = rows[4]["error"].as_f64().unwrap();
    assert!(last_error < 1e-3);
}

#[test]
fn blowup_reports_membership_and_face() {
    let seq = r#"{
        "lambda": [0.0, 1.0],
        "parts": [
            {"support": [1], "weights": [1.0]},
            {"support": [2], "weights": [1.0]}
        ]
    }"#;
    let output = run_with_stdin(&["blowup", "--format", "json"], seq);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["member"], serde_json::Value::Bool(true));
    assert_eq!(value["face"][0][0].as_u64().unwrap(), 1);
    assert_eq!(value["face"][1][0].as_u64().unwrap(), 2);
}

#[test]
fn faces_table_for_three_points() {
    let dir = std::env::temp_dir().join("isospectral-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let export_path = dir.join("complex3.json");
    let output = bin()
        .args([
            "faces",
            "3",
            "--format",
            "json",
            "--export",
            export_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let rows = value["rows"].as_array().unwrap();
    let complex: Vec<u64> = rows
        .iter()
        .map(|r| r["complex"].as_u64().unwrap())
        .collect();
    assert_eq!(complex, vec![6, 12, 4]);
    let permutahedron: Vec<u64> = rows
        .iter()
        .map(|r| r["permutahedron"].as_u64().unwrap())
        .collect();
    assert_eq!(permutahedron, vec![6, 6, 1]);

    // The export carries the face list and covering incidences: four
    // hexagons with six edges each, twelve edges with two vertices.
    let export: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&export_path).unwrap()).unwrap();
    assert_eq!(export["faces"].as_array().unwrap().len(), 22);
    assert_eq!(export["incidence"].as_array().unwrap().len(), 48);
    std::fs::remove_file(&export_path).unwrap();
}

#[test]
fn euler_table_matches_frozen_values() {
    let output = bin()
        .args(["euler", "5", "--format", "json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    let chi: Vec<i64> = value["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["chi"].as_i64().unwrap())
        .collect();
    assert_eq!(chi, vec![1, 0, -2, 0, 16]);
    for row in value["rows"].as_array().unwrap() {
        assert_eq!(row["chi"], row["chi_tanh"]);
        assert_eq!(row["chi"], row["chi_enumerated"]);
    }
}

#[test]
fn surface_diagnostics_and_off_export() {
    let dir = std::env::temp_dir().join("isospectral-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let off_path = dir.join("surface.off");
    let output = bin()
        .args([
            "surface",
            "--format",
            "json",
            "--off",
            off_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&output)).unwrap();
    assert_eq!(value["euler_characteristic"].as_i64().unwrap(), -2);
    assert_eq!(value["genus"].as_i64().unwrap(), 2);
    assert_eq!(
        value["petrie_covers_all_edges"],
        serde_json::Value::Bool(true)
    );
    let off = std::fs::read_to_string(&off_path).unwrap();
    assert!(off.starts_with("OFF\n6 4 12\n"));
    std::fs::remove_file(&off_path).unwrap();
}

#[test]
fn machine_output_is_byte_stable() {
    let input = r#"{"lambda": [0.0, 1.0], "weights": [0.25, 0.75]}"#;
    let first = run_with_stdin(&["reconstruct", "--format", "json"], input);
    let second = run_with_stdin(&["reconstruct", "--format", "json"], input);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    // Entries at full precision: sqrt(0.1875) written with 17 digits.
    assert!(stdout_of(&first).contains("4.3301270189221930e-1"));
}

#[test]
fn bad_input_exits_two() {
    let output = run_with_stdin(
        &["reconstruct"],
        r#"{"lambda": [1.0, 0.0], "weights": [0.5, 0.5]}"#,
    );
    assert_eq!(output.status.code(), Some(2));

    let garbage = run_with_stdin(&["reconstruct"], "not json");
    assert_eq!(garbage.status.code(), Some(2));

    let unknown_flag = bin().args(["faces", "3", "--bogus"]).output().unwrap();
    assert_eq!(unknown_flag.status.code(), Some(2));

    let bad_tol = run_with_stdin(
        &["blowup", "--tol", "-1.0"],
        r#"{"lambda": [0.0, 1.0], "parts": [{"support": [1, 2], "weights": [1.0, 1.0]}]}"#,
    );
    assert_eq!(bad_tol.status.code(), Some(2));
}

#[test]
fn spectrum_rejects_negative_couplings() {
    let output = run_with_stdin(&["spectrum"], r#"{"diag": [0.0, 0.0], "offdiag": [-1.0]}"#);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn file_round_trip_through_out_flag() {
    let dir = std::env::temp_dir().join("isospectral-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let dist_path = dir.join("dist.json");
    let matrix_path = dir.join("matrix.json");
    std::fs::write(
        &dist_path,
        r#"{"lambda": [0.0, 1.0, 2.0], "weights": [0.2, 0.3, 0.5]}"#,
    )
    .unwrap();
    let forward = bin()
        .args([
            "reconstruct",
            dist_path.to_str().unwrap(),
            "--format",
            "json",
            "--out",
            matrix_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(forward.status.success());
    let back = bin()
        .args([
            "spectrum",
            matrix_path.to_str().unwrap(),
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(back.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&back)).unwrap();
    let weights = value["parts"][0]["weights"].as_array().unwrap();
    let expected = [0.2, 0.3, 0.5];
    for (w, e) in weights.iter().zip(expected) {
        assert!((w.as_f64().unwrap() - e).abs() < 1e-9);
    }
    std::fs::remove_file(&dist_path).unwrap();
    std::fs::remove_file(&matrix_path).unwrap();
}
