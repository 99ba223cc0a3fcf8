//! End-to-end runs of the `penrose` binary.

use std::process::{Command, Output};

use penrose::io::import_json;

fn penrose(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_penrose"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

#[test]
fn headline_verify_exits_zero() {
    let o = penrose(&[
        "verify",
        "--lambda",
        "2,3",
        "--center",
        "0,0,0,0,0",
        "--inner-radius2",
        "9",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["failures"], serde_json::json!([]));
    assert_eq!(doc["center"], serde_json::json!([0, 0, 0, 0, 0]));
    assert!(doc["points_tested"].as_u64().unwrap() > 0);
}

#[test]
fn verify_with_lookup_cross_check() {
    let o = penrose(&[
        "verify",
        "--lambda=-1,-1",
        "--inner-radius2",
        "9",
        "--lookup",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn uncertified_center_is_a_usage_error() {
    let o = penrose(&[
        "verify",
        "--lambda",
        "2,3",
        "--center",
        "5,-5,5,-5,0",
        "--inner-radius2",
        "9",
    ]);
    assert_eq!(code(&o), 2);
    let o = penrose(&[
        "verify",
        "--lambda",
        "2,3",
        "--center",
        "1,0,0,0,0",
        "--inner-radius2",
        "9",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn both_methods_agree() {
    let o = penrose(&["generate", "--radius2", "64", "--method", "both"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn factors_output() {
    let o = penrose(&["factors", "--k-range", "-30:30", "--m-range", "-30:30"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("(2,3)"));
    assert!(text.lines().next().unwrap().starts_with("(-1,-1)\t"));
    let o = penrose(&["factors", "--k-range", "1:0", "--m-range", "0:0"]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
}

#[test]
fn json_file_round_trip_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("patch.json");
    let o = penrose(&[
        "generate",
        "--radius2",
        "25",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let patch = import_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!patch.faces().is_empty());
    let csv = penrose(&["generate", "--radius2", "25", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().count(), patch.len());
    assert!(text.lines().all(|l| l.split(',').count() == 8));
}

#[test]
fn svg_face_count_matches_generator() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.svg");
    let o = penrose(&["svg", "--radius2", "100", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let svg = std::fs::read_to_string(&path).unwrap();
    let json = penrose(&["generate", "--radius2", "100"]);
    let patch = import_json(std::str::from_utf8(&json.stdout).unwrap()).unwrap();
    assert_eq!(svg.matches("<polygon").count(), patch.faces().len());
}

#[test]
fn non_generic_offset_exits_three() {
    assert_eq!(
        code(&penrose(&["generate", "--radius2", "9", "--offset", "0"])),
        3
    );
    let o = penrose(&["audit", "--radius2", "9", "--offset", "0"]);
    assert_eq!(code(&o), 3);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!doc["boundary_hits"].as_array().unwrap().is_empty());
    assert_eq!(code(&penrose(&["audit", "--radius2", "9"])), 0);
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(code(&penrose(&["generate", "--radius2", "x"])), 2);
    assert_eq!(
        code(&penrose(&["centers", "--lambda", "1,0", "--radius2", "4"])),
        2
    );
    assert_eq!(
        code(&penrose(&["generate", "--radius2", "4", "--offset", "1,2"])),
        2
    );
}

#[test]
fn centers_include_origin() {
    let o = penrose(&["centers", "--lambda", "2,3", "--radius2", "16"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ys: Vec<&serde_json::Value> = doc["centers"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| &c["y"])
        .collect();
    assert!(ys.contains(&&serde_json::json!([0, 0, 0, 0, 0])));
}
