//! End-to-end tests of the binary: flags, JSON shapes, exit codes and
//! output determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hitchin-fibre"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_smooth_section() {
    let out = run(&["analyze", "--g", "2", "--d", "0", "--ds", "p+q+r+t"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["report"]["branch"], "smooth");
    assert_eq!(v["report"]["fibre_dim"], 3);
    assert_eq!(v["report"]["connected"], true);
}

#[test]
fn analyze_reducible_with_strata() {
    let out = run(&[
        "analyze",
        "--g",
        "2",
        "--d",
        "2",
        "--ds",
        "2p+2q",
        "--reducible",
        "--emit-strata",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["report"]["branch"], "reducible");
    assert!(v["strata"].as_array().is_some_and(|s| !s.is_empty()));
}

#[test]
fn analyze_accepts_request_file() {
    let dir = std::env::temp_dir().join("hitchin-fibre-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("request.json");
    std::fs::write(
        &path,
        r#"{
          "base": {"g": 3, "d": 1},
          "section": {"d_s": {"points": [{"label": "p", "mult": 4}]}}
        }"#,
    )
    .unwrap();
    let out = run(&["analyze", "--json", path.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = stdout_json(&out);
    assert_eq!(v["report"]["branch"], "irreducible_singular");
    assert_eq!(v["report"]["fibre_dim"], 4);
}

#[test]
fn analyze_rejects_malformed_json() {
    let dir = std::env::temp_dir().join("hitchin-fibre-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = run(&["analyze", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).expect("error JSON");
    assert!(err["error"].as_str().is_some());
}

#[test]
fn analyze_reports_validation_path() {
    let out = run(&["analyze", "--g", "1", "--d", "0", "--ds", "2p"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).expect("error JSON");
    assert_eq!(err["path"], "base.g");

    let out = run(&["analyze", "--g", "2", "--d", "0", "--dl", "3", "--ds", "2p"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).expect("error JSON");
    assert_eq!(err["path"], "base.d_l");
}

#[test]
fn strata_table_shape() {
    let out = run(&["strata", "--g", "2", "--d", "2", "--dprime", "2p"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let rows = v["strata"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(v["max_dim"], 3);
    assert_eq!(v["graph"]["connected"], true);
    // deterministic output for identical input
    let again = run(&["strata", "--g", "2", "--d", "2", "--dprime", "2p"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn strata_accepts_json_divisor() {
    let out = run(&[
        "strata",
        "--g",
        "2",
        "--d",
        "1",
        "--dprime",
        r#"{"points":[{"label":"p","mult":1},{"label":"q","mult":1}]}"#,
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["strata"]
        .as_array()
        .unwrap()
        .iter()
        .all(|row| row["d_compact"] != "0"));
}

#[test]
fn verify_example_passes() {
    for extra in [&[][..], &["--case2"][..]] {
        let mut args = vec!["verify-example", "--m", "4"];
        args.extend_from_slice(extra);
        let out = run(&args);
        assert!(out.status.success());
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.starts_with("PASS\n"));
    }
    let out = run(&["verify-example", "--m", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify-example", "--m", "6", "--case2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn roundtrip_is_seeded_and_clean() {
    let out = run(&["roundtrip", "--seed", "42", "--trials", "40"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["trials"], 40);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let again = run(&["roundtrip", "--seed", "42", "--trials", "40"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn sweep_matrix_is_all_pass() {
    let out = run(&["sweep"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 9);
    assert!(lines.iter().all(|l| l.starts_with("PASS")));
}
