use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

#[test]
fn chartable_of_s3_has_degrees_1_1_2() {
    let out = run(&["chartable", "--group", "catalog:symmetric(3)"]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["degrees"], serde_json::json!([1, 1, 2]));
    assert_eq!(j["class_sizes"].as_array().unwrap().len(), 3);
}

#[test]
fn obstruction_of_cyclic3_in_sl2_has_rank_one() {
    let out = run(&[
        "obstruction",
        "--group",
        "catalog:cyclic(3)",
        "--rep",
        "catalog:sl2",
        "--tuple",
        "g,g",
    ]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["rank"], 1);
    assert_eq!(j["centralizer_order"], 3);
}

#[test]
fn verify_all_on_q8_passes() {
    let out = run(&[
        "verify",
        "--all",
        "--group",
        "catalog:quaternion8",
        "--rep",
        "catalog:sl2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let j = stdout_json(&out);
    assert_eq!(j["passed"], true);
    let names: Vec<&str> = j["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["check"].as_str().unwrap())
        .collect();
    for want in ["fw", "nonnegativity", "v-identities", "riemann-roch"] {
        assert!(names.contains(&want), "missing {want} in {names:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["k-ring", "--group", "catalog:dihedral(4)", "--rep", "zero"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn user_errors_exit_1_with_json() {
    let out = run(&["chartable", "--group", "catalog:nonsense"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"]["kind"], "unknown_catalog");

    let out = run(&[
        "chartable",
        "--group",
        "catalog:symmetric(3)",
        "--frobnicate",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"]["kind"], "usage");

    let out = run(&[
        "character-values-are-not-a-command",
        "--group",
        "catalog:symmetric(3)",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_character_is_rejected() {
    let rep = r#"{"kind":"character","values_by_class":["2","5","0"]}"#;
    let out = run(&["chow-ring", "--group", "catalog:symmetric(3)", "--rep", rep]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pairing_needs_zero_representation() {
    let out = run(&[
        "eta",
        "--group",
        "catalog:cyclic(2)",
        "--rep",
        "catalog:sl2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["eta", "--group", "catalog:cyclic(2)", "--mode", "k"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["symmetric"], true);
}

#[test]
fn size_cap_is_reported() {
    let out = run(&[
        "k-ring",
        "--group",
        "catalog:symmetric(4)",
        "--table-cap",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr_json(&out)["error"]["kind"], "size_cap");
}

#[test]
fn config_file_drives_a_job() {
    let dir = std::env::temp_dir().join(format!("orbring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let job = dir.join("job.json");
    let result = dir.join("out.json");
    let body = serde_json::json!({
        "group": {"kind": "perm", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]},
        "rep": {"kind": "catalog_rep", "name": "std"},
        "command": "verify",
        "checks": ["associativity", "fw"],
        "output": result.to_str().unwrap(),
    });
    std::fs::write(&job, body.to_string()).unwrap();
    let out = run(&["--config", job.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let j: Value = serde_json::from_str(&std::fs::read_to_string(&result).unwrap()).unwrap();
    assert_eq!(j["passed"], true);
    assert_eq!(j["group_order"], 6);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn logtrace_of_rotation_in_sl2() {
    let out = run(&[
        "logtrace",
        "--group",
        "catalog:cyclic(4)",
        "--rep",
        "catalog:sl2",
        "--element",
        "g",
    ]);
    assert!(out.status.success());
    let j = stdout_json(&out);
    assert_eq!(j["age"], "1");
    assert_eq!(j["integral"], false);
}

#[test]
fn supplied_table_lifts_the_size_cap() {
    let dir = std::env::temp_dir().join(format!("orbring-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let job = dir.join("job.json");
    let body = serde_json::json!({
        "group": "catalog:cyclic(3)",
        "command": "chartable",
        "caps": {"table": 1},
        "character_table": [["1", "1", "1"], ["1", "E(3)", "E(3)^2"], ["1", "E(3)^2", "E(3)"]],
    });
    std::fs::write(&job, body.to_string()).unwrap();
    let out = run(&["--config", job.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout_json(&out)["degrees"], serde_json::json!([1, 1, 1]));

    let bad = serde_json::json!({
        "group": "catalog:cyclic(3)",
        "command": "chartable",
        "character_table": [["1", "1", "1"], ["1", "1", "1"], ["1", "E(3)^2", "E(3)"]],
    });
    std::fs::write(&job, bad.to_string()).unwrap();
    let out = run(&["--config", job.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}
