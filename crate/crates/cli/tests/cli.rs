use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta-dims"))
        .args(args)
        .env_remove("THETA_DIMS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn dimension(args: &[&str]) -> u64 {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&full)).unwrap();
    v["dimension"].as_u64().unwrap()
}

#[test]
fn dims_examples() {
    let chartab = ["dims", "--group", "sl2:5", "--module", "group-algebra", "--parity", "even", "--method", "chartab", "--convention", "flip"];
    assert_eq!(dimension(&chartab), 27);
    assert_eq!(dimension(&["dims", "--group", "cyclic:6", "--module", "aug-kernel", "--parity", "odd", "--method", "perm"]), 3);
    assert_eq!(dimension(&["dims", "--group", "cyclic:9", "--module", "group-algebra", "--parity", "odd", "--method", "closed-form"]), 12);
}

#[test]
fn dims_methods_agree_on_small_groups() {
    for method in ["perm", "orbit", "reynolds", "closed-form"] {
        assert_eq!(dimension(&["dims", "--group", "cyclic:7", "--parity", "odd", "--method", method]), 8, "{method}");
    }
    assert_eq!(dimension(&["dims", "--group", "cyclic:8", "--module", "aug-kernel", "--parity", "even", "--method", "reynolds"]), 2);
    assert_eq!(
        dimension(&["dims", "--group", "sl2:5", "--parity", "odd", "--method", "chartab", "--symmetry", "pi-pi"]),
        71
    );
}

#[test]
fn convention_defaults_are_reported() {
    let v: Value = serde_json::from_str(&stdout(&["dims", "--group", "sl2:5", "--parity", "odd", "--method", "chartab", "--format", "json"])).unwrap();
    assert_eq!(v["convention"], "flip");
    assert_eq!(v["convention_source"], "default");
    assert_eq!(v["breakdown"]["diagonal"], "71");
    assert_eq!(v["breakdown"]["tau"], "59");
    let v: Value = serde_json::from_str(&stdout(&["dims", "--group", "cyclic:4", "--parity", "odd", "--format", "json"])).unwrap();
    assert_eq!(v["convention"], "inversion");
    let text = stdout(&["dims", "--group", "cyclic:4", "--parity", "odd"]);
    assert!(text.contains("convention: inversion (default)"), "{text}");
}

#[test]
fn lens_table_rows() {
    let csv = stdout(&["lens-table", "--max-n", "15", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,odd_group_algebra,even_group_algebra,odd_aug_kernel,even_aug_kernel");
    assert_eq!(lines.len(), 16);
    assert_eq!(lines[6], "6,7,1,3,1");
    assert_eq!(lines[14], "14,24,10,16,10");
    assert_eq!(stdout(&["lens-table", "--max-n", "1", "--format", "csv"]).lines().nth(1), Some("1,1,0,0,0"));
    let checked = stdout(&["lens-table", "--max-n", "12", "--cross-check"]);
    assert!(checked.contains("agree on all 12 rows"), "{checked}");
}

#[test]
fn json_round_trips_byte_identically() {
    let cases: [&[&str]; 5] = [
        &["dims", "--group", "sl2:5", "--parity", "even", "--method", "chartab", "--format", "json"],
        &["lens-table", "--max-n", "15", "--cross-check", "--format", "json"],
        &["classes", "--group", "sl2:5", "--format", "json"],
        &["verify", "conventions", "--format", "json"],
        &["verify", "fixtures", "--format", "json"],
    ];
    for args in cases {
        let first = stdout(args);
        let parsed: Value = serde_json::from_str(&first).unwrap();
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", first, "{args:?}");
        assert_eq!(stdout(args), first, "{args:?} is not deterministic");
    }
}

#[test]
fn classes_listing() {
    let v: Value = serde_json::from_str(&stdout(&["classes", "--group", "sl2:5", "--format", "json"])).unwrap();
    let classes = v["classes"].as_array().unwrap();
    let sizes: Vec<u64> = classes.iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, [1, 1, 30, 20, 20, 12, 12, 12, 12]);
    let p2: Vec<&str> = classes.iter().map(|c| c["power2"].as_str().unwrap()).collect();
    assert_eq!(p2, ["I", "I", "-I", "beta", "beta", "gamma'", "gamma", "gamma'", "gamma"]);
    assert_eq!(v["inversion_orbits"], 9);

    let csv = stdout(&["classes", "--group", "cyclic:4", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 5);
    let v: Value = serde_json::from_str(&stdout(&["classes", "--group", "cyclic:4", "--format", "json"])).unwrap();
    assert!(v["classes"].as_array().unwrap().iter().all(|c| c["size"] == 1));
    assert_eq!(v["inversion_orbits"], 3);
}

#[test]
fn cayley_file_input() {
    // Z_2 x Z_2 as a Cayley table
    let path = scratch("klein.json", r#"{"order": 4, "mul": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#);
    let group = format!("cayley:{}", path.display());
    let perm = dimension(&["dims", "--group", &group, "--parity", "odd"]);
    let orbit = dimension(&["dims", "--group", &group, "--parity", "odd", "--method", "orbit"]);
    assert_eq!(perm, orbit);

    let bad = scratch("bad.json", r#"{"order": 2, "mul": [[0,1],[1,1]]}"#);
    let out = run(&["classes", "--group", &format!("cayley:{}", bad.display())]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn character_table_file_input() {
    let table = theta_dims::chartab::CharTable::builtin_sl2f5();
    let path = scratch("sl2f5_table.json", &table.to_json());
    let file = path.to_str().unwrap();
    assert_eq!(
        dimension(&["dims", "--group", "sl2:5", "--module", "aug-kernel", "--parity", "odd", "--method", "chartab", "--table", file]),
        56
    );
    // table for a group of a different order
    let out = run(&["dims", "--group", "cyclic:5", "--parity", "odd", "--method", "chartab", "--table", file]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validation_errors_exit_2() {
    let cases: [&[&str]; 7] = [
        &["dims", "--group", "cyclic:5", "--parity", "odd", "--convention", "flip"],
        &["dims", "--group", "sl2:5", "--parity", "odd", "--method", "closed-form"],
        &["dims", "--group", "cyclic:5", "--parity", "odd", "--method", "chartab"],
        &["dims", "--group", "cyclic:5", "--module", "aug-kernel", "--parity", "odd", "--method", "orbit"],
        &["dims", "--group", "cyclic:13", "--parity", "odd", "--method", "reynolds"],
        &["dims", "--group", "dihedral:4", "--parity", "odd"],
        &["dims", "--group", "sl2:4", "--parity", "odd"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(run(&["lens-table", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn reynolds_guard_can_be_raised() {
    let args = ["dims", "--group", "cyclic:13", "--parity", "even", "--method", "reynolds", "--reynolds-max-order", "13"];
    assert_eq!(dimension(&args), 8);
}

#[test]
fn verify_failure_exits_1_with_counterexample() {
    let mut fixture = theta_dims::group::Sl2Fixture::builtin();
    fixture.elements[0].class = "c4".into();
    let path = scratch("bad_fixture.json", &fixture.to_json());
    let out = run(&["verify", "fixtures", "--fixture", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("g1") && err.contains("c4"), "{err}");
}

#[test]
fn verify_conventions_report() {
    let text = stdout(&["verify", "conventions"]);
    for needle in ["A_2    2       -1", "not compared", "0 failed"] {
        assert!(text.contains(needle), "missing {needle:?} in\n{text}");
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let args = ["dims", "--group", "sl2:3", "--module", "aug-kernel", "--parity", "odd", "--format", "json"];
    let base = stdout(&args);
    for threads in ["1", "3"] {
        let out = Command::new(env!("CARGO_BIN_EXE_theta-dims"))
            .args(args)
            .env("THETA_DIMS_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), base);
    }
}
