use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn gpd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpd"))
        .args(args)
        .output()
        .expect("gpd runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap()
}

#[test]
fn build_matches_goldens() {
    let cases: [(&[&str], &str); 4] = [
        (&["build", "pair", "2"], "pair2.json"),
        (&["build", "cyclic", "1"], "trivial.json"),
        (&["build", "cyclic", "2"], "c2.json"),
        (&["build", "cyclic", "3"], "c3.json"),
    ];
    for (args, file) in cases {
        let out = gpd(args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), golden(file), "{args:?}");
    }
}

#[test]
fn build_transform_matches_golden() {
    let action = data("c2_swap_action.json");
    let out = gpd(&["build", "transform", action.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), golden("transform_c2_swap.json"));
}

#[test]
fn build_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    let out = gpd(&["-o", path.to_str().unwrap(), "build", "pair", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("pair2.json")
    );
}

#[test]
fn validate_exit_codes() {
    let ok = gpd(&["validate", data("c3.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["valid"], true);

    let bad = gpd(&["validate", data("c3_tampered.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    let v = json(&bad);
    assert_eq!(v["valid"], false);
    let assoc = v["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|a| a["axiom"] == "associativity")
        .unwrap();
    assert_eq!(assoc["status"], "fail");
    assert_eq!(assoc["witness"], serde_json::json!([1, 1, 2]));

    let missing = gpd(&["validate", data("no-such-file.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error:"));
}

#[test]
fn malformed_input_is_operational() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{\"size\": 2").unwrap();
    assert_eq!(
        gpd(&["validate", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(gpd(&["search", "--ordr", "2"]).status.code(), Some(2));
    assert_eq!(gpd(&["rep", "C2", "--map", "1,x"]).status.code(), Some(2));
}

#[test]
fn verify_all_on_c2() {
    let out = gpd(&["verify", "C2", "--props", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["idempotents"], serde_json::json!([0, 1, 2]));
    assert_eq!(v["right_zeros"], serde_json::json!([1, 2]));
    assert_eq!(v["unit_group"]["indices"], serde_json::json!([0, 3]));
    let verdicts = v["verdicts"].as_object().unwrap();
    assert!(verdicts.len() >= 19);
    assert!(verdicts.values().all(|x| x["pass"] == true));
}

#[test]
fn verify_selected_prop_only() {
    let out = gpd(&[
        "verify",
        data("pair2.json").to_str().unwrap(),
        "--props",
        "P3.3.4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let keys: Vec<&String> = v["verdicts"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["P3.3.4"]);
    assert_eq!(
        gpd(&["verify", "C2", "--props", "P9.9"]).status.code(),
        Some(2)
    );
}

#[test]
fn cap_exceeded_exits_two() {
    let out = gpd(&["--cap-monoid", "10", "verify", "C3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds cap"));
    let out = gpd(&["--cap-order", "3", "search", "--order", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn monoid_sizes() {
    for (g, n) in [("C3", 27), ("pair(2)", 16), ("unit(2)", 1)] {
        for side in ["S", "S'"] {
            let out = gpd(&["monoid", g, "--side", side]);
            assert_eq!(out.status.code(), Some(0));
            let v = json(&out);
            assert_eq!(v["elements"].as_array().unwrap().len(), n, "{g} {side}");
            assert_eq!(v["op"].as_array().unwrap().len(), n);
        }
    }
}

#[test]
fn rep_swap_matrix() {
    let out = gpd(&["rep", "C2", "--map", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["fn"], serde_json::json!([1, 1]));
    assert_eq!(v["matrix"], serde_json::json!([[0, 1], [1, 0]]));

    // [1,0] sends e to a, and a·a⁻¹ = e ≠ d(a)
    let out = gpd(&["rep", "unit(2)", "--map", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn rep_audit_passes() {
    for g in ["C2", "C3", "pair(2)"] {
        let out = gpd(&["rep", g, "--audit"]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        assert_eq!(v["pass"], true, "{g}");
        assert_eq!(v["transpose_right_action"], true);
    }
}

#[test]
fn search_small_orders() {
    let out = gpd(&["search", "--order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["entries"].as_array().unwrap().len(), 1);
    assert_eq!(v["conclusion"], "no counterexample up to order 1");

    let dir = tempfile::tempdir().unwrap();
    let out = gpd(&[
        "search",
        "--order",
        "2",
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["forward_holds"], true);
    assert!(v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["candidate"] == false));
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest-2.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["count"], 2);
    for name in manifest["names"].as_array().unwrap() {
        let path = dir.path().join(format!("{}.json", name.as_str().unwrap()));
        assert_eq!(
            gpd(&["validate", path.to_str().unwrap()]).status.code(),
            Some(0)
        );
    }
}

#[test]
fn stream_mode_on_small_monoid() {
    let out = gpd(&[
        "monoid",
        "C3",
        "--stream",
        "--triples",
        "2000",
        "--seed",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let runs: [&[&str]; 3] = [
        &["verify", "pair(2)"],
        &["search", "--order", "4"],
        &["rep", "C3", "--audit"],
    ];
    for args in runs {
        assert_eq!(gpd(args).stdout, gpd(args).stdout, "{args:?}");
    }
}
