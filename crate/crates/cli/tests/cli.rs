use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_twistpres"));
    c.current_dir(root());
    for (k, _) in std::env::vars() {
        if k.starts_with("TWISTPRES_") {
            c.env_remove(k);
        }
    }
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_matches_shipped_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "gen",
        "--g",
        "4",
        "--s",
        "1",
        "--kind",
        "twist",
        "--format",
        "json",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    for v in ["full", "reduced"] {
        let name = format!("twist_g4_s1_{v}.json");
        let made = fs::read_to_string(dir.path().join(&name)).unwrap();
        let shipped = fs::read_to_string(root().join("fixtures/catalog").join(&name)).unwrap();
        assert_eq!(made, shipped, "{name}");
    }
}

#[test]
fn gen_to_stdout_single_key() {
    let o = run(&[
        "gen",
        "--g",
        "5",
        "--s",
        "0",
        "--kind",
        "mcg",
        "--variant",
        "uwF",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let shipped = fs::read_to_string(root().join("fixtures/catalog/mcg_g5_s0_uwF.json")).unwrap();
    assert_eq!(stdout(&o), shipped);
}

#[test]
fn gen_other_formats() {
    let gap = stdout(&run(&[
        "gen", "--g", "3", "--s", "1", "--kind", "mcg", "--format", "gap",
    ]));
    assert!(gap.contains("FreeGroup(\"a1\", \"a2\", \"y\")"));
    let magma = stdout(&run(&[
        "gen", "--g", "3", "--s", "1", "--kind", "mcg", "--format", "magma",
    ]));
    assert!(magma.starts_with("// kind=mcg g=3 s=1"));
    let text = stdout(&run(&[
        "gen", "--g", "3", "--s", "1", "--kind", "mcg", "--format", "text",
    ]));
    assert!(text.contains("generators: a1 a2 y"));
    assert!(text.contains("B5: y a1 y^-1 a1"));
}

#[test]
fn reproduce_is_deterministic_and_equal() {
    let args = ["reproduce", "--g", "3..6", "--no-timestamp"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.matches("EQUAL").count(), 4, "{text}");
    assert!(!text.contains("DIFFER"));
    assert!(!text.contains("generated"));
}

#[test]
fn reproduce_json_report() {
    let o = run(&["reproduce", "--g", "3..4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["generated_at"].is_string());
    assert_eq!(v["ok"], true);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["rs_generators"], 5);
    assert_eq!(rows[0]["rs_invariants"]["torsion"][0], 24);
    assert_eq!(rows[1]["verdict"], "EQUAL");
}

#[test]
fn verify_uwf_has_no_failures() {
    let o = run(&[
        "verify",
        "--g",
        "5",
        "--s",
        "0",
        "--kind",
        "mcg",
        "--variant",
        "uwF",
        "--no-timestamp",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS  C4"));
    assert!(text.ends_with("total failures: 0\n"));
}

#[test]
fn verify_flags_a_tampered_relator() {
    let dir = tempfile::tempdir().unwrap();
    let src = fs::read_to_string(root().join("fixtures/catalog/mcg_g4_s1_standard.json")).unwrap();
    let bad = src.replacen("\"y a1 y^-1 a1\"", "\"y a1 y^-1 a2\"", 1);
    assert_ne!(src, bad);
    let path = dir.path().join("bad.json");
    fs::write(&path, bad).unwrap();
    let o = run(&[
        "verify",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--no-timestamp",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total_failures"], 1);
    assert_eq!(v["presentations"][0]["failures"][0], "B5");
    assert!(v.get("generated_at").is_none());
}

#[test]
fn abelianize_text_and_json() {
    let o = run(&[
        "abelianize",
        "--g",
        "4",
        "--s",
        "1",
        "--kind",
        "twist",
        "--variant",
        "reduced",
        "--no-timestamp",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "twist_g4_s1_reduced: Z x Z/2\n");
    let o = run(&[
        "abelianize",
        "--g",
        "3",
        "--s",
        "1",
        "--kind",
        "mcg",
        "--format",
        "json",
        "--no-timestamp",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["presentations"][0]["invariants"]["text"], "Z/2 x Z/2");
}

#[test]
fn check_derivation_shipped_fixtures() {
    let o = run(&["check-derivation", "--no-timestamp"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("13 checked, 0 failed\n"));
}

#[test]
fn check_derivation_reports_a_broken_script() {
    let dir = tempfile::tempdir().unwrap();
    let src = fs::read_to_string(root().join("fixtures/derivations/cbar5_odd.json")).unwrap();
    let bad = src.replacen("\"label\": \"C5\"", "\"label\": \"C3\"", 1);
    assert_ne!(src, bad);
    let path = dir.path().join("broken.json");
    fs::write(&path, bad).unwrap();
    let o = run(&[
        "check-derivation",
        "--script",
        path.to_str().unwrap(),
        "--no-timestamp",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAILED at step 2"));
}

#[test]
fn bare_script_needs_a_presentation() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("s.json");
    fs::write(
        &script,
        r#"{"start": "y a1 y^-1 a1", "end": "1", "steps": [
            {"op": "apply_relator", "label": "B5", "position": 0, "span": 4, "rotation": 0, "inverted": false, "direction": "->"}
        ]}"#,
    )
    .unwrap();
    let o = run(&["check-derivation", "--script", script.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let pres = root().join("fixtures/catalog/mcg_g3_s1_standard.json");
    let o = run(&[
        "check-derivation",
        "--script",
        script.to_str().unwrap(),
        "--input",
        pres.to_str().unwrap(),
        "--no-timestamp",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn rs_output_carries_provenance() {
    let o = run(&["rs", "--g", "3", "--s", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 5);
    assert_eq!(v["meta"]["variant"], "raw");
    let r = &v["relators"][0];
    assert!(r["label"].as_str().unwrap().contains('@'));
    assert!(r["provenance"]["source"].is_string());
    let renamed = stdout(&run(&["rs", "--g", "4", "--s", "1", "--rename"]));
    assert!(renamed.contains("\"e\""));
    assert!(renamed.contains("\"c\""));
}

#[test]
fn shipped_corpus_is_current() {
    let o = run(&["fixtures", "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["gen"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--g", "x"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "gen",
            "--g",
            "3",
            "--s",
            "0",
            "--kind",
            "mcg",
            "--variant",
            "standard"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(run(&["gen", "--g", "4", "--s", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--input", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
    let o = run(&[
        "gen",
        "--g",
        "3",
        "--s",
        "1",
        "--kind",
        "mcg",
        "--variant",
        "uwF",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("variant uwF is not available"));
}

#[test]
fn environment_fills_unset_flags() {
    let o = bin()
        .args(["abelianize", "--no-timestamp"])
        .env("TWISTPRES_G", "4")
        .env("TWISTPRES_S", "1")
        .env("TWISTPRES_KIND", "twist")
        .env("TWISTPRES_VARIANT", "full")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "twist_g4_s1_full: Z x Z/2\n");
    let o = bin()
        .args(["abelianize", "--g", "5", "--no-timestamp"])
        .env("TWISTPRES_G", "4")
        .env("TWISTPRES_S", "1")
        .env("TWISTPRES_KIND", "twist")
        .env("TWISTPRES_VARIANT", "full")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "twist_g5_s1_full: Z/2\n");
    let o = bin()
        .args([
            "abelianize",
            "--g",
            "4",
            "--s",
            "1",
            "--kind",
            "twist",
            "--variant",
            "full",
        ])
        .env("TWISTPRES_NO_TIMESTAMP", "1")
        .output()
        .unwrap();
    assert!(!stdout(&o).contains("generated"));
}
