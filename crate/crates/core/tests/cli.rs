use std::process::Command;

fn racah(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_racah"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn normalize_prints_the_normal_form() {
    let (code, out, _) = racah(&["normalize", "B*A"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "-2 D + A B");
    let (_, out, _) = racah(&["normalize", "{A,B}"]);
    assert_eq!(out.trim(), "-2 D + 2 A B");
    let (_, out, _) = racah(&["normalize", "[A,B] - 2*D"]);
    assert_eq!(out.trim(), "0");
    let (_, out, _) = racah(&["normalize", "OmegaA", "--format", "latex"]);
    assert_eq!(out.trim(), "\\Omega_A");
}

#[test]
fn structured_output_parses_as_one_document() {
    let (code, out, _) = racah(&["normalize", "B A", "--format", "structured"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["verb"], "normalize");
    assert_eq!(doc["result"].as_array().unwrap().len(), 2);

    let (code, out, _) = racah(&["verify", "--suite", "homomorphism", "--format", "structured"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["suites"][0]["suite"], "homomorphism");
}

#[test]
fn embed_and_grade_agree_on_generators() {
    let (code, out, _) = racah(&["embed", "A"]);
    assert_eq!(code, 0);
    assert!(out.contains('⊗'));
    let (code, out, _) = racah(&["grade", "e f - f e - h"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0");
    let (_, out, _) = racah(&["grade", "1 ox e + f"]);
    let degrees: Vec<&str> = out.lines().map(|l| l.split(':').next().unwrap()).collect();
    assert_eq!(degrees, ["degree -1", "degree 1"]);
}

#[test]
fn eval_prints_matrices() {
    let (code, out, _) = racah(&["eval", "Lambda", "--dims", "2,3"]);
    assert_eq!(code, 0);
    assert!(out.contains("d = 2"));
    assert!(out.contains("3/4 0"));
    assert!(out.contains("2 0 0"));
}

#[test]
fn certify_small_caps() {
    let (code, out, _) = racah(&["certify", "--caps", "1,1,1,0,0,0,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("dimension 8, rank 8"), "{out}");
    let (code, out, _) = racah(&["certify", "--caps", "1,1,1,0,0,0,0", "--format", "structured"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["rank"], 8);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["normalize", "A +"][..],
        &["normalize", "Q"],
        &["verify", "--suite", "unknown"],
        &["certify", "--caps", "1,1"],
        &["certify", "--caps", "9,1,9,9,9,9,9"],
        &["eval", "A", "--dims", "0"],
        &["frobnicate"],
    ] {
        let (code, _, err) = racah(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_selected_suites_pass() {
    for suite in ["commutators", "pbw", "structural", "rewrite-rules", "casimir-images", "centrality"] {
        let (code, out, _) = racah(&["verify", "--suite", suite]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains(&format!("suite {suite}:")));
    }
}
