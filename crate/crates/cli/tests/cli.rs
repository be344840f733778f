mod common;

use common::{fixture, rectilt, strings};

#[test]
fn algebra_info_echoes_basis() {
    let (code, v, _) = rectilt(&["algebra", "info", &fixture("lambda.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 11);
    assert_eq!(v["basis"].as_array().unwrap().len(), 11);
}

#[test]
fn algebra_check_passes_on_all_fixtures() {
    for f in [
        "lambda.json",
        "lambda_prime.json",
        "lambda_dprime.json",
        "product.json",
        "mutated.json",
    ] {
        let (code, v, _) = rectilt(&["algebra", "check", &fixture(f)]);
        assert_eq!(code, 0, "{f}");
        assert_eq!(v["associative"], true);
    }
}

#[test]
fn module_commands() {
    let lam = fixture("lambda.json");
    let (code, v, _) = rectilt(&["module", "hom", &lam, "P(1)", "P(3)"]);
    assert_eq!((code, v["dim"].as_u64()), (0, Some(1)));
    let (code, v, _) = rectilt(&["module", "ext", &lam, "S(4)", "S(5)"]);
    assert_eq!((code, v["dim"].as_u64()), (0, Some(1)));
    let (code, v, _) = rectilt(&["module", "ext", &lam, "S(3)", "S(2)", "--degree", "2"]);
    assert_eq!((code, v["dim"].as_u64()), (0, Some(1)));
    let (code, v, _) = rectilt(&["module", "decompose", &lam, "T_case1"]);
    assert_eq!((code, v["count"].as_u64()), (0, Some(5)));
    let (code, v, _) = rectilt(&["module", "iso", &lam, "P(4)", "(S2,P4)"]);
    assert_eq!((code, v["isomorphic"].as_bool()), (0, Some(true)));
    let (code, v, _) = rectilt(&["module", "iso", &lam, "P(4)", "(0,P4)"]);
    assert_eq!((code, v["isomorphic"].as_bool()), (1, Some(false)));
}

#[test]
fn module_files_resolve_relative_to_the_algebra() {
    let (code, v, _) = rectilt(&[
        "module",
        "iso",
        &fixture("lambda.json"),
        "modules/s2_p4.json",
        "P(4)",
    ]);
    assert_eq!((code, v["isomorphic"].as_bool()), (0, Some(true)));
}

#[test]
fn tilting_check_and_gate() {
    let lam = fixture("lambda.json");
    let (code, v, _) = rectilt(&["tilting", "check", &lam, "T_case1"]);
    assert_eq!(code, 0);
    assert_eq!(v["is_tilting"], true);
    let (code, v, _) = rectilt(&["tilting", "check", &lam, "T_not_tilting"]);
    assert_eq!(code, 1);
    assert_eq!(v["is_tilting"], false);
    let (code, v, err) = rectilt(&["torsion", "partition", &lam, "T_not_tilting"]);
    assert_eq!(code, 2);
    assert!(v["message"].as_str().unwrap().contains("not tilting"));
    assert!(err.contains("not tilting"));
}

#[test]
fn torsion_decompose_and_partition_with_roster_file() {
    let lam = fixture("lambda.json");
    let dir = std::env::temp_dir().join(format!("rectilt-roster-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let roster = dir.join("roster.json");
    let (code, _, _) = rectilt(&["ar", "roster", &lam, "-o", roster.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, v, _) = rectilt(&[
        "torsion",
        "partition",
        &lam,
        "T_case1",
        "--roster",
        roster.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["free"], 1);
    let (code, v, _) = rectilt(&["torsion", "decompose", &lam, "T_case1", "P(2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["torsion_part_in_gen"], true);
    assert_eq!(v["free_part_in_perp"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn rec_apply_functors() {
    let lam = fixture("lambda.json");
    let (code, v, _) = rectilt(&["rec", "apply", &lam, "--outer", "3,4,5", "j_!", "P(4)"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["label"], "(S2,P4)");
    let (code, v, _) = rectilt(&["rec", "apply", &lam, "--outer", "3,4,5", "i*", "(S2,P4)"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["label"], serde_json::Value::Null);
    assert_eq!(v["output"]["dims"]["2"], 0);
    let (code, _, _) = rectilt(&["rec", "apply", &lam, "--outer", "3,4,5", "k*", "P(4)"]);
    assert_eq!(code, 2);
}

#[test]
fn input_errors_exit_two() {
    let lam = fixture("lambda.json");
    let (code, v, _) = rectilt(&["tilting", "check", &lam, "NoSuchModule"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "invalid_input");
    let (code, v, _) = rectilt(&["rec", "split", &lam, "--outer", "1,2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "not_triangular");
    let bad = std::env::temp_dir().join(format!("rectilt-bad-{}.json", std::process::id()));
    std::fs::write(&bad, "{\"vertices\": [\"1\",").unwrap();
    let (code, v, _) = rectilt(&["algebra", "info", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(v["message"].as_str().unwrap().contains("line"));
    std::fs::remove_file(&bad).ok();
    let (code, _, _) = rectilt(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn restrict_left_reports_unverified_hypothesis() {
    let (code, v, _) = rectilt(&[
        "rec",
        "restrict",
        &fixture("lambda.json"),
        "--outer",
        "3,4,5",
        "--tilting",
        "T_case1",
        "--side",
        "left",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["hypotheses_hold"], false);
    assert!(strings(&v["hypothesis_failures"])
        .iter()
        .any(|s| s.contains("i^*")));
}
