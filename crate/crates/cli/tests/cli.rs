//! End-to-end checks of the binary: exit codes, output formats, determinism,
//! and the classification behaving as an equivalence relation on scenario
//! output.

use std::process::Command;

use corkcalc_cli::scenario::{self, PieceFlavor, ScenarioOptions};
use corkcalc_core::fourmanifold::{homeo_classify, Verdict};
use corkcalc_core::swalgebra::ParityConvention;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cork-calculus"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn scenarios_are_deterministic_byte_for_byte() {
    for args in [
        vec!["scenario", "disjoint-corks", "--p-list", "2,4"],
        vec!["scenario", "knotting-corks", "--n", "2", "--knots", "torus:1,2"],
        vec!["scenario", "involutions", "--p-list", "3,5", "--parity", "standard"],
        vec!["scenario", "two-path", "--p-list", "2,3"],
        vec!["scenario", "disjoint-plugs", "--p-list", "2,4", "--format", "json"],
    ] {
        let first = run_ok(&args);
        let second = run_ok(&args);
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("corkcalc-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let stdout = run_ok(&["scenario", "two-path", "--p-list", "2", "--format", "json"]);
    let piped = bin()
        .args(["scenario", "two-path", "--p-list", "2", "--format", "json", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(piped.status.success());
    assert!(piped.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn json_reports_parse_and_embed_records() {
    let raw = run_ok(&["scenario", "disjoint-corks", "--p-list", "2,4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&raw).unwrap();
    assert_eq!(v["scenario"], "disjoint-corks");
    assert_eq!(v["passed"], true);
    let records = v["records"].as_array().unwrap();
    // base, intermediates and finals are all present
    for label in ["E(6)", "Y0", "Y1'", "Y1", "Y2'", "Y2"] {
        assert!(records.iter().any(|r| r["label"] == label), "missing record {label} in {raw}");
    }
    // record serialization carries the invariant fields
    let y0 = records.iter().find(|r| r["label"] == "Y0").unwrap();
    assert_eq!(y0["record"]["e"], 74);
    assert_eq!(y0["record"]["sigma"], -50);
    assert_eq!(y0["record"]["sw"]["state"], "set");
}

#[test]
fn failure_exit_codes() {
    let out = bin().args(["scenario", "no-such-scenario"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["scenario", "disjoint-corks", "--p-list", "1,4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["homology", "/definitely/not/a/file.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["sw", "beta", "--n", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn duplicate_orders_warn_but_proceed() {
    let text = run_ok(&["scenario", "disjoint-corks", "--p-list", "2,2"]);
    assert!(text.contains("equal orders"), "{text}");
    assert!(text.contains("Y1 / Y2: homeomorphic"));
    // equal counts: the comparison cannot separate them
    assert!(text.contains("SW equal (24 vs 24 classes)"), "{text}");
    assert!(text.contains("result: PASS"));
}

#[test]
fn single_knot_family_has_two_members() {
    let text = run_ok(&["scenario", "knotting-corks", "--n", "2", "--knots", "torus:1"]);
    assert!(text.contains("X0 / X1"));
    assert!(text.contains("distinct_by_count (0 vs 6 classes)"));
    assert!(text.contains("result: PASS"));
}

#[test]
fn homology_json_is_well_formed() {
    let dir = std::env::temp_dir().join("corkcalc-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b2.json");
    std::fs::write(
        &path,
        r#"{"name":"B2","one_handles":1,"two_handles":[{"framing":1,"linking":[0],"over":[2]}],"three_handles":0}"#,
    )
    .unwrap();
    let raw = run_ok(&["homology", path.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&raw).unwrap();
    assert_eq!(v["h1"]["torsion"][0], "2");
    assert_eq!(v["boundary_h1"]["torsion"][0], "4");
}

#[test]
fn classification_is_an_equivalence_relation_on_scenario_records() {
    let opt = ScenarioOptions { convention: ParityConvention::Paper };
    let knots = corkcalc_cli::knot_input::parse_knots("torus:1,2").unwrap();
    let mut records = Vec::new();
    for report in [
        scenario::disjoint(PieceFlavor::Cork, &[2, 4], opt).unwrap(),
        scenario::knotting(PieceFlavor::Cork, 2, &knots, opt).unwrap(),
        scenario::two_path(&[2, 3], opt).unwrap(),
    ] {
        records.extend(report.records.into_iter().map(|e| e.record));
    }
    let verdict = |a: &corkcalc_core::ClosedRecord, b: &corkcalc_core::ClosedRecord| {
        homeo_classify(a, b).unwrap().verdict
    };
    // all scenario records live on indefinite forms, so the verdict is total
    for a in &records {
        assert_eq!(verdict(a, a), Verdict::Homeomorphic);
    }
    for a in &records {
        for b in &records {
            assert_eq!(verdict(a, b), verdict(b, a));
        }
    }
    for a in &records {
        for b in &records {
            if verdict(a, b) != Verdict::Homeomorphic {
                continue;
            }
            for c in &records {
                if verdict(b, c) == Verdict::Homeomorphic {
                    assert_eq!(verdict(a, c), Verdict::Homeomorphic);
                }
            }
        }
    }
}
