use std::fs;
use std::path::Path;
use std::process::Command;

use dynamo_cli::audit::{replay, run_audit, AuditConfig, Check};
use serde_json::Value;

fn dynamo(dir: &Path, args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_dynamo"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exit code");
    let doc = if out.stdout.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&out.stdout).expect("stdout is JSON")
    };
    (code, doc)
}

fn p4(dir: &Path) {
    fs::write(dir.join("p4.txt"), "# path on four vertices\n4 3\n0 1\n1 2\n2 3\n").unwrap();
}

#[test]
fn gn_bounds_report() {
    let dir = tempfile::tempdir().unwrap();
    let (code, gen) = dynamo(dir.path(), &["gen", "--family", "gn", "--n", "2", "--out", "g.txt", "--thresholds-out", "t.txt"]);
    assert_eq!(code, 0);
    assert_eq!(gen["m"], 6);
    let (code, report) = dynamo(dir.path(), &["bounds", "--graph", "g.txt", "--thresholds", "file:t.txt"]);
    assert_eq!(code, 0);
    assert_eq!(report["context"]["m"], 6);
    assert_eq!(report["context"]["average_threshold"], "3/2");
    assert!(!report["lower_bounds"].as_array().unwrap().is_empty());
    assert!(!report["upper_bounds"].as_array().unwrap().is_empty());
    assert!(report["best_upper"].is_string());
}

#[test]
fn find_exact_on_p4() {
    let dir = tempfile::tempdir().unwrap();
    p4(dir.path());
    let (code, doc) = dynamo(dir.path(), &["find", "--strategy", "exact", "--graph", "p4.txt", "--thresholds", "strict-majority"]);
    assert_eq!(code, 0);
    assert_eq!(doc["size"], 2);
    assert_eq!(doc["verified"], true);
}

#[test]
fn every_strategy_verifies() {
    let dir = tempfile::tempdir().unwrap();
    p4(dir.path());
    for strategy in ["ordering", "greedy", "exact"] {
        let (code, doc) = dynamo(dir.path(), &["find", "--strategy", strategy, "--graph", "p4.txt"]);
        assert_eq!(code, 0, "{strategy}");
        assert_eq!(doc["verified"], true, "{strategy}");
        assert!(doc["size"].as_u64().unwrap() <= 2, "{strategy}");
    }
}

#[test]
fn ordering_certificate_fields() {
    let dir = tempfile::tempdir().unwrap();
    p4(dir.path());
    let (code, doc) = dynamo(dir.path(), &["find", "--strategy", "ordering", "--graph", "p4.txt", "--certificate"]);
    assert_eq!(code, 0);
    let cert = &doc["certificate"];
    assert_eq!(cert["order"].as_array().unwrap().len(), 4);
    let f: i64 = cert["f"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).sum();
    assert_eq!(f, 0);
    assert_eq!(cert["zero_count"], 0);
    assert_eq!(cert["odd_vertex"], true);
}

#[test]
fn simulate_p4() {
    let dir = tempfile::tempdir().unwrap();
    p4(dir.path());
    let (code, trace) = dynamo(dir.path(), &["simulate", "--graph", "p4.txt", "--thresholds", "strict-majority", "--seed", "0,2"]);
    assert_eq!(code, 0);
    assert_eq!(trace["rounds"], serde_json::json!([[0, 2], [1, 3]]));
    assert_eq!(trace["complete"], true);
    assert_eq!(trace["seed_size"], 2);
    assert_eq!(trace["total_rounds"], 1);
}

#[test]
fn thresholds_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    p4(dir.path());
    let (code, doc) = dynamo(dir.path(), &["thresholds", "--graph", "p4.txt", "--rule", "constant:2", "--out", "t.txt"]);
    assert_eq!(code, 0);
    assert_eq!(doc["forced"], serde_json::json!([0, 3]));
    assert_eq!(doc["stats"]["average"], "2/1");
    let (code, trace) = dynamo(dir.path(), &["simulate", "--graph", "p4.txt", "--thresholds", "file:t.txt", "--seed", "1,2"]);
    assert_eq!(code, 0);
    assert_eq!(trace["complete"], false);
}

#[test]
fn usage_and_io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    p4(dir.path());
    fs::write(dir.path().join("bad.txt"), "3 2\n0 1\n0 1\n").unwrap();
    let cases: &[&[&str]] = &[
        &["frobnicate"],
        &["simulate", "--graph", "missing.txt", "--seed", "0"],
        &["simulate", "--graph", "bad.txt", "--seed", "0"],
        &["simulate", "--graph", "p4.txt", "--seed", "0,x"],
        &["simulate", "--graph", "p4.txt", "--seed", "9"],
        &["find", "--strategy", "magic", "--graph", "p4.txt"],
        &["find", "--strategy", "ordering", "--graph", "p4.txt", "--thresholds", "constant:3"],
        &["gen", "--family", "cycle", "--n", "2"],
        &["gen", "--family", "gnp", "--n", "5"],
        &["audit", "--checks", "nonsense"],
        &["audit", "--n-range", "8..3"],
    ];
    for args in cases {
        let (code, doc) = dynamo(dir.path(), args);
        assert_eq!(code, 2, "{args:?}");
        assert!(doc.is_null(), "{args:?}");
    }
}

#[test]
fn exact_budget_exhaustion_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = dynamo(dir.path(), &["gen", "--family", "cycle", "--n", "12", "--out", "c.txt"]);
    assert_eq!(code, 0);
    let (code, _) = dynamo(dir.path(), &["find", "--strategy", "exact", "--graph", "c.txt", "--budget", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn audit_examples_pass() {
    let dir = tempfile::tempdir().unwrap();
    let runs: &[(&[&str], u64)] = &[
        (&["audit", "--max-n", "8", "--count", "2000", "--seed", "7", "--checks", "sandwich"], 2000),
        (&["audit", "--checks", "kn", "--n-range", "3..8"], 172),
        (&["audit", "--checks", "ordering", "--count", "1000", "--max-n", "40"], 1000),
    ];
    for (args, instances) in runs {
        let (code, report) = dynamo(dir.path(), args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(report["instances_checked"], *instances, "{args:?}");
        assert_eq!(report["failures"], 0, "{args:?}");
    }
}

#[test]
fn audit_is_byte_identical_for_equal_seeds() {
    let dir = tempfile::tempdir().unwrap();
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_dynamo"))
            .args(["audit", "--count", "40", "--seed", seed])
            .current_dir(dir.path())
            .output()
            .unwrap()
            .stdout
    };
    let a = run("11");
    assert!(!a.is_empty());
    assert_eq!(a, run("11"));
    assert_ne!(a, run("12"));
}

#[test]
fn full_audit_reports_every_check_sorted() {
    let report = run_audit(&AuditConfig {
        count: 30,
        ..AuditConfig::default()
    })
    .unwrap();
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), Check::ALL.len());
    for c in &report.checks {
        assert_eq!(c.fail == 0, c.counterexample.is_none(), "{}", c.name);
        assert_eq!(c.pass + c.fail + c.skipped, c.instances, "{}", c.name);
        if let Some(cx) = &c.counterexample {
            assert!(replay(cx, AuditConfig::default().budget).unwrap());
        }
    }
    assert_eq!(report.failures, 0);
}

#[test]
fn check_selection_does_not_change_corpora() {
    let alone = run_audit(&AuditConfig {
        count: 25,
        seed: 5,
        checks: vec![Check::Greedy],
        ..AuditConfig::default()
    })
    .unwrap();
    let together = run_audit(&AuditConfig {
        count: 25,
        seed: 5,
        checks: vec![Check::Dynamics, Check::Greedy, Check::Sandwich],
        ..AuditConfig::default()
    })
    .unwrap();
    let greedy = together.checks.iter().find(|c| c.name == "greedy").unwrap();
    assert_eq!(&alone.checks[0], greedy);
}
