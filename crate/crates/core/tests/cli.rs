use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sigdom(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sigdom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = sigdom(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const P7: &str = "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n";

#[test]
fn gen_writes_path_edgelist() {
    assert_eq!(ok(&["gen", "--kind", "path", "--n", "7", "--format", "edgelist"], ""), P7);
    assert_eq!(ok(&["gen", "--kind", "path", "--n", "7", "--format", "graph6"], ""), "FhCGG\n");
    let a = ok(&["gen", "--kind", "random-connected", "--n", "9", "--p", "0.3", "--seed", "5"], "");
    assert_eq!(a, ok(&["gen", "--kind", "random-connected", "--n", "9", "--p", "0.3", "--seed", "5"], ""));
    assert_ne!(a, ok(&["gen", "--kind", "random-connected", "--n", "9", "--p", "0.3", "--seed", "6"], ""));
}

#[test]
fn solve_prints_value_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p7.el");
    std::fs::write(&file, P7).unwrap();
    let out = ok(&["solve", "--param", "gamma_s", "--input", file.to_str().unwrap()], "");
    assert_eq!(out, "gamma_s 5\nwitness ++-++++\n");
    assert_eq!(ok(&["solve", "--param", "gamma", "--mode", "oracle"], P7), "gamma 3\nwitness {0, 2, 5}\n");
    assert_eq!(ok(&["solve", "--param", "rho"], "FhCGG\n"), "rho 3\nwitness {0, 3, 6}\n");
    let c6 = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
    let json = ok(&["solve", "--param", "tuple", "--k", "2", "--json"], c6);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!((v["value"].as_i64(), v["k"].as_u64()), (Some(4), Some(2)));
    assert_eq!(v["witness"], serde_json::json!([0, 1, 3, 4]));
}

#[test]
fn convert_and_bounds() {
    assert_eq!(ok(&["convert", "--format", "graph6"], P7), "FhCGG\n");
    assert_eq!(ok(&["convert", "--input", "-", "--format", "edgelist"], "FhCGG\n"), P7);
    let out = ok(&["bounds"], P7);
    assert!(out.contains("tree_core_lower lower raw 11/3 tightened 5"), "{out}");
    assert!(!out.contains("packing_upper"));
    let json = ok(&["bounds", "--json"], "Bw\n");
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn audit_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("report.csv");
    let summary = ok(&["audit", "--corpus", "trees-exhaustive", "--n-max", "6", "--out", csv.to_str().unwrap()], "");
    assert!(summary.contains("violations: 0"), "{summary}");
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("graph_id,n,m,delta,Delta,delta_star,leaves,supports,gamma_s,gamma,rho,"));
    assert_eq!(text.lines().count(), 1 + 1 + 3 + 16 + 125 + 1296);

    let json = dir.path().join("report.json");
    ok(&["audit", "--corpus", "complete,cycles", "--n-min", "3", "--n-max", "7", "--out", json.to_str().unwrap()], "");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 10);

    let single = ok(&["audit", "--input", "-", "--json"], P7);
    let v: serde_json::Value = serde_json::from_str(&single).unwrap();
    assert_eq!(v["exact"]["gamma_s"], 5);
}

#[test]
fn hunt_lists_witnesses() {
    let out = ok(&["hunt", "--corpus", "paths", "--n-min", "4", "--n-max", "10", "--target", "tree_core_lower"], "");
    assert!(out.lines().any(|l| l == "FhCGG"));
    let out = ok(&["hunt", "--corpus", "complete", "--n-min", "3", "--n-max", "12", "--target", "packing_upper", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str], stdin: &str| sigdom(args, stdin).status.code();
    assert_eq!(code(&["bogus"], ""), Some(1));
    assert_eq!(code(&["gen", "--kind", "hexagon", "--n", "3"], ""), Some(1));
    assert_eq!(code(&["solve", "--param", "gamma_s", "--bogus"], P7), Some(1));
    assert_eq!(code(&["solve", "--param", "gamma_s"], "3 1\n0 5\n"), Some(1));
    assert_eq!(code(&["solve", "--param", "gamma_s", "--mode", "oracle", "--cap-oracle", "5"], P7), Some(1));
    assert_eq!(code(&["solve", "--param", "gamma_s", "--input", "/nonexistent/file"], ""), Some(1));
    assert_eq!(code(&["hunt", "--corpus", "paths", "--target", "no_such_bound"], ""), Some(1));
    assert_eq!(code(&["audit"], ""), Some(1));
    assert_eq!(code(&["--help"], ""), Some(0));
    let err = String::from_utf8(sigdom(&["solve", "--param", "gamma_s"], "3 1\n0 5\n").stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}
