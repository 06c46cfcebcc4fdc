use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const WZ: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/wz.txt");

fn gallai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallai")).args(args).env_remove("GALLAI_BUDGET").output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// A fresh scratch directory per test.
fn scratch(name: &str) -> PathBuf {
    let d = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

const SAT: &str = "p cnf 1 1\n1 1 1 0\n";
const UNSAT: &str = "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n";

#[test]
fn solve_lambda_on_golden_graph() {
    for method in ["naive", "blocks"] {
        let o = gallai(&["solve", WZ, "--task", "lambda", "--method", method]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert_eq!(json(&o)["result"]["value"], 9);
    }
}

#[test]
fn solve_gallai_on_p3() {
    let d = scratch("p3");
    let p = write(&d, "p3.txt", "3 2\n0 1\n1 2\n");
    let o = gallai(&["solve", &p, "--task", "gallai"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(json(&o)["result"]["vertices"], serde_json::json!([0, 1, 2]));
}

#[test]
fn solve_lpt_on_golden_graph() {
    let o = gallai(&["solve", WZ, "--task", "lpt"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["result"]["size"], 2);
    assert_eq!(v["result"]["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn solve_other_tasks() {
    let o = gallai(&["solve", WZ, "--task", "gamma"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["result"]["value"], 9);
    let o = gallai(&["solve", WZ, "--task", "omega"]);
    assert_eq!(json(&o)["result"]["value"], 2);
    let o = gallai(&["solve", WZ, "--task", "clique-singleton"]);
    assert_eq!(json(&o)["result"]["vertices"], serde_json::json!([]));
}

#[test]
fn blocks_method_rejected_for_other_tasks() {
    let o = gallai(&["solve", WZ, "--task", "lpt", "--method", "blocks"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(gallai(&["solve", "/nonexistent/graph.txt", "--task", "lambda"]).status.code(), Some(2));
    assert_eq!(gallai(&["solve", WZ, "--task", "nope"]).status.code(), Some(2));
    assert_eq!(gallai(&["--budget", "0", "solve", WZ, "--task", "lambda"]).status.code(), Some(2));
    let d = scratch("bad");
    let p = write(&d, "bad.txt", "3 1\n0 5\n");
    assert_eq!(gallai(&["solve", &p, "--task", "lambda"]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let o = gallai(&["--budget", "5", "solve", WZ, "--task", "lpt"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(["verify", "wz"])
        .env("GALLAI_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    // The flag wins over the environment.
    let o = Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(["--budget", "100000000", "verify", "wz"])
        .env("GALLAI_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn build_wz_paths_has_lambda_ten() {
    let d = scratch("wzp");
    let o = gallai(&["build", "wz-paths", "--kt", "2", "--kl", "1", "--kr", "1", "--out", d.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("longest path 10"));
    let g = d.join("graph.json").display().to_string();
    let o = gallai(&["solve", &g, "--task", "lambda"]);
    assert_eq!(json(&o)["result"]["value"], 10);
}

#[test]
fn build_parity_gallai_predicts_yes() {
    let d = scratch("pg");
    let sat = write(&d, "sat.cnf", SAT);
    let unsat = write(&d, "unsat.cnf", UNSAT);
    let out = d.join("bundle");
    let o = gallai(&["build", "parity-gallai", "--cnfs", &sat, &unsat, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "Gallai vertex: yes (s = 1)");
    let m: Value = serde_json::from_str(&std::fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(m["split_index"], 1);
    assert_eq!(m["kind"], "gallai");
    // The bundle's own manifest rebuilds the same instance.
    let o2 = gallai(&["build", "parity-gallai", "--manifest", out.join("manifest.json").to_str().unwrap()]);
    assert!(o2.status.success(), "{}", stderr(&o2));
    assert_eq!(stdout(&o2), stdout(&o));
}

#[test]
fn build_parity_from_line_manifest() {
    let d = scratch("lines");
    write(&d, "a.cnf", UNSAT);
    write(&d, "b.cnf", UNSAT);
    let m = write(&d, "seq.txt", "# both unsatisfiable\na.cnf\nb.cnf\n");
    for target in ["parity-gallai", "parity-lpt", "parity-lct", "parity-clique"] {
        let o = gallai(&["build", target, "--manifest", &m]);
        assert!(o.status.success(), "{target}: {}", stderr(&o));
        assert!(stdout(&o).contains("(s = 0)"), "{target}: {}", stdout(&o));
    }
}

#[test]
fn promise_violation_is_reported() {
    let d = scratch("promise");
    let sat = write(&d, "sat.cnf", SAT);
    let unsat = write(&d, "unsat.cnf", UNSAT);
    let o = gallai(&["build", "parity-gallai", "--cnfs", &unsat, &sat]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("formula 0 is unsatisfiable but formula 1 after it is satisfiable"), "{}", stderr(&o));
}

#[test]
fn parity_lct_on_acyclic_host_fails() {
    let d = scratch("acyclic");
    let sat = write(&d, "sat.cnf", SAT);
    let unsat = write(&d, "unsat.cnf", UNSAT);
    let host = write(&d, "path.txt", "3 2\n0 1\n1 2\n");
    let o = gallai(&["build", "parity-lct", "--cnfs", &sat, &unsat, "--host", &host, "--edge", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("longest cycle"), "{}", stderr(&o));
}

#[test]
fn verify_suites_pass() {
    for suite in [
        "wz",
        "pendant-paths",
        "path-gadget",
        "odd-even",
        "theta2",
        "lpt-inapprox",
        "lct-inapprox",
        "clique-parity",
        "oracle-equiv",
        "solver-cross",
    ] {
        let o = gallai(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stderr(&o));
        let r = json(&o);
        assert_eq!(r["pass"], true);
        assert_eq!(r["suite"], suite);
    }
}

#[test]
fn verify_counts_and_determinism() {
    let o = gallai(&["verify", "pendant-paths", "--max-k", "3"]);
    assert_eq!(json(&o)["checks"].as_array().unwrap().len(), 27);
    let o = gallai(&["verify", "oracle-equiv", "--seed", "1"]);
    let r = json(&o);
    let checks = r["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 50);
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert_eq!(stdout(&gallai(&["verify", "oracle-equiv", "--seed", "1"])), stdout(&o));
    assert_ne!(stdout(&gallai(&["verify", "oracle-equiv", "--seed", "2"])), stdout(&o));
}

#[test]
fn theta2_verdicts_follow_parity() {
    let r = json(&gallai(&["verify", "theta2"]));
    let verdicts: Vec<&Value> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["description"].as_str().unwrap().ends_with("query-table verdict"))
        .map(|c| &c["observed"])
        .collect();
    assert_eq!(verdicts, [&Value::Bool(false), &Value::Bool(true), &Value::Bool(false)]);
}
