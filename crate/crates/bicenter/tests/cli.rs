use std::path::Path;
use std::process::{Command, Output};

use bicenter::format::parse_instance;
use bicenter::report::Report;
use bicenter::verify::{default_solver, verify, VerifyConfig};
use bicenter_core::{Instance, Scalar, Solution, SolveError, SolverKind, DEFAULT_ORACLE_CAP};

const UNIT_PATH: &str = "4 3 2\n1\n1\n1\n1\n0 1 1\n1 2 1\n2 3 1\n0 3\n1 2\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicenter")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_unit_path() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "path.txt", UNIT_PATH);
    let out = run(&["solve", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("lambda: 1/2 ~ 0.5"), "{}", stdout(&out));

    let json = run(&["solve", &file, "--format", "json", "--solver", "graph", "--deterministic"]);
    let report: Report = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(report.lambda.to_scalar().unwrap(), Scalar::from_ratio(1, 2));
    assert_eq!(report.solver, "graph");
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "4 3 2\n1\n1\n1\n1\n0 1 1\n1 2\n");
    let out = run(&["solve", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 7"));

    let cycle = write(dir.path(), "cycle.txt", "4 4 2\n1\n1\n1\n1\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n0 2\n1 3\n");
    assert_eq!(run(&["solve", &cycle, "--solver", "tree"]).status.code(), Some(2));
    assert_eq!(run(&["solve", &cycle]).status.code(), Some(0));
    assert_eq!(run(&["solve", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let out = run(&["gen", "--seed", "1", "--n", "6", "--kind", "tree", "-o", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let spanning = run(&["gen", "--seed", "2", "--n", "7", "--m", "6", "--kind", "connected-graph"]);
    assert!(parse_instance(&stdout(&spanning)).unwrap().is_tree());
    let too_few = run(&["gen", "--seed", "2", "--n", "7", "--m", "5", "--kind", "connected-graph"]);
    assert_eq!(too_few.status.code(), Some(2));
}

#[test]
fn zero_weights_give_zero() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("z.txt");
    let gen = run(&["gen", "--seed", "5", "--n", "8", "--kind", "connected-graph", "--weights", "0..0", "-o", file.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0));
    let out = run(&["solve", file.to_str().unwrap(), "--format", "json"]);
    let report: Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.lambda.to_scalar().unwrap(), Scalar::zero());
}

#[test]
fn verify_command() {
    let empty = run(&["verify", "--seeds", "5..5"]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(stdout(&empty).contains("0 cases"));
    let full = run(&["verify", "--seeds", "1..201", "--max-n", "8", "--jobs", "2"]);
    assert_eq!(full.status.code(), Some(0), "{}", stdout(&full));
    assert!(stdout(&full).contains("200 cases, 200 passed, 0 failed"));
}

fn off_by_one(instance: &Instance, kind: SolverKind) -> Result<Solution, SolveError> {
    let mut s = default_solver(instance, kind)?;
    if s.lambda.is_positive() {
        s.lambda = &s.lambda + &Scalar::from_ratio(1, 1000);
    }
    Ok(s)
}

#[test]
fn verify_catches_a_broken_solver() {
    let config = VerifyConfig { seeds: 1..40, max_n: 8, jobs: Some(1), oracle_cap: DEFAULT_ORACLE_CAP, solver: off_by_one };
    let summary = verify(&config);
    assert!(!summary.passed());
    let seeds: Vec<u64> = summary.failures.iter().map(|f| f.seed).collect();
    assert!(seeds.windows(2).all(|w| w[0] < w[1]));
    let good = VerifyConfig { solver: default_solver, ..config };
    assert!(verify(&good).passed());
}

#[test]
fn json_reports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..30u64 {
        let kind = if seed % 2 == 0 { "tree" } else { "connected-graph" };
        let file = dir.path().join(format!("{seed}.txt"));
        let path = file.to_str().unwrap();
        run(&["gen", "--seed", &seed.to_string(), "--n", "9", "--kind", kind, "--all-paired", "-o", path]);
        let instance = parse_instance(&std::fs::read_to_string(&file).unwrap()).unwrap();
        let out = run(&["solve", path, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        let solution = serde_json::from_str::<Report>(&stdout(&out)).unwrap().to_solution(&instance).unwrap();
        assert_eq!(instance.objective(&solution.q1, &solution.q2, Some(&solution.assignment)), solution.lambda);
    }
}
