use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_submodular"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("submodular-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn analyze_frobenius_group() {
    let o = run(&["analyze", "AGL(1,17)d16"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "supersoluble: yes",
        "strongly supersoluble: no",
        "smU (Sylows submodular): no",
        "wU (Sylows P-subnormal): yes",
    ] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in\n{text}");
    }
}

#[test]
fn analyze_trivial_group_json() {
    let o = run(&["--format", "json", "analyze", "Z1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["abelian", "in_b", "nilpotent", "soluble", "metanilpotent", "supersoluble", "strongly_supersoluble", "sm_u", "w_u", "ore_dispersive"] {
        assert_eq!(v[key], serde_json::Value::Bool(true), "{key}");
    }
}

#[test]
fn analyze_s4() {
    let text = stdout(&run(&["analyze", "S4"]));
    assert!(text.contains("Ore dispersive: no"));
    assert!(text.lines().any(|l| l == "supersoluble: no"));
}

#[test]
fn catalog_name_and_spec_file_agree() {
    let spec = submodular::catalog::find("S3xZ5").unwrap();
    let path = temp_path("s3z5.txt");
    std::fs::write(&path, spec.to_text()).unwrap();
    let by_name = run(&["--format", "json", "analyze", "S3xZ5"]);
    let by_file = run(&["--format", "json", "analyze", path.to_str().unwrap()]);
    assert_eq!(by_name.status.code(), Some(0));
    assert_eq!(by_name.stdout, by_file.stdout);
}

#[test]
fn lattice_dot_output() {
    let path = temp_path("s3.dot");
    let o = run(&["lattice", "S3", "--dot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches("label=").count(), 6);
    assert_eq!(dot.matches("->").count(), 8);
    let again = stdout(&run(&["lattice", "S3"]));
    assert_eq!(dot, again);
    let shaded = stdout(&run(&["lattice", "S3", "--modular"]));
    // every subgroup of S3 is modular in S3
    assert_eq!(shaded.matches("fillcolor").count(), 6);
}

#[test]
fn lattice_of_prime_cyclic_and_quaternion() {
    let z5 = stdout(&run(&["lattice", "Z5"]));
    assert_eq!(z5.matches("label=").count(), 2);
    assert_eq!(z5.matches("->").count(), 1);
    let q8 = stdout(&run(&["lattice", "Q8"]));
    assert_eq!(q8.matches("doublecircle").count(), 6);
}

#[test]
fn verify_single_suite_passes() {
    let o = run(&["verify", "--suite", "example-2.8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[PASS] example-2.8 (1 instances)"));
}

#[test]
fn verify_unknown_suite_is_a_usage_error() {
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_report_round_trips() {
    let path = temp_path("report.json");
    let o = run(&["verify", "--suite", "thm-3.8", "--suite", "lemma-1.2", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed = submodular::verify::VerifyReport::from_json(&text).unwrap();
    assert_eq!(parsed.to_json().unwrap(), text);
    assert_eq!(parsed.suites.len(), 2);
    assert!(parsed.suites.iter().all(|s| s.elapsed_ms.is_none()));
}

#[test]
fn verify_with_extra_group() {
    let path = temp_path("f21.txt");
    std::fs::write(&path, "name F21\ndegree 7\ngen (0 1 2 3 4 5 6)\ngen (1 2 4)(3 6 5)\n").unwrap();
    let o = run(&["--format", "json", "verify", "--suite", "thm-3.8", "--extra", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report = submodular::verify::VerifyReport::from_json(&stdout(&o)).unwrap();
    assert!(report.universe.iter().any(|g| g == "F21"));
}

#[test]
fn parse_errors_report_the_line() {
    let path = temp_path("bad.txt");
    std::fs::write(&path, "name Bad\ndegree 3\ngen (0 5)\n").unwrap();
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn unknown_group_is_a_usage_error() {
    assert_eq!(run(&["analyze", "NoSuchGroup"]).status.code(), Some(2));
}

#[test]
fn resource_caps_exit_with_3() {
    assert_eq!(run(&["--subgroup-cap", "5", "analyze", "S4"]).status.code(), Some(3));
    assert_eq!(run(&["--element-cap", "10", "analyze", "S4"]).status.code(), Some(3));
}

#[test]
fn invalid_flags_are_usage_errors() {
    assert_eq!(run(&["--jobs", "0", "catalog", "list"]).status.code(), Some(2));
    assert_eq!(run(&["--subgroup-cap", "0", "catalog", "list"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn catalog_list() {
    let text = stdout(&run(&["catalog", "list"]));
    assert!(text.lines().any(|l| l.starts_with("AGL(1,17)d16") && l.contains("order 272")));
    let json = run(&["--format", "json", "catalog", "list"]);
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(rows.len(), submodular::catalog::builtin_catalog().len());
}
