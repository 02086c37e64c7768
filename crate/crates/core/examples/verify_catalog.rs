// Runs every verification suite over the built-in catalog and lists the
// minimal groups without submodular Sylow subgroups.
//
// Run with `cargo run --release --example verify_catalog`.

use std::fmt::Write as _;

use submodular::classes::GroupClass;
use submodular::lattice::Limits;
use submodular::verify::{self, Universe, VerifyOptions};
use submodular::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let universe = Universe::builtin(Limits::default())?;
    let report = verify::run_suites(&universe, &["all".to_string()], &VerifyOptions::default())?;
    for suite in &report.suites {
        writeln!(
            out,
            "{:<12} {} ({} groups)",
            suite.suite_id,
            if suite.pass { "pass" } else { "FAIL" },
            suite.instances.len()
        )
        .unwrap();
    }
    writeln!(out, "overall: {}", if report.pass { "pass" } else { "FAIL" }).unwrap();
    let minimal = verify::find_minimal_non(&universe, GroupClass::SmU)?;
    writeln!(out, "minimal non-smU groups in the catalog: {}", minimal.join(", ")).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
