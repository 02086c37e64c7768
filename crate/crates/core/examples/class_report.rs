// Class membership table for a handful of catalog groups, plus the full
// JSON report for one of them.
//
// Run with `cargo run --example class_report`.

use std::fmt::Write as _;
use std::sync::Arc;

use submodular::classes::ClassReport;
use submodular::{catalog, Result, SubgroupLattice};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    writeln!(
        out,
        "{:<14} {:>5}  {:>4} {:>4} {:>4} {:>4} {:>4} {:>4}",
        "group", "order", "U", "sU", "smU", "wU", "Ore", "meta"
    )
    .unwrap();
    let names = ["S3", "S4", "A4", "A5", "Q8xZ3", "S3xS3", "AGL(1,5)d4", "AGL(1,17)d16", "Z7^2:S3"];
    let flag = |b: bool| if b { "yes" } else { "no" };
    let mut last = None;
    for name in names {
        let spec = catalog::find(name).expect("catalog group");
        let lat = SubgroupLattice::new(Arc::new(spec.close(100_000)?))?;
        let r = ClassReport::build(name, &lat)?;
        writeln!(
            out,
            "{:<14} {:>5}  {:>4} {:>4} {:>4} {:>4} {:>4} {:>4}",
            r.group,
            r.order,
            flag(r.supersoluble),
            flag(r.strongly_supersoluble),
            flag(r.sm_u),
            flag(r.w_u),
            flag(r.ore_dispersive),
            flag(r.metanilpotent)
        )
        .unwrap();
        last = Some(r);
    }
    let json = serde_json::to_string_pretty(&last.expect("nonempty"))?;
    writeln!(out, "{json}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
