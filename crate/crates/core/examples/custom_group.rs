// Defining a group in the text spec format and analysing it: here the
// Frobenius group of order 21 given by two generators on 7 points.
//
// Run with `cargo run --example custom_group`.

use std::fmt::Write as _;
use std::sync::Arc;

use submodular::classes::{self, GroupClass};
use submodular::{GroupSpec, Result, SubgroupLattice};

const SPEC: &str = "\
# x -> x + 1 and x -> 2x on Z/7
name F21
degree 7
gen (0 1 2 3 4 5 6)
gen (1 2 4)(3 6 5)
";

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let spec = GroupSpec::parse(SPEC)?;
    let lat = SubgroupLattice::new(Arc::new(spec.close(100_000)?))?;
    writeln!(out, "{}: order {}, {} subgroups", spec.name, lat.group().order(), lat.len()).unwrap();
    writeln!(out, "strongly supersoluble: {}", classes::is_strongly_supersoluble(&lat)?).unwrap();
    let chain = classes::ore_chain(&lat).expect("Ore dispersive");
    let orders: Vec<usize> = chain.iter().map(|&h| lat.order(h)).collect();
    writeln!(out, "Ore chain orders {orders:?}").unwrap();
    let residual = classes::class_residual(&lat, GroupClass::Nilpotent)?;
    writeln!(out, "nilpotent residual has order {}", lat.order(residual)).unwrap();
    writeln!(out, "round trip:\n{}", spec.to_text()).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
