// Modular and submodular subgroups in `Z17 ⋊ Z16`, the full affine group
// of the line over F17: the normal `Z17` is submodular, the complement `Z16`
// is not, though it reaches the top through a prime-index step.
//
// Run with `cargo run --example modularity`.

use std::fmt::Write as _;
use std::sync::Arc;

use submodular::{catalog, classes, modularity, Result, SubgroupLattice};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let group = catalog::affine_group(17, 16)?.close(100_000)?;
    let lat = SubgroupLattice::new(Arc::new(group))?;
    writeln!(out, "G = AGL(1,17), order {}, {} subgroups", lat.group().order(), lat.len()).unwrap();

    let a = lat.sylow(17);
    let chain = modularity::submodular_chain(&lat, a).expect("Z17 is normal");
    let orders: Vec<usize> = chain.chain.iter().map(|&h| lat.order(h)).collect();
    writeln!(out, "A = {} is submodular: chain of orders {orders:?}", lat.describe(a)).unwrap();

    let b = lat
        .ids()
        .find(|&h| lat.order(h) == 16 && lat.exponent_of(h) == 16)
        .expect("a cyclic complement");
    writeln!(out, "B = {} submodular: {}", lat.describe(b), modularity::is_submodular(&lat, b)).unwrap();
    let verdict = modularity::is_modular(&lat, b, lat.top())?;
    if let Some(w) = verdict.failing_witness {
        writeln!(
            out,
            "B is not modular in G: condition {:?} fails with partner of order {} and Z of order {}",
            w.condition,
            lat.order(w.partner),
            lat.order(w.z)
        )
        .unwrap();
    }
    let p_chain = modularity::p_subnormal_chain_in(&lat, b, lat.top()).expect("index 17");
    let orders: Vec<usize> = p_chain.iter().map(|&h| lat.order(h)).collect();
    writeln!(out, "B is P-subnormal: chain of orders {orders:?}").unwrap();

    let maximal: Vec<usize> = modularity::maximal_modular_subgroups(&lat, lat.top())
        .into_iter()
        .map(|h| lat.order(h))
        .collect();
    writeln!(out, "maximal modular subgroups have orders {maximal:?}").unwrap();

    writeln!(out, "supersoluble: {}", classes::is_supersoluble(&lat)?).unwrap();
    writeln!(out, "strongly supersoluble: {}", classes::is_strongly_supersoluble(&lat)?).unwrap();
    writeln!(out, "all Sylows submodular: {}", classes::is_sm_u(&lat)?).unwrap();
    writeln!(out, "all Sylows P-subnormal: {}", classes::is_w_u(&lat)).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
