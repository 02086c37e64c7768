// The subgroup lattice of S4: counts, normal subgroups, Sylow subgroups,
// radicals, a chief series and the Hasse diagram in DOT form.
//
// Run with `cargo run --example subgroup_lattice`; the output ends with the
// DOT text.

use std::fmt::Write as _;
use std::sync::Arc;

use submodular::lattice::to_dot;
use submodular::{catalog, Result, SubgroupLattice};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let group = catalog::symmetric(4).close(100_000)?;
    let lat = SubgroupLattice::new(Arc::new(group))?;

    writeln!(out, "S4 has {} subgroups", lat.len()).unwrap();
    let mut by_order = std::collections::BTreeMap::new();
    for h in lat.ids() {
        *by_order.entry(lat.order(h)).or_insert(0) += 1;
    }
    writeln!(out, "subgroups by order: {by_order:?}").unwrap();

    let normal: Vec<usize> = lat.normal_subgroups().iter().map(|&h| lat.order(h)).collect();
    writeln!(out, "normal subgroup orders: {normal:?}").unwrap();
    for p in lat.group().primes() {
        let s = lat.sylow(p);
        writeln!(
            out,
            "Sylow {p}-subgroup {} of order {}, {} conjugates",
            lat.describe(s),
            lat.order(s),
            lat.sylow_all(p).len()
        )
        .unwrap();
    }
    writeln!(out, "Fitting subgroup order {}", lat.order(lat.fitting()?)).unwrap();
    writeln!(out, "Frattini subgroup order {}", lat.order(lat.frattini())).unwrap();
    let series = lat.chief_series()?;
    writeln!(out, "chief factor orders {:?}", series.factor_orders()).unwrap();

    out.push_str(&to_dot(&lat, None));
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
