// Permutations, generator closure and quotients by coset action.
//
// Run with `cargo run --example permutations`.

use std::fmt::Write as _;
use std::sync::Arc;

use submodular::{catalog, Permutation, Result};

pub fn run_example() -> Result<String> {
    let mut out = String::new();

    let a = Permutation::parse_cycles(4, "(0 1)")?;
    let b = Permutation::parse_cycles(4, "(1 2 3)")?;
    writeln!(out, "a = {a}, b = {b}").unwrap();
    writeln!(out, "a∘b = {}, b∘a = {}", a.compose(&b)?, b.compose(&a)?).unwrap();
    writeln!(out, "b⁻¹ = {}", b.inverse()).unwrap();

    let s4 = Arc::new(catalog::symmetric(4).close(100_000)?);
    writeln!(out, "S4: order {}, exponent {}", s4.order(), s4.exponent()).unwrap();
    let mut by_order = std::collections::BTreeMap::new();
    for x in 0..s4.order() {
        *by_order.entry(s4.element_order(x)).or_insert(0) += 1;
    }
    writeln!(out, "element orders: {by_order:?}").unwrap();

    let v4_gens = ["(0 1)(2 3)", "(0 2)(1 3)"]
        .iter()
        .map(|c| Permutation::parse_cycles(4, c).map(|p| s4.id_of(&p).expect("in S4")))
        .collect::<Result<Vec<_>>>()?;
    let v4 = s4.closure_of(&v4_gens);
    let epi = s4.quotient(&v4, 100_000)?;
    writeln!(
        out,
        "S4/V4: order {}, abelian {}, acting on {} cosets",
        epi.target.order(),
        epi.target.is_abelian(),
        epi.target.degree()
    )
    .unwrap();
    writeln!(out, "homomorphism check: {}", epi.is_homomorphism()).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example failed"));
}
