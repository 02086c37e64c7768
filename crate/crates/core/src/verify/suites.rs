use fixedbitset::FixedBitSet;

use super::{is_minimal_non, Outcome, SuiteDef};
use crate::classes::{self, GroupClass};
use crate::error::Result;
use crate::lattice::{StepChoice, SubgroupId, SubgroupLattice};
use crate::modularity;
use crate::util;

/// Largest order for which the exhaustive pairwise suites run.
const SMALL_ORDER: usize = 60;

/// Primes used when a statement is quantified over every prime.
const SCREEN_PRIMES: [usize; 7] = [2, 3, 5, 7, 11, 13, 17];

pub(crate) static SUITES: &[SuiteDef] = &[
    SuiteDef {
        id: "lattice",
        description: "lattice tables are consistent: absorption, Dedekind law for normal subgroups, \
                      chief factor orders independent of the chosen series, radicals, normal implies modular",
        applies: always,
        check: lattice_consistency,
    },
    SuiteDef {
        id: "lemma-1.1",
        description: "submodularity passes to intersections, quotients, preimages, conjugates, \
                      meets of two submodular subgroups and products with normal subgroups",
        applies: small,
        check: submodular_inheritance,
    },
    SuiteDef {
        id: "lemma-1.2",
        description: "maximal modular subgroups are exactly the maximal normal subgroups and the \
                      subgroups whose core quotient is nonabelian of order pq",
        applies: always,
        check: maximal_modular_characterization,
    },
    SuiteDef {
        id: "lemma-1.3",
        description: "for G = AB with A, B nilpotent and a self-centralizing minimal normal N: \
                      A and B meet trivially, N lies in A or B, and the one containing N is a p-group",
        applies: always,
        check: nilpotent_factorization_structure,
    },
    SuiteDef {
        id: "lemma-1.4",
        description: "F_p(G) centralizes every chief factor whose order p divides, and G/C_G(H/K) \
                      has no nontrivial normal p-subgroup",
        applies: always,
        check: radical_centralizes_chief_factors,
    },
    SuiteDef {
        id: "thm-1.5",
        description: "a p-chief factor has order p iff its automizer is abelian of exponent dividing p - 1",
        applies: always,
        check: prime_chief_factor_automizer,
    },
    SuiteDef {
        id: "lemma-1.8",
        description: "supersolubility via chief factors agrees with the screen p -> A(p-1)",
        applies: always,
        check: supersoluble_routes,
    },
    SuiteDef {
        id: "lemma-2.1",
        description: "a submodular Sylow subgroup for the largest prime is normal",
        applies: always,
        check: largest_prime_sylow,
    },
    SuiteDef {
        id: "cor-2.1.1",
        description: "all Sylow subgroups submodular implies Ore dispersive",
        applies: always,
        check: sm_u_implies_ore,
    },
    SuiteDef {
        id: "prop-2.3",
        description: "strongly supersoluble iff supersoluble with G/F(G) abelian of squarefree exponent",
        applies: always,
        check: strongly_supersoluble_fitting_route,
    },
    SuiteDef {
        id: "lemma-2.4",
        description: "abelian groups of squarefree exponent form a hereditary formation",
        applies: always,
        check: class_b_formation,
    },
    SuiteDef {
        id: "thm-2.5",
        description: "strongly supersoluble groups: closed under subgroups, quotients, subdirect \
                      products and normal products, and detected modulo the Frattini subgroup",
        applies: always,
        check: strongly_supersoluble_closure,
    },
    SuiteDef {
        id: "thm-2.6",
        description: "strongly supersoluble iff every chief factor automizer lies in A(p-1) and B",
        applies: always,
        check: strongly_supersoluble_screen,
    },
    SuiteDef {
        id: "thm-2.7",
        description: "a product of two submodular nilpotent subgroups is strongly supersoluble",
        applies: always,
        check: nilpotent_submodular_products,
    },
    SuiteDef {
        id: "example-2.8",
        description: "in Z17 semidirect Aut(Z17): Z17 is submodular, Z16 is not but is P-subnormal; \
                      the group is supersoluble and not strongly supersoluble",
        applies: is_frobenius_272,
        check: frobenius_272,
    },
    SuiteDef {
        id: "thm-2.9",
        description: "strongly supersoluble iff metanilpotent with all Sylow subgroups submodular",
        applies: always,
        check: metanilpotent_characterization,
    },
    SuiteDef {
        id: "thm-3.1",
        description: "groups with submodular Sylow subgroups: closed under subgroups, quotients, \
                      subdirect products and normal products, and detected modulo the Frattini subgroup",
        applies: always,
        check: sm_u_closure,
    },
    SuiteDef {
        id: "lemma-3.2",
        description: "soluble groups with elementary abelian Sylow subgroups, and with Sylow \
                      subgroups in A(p-1) and B, form hereditary formations",
        applies: always,
        check: sylow_class_formations,
    },
    SuiteDef {
        id: "thm-3.4",
        description: "every minimal group without submodular Sylow subgroups has two prime divisors \
                      and is minimal non strongly supersoluble",
        applies: always,
        check: minimal_non_sm_u,
    },
    SuiteDef {
        id: "lemma-3.5",
        description: "submodular subgroups are K-P-subnormal, and P-subnormal in soluble groups",
        applies: always,
        check: submodular_is_kp_subnormal,
    },
    SuiteDef {
        id: "thm-3.6",
        description: "submodular Sylow subgroups iff every chief factor automizer is soluble with \
                      Sylow subgroups in A(p-1) and B",
        applies: always,
        check: sm_u_screen,
    },
    SuiteDef {
        id: "thm-3.7",
        description: "with submodular Sylow subgroups: metanilpotent and biprimary subgroups are \
                      strongly supersoluble, and the elementary-abelian-Sylow residual is nilpotent",
        applies: always,
        check: sm_u_consequences,
    },
    SuiteDef {
        id: "thm-3.8",
        description: "submodular Sylow subgroups iff Ore dispersive with strongly supersoluble biprimary subgroups",
        applies: always,
        check: sm_u_biprimary_characterization,
    },
];

fn always(_: &SubgroupLattice) -> bool {
    true
}

fn small(lat: &SubgroupLattice) -> bool {
    lat.group().order() <= SMALL_ORDER
}

fn sub(lat: &SubgroupLattice, h: SubgroupId) -> String {
    format!("{} (order {})", lat.describe(h), lat.order(h))
}

fn chain_orders(lat: &SubgroupLattice, chain: &[SubgroupId]) -> String {
    chain
        .iter()
        .map(|&h| lat.order(h).to_string())
        .collect::<Vec<_>>()
        .join(" < ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn proper(lat: &SubgroupLattice) -> impl Iterator<Item = SubgroupId> + '_ {
    lat.ids().filter(move |&h| h != lat.top())
}

fn is_p_group_order(n: usize, p: usize) -> bool {
    util::p_part(n, p) == n
}

fn lattice_consistency(lat: &SubgroupLattice) -> Result<Outcome> {
    let ids: Vec<SubgroupId> = lat.ids().collect();
    let n = lat.group().order();
    for &a in &ids {
        if n % lat.order(a) != 0 {
            return Ok(Outcome::fail(format!("order of {} does not divide {n}", sub(lat, a))));
        }
        if lat.meet(a, a) != a || lat.join(a, a) != a {
            return Ok(Outcome::fail(format!("idempotence fails at {}", sub(lat, a))));
        }
        for &b in &ids {
            let (m, j) = (lat.meet(a, b), lat.join(a, b));
            if m != lat.meet(b, a) || j != lat.join(b, a) {
                return Ok(Outcome::fail(format!("commutativity fails at {}, {}", sub(lat, a), sub(lat, b))));
            }
            if lat.join(a, m) != a || lat.meet(a, j) != a {
                return Ok(Outcome::fail(format!("absorption fails at {}, {}", sub(lat, a), sub(lat, b))));
            }
            if lat.order(j) % util::lcm(lat.order(a), lat.order(b)) != 0 {
                return Ok(Outcome::fail(format!("join order of {}, {}", sub(lat, a), sub(lat, b))));
            }
        }
    }
    if ids.len() <= SMALL_ORDER {
        for &a in &ids {
            for &b in &ids {
                for &c in &ids {
                    if lat.meet(lat.meet(a, b), c) != lat.meet(a, lat.meet(b, c))
                        || lat.join(lat.join(a, b), c) != lat.join(a, lat.join(b, c))
                    {
                        return Ok(Outcome::fail(format!(
                            "associativity fails at {}, {}, {}",
                            sub(lat, a),
                            sub(lat, b),
                            sub(lat, c)
                        )));
                    }
                }
            }
        }
    }
    let normals = lat.normal_subgroups();
    for &nn in &normals {
        for &x in &ids {
            for z in lat.above(x).ones() {
                if lat.join(x, lat.meet(nn, z)) != lat.meet(lat.join(x, nn), z) {
                    return Ok(Outcome::fail(format!(
                        "Dedekind law fails for N = {}, X = {}, Z = {}",
                        sub(lat, nn),
                        sub(lat, x),
                        sub(lat, z)
                    )));
                }
            }
        }
    }

    let low = lat.chief_series_with(StepChoice::LowestId)?;
    let high = lat.chief_series_with(StepChoice::HighestId)?;
    let (mut lo, mut hi) = (low.factor_orders(), high.factor_orders());
    lo.sort_unstable();
    hi.sort_unstable();
    if lo != hi {
        return Ok(Outcome::fail(format!("chief factor orders differ: {lo:?} vs {hi:?}")));
    }
    if classes::is_soluble(lat) && low.factors.iter().any(|f| f.prime.is_none()) {
        return Ok(Outcome::fail("soluble group with a chief factor that is not of prime power order"));
    }
    for series in [&low, &high] {
        for f in &series.factors {
            for p in util::prime_factors(f.order) {
                let fp = lat.p_nilpotent_radical(p)?;
                if !lat.leq(fp, f.centralizer) {
                    return Ok(Outcome::fail(format!(
                        "F_{p}(G) is not contained in the centralizer of the factor {} / {}",
                        sub(lat, f.upper),
                        sub(lat, f.lower)
                    )));
                }
            }
        }
    }

    let fit = lat.fitting()?;
    if !lat.is_normal(fit) || normals.iter().any(|&m| lat.is_nilpotent_subgroup(m) && !lat.leq(m, fit)) {
        return Ok(Outcome::fail("Fitting subgroup is not the largest normal nilpotent subgroup"));
    }
    for p in lat.group().primes() {
        let fp = lat.p_nilpotent_radical(p)?;
        if !lat.is_normal(fp)
            || normals
                .iter()
                .any(|&m| lat.is_p_nilpotent_subgroup(m, p) && !lat.leq(m, fp))
        {
            return Ok(Outcome::fail(format!("F_{p}(G) is not the largest normal {p}-nilpotent subgroup")));
        }
    }

    let rel = modularity::relation(lat);
    for b in lat.ids() {
        for a in lat.below(b).ones() {
            if lat.is_normal_in(a, b) && !rel.contains(a, b) {
                return Ok(Outcome::fail(format!(
                    "{} is normal but not modular in {}",
                    sub(lat, a),
                    sub(lat, b)
                )));
            }
        }
    }
    if lat.group().order() <= SMALL_ORDER {
        for b in lat.ids() {
            for a in lat.below(b).ones() {
                for x in 0..lat.group().order() {
                    if rel.contains(a, b) != rel.contains(lat.conj(a, x), lat.conj(b, x)) {
                        return Ok(Outcome::fail(format!(
                            "modularity of {} in {} is not conjugation invariant",
                            sub(lat, a),
                            sub(lat, b)
                        )));
                    }
                }
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{} subgroups, {} normal; chief factor orders {lo:?}",
        ids.len(),
        normals.len()
    )))
}

fn submodular_inheritance(lat: &SubgroupLattice) -> Result<Outcome> {
    let submodular: Vec<SubgroupId> = lat.ids().filter(|&h| modularity::is_submodular(lat, h)).collect();
    let normals = lat.normal_subgroups();
    for &t in &submodular {
        for u in lat.ids() {
            let m = lat.meet(u, t);
            if !modularity::is_submodular_in(lat, m, u) {
                return Ok(Outcome::fail(format!(
                    "(1) T = {}, U = {}: U ∩ T is not submodular in U",
                    sub(lat, t),
                    sub(lat, u)
                )));
            }
        }
        for c in lat.conjugates(t) {
            if !modularity::is_submodular(lat, c) {
                return Ok(Outcome::fail(format!(
                    "(4) conjugate {} of submodular {} is not submodular",
                    sub(lat, c),
                    sub(lat, t)
                )));
            }
        }
        for &t2 in &submodular {
            if !modularity::is_submodular(lat, lat.meet(t, t2)) {
                return Ok(Outcome::fail(format!(
                    "(5) meet of submodular {} and {} is not submodular",
                    sub(lat, t),
                    sub(lat, t2)
                )));
            }
        }
        for &n in &normals {
            if !modularity::is_submodular(lat, lat.join(t, n)) {
                return Ok(Outcome::fail(format!(
                    "(6) {} joined with normal {} is not submodular",
                    sub(lat, t),
                    sub(lat, n)
                )));
            }
        }
    }
    for &n in &normals {
        let q = lat.quotient(n)?;
        for t in lat.above(n).ones() {
            let image = q.image(lat, t);
            let up = modularity::is_submodular(&q.lattice, image);
            let down = modularity::is_submodular(lat, t);
            if down && !up {
                return Ok(Outcome::fail(format!(
                    "(2) {} is submodular but its image modulo {} is not",
                    sub(lat, t),
                    sub(lat, n)
                )));
            }
            if up && !down {
                return Ok(Outcome::fail(format!(
                    "(3) {} / {} is submodular but {} is not",
                    sub(lat, t),
                    sub(lat, n),
                    sub(lat, t)
                )));
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{} of {} subgroups submodular; {} normal subgroups",
        submodular.len(),
        lat.len(),
        normals.len()
    )))
}

fn maximal_modular_characterization(lat: &SubgroupLattice) -> Result<Outcome> {
    let mut count = 0;
    for b in lat.ids() {
        let mut brute = modularity::maximal_modular_subgroups(lat, b);
        let mut predicted = modularity::maximal_modular_by_characterization(lat, b);
        brute.sort_unstable();
        predicted.sort_unstable();
        if brute != predicted {
            let show = |v: &[SubgroupId]| v.iter().map(|&h| sub(lat, h)).collect::<Vec<_>>().join(", ");
            return Ok(Outcome::fail(format!(
                "in {}: brute force [{}] vs characterization [{}]",
                sub(lat, b),
                show(&brute),
                show(&predicted)
            )));
        }
        count += brute.len();
    }
    let top: Vec<usize> = modularity::maximal_modular_subgroups(lat, lat.top())
        .into_iter()
        .map(|h| lat.order(h))
        .collect();
    Ok(Outcome::pass(format!(
        "agreement in all {} subgroups ({count} maximal modular pairs); in G: orders {top:?}",
        lat.len()
    )))
}

/// Pairs `(A, B)` with `A ≤ B` by id and `AB = G`, `AB` checked elementwise.
fn factorizations(lat: &SubgroupLattice, keep: impl Fn(SubgroupId) -> bool) -> Vec<(SubgroupId, SubgroupId)> {
    let g = lat.group();
    let n = g.order();
    let candidates: Vec<SubgroupId> = lat.ids().filter(|&h| keep(h)).collect();
    let mut out = Vec::new();
    for (i, &a) in candidates.iter().enumerate() {
        for &b in &candidates[i..] {
            if lat.order(a) * lat.order(b) != n * lat.order(lat.meet(a, b)) {
                continue;
            }
            let mut product = FixedBitSet::with_capacity(n);
            for x in lat.elements(a).ones() {
                for y in lat.elements(b).ones() {
                    product.insert(g.mul(x, y));
                }
            }
            if product.count_ones(..) == n {
                out.push((a, b));
            }
        }
    }
    out
}

fn nilpotent_factorization_structure(lat: &SubgroupLattice) -> Result<Outcome> {
    let self_centralizing: Vec<SubgroupId> = lat
        .minimal_normal_subgroups()
        .into_iter()
        .filter(|&n| n != lat.top())
        .map(|n| Ok((n, lat.centralizer_of_factor(n, lat.bottom())?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|&(n, c)| n == c)
        .map(|(n, _)| n)
        .collect();
    if self_centralizing.is_empty() {
        return Ok(Outcome::pass("no self-centralizing minimal normal subgroup; vacuous"));
    }
    let pairs = factorizations(lat, |h| lat.is_nilpotent_subgroup(h));
    for &(a, b) in &pairs {
        if lat.meet(a, b) != lat.bottom() {
            return Ok(Outcome::fail(format!("(1) {} ∩ {} is nontrivial", sub(lat, a), sub(lat, b))));
        }
        for &n in &self_centralizing {
            let mut union = lat.elements(a).clone();
            union.union_with(lat.elements(b));
            if !lat.elements(n).is_subset(&union) {
                return Ok(Outcome::fail(format!(
                    "(2) N = {} is not inside {} ∪ {}",
                    sub(lat, n),
                    sub(lat, a),
                    sub(lat, b)
                )));
            }
            for (x, y) in [(a, b), (b, a)] {
                if !lat.leq(n, x) {
                    continue;
                }
                let ox = lat.order(x);
                let ok = util::prime_power_base(ox).map_or(ox == 1, |p| lat.order(y) % p != 0);
                if !ok {
                    return Ok(Outcome::fail(format!(
                        "(3) N = {} ≤ {} but {} is not a p-group with {} a p'-group",
                        sub(lat, n),
                        sub(lat, x),
                        sub(lat, x),
                        sub(lat, y)
                    )));
                }
            }
        }
    }
    Ok(Outcome::pass(format!(
        "{} nilpotent factorizations, {} self-centralizing minimal normal subgroups",
        pairs.len(),
        self_centralizing.len()
    )))
}

fn radical_centralizes_chief_factors(lat: &SubgroupLattice) -> Result<Outcome> {
    let mut checked = 0;
    for choice in [StepChoice::LowestId, StepChoice::HighestId] {
        let series = lat.chief_series_with(choice)?;
        for f in &series.factors {
            let q = lat.quotient(f.centralizer)?;
            for p in util::prime_factors(f.order) {
                let fp = lat.p_nilpotent_radical(p)?;
                if !lat.leq(fp, f.centralizer) {
                    return Ok(Outcome::fail(format!(
                        "F_{p}(G) = {} is not in C_G({} / {})",
                        sub(lat, fp),
                        sub(lat, f.upper),
                        sub(lat, f.lower)
                    )));
                }
                let ql = &q.lattice;
                if let Some(bad) = ql
                    .normal_subgroups()
                    .into_iter()
                    .find(|&m| m != ql.bottom() && is_p_group_order(ql.order(m), p))
                {
                    return Ok(Outcome::fail(format!(
                        "G/C_G({} / {}) has the normal {p}-subgroup of order {}",
                        sub(lat, f.upper),
                        sub(lat, f.lower),
                        ql.order(bad)
                    )));
                }
                checked += 1;
            }
        }
    }
    Ok(Outcome::pass(format!("{checked} (chief factor, prime) pairs checked over two chief series")))
}

fn prime_chief_factor_automizer(lat: &SubgroupLattice) -> Result<Outcome> {
    let series = lat.chief_series()?;
    let mut checked = Vec::new();
    for f in &series.factors {
        let Some(p) = f.prime else { continue };
        let automizer = lat.quotient(f.centralizer)?;
        let in_a = classes::is_in_a(&automizer.lattice, p);
        if in_a != f.is_prime_order {
            return Ok(Outcome::fail(format!(
                "chief factor of order {} has automizer of order {} with A({}) membership {in_a}",
                f.order,
                automizer.lattice.group().order(),
                p - 1
            )));
        }
        checked.push(format!("{}:{}", f.order, yes(in_a)));
    }
    Ok(Outcome::pass(format!("p-chief factors (order:automizer in A(p-1)) [{}]", checked.join(", "))))
}

fn supersoluble_routes(lat: &SubgroupLattice) -> Result<Outcome> {
    let a = classes::supersoluble_by_chief_series(lat)?;
    let b = classes::supersoluble_by_screen(lat)?;
    let out = format!("chief-series route {}, screen route {}", yes(a), yes(b));
    Ok(if a == b { Outcome::pass(out) } else { Outcome::fail(out) })
}

fn largest_prime_sylow(lat: &SubgroupLattice) -> Result<Outcome> {
    let Some(&p) = lat.group().primes().last() else {
        return Ok(Outcome::pass("trivial group"));
    };
    let s = lat.sylow(p);
    let submodular = modularity::is_submodular(lat, s);
    let normal = lat.is_normal(s);
    let out = format!("Sylow {p}-subgroup: submodular {}, normal {}", yes(submodular), yes(normal));
    Ok(if !submodular || normal { Outcome::pass(out) } else { Outcome::fail(out) })
}

fn sm_u_implies_ore(lat: &SubgroupLattice) -> Result<Outcome> {
    let sm = classes::sylows_submodular(lat)?;
    let ore = classes::ore_chain(lat);
    let out = match &ore {
        Some(chain) => format!("Sylows submodular {}, Ore chain {}", yes(sm), chain_orders(lat, chain)),
        None => format!("Sylows submodular {}, not Ore dispersive", yes(sm)),
    };
    Ok(if !sm || ore.is_some() { Outcome::pass(out) } else { Outcome::fail(out) })
}

fn strongly_supersoluble_fitting_route(lat: &SubgroupLattice) -> Result<Outcome> {
    let a = classes::strongly_supersoluble_by_definition(lat)?;
    let b = classes::strongly_supersoluble_by_fitting_quotient(lat)?;
    let out = format!("definition {}, G/F(G) route {}", yes(a), yes(b));
    Ok(if a == b { Outcome::pass(out) } else { Outcome::fail(out) })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Closure {
    Subgroups,
    Quotients,
    Intersections,
    NormalProducts,
    Frattini,
    Residual,
}

const FORMATION: &[Closure] = &[Closure::Subgroups, Closure::Quotients, Closure::Intersections, Closure::Residual];
const SATURATED: &[Closure] = &[
    Closure::Subgroups,
    Closure::Quotients,
    Closure::Intersections,
    Closure::NormalProducts,
    Closure::Frattini,
    Closure::Residual,
];

fn closure_checks(lat: &SubgroupLattice, class: GroupClass, parts: &[Closure]) -> Result<Outcome> {
    let name = class.name();
    let in_g = class.contains(lat)?;
    let normals = lat.normal_subgroups();
    let mut quotient_in = vec![None; lat.len()];
    for &n in &normals {
        quotient_in[n] = Some(class.contains(&lat.quotient(n)?.lattice)?);
    }
    let q_in = |n: SubgroupId| quotient_in[n].expect("normal");
    if parts.contains(&Closure::Subgroups) && in_g {
        for h in proper(lat) {
            if !class.contains(&*lat.subgroup_lattice(h)?)? {
                return Ok(Outcome::fail(format!("G is {name} but its subgroup {} is not", sub(lat, h))));
            }
        }
    }
    if parts.contains(&Closure::Quotients) && in_g {
        if let Some(&n) = normals.iter().find(|&&n| !q_in(n)) {
            return Ok(Outcome::fail(format!("G is {name} but G/{} is not", sub(lat, n))));
        }
    }
    if parts.contains(&Closure::Intersections) {
        for (i, &a) in normals.iter().enumerate() {
            for &b in &normals[i + 1..] {
                if q_in(a) && q_in(b) && !q_in(lat.meet(a, b)) {
                    return Ok(Outcome::fail(format!(
                        "G/{} and G/{} are {name} but the quotient by their intersection is not",
                        sub(lat, a),
                        sub(lat, b)
                    )));
                }
            }
        }
    }
    if parts.contains(&Closure::NormalProducts) {
        let mut sub_in = vec![None; lat.len()];
        for &n in &normals {
            sub_in[n] = Some(class.contains(&*lat.subgroup_lattice(n)?)?);
        }
        for (i, &a) in normals.iter().enumerate() {
            for &b in &normals[i + 1..] {
                if sub_in[a] == Some(true) && sub_in[b] == Some(true) && lat.meet(a, b) == lat.bottom() {
                    let j = lat.join(a, b);
                    if !class.contains(&*lat.subgroup_lattice(j)?)? {
                        return Ok(Outcome::fail(format!(
                            "normal {} and {} are {name}, meet trivially, but their product is not",
                            sub(lat, a),
                            sub(lat, b)
                        )));
                    }
                }
            }
        }
    }
    let phi = lat.frattini();
    if parts.contains(&Closure::Frattini) && q_in(phi) && !in_g {
        return Ok(Outcome::fail(format!(
            "G/Φ(G) is {name} (Φ(G) = {}) but G is not",
            sub(lat, phi)
        )));
    }
    let residual = if parts.contains(&Closure::Residual) {
        let r = classes::class_residual(lat, class)?;
        format!(", residual order {}", lat.order(r))
    } else {
        String::new()
    };
    Ok(Outcome::pass(format!(
        "G in {name}: {}; {} of {} quotients in class{residual}",
        yes(in_g),
        normals.iter().filter(|&&n| q_in(n)).count(),
        normals.len()
    )))
}

fn class_b_formation(lat: &SubgroupLattice) -> Result<Outcome> {
    closure_checks(lat, GroupClass::B, FORMATION)
}

fn strongly_supersoluble_closure(lat: &SubgroupLattice) -> Result<Outcome> {
    closure_checks(lat, GroupClass::StronglySupersoluble, SATURATED)
}

fn sm_u_closure(lat: &SubgroupLattice) -> Result<Outcome> {
    closure_checks(lat, GroupClass::SmU, SATURATED)
}

fn sylow_class_formations(lat: &SubgroupLattice) -> Result<Outcome> {
    let mut witnesses = Vec::new();
    let classes = std::iter::once(GroupClass::SolubleElementaryAbelianSylows)
        .chain(SCREEN_PRIMES.iter().map(|&p| GroupClass::SolubleSylowsInAB(p)));
    for class in classes {
        let o = closure_checks(lat, class, FORMATION)?;
        if !o.pass {
            return Ok(o);
        }
        witnesses.push(format!("{}: {}", class.name(), yes(class.contains(lat)?)));
    }
    Ok(Outcome::pass(format!("membership [{}]", witnesses.join("; "))))
}

/// Chief-factor form of a local screen: `G/C_G(H/K) ∈ f(p)` for every chief
/// factor `H/K` and every `p ∈ π(H/K)`.
fn in_local_formation(lat: &SubgroupLattice, f: impl Fn(&SubgroupLattice, usize) -> bool) -> Result<bool> {
    for factor in lat.chief_series()?.factors {
        let automizer = lat.quotient(factor.centralizer)?;
        for p in util::prime_factors(factor.order) {
            if !f(&automizer.lattice, p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn strongly_supersoluble_screen(lat: &SubgroupLattice) -> Result<Outcome> {
    let def = classes::strongly_supersoluble_by_definition(lat)?;
    let screen = classes::strongly_supersoluble_by_screen(lat)?;
    let local = in_local_formation(lat, |q, p| classes::is_in_a(q, p) && classes::is_in_b(q))?;
    let out = format!(
        "definition {}, G/F_p(G) screen {}, chief factor screen {}",
        yes(def),
        yes(screen),
        yes(local)
    );
    Ok(if def == screen && def == local { Outcome::pass(out) } else { Outcome::fail(out) })
}

fn nilpotent_submodular_products(lat: &SubgroupLattice) -> Result<Outcome> {
    let pairs = factorizations(lat, |h| lat.is_nilpotent_subgroup(h) && modularity::is_submodular(lat, h));
    if pairs.is_empty() {
        return Ok(Outcome::pass("no factorization into submodular nilpotent subgroups; vacuous"));
    }
    let s_u = classes::is_strongly_supersoluble(lat)?;
    let (a, b) = pairs[0];
    let out = format!(
        "{} factorizations, e.g. {} · {}; strongly supersoluble {}",
        pairs.len(),
        sub(lat, a),
        sub(lat, b),
        yes(s_u)
    );
    Ok(if s_u { Outcome::pass(out) } else { Outcome::fail(out) })
}

/// `(A, B)` with `A ≅ Z17` normal and `B ≅ Z16` core-free, when the group
/// is `Z17 ⋊ Aut(Z17)`.
fn frobenius_272_parts(lat: &SubgroupLattice) -> Option<(SubgroupId, SubgroupId)> {
    if lat.group().order() != 272 {
        return None;
    }
    let a = lat.normal_subgroups().into_iter().find(|&n| lat.order(n) == 17)?;
    let b = lat.ids().find(|&h| {
        lat.order(h) == 16 && lat.exponent_of(h) == 16 && lat.core(h) == lat.bottom()
    })?;
    Some((a, b))
}

fn is_frobenius_272(lat: &SubgroupLattice) -> bool {
    frobenius_272_parts(lat).is_some()
}

fn frobenius_272(lat: &SubgroupLattice) -> Result<Outcome> {
    let (a, b) = frobenius_272_parts(lat).expect("applies");
    let a_chain = modularity::submodular_chain(lat, a);
    let b_conjugates = lat.conjugates(b);
    let b_refused = b_conjugates.iter().all(|&c| !modularity::is_submodular(lat, c));
    let b_p_chain = modularity::p_subnormal_chain_in(lat, b, lat.top());
    let supersoluble = classes::is_supersoluble(lat)?;
    let strongly = classes::is_strongly_supersoluble(lat)?;
    let w_u = classes::is_w_u(lat);
    let sm_u = classes::is_sm_u(lat)?;
    let witness = format!(
        "A = {}: submodular chain {}; B = {}: no submodular chain for any of its {} conjugates; \
         B P-subnormal chain {}; supersoluble {}, strongly supersoluble {}, wU {}, smU {}",
        sub(lat, a),
        a_chain.as_ref().map_or("none".into(), |c| chain_orders(lat, &c.chain)),
        sub(lat, b),
        b_conjugates.len(),
        b_p_chain.as_ref().map_or("none".into(), |c| chain_orders(lat, c)),
        yes(supersoluble),
        yes(strongly),
        yes(w_u),
        yes(sm_u)
    );
    let pass = a_chain.is_some() && b_refused && b_p_chain.is_some() && supersoluble && !strongly && w_u && !sm_u;
    Ok(Outcome { pass, witness })
}

fn metanilpotent_characterization(lat: &SubgroupLattice) -> Result<Outcome> {
    let s_u = classes::is_strongly_supersoluble(lat)?;
    let meta = classes::is_metanilpotent(lat)?;
    let sm = classes::sylows_submodular(lat)?;
    let out = format!(
        "strongly supersoluble {}; metanilpotent {}, Sylows submodular {}",
        yes(s_u),
        yes(meta),
        yes(sm)
    );
    Ok(if s_u == (meta && sm) { Outcome::pass(out) } else { Outcome::fail(out) })
}

fn minimal_non_sm_u(lat: &SubgroupLattice) -> Result<Outcome> {
    if !is_minimal_non(lat, GroupClass::SmU)? {
        return Ok(Outcome::pass("not a minimal non-smU group"));
    }
    let primes = lat.group().primes();
    let minimal_non_s_u = is_minimal_non(lat, GroupClass::StronglySupersoluble)?;
    let out = format!(
        "minimal non-smU; primes {primes:?}; minimal non strongly supersoluble {}",
        yes(minimal_non_s_u)
    );
    Ok(if primes.len() == 2 && minimal_non_s_u { Outcome::pass(out) } else { Outcome::fail(out) })
}

fn submodular_is_kp_subnormal(lat: &SubgroupLattice) -> Result<Outcome> {
    let soluble = classes::is_soluble(lat);
    let mut submodular = 0;
    for h in lat.ids() {
        if !modularity::is_submodular(lat, h) {
            continue;
        }
        submodular += 1;
        if !modularity::is_kp_subnormal(lat, h) {
            return Ok(Outcome::fail(format!("{} is submodular but not K-P-subnormal", sub(lat, h))));
        }
        if soluble && !modularity::is_p_subnormal(lat, h) {
            return Ok(Outcome::fail(format!(
                "{} is submodular in a soluble group but not P-subnormal",
                sub(lat, h)
            )));
        }
    }
    Ok(Outcome::pass(format!(
        "{submodular} submodular subgroups, all K-P-subnormal{}",
        if soluble { " and P-subnormal" } else { "" }
    )))
}

fn sylows_in_screen(q: &SubgroupLattice, p: usize) -> bool {
    classes::is_soluble(q)
        && q.group().primes().into_iter().all(|r| {
            let s = q.sylow(r);
            let e = q.exponent_of(s);
            q.is_abelian_subgroup(s) && (p - 1) % e == 0 && util::is_squarefree(e)
        })
}

fn sm_u_screen(lat: &SubgroupLattice) -> Result<Outcome> {
    let def = classes::sylows_submodular(lat)?;
    let screen = classes::sm_u_by_screen(lat)?;
    let local = in_local_formation(lat, sylows_in_screen)?;
    let out = format!(
        "definition {}, G/F_p(G) screen {}, chief factor screen {}",
        yes(def),
        yes(screen),
        yes(local)
    );
    Ok(if def == screen && def == local { Outcome::pass(out) } else { Outcome::fail(out) })
}

fn sm_u_consequences(lat: &SubgroupLattice) -> Result<Outcome> {
    if !classes::is_sm_u(lat)? {
        return Ok(Outcome::pass("not in smU; vacuous"));
    }
    let mut metanilpotent = 0;
    let mut biprimary = 0;
    for h in lat.ids() {
        let hl = lat.subgroup_lattice(h)?;
        let is_meta = classes::is_metanilpotent(&hl)?;
        let is_bi = hl.group().primes().len() == 2;
        if !(is_meta || is_bi) {
            continue;
        }
        metanilpotent += usize::from(is_meta);
        biprimary += usize::from(is_bi);
        if !classes::is_strongly_supersoluble(&hl)? {
            let kind = if is_meta { "(1) metanilpotent" } else { "(2) biprimary" };
            return Ok(Outcome::fail(format!(
                "{kind} subgroup {} is not strongly supersoluble",
                sub(lat, h)
            )));
        }
    }
    let residual = classes::class_residual(lat, GroupClass::ElementaryAbelianSylows)?;
    if !lat.is_nilpotent_subgroup(residual) {
        return Ok(Outcome::fail(format!(
            "(3) the elementary-abelian-Sylow residual {} is not nilpotent",
            sub(lat, residual)
        )));
    }
    Ok(Outcome::pass(format!(
        "{metanilpotent} metanilpotent and {biprimary} biprimary subgroups strongly supersoluble; \
         residual {} nilpotent",
        sub(lat, residual)
    )))
}

fn sm_u_biprimary_characterization(lat: &SubgroupLattice) -> Result<Outcome> {
    let sm = classes::sylows_submodular(lat)?;
    let ore = classes::is_ore_dispersive(lat);
    let mut failing = None;
    let biprimary = lat.biprimary_subgroups();
    for &h in &biprimary {
        if !classes::is_strongly_supersoluble(&*lat.subgroup_lattice(h)?)? {
            failing = Some(h);
            break;
        }
    }
    let right = ore && failing.is_none();
    let out = format!(
        "Sylows submodular {}; Ore dispersive {}, {} biprimary subgroups{}",
        yes(sm),
        yes(ore),
        biprimary.len(),
        failing.map_or(String::from(", all strongly supersoluble"), |h| format!(
            ", {} not strongly supersoluble",
            sub(lat, h)
        ))
    );
    Ok(if sm == right { Outcome::pass(out) } else { Outcome::fail(out) })
}
