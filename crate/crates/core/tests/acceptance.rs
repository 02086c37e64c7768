//! Acceptance criteria, one pass/fail line each. Run with
//! `cargo test --test acceptance`.

use std::collections::VecDeque;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use submodular::classes::{self, GroupClass};
use submodular::lattice::{Limits, StepChoice, SubgroupLattice};
use submodular::verify::{self, Universe};
use submodular::{catalog, modularity};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Kurosh modularity decided from the bare list of subgroup element sets:
/// joins are the smallest listed set containing both arguments.
struct Oracle {
    sets: Vec<FixedBitSet>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
}

impl Oracle {
    fn new(lat: &SubgroupLattice) -> Oracle {
        let sets: Vec<FixedBitSet> = lat.ids().map(|h| lat.elements(h).clone()).collect();
        let order = |s: &FixedBitSet| s.count_ones(..);
        let smallest_containing = |u: &FixedBitSet| {
            (0..sets.len())
                .filter(|&i| u.is_subset(&sets[i]))
                .min_by_key(|&i| order(&sets[i]))
                .expect("the whole group contains everything")
        };
        let n = sets.len();
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let mut u = sets[a].clone();
                u.union_with(&sets[b]);
                join[a][b] = smallest_containing(&u);
                let mut i = sets[a].clone();
                i.intersect_with(&sets[b]);
                meet[a][b] = (0..n).find(|&k| sets[k] == i).expect("intersection is a subgroup");
            }
        }
        Oracle { sets, join, meet }
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.sets[a].is_subset(&self.sets[b])
    }

    fn modular(&self, m: usize, b: usize) -> bool {
        let below: Vec<usize> = (0..self.sets.len()).filter(|&x| self.leq(x, b)).collect();
        for &x in &below {
            for &z in &below {
                if self.leq(x, z) && self.join[x][self.meet[m][z]] != self.meet[self.join[x][m]][z] {
                    return false;
                }
                if self.leq(m, z) && self.join[m][self.meet[x][z]] != self.meet[self.join[m][x]][z] {
                    return false;
                }
            }
        }
        true
    }

    fn submodular(&self, h: usize, top: usize) -> bool {
        let n = self.sets.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([h]);
        seen[h] = true;
        while let Some(a) = queue.pop_front() {
            if a == top {
                return true;
            }
            for b in 0..n {
                if !seen[b] && b != a && self.leq(a, b) && self.modular(a, b) {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        false
    }
}

fn lattice(name: &str) -> Arc<SubgroupLattice> {
    let spec = catalog::find(name).expect("catalog group");
    Arc::new(SubgroupLattice::new(Arc::new(spec.close(100_000).unwrap())).unwrap())
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let lat = lattice("AGL(1,17)d16");
    let a = lat.sylow(17);
    let chain = modularity::submodular_chain(&lat, a).ok_or("Z17 has no submodular chain")?;
    let bs: Vec<usize> = lat
        .ids()
        .filter(|&h| lat.order(h) == 16 && lat.exponent_of(h) == 16)
        .collect();
    ensure(bs.len() == 17, || format!("{} cyclic subgroups of order 16", bs.len()))?;
    let b_refused = bs.iter().all(|&b| !modularity::is_submodular(&lat, b));
    let supersoluble = classes::is_supersoluble(&lat).map_err(|e| e.to_string())?;
    let strongly = classes::is_strongly_supersoluble(&lat).map_err(|e| e.to_string())?;
    let b_p_subnormal = modularity::is_p_subnormal(&lat, bs[0]);
    let elapsed = start.elapsed();
    ensure(b_refused, || "Z16 is submodular".into())?;
    ensure(supersoluble && !strongly, || format!("supersoluble {supersoluble}, strongly {strongly}"))?;
    ensure(b_p_subnormal, || "Z16 is not P-subnormal".into())?;
    ensure(elapsed <= Duration::from_secs(30), || format!("took {elapsed:?}"))?;

    let oracle = Oracle::new(&lat);
    for w in chain.chain.windows(2) {
        ensure(oracle.modular(w[0], w[1]), || "oracle rejects a chain step".into())?;
    }
    ensure(oracle.submodular(a, lat.top()), || "oracle finds no chain for Z17".into())?;
    ensure(bs.iter().all(|&b| !oracle.submodular(b, lat.top())), || "oracle finds a chain for Z16".into())?;
    let orders: Vec<usize> = chain.chain.iter().map(|&h| lat.order(h)).collect();
    Ok(format!("Z17 chain {orders:?}, Z16 refused (17 conjugates), U yes, sU no, Z16 P-subnormal; {elapsed:.2?}"))
}

fn criterion_2(universe: &Universe) -> Check {
    let start = Instant::now();
    let mut groups = 0;
    for e in universe.entries.iter().filter(|e| e.lattice.group().order() <= 60) {
        let lat = &e.lattice;
        for b in lat.ids() {
            let mut brute = modularity::maximal_modular_subgroups(lat, b);
            let mut predicted = modularity::maximal_modular_by_characterization(lat, b);
            brute.sort_unstable();
            predicted.sort_unstable();
            ensure(brute == predicted, || format!("{}: mismatch inside subgroup {b}", e.name()))?;
        }
        groups += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("{groups} groups, every subgroup as ambient; {elapsed:.2?}"))
}

fn criterion_3(universe: &Universe) -> Check {
    for e in &universe.entries {
        let lat = &e.lattice;
        let err = |x: submodular::Error| format!("{}: {x}", e.name());
        let s = [
            classes::strongly_supersoluble_by_definition(lat).map_err(err)?,
            classes::strongly_supersoluble_by_fitting_quotient(lat).map_err(err)?,
            classes::strongly_supersoluble_by_screen(lat).map_err(err)?,
        ];
        ensure(s[0] == s[1] && s[1] == s[2], || format!("{}: sU routes {s:?}", e.name()))?;
        let sm = [
            classes::sylows_submodular(lat).map_err(err)?,
            classes::sm_u_by_screen(lat).map_err(err)?,
        ];
        ensure(sm[0] == sm[1], || format!("{}: smU routes {sm:?}", e.name()))?;
    }
    Ok(format!("{} groups, 3 sU routes and 2 smU routes agree", universe.entries.len()))
}

fn criterion_4(universe: &Universe) -> Check {
    let (mut in_sm, mut in_s) = (0, 0);
    for e in &universe.entries {
        let lat = &e.lattice;
        let err = |x: submodular::Error| format!("{}: {x}", e.name());
        let sm = classes::sylows_submodular(lat).map_err(err)?;
        let mut biprimary_ok = true;
        for h in lat.ids().filter(|&h| lat.primes_of(h).len() == 2) {
            let sub = lat.subgroup_lattice(h).map_err(err)?;
            biprimary_ok &= classes::strongly_supersoluble_by_definition(&sub).map_err(err)?;
        }
        let ore = classes::ore_chain(lat).is_some();
        ensure(sm == (ore && biprimary_ok), || format!("{}: smU {sm}, Ore {ore}, biprimary {biprimary_ok}", e.name()))?;
        let s_u = classes::strongly_supersoluble_by_definition(lat).map_err(err)?;
        let meta = classes::is_metanilpotent(lat).map_err(err)?;
        ensure(s_u == (meta && sm), || format!("{}: sU {s_u}, metanilpotent {meta}, smU {sm}", e.name()))?;
        in_sm += usize::from(sm);
        in_s += usize::from(s_u);
    }
    Ok(format!("{} groups ({in_sm} in smU, {in_s} in sU)", universe.entries.len()))
}

fn suite_over(universe: &Universe, suite: &str, max_order: usize) -> Result<usize, String> {
    let mut count = 0;
    for e in universe.entries.iter().filter(|e| e.lattice.group().order() <= max_order) {
        let outcome = verify::check_instance(&e.lattice, suite)
            .map_err(|x| x.to_string())?
            .ok_or_else(|| format!("{suite} does not apply to {}", e.name()))?;
        ensure(outcome.pass, || format!("{suite} on {}: {}", e.name(), outcome.witness))?;
        count += 1;
    }
    Ok(count)
}

fn criterion_5(universe: &Universe) -> Check {
    let a = suite_over(universe, "lemma-1.1", 60)?;
    let b = suite_over(universe, "lemma-3.5", usize::MAX)?;
    Ok(format!("submodular inheritance on {a} groups, K-P-subnormality on {b} groups"))
}

fn criterion_6(universe: &Universe) -> Check {
    let a = suite_over(universe, "thm-2.5", usize::MAX)?;
    let b = suite_over(universe, "thm-3.1", usize::MAX)?;
    Ok(format!("sU closures on {a} groups, smU closures on {b} groups"))
}

fn criterion_7(universe: &Universe) -> Check {
    let minimal = verify::find_minimal_non(universe, GroupClass::SmU).map_err(|e| e.to_string())?;
    ensure(minimal.iter().any(|g| g == "A4"), || format!("A4 missing from {minimal:?}"))?;
    for name in &minimal {
        let e = universe.entries.iter().find(|e| e.name() == name).expect("member");
        let primes = e.lattice.group().primes();
        ensure(primes.len() == 2, || format!("{name} has primes {primes:?}"))?;
        let m = verify::is_minimal_non(&e.lattice, GroupClass::StronglySupersoluble).map_err(|x| x.to_string())?;
        ensure(m, || format!("{name} is not minimal non-sU"))?;
    }
    Ok(format!("minimal non-smU: {}", minimal.join(", ")))
}

fn criterion_8(universe: &Universe) -> Check {
    let mut pairs = 0usize;
    for e in &universe.entries {
        let lat = &e.lattice;
        for a in lat.ids() {
            for b in lat.ids() {
                ensure(lat.meet(a, lat.join(a, b)) == a && lat.join(a, lat.meet(a, b)) == a, || {
                    format!("{}: absorption fails at ({a}, {b})", e.name())
                })?;
                pairs += 1;
            }
        }
        for n in lat.normal_subgroups() {
            for x in lat.ids() {
                for z in lat.above(x).ones() {
                    ensure(lat.join(x, lat.meet(n, z)) == lat.meet(lat.join(x, n), z), || {
                        format!("{}: Dedekind law fails", e.name())
                    })?;
                }
            }
        }
        let mut lo = lat.chief_series_with(StepChoice::LowestId).map_err(|x| x.to_string())?.factor_orders();
        let mut hi = lat.chief_series_with(StepChoice::HighestId).map_err(|x| x.to_string())?.factor_orders();
        lo.sort_unstable();
        hi.sort_unstable();
        ensure(lo == hi, || format!("{}: chief factors {lo:?} vs {hi:?}", e.name()))?;
        for f in lat.chief_series().map_err(|x| x.to_string())?.factors {
            for p in submodular::util::prime_factors(f.order) {
                let fp = lat.p_nilpotent_radical(p).map_err(|x| x.to_string())?;
                ensure(lat.leq(fp, f.centralizer), || format!("{}: F_{p} not in C_G(H/K)", e.name()))?;
            }
        }
    }
    let n = suite_over(universe, "lattice", usize::MAX)?;
    Ok(format!("{pairs} pairs, lattice suite on {n} groups, zero violations"))
}

fn criterion_9() -> Check {
    let dir = std::env::temp_dir().join(format!("submodular-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let mut reports = Vec::new();
    for i in 0..2 {
        let path = dir.join(format!("report{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_submodular"))
            .args(["verify", "--suite", "all", "--report"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?
            .status;
        ensure(status.success(), || format!("verify exited with {status}"))?;
        reports.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    let elapsed = start.elapsed();
    ensure(reports[0] == reports[1], || "reports differ".into())?;
    ensure(elapsed <= Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("two runs byte-identical ({} bytes), {elapsed:.2?} total", reports[0].len()))
}

fn main() {
    let universe = Universe::builtin(Limits::default()).expect("catalog builds");
    let criteria: Vec<Criterion> = vec![
        ("Frobenius group of order 272: Z17 submodular, Z16 not, U but not sU", Box::new(criterion_1)),
        ("maximal modular subgroups match the characterization (order <= 60)", Box::new(|| criterion_2(&universe))),
        ("sU three-route and smU two-route agreement", Box::new(|| criterion_3(&universe))),
        ("smU iff Ore + biprimary sU; sU iff metanilpotent + smU", Box::new(|| criterion_4(&universe))),
        ("submodular inheritance and K-P-subnormality suites", Box::new(|| criterion_5(&universe))),
        ("sU and smU closure suites", Box::new(|| criterion_6(&universe))),
        ("minimal non-smU groups are biprimary minimal non-sU", Box::new(|| criterion_7(&universe))),
        ("lattice self-consistency", Box::new(|| criterion_8(&universe))),
        ("deterministic full verification within 10 minutes", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] criterion {}: {name} ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name} ({detail})", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
