use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use submodular::classes;
use submodular::lattice::SubgroupLattice;
use submodular::verify;
use submodular::{catalog, modularity, util, Group, Permutation};

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn lattices(max_order: usize) -> Vec<Arc<SubgroupLattice>> {
    catalog::builtin_catalog()
        .into_iter()
        .filter_map(|spec| {
            let g = spec.close(100_000).unwrap();
            (g.order() <= max_order).then(|| Arc::new(SubgroupLattice::new(Arc::new(g)).unwrap()))
        })
        .collect()
}

fn small_lattices() -> &'static [Arc<SubgroupLattice>] {
    static CELL: OnceLock<Vec<Arc<SubgroupLattice>>> = OnceLock::new();
    CELL.get_or_init(|| lattices(60))
}

fn quotient_lattices() -> &'static [Arc<SubgroupLattice>] {
    static CELL: OnceLock<Vec<Arc<SubgroupLattice>>> = OnceLock::new();
    CELL.get_or_init(|| lattices(400))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn composition_is_associative(a in permutation(7), b in permutation(7), c in permutation(7)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_and_identity(a in permutation(7)) {
        let id = Permutation::identity(7);
        prop_assert_eq!(a.compose(&a.inverse()).unwrap(), id.clone());
        prop_assert_eq!(a.inverse().compose(&a).unwrap(), id.clone());
        prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
        prop_assert_eq!(Permutation::parse_cycles(7, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn closure_is_idempotent(gens in prop::collection::vec(permutation(5), 1..3)) {
        let g = Group::generate(5, &gens, 1_000).unwrap();
        let again = Group::generate(5, g.elements(), 1_000).unwrap();
        prop_assert_eq!(g.order(), again.order());
        prop_assert_eq!(120 % g.order(), 0);
        let all: Vec<usize> = (0..g.order()).collect();
        prop_assert_eq!(g.closure_of(&all), g.full_set());
    }

    #[test]
    fn quotients_are_homomorphic(pick in any::<prop::sample::Index>(), npick in any::<prop::sample::Index>()) {
        let lat = pick.get(quotient_lattices());
        let normals = lat.normal_subgroups();
        let n = *npick.get(&normals);
        let q = lat.quotient(n).unwrap();
        prop_assert!(q.epi.is_homomorphism());
        prop_assert_eq!(&q.epi.kernel, lat.elements(n));
        prop_assert_eq!(q.lattice.group().order() * lat.order(n), lat.group().order());
        for t in lat.above(n).ones() {
            prop_assert_eq!(q.preimage(lat, q.image(lat, t)), t);
        }
    }

    #[test]
    fn lattice_laws(pick in any::<prop::sample::Index>(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let lat = pick.get(small_lattices());
        let ids: Vec<usize> = lat.ids().collect();
        let (a, b, c) = (*a.get(&ids), *b.get(&ids), *c.get(&ids));
        prop_assert_eq!(lat.meet(a, lat.join(a, b)), a);
        prop_assert_eq!(lat.join(a, lat.meet(a, b)), a);
        prop_assert_eq!(lat.join(a, b), lat.join_by_closure(a, b));
        prop_assert_eq!(lat.meet(lat.meet(a, b), c), lat.meet(a, lat.meet(b, c)));
        prop_assert_eq!(lat.join(lat.join(a, b), c), lat.join(a, lat.join(b, c)));
        // Dedekind law with a normal subgroup
        let normals = lat.normal_subgroups();
        let n = normals[a % normals.len()];
        let (x, z) = (lat.meet(b, c), c);
        prop_assert_eq!(lat.join(x, lat.meet(n, z)), lat.meet(lat.join(x, n), z));
    }

    #[test]
    fn modularity_is_conjugation_invariant(pick in any::<prop::sample::Index>(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), x in any::<prop::sample::Index>()) {
        let lat = pick.get(small_lattices());
        let ids: Vec<usize> = lat.ids().collect();
        let (a, b) = (*a.get(&ids), *b.get(&ids));
        let (m, top) = (lat.meet(a, b), b);
        let x = x.index(lat.group().order());
        let before = modularity::is_modular(lat, m, top).unwrap().modular;
        let after = modularity::is_modular(lat, lat.conj(m, x), lat.conj(top, x)).unwrap().modular;
        prop_assert_eq!(before, after);
        prop_assert_eq!(modularity::is_submodular(lat, m), modularity::is_submodular(lat, lat.conj(m, x)));
    }

    #[test]
    fn sylow_counts(pick in any::<prop::sample::Index>()) {
        let lat = pick.get(quotient_lattices());
        let n = lat.group().order();
        for p in lat.group().primes() {
            let all = lat.sylow_all(p);
            prop_assert_eq!(lat.order(all[0]), util::p_part(n, p));
            prop_assert_eq!(all.len() % p, 1 % p);
            prop_assert_eq!(n % all.len(), 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Random subgroups of S5 widen the universe beyond the catalog: every
    /// characterization route must agree and the class equivalences hold.
    #[test]
    fn random_permutation_groups_satisfy_the_class_equivalences(gens in prop::collection::vec(permutation(5), 1..3)) {
        let g = Group::generate(5, &gens, 1_000).unwrap();
        let lat = SubgroupLattice::new(Arc::new(g)).unwrap();
        classes::is_supersoluble(&lat).unwrap();
        classes::is_strongly_supersoluble(&lat).unwrap();
        classes::is_sm_u(&lat).unwrap();
        for suite in ["thm-2.6", "thm-2.9", "thm-3.6", "thm-3.8", "lemma-3.5", "cor-2.1.1", "lemma-2.1"] {
            let outcome = verify::check_instance(&lat, suite).unwrap().unwrap();
            prop_assert!(outcome.pass, "{}: {}", suite, outcome.witness);
        }
    }
}
