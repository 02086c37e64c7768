//! Modular subgroups in the sense of Kurosh, and the chain relations built on
//! them.
//!
//! `M` is modular in `B` when, for subgroups of `B`,
//!
//! 1. `⟨X, M ∩ Z⟩ = ⟨X, M⟩ ∩ Z` whenever `X ≤ Z`, and
//! 2. `⟨M, Y ∩ Z⟩ = ⟨M, Y⟩ ∩ Z` whenever `M ≤ Z`.
//!
//! Both conditions are checked by brute force over the lattice tables.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::util;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Condition {
    /// `⟨X, M ∩ Z⟩ = ⟨X, M⟩ ∩ Z` for `X ≤ Z`.
    First,
    /// `⟨M, Y ∩ Z⟩ = ⟨M, Y⟩ ∩ Z` for `M ≤ Z`.
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularityWitness {
    pub condition: Condition,
    /// `X` for the first condition, `Y` for the second.
    pub partner: SubgroupId,
    pub z: SubgroupId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularityVerdict {
    pub modular: bool,
    pub failing_witness: Option<ModularityWitness>,
}

/// Whether `w` violates its condition for `m`.
pub fn witness_fails(lat: &SubgroupLattice, m: SubgroupId, w: &ModularityWitness) -> bool {
    match w.condition {
        Condition::First => {
            lat.leq(w.partner, w.z)
                && lat.join(w.partner, lat.meet(m, w.z)) != lat.meet(lat.join(w.partner, m), w.z)
        }
        Condition::Second => {
            lat.leq(m, w.z)
                && lat.join(m, lat.meet(w.partner, w.z)) != lat.meet(lat.join(m, w.partner), w.z)
        }
    }
}

fn first_failure(lat: &SubgroupLattice, m: SubgroupId, b: SubgroupId) -> Option<ModularityWitness> {
    let inside = lat.below(b);
    for x in inside.ones() {
        let xm = lat.join(x, m);
        for z in lat.interval(x, b).ones() {
            if lat.join(x, lat.meet(m, z)) != lat.meet(xm, z) {
                return Some(ModularityWitness {
                    condition: Condition::First,
                    partner: x,
                    z,
                });
            }
        }
    }
    let over_m = lat.interval(m, b);
    for y in inside.ones() {
        let my = lat.join(m, y);
        for z in over_m.ones() {
            if lat.join(m, lat.meet(y, z)) != lat.meet(my, z) {
                return Some(ModularityWitness {
                    condition: Condition::Second,
                    partner: y,
                    z,
                });
            }
        }
    }
    None
}

/// Decides whether `m` is modular in `b` (`m ≤ b`). The witness is the first
/// failing pair, scanning condition 1 before condition 2 by ascending ids.
pub fn is_modular(lat: &SubgroupLattice, m: SubgroupId, b: SubgroupId) -> Result<ModularityVerdict> {
    if !lat.leq(m, b) {
        return Err(Error::NotContained { sub: m, sup: b });
    }
    let failing_witness = first_failure(lat, m, b);
    Ok(ModularityVerdict {
        modular: failing_witness.is_none(),
        failing_witness,
    })
}

/// The "modular in" relation over all pairs `a ≤ b` of one lattice.
#[derive(Debug)]
pub struct ModularRelation {
    rows: Vec<FixedBitSet>,
}

impl ModularRelation {
    fn compute(lat: &SubgroupLattice) -> Self {
        let rows = lat
            .ids()
            .map(|b| {
                let mut row = FixedBitSet::with_capacity(lat.len());
                for m in lat.below(b).ones() {
                    if first_failure(lat, m, b).is_none() {
                        row.insert(m);
                    }
                }
                row
            })
            .collect();
        Self { rows }
    }

    /// `a` is modular in `b`.
    pub fn contains(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.rows[b].contains(a)
    }

    /// Modular subgroups of `b`.
    pub fn modular_in(&self, b: SubgroupId) -> &FixedBitSet {
        &self.rows[b]
    }
}

/// Cached modular relation of the lattice.
pub fn relation(lat: &SubgroupLattice) -> &ModularRelation {
    lat.caches.modular.get_or_init(|| ModularRelation::compute(lat))
}

/// Modular proper subgroups of `b` that are maximal among modular proper
/// subgroups of `b`.
pub fn maximal_modular_subgroups(lat: &SubgroupLattice, b: SubgroupId) -> Vec<SubgroupId> {
    let rel = relation(lat);
    let proper: Vec<SubgroupId> = rel.modular_in(b).ones().filter(|&m| m != b).collect();
    proper
        .iter()
        .copied()
        .filter(|&m| !proper.iter().any(|&k| k != m && lat.leq(m, k)))
        .collect()
}

/// Maximal modular subgroups predicted structurally: proper subgroups of `b`
/// that are maximal among normal proper subgroups of `b`, or non-normal ones
/// whose core `C` in `b` has `b/C` nonabelian of order `pq`.
pub fn maximal_modular_by_characterization(lat: &SubgroupLattice, b: SubgroupId) -> Vec<SubgroupId> {
    let normal_proper: Vec<SubgroupId> = lat
        .below(b)
        .ones()
        .filter(|&m| m != b && lat.is_normal_in(m, b))
        .collect();
    let maximal_normal = |m: SubgroupId| {
        !normal_proper
            .iter()
            .any(|&k| k != m && lat.leq(m, k))
    };
    let b_elems: Vec<usize> = lat.elements(b).ones().collect();
    lat.below(b)
        .ones()
        .filter(|&m| m != b)
        .filter(|&m| {
            if lat.is_normal_in(m, b) {
                return maximal_normal(m);
            }
            let core = lat.core_in(m, b);
            let index = lat.index(core, b);
            let factors = util::prime_factors(index);
            let is_pq = factors.len() == 2 && factors[0] * factors[1] == index;
            let nonabelian = || {
                let core_set = lat.elements(core);
                b_elems.iter().any(|&x| {
                    b_elems
                        .iter()
                        .any(|&y| !core_set.contains(lat.group().commutator(x, y)))
                })
            };
            is_pq && nonabelian()
        })
        .collect()
}

/// A chain `h = c₀ ≤ c₁ ≤ … ≤ c_s = top` witnessing a chain relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmodularChain {
    pub chain: Vec<SubgroupId>,
}

/// Breadth-first search for a shortest strictly ascending chain from `from`
/// to `to` whose steps satisfy `edge`.
fn shortest_chain(
    lat: &SubgroupLattice,
    from: SubgroupId,
    to: SubgroupId,
    edge: impl Fn(SubgroupId, SubgroupId) -> bool,
) -> Option<Vec<SubgroupId>> {
    if !lat.leq(from, to) {
        return None;
    }
    let nodes = lat.interval(from, to);
    let mut parent = vec![usize::MAX; lat.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(a) = queue.pop_front() {
        if a == to {
            let mut chain = vec![to];
            let mut c = to;
            while c != from {
                c = parent[c];
                chain.push(c);
            }
            chain.reverse();
            return Some(chain);
        }
        for c in lat.interval(a, to).ones() {
            if c != a && nodes.contains(c) && parent[c] == usize::MAX && edge(a, c) {
                parent[c] = a;
                queue.push_back(c);
            }
        }
    }
    None
}

/// Shortest chain from `h` to `b` in which each member is modular in the next.
pub fn submodular_chain_in(lat: &SubgroupLattice, h: SubgroupId, b: SubgroupId) -> Option<SubmodularChain> {
    let rel = relation(lat);
    shortest_chain(lat, h, b, |a, c| rel.contains(a, c)).map(|chain| SubmodularChain { chain })
}

pub fn submodular_chain(lat: &SubgroupLattice, h: SubgroupId) -> Option<SubmodularChain> {
    submodular_chain_in(lat, h, lat.top())
}

pub fn is_submodular_in(lat: &SubgroupLattice, h: SubgroupId, b: SubgroupId) -> bool {
    submodular_chain_in(lat, h, b).is_some()
}

pub fn is_submodular(lat: &SubgroupLattice, h: SubgroupId) -> bool {
    is_submodular_in(lat, h, lat.top())
}

/// Chain in which every member is maximal modular in the next.
pub fn compacted_submodular_chain_in(
    lat: &SubgroupLattice,
    h: SubgroupId,
    b: SubgroupId,
) -> Option<SubmodularChain> {
    shortest_chain(lat, h, b, |a, c| maximal_modular_subgroups(lat, c).contains(&a))
        .map(|chain| SubmodularChain { chain })
}

fn kp_step(lat: &SubgroupLattice, a: SubgroupId, c: SubgroupId) -> bool {
    lat.is_normal_in(a, c) || util::is_prime(lat.index(a, c))
}

/// Chain to `b` whose steps are normal or of prime index.
pub fn kp_subnormal_chain_in(lat: &SubgroupLattice, h: SubgroupId, b: SubgroupId) -> Option<Vec<SubgroupId>> {
    shortest_chain(lat, h, b, |a, c| kp_step(lat, a, c))
}

pub fn is_kp_subnormal(lat: &SubgroupLattice, h: SubgroupId) -> bool {
    kp_subnormal_chain_in(lat, h, lat.top()).is_some()
}

/// Chain to `b` whose steps all have prime index (`h = b` qualifies).
pub fn p_subnormal_chain_in(lat: &SubgroupLattice, h: SubgroupId, b: SubgroupId) -> Option<Vec<SubgroupId>> {
    shortest_chain(lat, h, b, |a, c| util::is_prime(lat.index(a, c)))
}

pub fn is_p_subnormal(lat: &SubgroupLattice, h: SubgroupId) -> bool {
    p_subnormal_chain_in(lat, h, lat.top()).is_some()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog;
    use crate::group::{ElementId, DEFAULT_ELEMENT_CAP};
    use crate::perm::Permutation;

    fn lattice(spec: crate::groupspec::GroupSpec) -> SubgroupLattice {
        SubgroupLattice::new(Arc::new(spec.close(DEFAULT_ELEMENT_CAP).unwrap())).unwrap()
    }

    fn id_gen(lat: &SubgroupLattice, cycles: &[&str]) -> SubgroupId {
        let g = lat.group();
        let gens: Vec<ElementId> = cycles
            .iter()
            .map(|c| g.id_of(&Permutation::parse_cycles(g.degree(), c).unwrap()).unwrap())
            .collect();
        lat.id_of(&g.closure_of(&gens)).unwrap()
    }

    /// Independent check: quantifies directly over element sets, computing
    /// joins by closure rather than through the tables.
    fn modular_by_sets(lat: &SubgroupLattice, m: SubgroupId, b: SubgroupId) -> bool {
        let g = lat.group();
        let sub = |s: &FixedBitSet| lat.id_of(s).unwrap();
        let join = |a: SubgroupId, c: SubgroupId| {
            let mut gens: Vec<usize> = lat.elements(a).ones().collect();
            gens.extend(lat.elements(c).ones());
            sub(&g.closure_of(&gens))
        };
        let meet = |a: SubgroupId, c: SubgroupId| {
            let mut s = lat.elements(a).clone();
            s.intersect_with(lat.elements(c));
            sub(&s)
        };
        let inside: Vec<SubgroupId> = lat
            .ids()
            .filter(|&x| lat.elements(x).is_subset(lat.elements(b)))
            .collect();
        let is_sub = |a: SubgroupId, c: SubgroupId| lat.elements(a).is_subset(lat.elements(c));
        let c1 = inside.iter().all(|&x| {
            inside
                .iter()
                .filter(|&&z| is_sub(x, z))
                .all(|&z| join(x, meet(m, z)) == meet(join(x, m), z))
        });
        let c2 = inside.iter().all(|&y| {
            inside
                .iter()
                .filter(|&&z| is_sub(m, z))
                .all(|&z| join(m, meet(y, z)) == meet(join(m, y), z))
        });
        c1 && c2
    }

    #[test]
    fn relation_matches_set_oracle_on_small_groups() {
        for spec in [catalog::symmetric(3), catalog::alternating(4), catalog::dihedral(8), catalog::symmetric(4)] {
            let lat = lattice(spec.clone());
            let rel = relation(&lat);
            for b in lat.ids() {
                for m in lat.below(b).ones() {
                    assert_eq!(rel.contains(m, b), modular_by_sets(&lat, m, b), "{} m={m} b={b}", spec.name);
                }
            }
        }
    }

    #[test]
    fn normal_subgroups_are_modular() {
        let lat = lattice(catalog::symmetric(4));
        for n in lat.normal_subgroups() {
            assert!(is_modular(&lat, n, lat.top()).unwrap().modular);
        }
    }

    #[test]
    fn transposition_in_s3_is_modular() {
        let lat = lattice(catalog::symmetric(3));
        let t = id_gen(&lat, &["(0 1)"]);
        let v = is_modular(&lat, t, lat.top()).unwrap();
        assert!(v.modular);
        assert!(v.failing_witness.is_none());
    }

    #[test]
    fn sylow_two_of_a5_is_not_modular() {
        let lat = lattice(catalog::alternating(5));
        let p = lat.sylow(2);
        let v = is_modular(&lat, p, lat.top()).unwrap();
        assert!(!v.modular);
        let w = v.failing_witness.unwrap();
        assert!(witness_fails(&lat, p, &w));
        assert!(!modular_by_sets(&lat, p, lat.top()));
    }

    #[test]
    fn precondition_is_checked() {
        let lat = lattice(catalog::symmetric(3));
        let t = id_gen(&lat, &["(0 1)"]);
        let a3 = id_gen(&lat, &["(0 1 2)"]);
        assert!(is_modular(&lat, t, a3).is_err());
    }

    #[test]
    fn maximal_modular_subgroups_of_small_groups() {
        let s3 = lattice(catalog::symmetric(3));
        let mm = maximal_modular_subgroups(&s3, s3.top());
        let mut orders: Vec<usize> = mm.iter().map(|&m| s3.order(m)).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 2, 2, 3]);
        assert_eq!(mm, maximal_modular_by_characterization(&s3, s3.top()));

        let z7 = lattice(catalog::cyclic(7));
        assert_eq!(maximal_modular_subgroups(&z7, z7.top()), vec![z7.bottom()]);

        let q8 = lattice(catalog::dicyclic(2));
        let mm = maximal_modular_subgroups(&q8, q8.top());
        assert_eq!(mm.len(), 3);
        assert!(mm.iter().all(|&m| q8.order(m) == 4));

        let z6 = lattice(catalog::cyclic(6));
        let predicted: Vec<usize> = maximal_modular_by_characterization(&z6, z6.top())
            .iter()
            .map(|&m| z6.order(m))
            .collect();
        assert_eq!(predicted, vec![2, 3]);
    }

    #[test]
    fn frobenius_group_of_order_272() {
        let lat = lattice(catalog::affine_group(17, 16).unwrap());
        let a = lat.sylow(17);
        let b = lat.sylow(2);
        let chain = submodular_chain(&lat, a).expect("Z17 is submodular");
        assert_eq!(chain.chain.first(), Some(&a));
        assert_eq!(chain.chain.last(), Some(&lat.top()));
        assert!(submodular_chain(&lat, b).is_none());
        assert!(is_p_subnormal(&lat, b));
        assert_eq!(
            maximal_modular_subgroups(&lat, lat.top()),
            maximal_modular_by_characterization(&lat, lat.top())
        );
    }

    #[test]
    fn whole_group_has_trivial_chains() {
        let lat = lattice(catalog::symmetric(4));
        assert_eq!(submodular_chain(&lat, lat.top()).unwrap().chain, vec![lat.top()]);
        assert!(is_p_subnormal(&lat, lat.top()));
        assert!(is_kp_subnormal(&lat, lat.top()));
    }

    #[test]
    fn subnormality_variants_in_s4() {
        let lat = lattice(catalog::symmetric(4));
        // index 3
        assert!(is_kp_subnormal(&lat, lat.sylow(2)));
        // overgroups of a 3-cycle: S3 (index 4 in S4, not normal), A4 (index 4, 3-cycle not normal in it)
        assert!(!is_kp_subnormal(&lat, lat.sylow(3)));
        let a4 = lat.ids().find(|&h| lat.order(h) == 12).unwrap();
        assert!(is_kp_subnormal(&lat, a4));
        assert!(is_p_subnormal(&lat, a4));
    }

    #[test]
    fn compacted_chain_exists_iff_submodular() {
        for spec in [catalog::symmetric(4), catalog::affine_group(7, 6).unwrap(), catalog::alternating(4)] {
            let lat = lattice(spec);
            for h in lat.ids() {
                let short = submodular_chain(&lat, h);
                let compact = compacted_submodular_chain_in(&lat, h, lat.top());
                assert_eq!(short.is_some(), compact.is_some());
            }
        }
    }
}
